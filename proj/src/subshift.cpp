#include "bsshift/subshift.hpp"

#include <algorithm>
#include <numeric>

#include "bsshift/errors.hpp"

namespace bsshift {

  ////////////////////////////////////////////////////////////////////////
  // Pattern
  ////////////////////////////////////////////////////////////////////////

  Pattern::Pattern(std::shared_ptr<Window const> window, std::size_t alphabet)
      : _window(std::move(window)), _alphabet(alphabet) {
    if (!_window) {
      throw ParameterError("pattern needs a window");
    }
    if (alphabet < 1 || alphabet > kMaxAlphabet) {
      throw ParameterError("alphabet size must lie in 1..65536");
    }
    _cells.resize(_window->size());
  }

  std::optional<Symbol> Pattern::at(Element const& g) const {
    auto ordinal = _window->index_of(g);
    if (!ordinal) {
      return std::nullopt;
    }
    return _cells[*ordinal];
  }

  void Pattern::assign(std::size_t ordinal, Symbol s) {
    if (ordinal >= _cells.size()) {
      throw ParameterError("ordinal " + std::to_string(ordinal) + " outside the window");
    }
    if (s >= _alphabet) {
      throw ParameterError("symbol " + std::to_string(s) + " outside the alphabet");
    }
    _cells[ordinal] = s;
  }

  void Pattern::assign(Element const& g, Symbol s) {
    auto ordinal = _window->index_of(g);
    if (!ordinal) {
      throw ParameterError("element " + to_string(g) + " is not in the window");
    }
    assign(*ordinal, s);
  }

  void Pattern::clear(std::size_t ordinal) {
    _cells.at(ordinal).reset();
  }

  bool Pattern::is_total() const {
    return std::all_of(_cells.begin(), _cells.end(), [](auto const& c) { return c.has_value(); });
  }

  std::size_t Pattern::assigned_count() const {
    return static_cast<std::size_t>(
        std::count_if(_cells.begin(), _cells.end(), [](auto const& c) { return c.has_value(); }));
  }

  std::vector<std::size_t> Pattern::support() const {
    std::vector<std::size_t> result;
    for (std::size_t v = 0; v < _cells.size(); ++v) {
      if (_cells[v]) {
        result.push_back(v);
      }
    }
    return result;
  }

  bool Pattern::operator==(Pattern const& other) const {
    if (_alphabet != other._alphabet || _cells != other._cells) {
      return false;
    }
    return _window == other._window || _window->vertices() == other._window->vertices();
  }

  ////////////////////////////////////////////////////////////////////////
  // NNSFT
  ////////////////////////////////////////////////////////////////////////

  NNSFT::NNSFT(std::size_t alphabet) : _n(alphabet) {
    if (alphabet < 1 || alphabet > 4096) {
      throw ParameterError("NNSFT alphabet size must lie in 1..4096");
    }
    for (auto& table : _allowed) {
      table.assign(_n * _n, 0);
    }
  }

  void NNSFT::allow(Generator s, Symbol from, Symbol to, bool value) {
    if (from >= _n || to >= _n) {
      throw ParameterError("NNSFT pair outside the alphabet");
    }
    _allowed[static_cast<std::size_t>(s)][from * _n + to] = value ? 1 : 0;
  }

  std::vector<std::pair<Symbol, Symbol>> NNSFT::pairs(Generator s) const {
    std::vector<std::pair<Symbol, Symbol>> result;
    for (std::size_t c = 0; c < _n; ++c) {
      for (std::size_t d = 0; d < _n; ++d) {
        if (allowed(s, static_cast<Symbol>(c), static_cast<Symbol>(d))) {
          result.emplace_back(static_cast<Symbol>(c), static_cast<Symbol>(d));
        }
      }
    }
    return result;
  }

  bool NNSFT::symbol_symmetric() const {
    // The transposition (0 1) and the cycle (0 1 ... n-1) generate Sym(n).
    auto invariant_under = [this](auto const& perm) {
      for (auto s : {Generator::a, Generator::b}) {
        for (std::size_t c = 0; c < _n; ++c) {
          for (std::size_t d = 0; d < _n; ++d) {
            if (allowed(s, static_cast<Symbol>(c), static_cast<Symbol>(d))
                != allowed(s, perm(c), perm(d))) {
              return false;
            }
          }
        }
      }
      return true;
    };
    if (_n == 1) {
      return true;
    }
    auto transposition = [](std::size_t c) {
      return static_cast<Symbol>(c == 0 ? 1 : c == 1 ? 0 : c);
    };
    auto cycle = [this](std::size_t c) { return static_cast<Symbol>((c + 1) % _n); };
    return invariant_under(transposition) && invariant_under(cycle);
  }

  NNSFT gcs(std::size_t n) {
    if (n < 2) {
      throw ParameterError("the colouring subshift needs n >= 2");
    }
    NNSFT X(n);
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t d = 0; d < n; ++d) {
        if (c != d) {
          X.allow(Generator::a, static_cast<Symbol>(c), static_cast<Symbol>(d));
          X.allow(Generator::b, static_cast<Symbol>(c), static_cast<Symbol>(d));
        }
      }
    }
    return X;
  }

  bool is_gcs(NNSFT const& X) {
    return X.alphabet() >= 2 && X == gcs(X.alphabet());
  }

  std::optional<Violation> find_violation(Pattern const& p, NNSFT const& X) {
    return find_violation(p, X, induced_edges(p.window()));
  }

  std::optional<Violation> find_violation(Pattern const& p, NNSFT const& X,
                                          EdgeList const& edges) {
    if (p.alphabet() > X.alphabet()) {
      throw ParameterError("pattern alphabet exceeds the SFT alphabet");
    }
    for (auto const& e : edges) {
      auto const& u = p[e.from];
      auto const& v = p[e.to];
      if (u && v && !X.allowed(e.label, *u, *v)) {
        return Violation{e, *u, *v};
      }
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // ConfigOracle
  ////////////////////////////////////////////////////////////////////////

  char const* to_string(Formula f) {
    switch (f) {
      case Formula::frozen_mod1:
        return "frozen_mod1";
      case Formula::frozen_mod2:
        return "frozen_mod2";
      case Formula::frozen_mod2_scaled:
        return "frozen_mod2_scaled";
      case Formula::frozen_mod0:
        return "frozen_mod0";
      case Formula::parity2:
        return "parity2";
    }
    return "?";
  }

  ConfigOracle ConfigOracle::formula(Formula variant, GroupParams const& P) {
    auto const r = P.N() % 3;
    bool ok = false;
    switch (variant) {
      case Formula::frozen_mod1:
        ok = r == 1;
        break;
      case Formula::frozen_mod2:
      case Formula::frozen_mod2_scaled:
        ok = r == 2;
        break;
      case Formula::frozen_mod0:
        ok = r == 0;
        break;
      case Formula::parity2:
        ok = P.N() % 2 == 1;
        break;
    }
    if (!ok) {
      throw ParameterError(std::string(to_string(variant)) + " is not defined for N = "
                           + std::to_string(P.N()));
    }
    return ConfigOracle(FormulaConfig{variant, P});
  }

  ConfigOracle ConfigOracle::level_sequence(std::vector<Symbol> word, GroupParams const& P,
                                            std::int64_t phase) {
    if (word.empty()) {
      throw ParameterError("level sequence needs period length >= 1");
    }
    return ConfigOracle(LevelSequenceConfig{std::move(word), phase, P});
  }

  ConfigOracle ConfigOracle::shifted(ConfigOracle base, Element by) {
    if (!is_reduced(by, base.params())) {
      throw ParameterError("shift element must be reduced");
    }
    return ConfigOracle(
        ShiftedConfig{std::make_shared<ConfigOracle const>(std::move(base)), std::move(by)});
  }

  GroupParams const& ConfigOracle::params() const {
    return std::visit(
        [](auto const& d) -> GroupParams const& {
          using T = std::decay_t<decltype(d)>;
          if constexpr (std::is_same_v<T, ShiftedConfig>) {
            return d.base->params();
          } else {
            return d.params;
          }
        },
        _description);
  }

  std::size_t ConfigOracle::alphabet() const {
    return std::visit(
        [](auto const& d) -> std::size_t {
          using T = std::decay_t<decltype(d)>;
          if constexpr (std::is_same_v<T, FormulaConfig>) {
            return d.variant == Formula::parity2 ? 2 : 3;
          } else if constexpr (std::is_same_v<T, LevelSequenceConfig>) {
            return static_cast<std::size_t>(*std::max_element(d.word.begin(), d.word.end())) + 1;
          } else {
            return d.base->alphabet();
          }
        },
        _description);
  }

  namespace {
    std::int64_t mod(std::int64_t x, std::int64_t m) {
      auto r = x % m;
      return r < 0 ? r + m : r;
    }

    std::int64_t mod(Integer const& x, std::int64_t m) {
      auto r = static_cast<std::int64_t>(x % m);
      return r < 0 ? r + m : r;
    }

    Symbol evaluate_formula(Formula variant, Element const& g, GroupParams const& P) {
      std::int64_t const lv = level(g);
      switch (variant) {
        case Formula::frozen_mod1:
          return static_cast<Symbol>(mod(2 * mod(lv, 3) + mod(g.k, 3), 3));
        case Formula::frozen_mod2:
          return static_cast<Symbol>(mod(mod(lv, 3) + mod(g.k, 3), 3));
        case Formula::frozen_mod2_scaled: {
          // N^j = 2^j (mod 3) when N = 2 (mod 3).
          std::int64_t const scale = g.j % 2 == 0 ? 1 : mod(P.N(), 3);
          return static_cast<Symbol>(mod(mod(lv, 3) + scale * mod(g.k, 3), 3));
        }
        case Formula::frozen_mod0:
          return static_cast<Symbol>(mod(mod(g.k, 2) + 2 * mod(lv, 3), 3));
        case Formula::parity2:
          return static_cast<Symbol>(mod(mod(g.i, 2) + mod(g.j, 2) + mod(g.k, 2), 2));
      }
      return 0;
    }
  }  // namespace

  Symbol evaluate(ConfigOracle const& x, Element const& g) {
    return std::visit(
        [&g](auto const& d) -> Symbol {
          using T = std::decay_t<decltype(d)>;
          if constexpr (std::is_same_v<T, ConfigOracle::FormulaConfig>) {
            return evaluate_formula(d.variant, g, d.params);
          } else if constexpr (std::is_same_v<T, ConfigOracle::LevelSequenceConfig>) {
            auto const q = static_cast<std::int64_t>(d.word.size());
            return d.word[static_cast<std::size_t>(mod(mod(level(g), q) + mod(d.phase, q), q))];
          } else {
            return evaluate(*d.base, multiply(invert(d.by), g, d.base->params()));
          }
        },
        x.description());
  }

  Pattern restrict(ConfigOracle const& x, std::shared_ptr<Window const> w) {
    Pattern p(std::move(w), x.alphabet());
    for (std::size_t v = 0; v < p.size(); ++v) {
      p.assign(v, evaluate(x, p.window().vertex(v)));
    }
    return p;
  }

  bool periodic_under(ConfigOracle const& x, Element const& g, Window const& w) {
    auto const shifted = ConfigOracle::shifted(x, g);
    return std::all_of(w.vertices().begin(), w.vertices().end(), [&](Element const& v) {
      return evaluate(shifted, v) == evaluate(x, v);
    });
  }

  namespace {
    // x_{g h} == x_h for every reduced h.  The formulas only see i and j mod
    // 6 and k mod 6, and a product g h reduces at most j(g) times (and not at
    // all once j(h) > i(g)), so the finite box below meets every behaviour.
    bool formula_stab(ConfigOracle const& x, Element const& g, std::size_t max_checks) {
      auto const& P = x.params();
      if (g.j > 40) {
        throw ResourceError("exact_stab: element too deep for the finite reduction");
      }
      Integer const k_range = 6 * psi_pow(1, g.j + 1, P);
      Integer const checks
          = k_range * Integer(g.i + 13) * Integer(g.j + 6);
      if (checks > Integer(max_checks)) {
        throw ResourceError("exact_stab needs " + checks.str() + " evaluations");
      }
      auto const k_max = static_cast<std::int64_t>(k_range);
      for (std::int64_t j2 = 0; j2 <= g.i + 12; ++j2) {
        for (std::int64_t i2 = 0; i2 < g.j + 6; ++i2) {
          for (std::int64_t k2 = 0; k2 < k_max; ++k2) {
            Element const h{j2, k2, i2};
            if (!is_reduced(h, P)) {
              continue;
            }
            if (evaluate(x, multiply(g, h, P)) != evaluate(x, h)) {
              return false;
            }
          }
        }
      }
      return true;
    }
  }  // namespace

  bool exact_stab(ConfigOracle const& x, Element const& g, std::size_t max_checks) {
    auto const& P = x.params();
    if (!is_reduced(g, P)) {
      throw ParameterError("exact_stab needs a reduced element");
    }
    return std::visit(
        [&](auto const& d) -> bool {
          using T = std::decay_t<decltype(d)>;
          if constexpr (std::is_same_v<T, ConfigOracle::FormulaConfig>) {
            return formula_stab(x, g, max_checks);
          } else if constexpr (std::is_same_v<T, ConfigOracle::LevelSequenceConfig>) {
            auto const q     = static_cast<std::int64_t>(d.word.size());
            auto const shift = mod(level(g), q);
            for (std::int64_t r = 0; r < q; ++r) {
              if (d.word[static_cast<std::size_t>(r)]
                  != d.word[static_cast<std::size_t>((r + shift) % q)]) {
                return false;
              }
            }
            return true;
          } else {
            // g fixes sigma_h y  iff  h^-1 g h fixes y.
            Element const conj = multiply(multiply(invert(d.by), g, P), d.by, P);
            return exact_stab(*d.base, conj, max_checks);
          }
        },
        x.description());
  }

}  // namespace bsshift
