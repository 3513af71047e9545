#include "bsshift/frozen.hpp"

#include <unordered_set>

#include "bsshift/errors.hpp"

namespace bsshift {

  ConfigOracle frozen_config(GroupParams const& P) {
    switch (P.N() % 3) {
      case 1:
        return ConfigOracle::formula(Formula::frozen_mod1, P);
      case 2:
        return ConfigOracle::formula(Formula::frozen_mod2, P);
      default:
        return ConfigOracle::formula(Formula::frozen_mod0, P);
    }
  }

  std::string to_string(EdgeWitness const& e) {
    return emit_word(e.from) + " -" + to_char(e.label) + "-> " + emit_word(e.to) + " carries ("
           + std::to_string(e.from_symbol) + "," + std::to_string(e.to_symbol) + ")";
  }

  std::optional<EdgeWitness> find_improper_edge(ConfigOracle const& x, Window const& w,
                                                NNSFT const& X) {
    auto const& P = w.params();
    for (auto const& v : w.vertices()) {
      Symbol const here = evaluate(x, v);
      for (auto s : {Generator::a, Generator::b}) {
        Element const step = s == Generator::a ? a_pow(1) : b_pow(1);
        Element const back = s == Generator::a ? a_pow(-1) : b_pow(-1);
        Element       up   = multiply(v, step, P);
        Symbol const  su   = evaluate(x, up);
        if (!X.allowed(s, here, su)) {
          return EdgeWitness{v, std::move(up), s, here, su};
        }
        Element      down = multiply(v, back, P);
        Symbol const sd   = evaluate(x, down);
        if (!X.allowed(s, sd, here)) {
          return EdgeWitness{std::move(down), v, s, sd, here};
        }
      }
    }
    return std::nullopt;
  }

  namespace {

    // W = F followed by the cells adjacent to F, with the outer cells fixed
    // from `value`; counts fillings of F and checks that `value` itself is one.
    template <typename Value>
    FrozenVerdict frozen_check(GroupParams const& P, std::vector<Element> const& F,
                               std::string label, Value const& value, NNSFT const& X,
                               CountOptions const& options) {
      std::unordered_set<Element, ElementHash> inside(F.begin(), F.end());
      std::vector<Element>                     cells(F.begin(), F.end());
      std::unordered_set<Element, ElementHash> outer;
      for (auto const& g : F) {
        for (auto& h : neighbors(g, P)) {
          if (!inside.contains(h) && outer.insert(h).second) {
            cells.push_back(std::move(h));
          }
        }
      }
      auto const w = std::make_shared<Window const>(P, std::move(cells), WindowKind::custom(label));
      Pattern    fixed(w, X.alphabet());
      Pattern    own(w, X.alphabet());
      for (std::size_t v = 0; v < w->size(); ++v) {
        Symbol const s = value(w->vertex(v));
        if (s >= X.alphabet()) {
          throw ParameterError("configuration symbol outside the SFT alphabet");
        }
        own.assign(v, s);
        if (!inside.contains(w->vertex(v))) {
          fixed.assign(v, s);
        }
      }
      FrozenVerdict verdict{std::move(label), false, count_completions(fixed, X, options).count};

      // value restricted to F must itself be a filling.
      bool own_ok = true;
      for (auto const& e : induced_edges(*w)) {
        bool const touches = inside.contains(w->vertex(e.from)) || inside.contains(w->vertex(e.to));
        if (touches && !X.allowed(e.label, *own[e.from], *own[e.to])) {
          own_ok = false;
          break;
        }
      }
      verdict.unique = own_ok && verdict.fillings == 1;
      return verdict;
    }

  }  // namespace

  FrozenVerdict verify_frozen_window(ConfigOracle const& x, Window const& F, NNSFT const& X,
                                     CountOptions const& options) {
    return frozen_check(
        F.params(), F.vertices(), F.kind().describe(),
        [&x](Element const& g) { return evaluate(x, g); }, X, options);
  }

  FrozenVerdict verify_frozen_window(Pattern const& y, std::vector<std::size_t> const& F,
                                     NNSFT const& X, CountOptions const& options) {
    Window const&        w = y.window();
    std::vector<Element> cells;
    for (auto v : F) {
      cells.push_back(w.vertex(v));
    }
    auto value = [&](Element const& g) -> Symbol {
      auto v = w.index_of(g);
      if (!v || !y[*v]) {
        throw PreconditionError("pattern does not cover the neighbour " + emit_word(g) + " of F");
      }
      return *y[*v];
    };
    return frozen_check(w.params(), cells, "cells of " + w.kind().describe(), value, X, options);
  }

  std::vector<IsoperimetricRow> isoperimetric_ratio_table(GroupParams const& P,
                                                          std::int64_t m_max) {
    std::vector<IsoperimetricRow> rows;
    for (std::int64_t m = 1; m <= m_max; ++m) {
      IsoperimetricRow row;
      row.m         = m;
      row.boundary  = gamma_closed_form(P, m);
      row.cells     = rectangle_size(P, m);
      row.ratio     = Rational(row.boundary, row.cells);
      row.threshold = Rational(3) + row.ratio / 2;
      rows.push_back(std::move(row));
    }
    return rows;
  }

}  // namespace bsshift
