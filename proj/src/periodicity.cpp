#include "bsshift/periodicity.hpp"

#include <limits>
#include <queue>

#include "bsshift/errors.hpp"

namespace bsshift {

  bool check_group_identity(GroupParams const& P, Integer const& p, std::int64_t l,
                            std::int64_t i, std::int64_t j, Integer const& k) {
    if (p < 1 || l < 0 || i < 0 || j < 0) {
      throw ParameterError("check_group_identity needs p >= 1 and l, i, j >= 0");
    }
    Element const g   = normalize(j, k, i + j + l, P);
    Element const lhs = multiply(g, a_pow(p), P);
    Element const rhs = multiply(a_pow(psi_pow(p, i + l, P)), g, P);
    return lhs == rhs;
  }

  bool check_section_periodicity(ConfigOracle const& x, PeriodicitySpec const& spec,
                                 Window const& w) {
    auto const& P = x.params();
    if (spec.p < 1 || spec.l < 0) {
      throw ParameterError("periodicity spec needs p >= 1 and l >= 0");
    }
    if (!exact_stab(x, a_pow(psi_pow(spec.p, spec.l, P)))) {
      throw PreconditionError("configuration is not invariant under a^(p N^l)");
    }
    Element const step = a_pow(spec.p);
    for (auto const& v : w.vertices()) {
      if (level(v) >= spec.l && evaluate(x, multiply(v, step, P)) != evaluate(x, v)) {
        return false;
      }
    }
    return true;
  }

  bool horizontal_ok(PeriodicWitness const& w, NNSFT const& X) {
    for (auto c : w.levels) {
      if (c >= X.alphabet() || !X.allowed(Generator::a, c, c)) {
        return false;
      }
    }
    return !w.levels.empty();
  }

  bool vertical_cycle_ok(PeriodicWitness const& w, NNSFT const& X) {
    std::size_t const q = w.levels.size();
    for (std::size_t r = 0; r < q; ++r) {
      Symbol const from = w.levels[r];
      Symbol const to   = w.levels[(r + 1) % q];
      if (from >= X.alphabet() || to >= X.alphabet() || !X.allowed(Generator::b, from, to)) {
        return false;
      }
    }
    return q > 0;
  }

  std::optional<PeriodicWitness> find_periodic_monochromatic(NNSFT const& X) {
    std::size_t const n       = X.alphabet();
    std::size_t const kFar    = std::numeric_limits<std::size_t>::max();
    auto              usable  = [&](std::size_t c) {
      return X.allowed(Generator::a, static_cast<Symbol>(c), static_cast<Symbol>(c));
    };
    auto edge = [&](std::size_t c, std::size_t d) {
      return usable(c) && usable(d)
             && X.allowed(Generator::b, static_cast<Symbol>(c), static_cast<Symbol>(d));
    };

    // to[c][d] = length of the shortest path c -> d (to[c][c] = 0).
    std::vector<std::vector<std::size_t>> to(n, std::vector<std::size_t>(n, kFar));
    for (std::size_t d = 0; d < n; ++d) {
      if (!usable(d)) {
        continue;
      }
      // Backwards BFS from d.
      std::queue<std::size_t> queue;
      to[d][d] = 0;
      queue.push(d);
      while (!queue.empty()) {
        std::size_t const c = queue.front();
        queue.pop();
        for (std::size_t e = 0; e < n; ++e) {
          if (to[e][d] == kFar && edge(e, c)) {
            to[e][d] = to[c][d] + 1;
            queue.push(e);
          }
        }
      }
    }

    // Shortest cycle through c: one step to some e, then back.
    auto cycle_through = [&](std::size_t c) {
      std::size_t best = kFar;
      for (std::size_t e = 0; e < n; ++e) {
        if (edge(c, e) && to[e][c] != kFar) {
          best = std::min(best, to[e][c] + 1);
        }
      }
      return best;
    };
    std::size_t shortest = kFar;
    for (std::size_t c = 0; c < n; ++c) {
      if (usable(c)) {
        shortest = std::min(shortest, cycle_through(c));
      }
    }
    if (shortest == kFar) {
      return std::nullopt;
    }

    for (std::size_t c0 = 0; c0 < n; ++c0) {
      if (!usable(c0) || cycle_through(c0) != shortest) {
        continue;
      }
      PeriodicWitness w;
      w.levels.push_back(static_cast<Symbol>(c0));
      std::size_t current = c0;
      for (std::size_t r = 1; r < shortest; ++r) {
        for (std::size_t e = 0; e < n; ++e) {
          if (edge(current, e) && to[e][c0] == shortest - r) {
            current = e;
            break;
          }
        }
        w.levels.push_back(static_cast<Symbol>(current));
      }
      return w;
    }
    return std::nullopt;
  }

  ConfigOracle witness_config(PeriodicWitness const& w, GroupParams const& P) {
    return ConfigOracle::level_sequence(w.levels, P);
  }

  ConfigOracle shift_limit_levels(ConfigOracle const& x, std::int64_t n) {
    auto const* d = std::get_if<ConfigOracle::LevelSequenceConfig>(&x.description());
    if (d == nullptr) {
      throw ParameterError("shift_limit_levels needs a level-sequence configuration");
    }
    auto const          q = static_cast<std::int64_t>(d->word.size());
    std::int64_t const  s = ((n % q) + q) % q;
    std::vector<Symbol> rotated(d->word.size());
    for (std::int64_t r = 0; r < q; ++r) {
      rotated[static_cast<std::size_t>(r)] = d->word[static_cast<std::size_t>((r + s) % q)];
    }
    return ConfigOracle::level_sequence(std::move(rotated), d->params, d->phase);
  }

  std::string levels_string(std::vector<Symbol> const& levels) {
    bool const  small = std::all_of(levels.begin(), levels.end(), [](Symbol c) { return c < 10; });
    std::string out;
    for (std::size_t r = 0; r < levels.size(); ++r) {
      if (!small && r > 0) {
        out += ',';
      }
      out += std::to_string(levels[r]);
    }
    return out;
  }

}  // namespace bsshift
