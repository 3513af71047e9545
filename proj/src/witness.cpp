#include "bsshift/coloring.hpp"
#include "bsshift/errors.hpp"

namespace bsshift {

  std::string describe_violation(Window const& w, Violation const& v) {
    return "edge " + emit_word(w.vertex(v.edge.from)) + " -" + to_char(v.edge.label) + "-> "
           + emit_word(w.vertex(v.edge.to)) + " carries (" + std::to_string(v.from_symbol) + ","
           + std::to_string(v.to_symbol) + ")";
  }

  WitnessFamily::WitnessFamily(Pattern base, std::vector<std::size_t> free_cells,
                               std::vector<std::size_t> fill_cells)
      : _base(std::move(base)),
        _free(std::move(free_cells)),
        _fill(std::move(fill_cells)),
        _edges(induced_edges(_base.window())),
        _adj(adjacency(_base.window(), _edges)) {}

  Integer WitnessFamily::size() const {
    return Integer(1) << _free.size();
  }

  Pattern WitnessFamily::member(std::uint64_t index) const {
    if (_free.size() < 64 && index >> _free.size() != 0) {
      throw ParameterError("witness index " + std::to_string(index) + " out of range");
    }
    if (_free.size() > 64) {
      throw ParameterError("witness family too large to index with 64 bits");
    }
    NNSFT const X = gcs(3);
    Pattern     out(_base);
    for (std::size_t t = 0; t < _free.size(); ++t) {
      out.assign(_free[t], static_cast<Symbol>(1 + ((index >> t) & 1)));
    }
    for (auto v : _fill) {
      bool placed = false;
      for (Symbol c = 0; c < 3 && !placed; ++c) {
        bool ok = true;
        for (auto const& arc : _adj[v]) {
          if (out[arc.other] && *out[arc.other] == c) {
            ok = false;
            break;
          }
        }
        if (ok) {
          out.assign(v, c);
          placed = true;
        }
      }
      if (!placed) {
        throw ConstructionError("witness fill found no symbol for "
                                + emit_word(_base.window().vertex(v)));
      }
    }
    if (auto bad = find_violation(out, X, _edges)) {
      throw ConstructionError("witness member " + std::to_string(index) + " violates "
                              + describe_violation(_base.window(), *bad));
    }
    return out;
  }

  WitnessFamily witness_family_odd(GroupParams const& P, std::int64_t m) {
    if (P.N() % 2 == 0) {
      throw ParameterError("witness_family_odd requires N odd");
    }
    auto const         w     = std::make_shared<Window const>(rectangle(P, m));
    std::int64_t const width = static_cast<std::int64_t>(w->size()) / m;
    auto parity = [&](std::size_t v) {
      return static_cast<int>((static_cast<std::int64_t>(v) / width + static_cast<std::int64_t>(v) % width) % 2);
    };
    std::size_t even = 0;
    for (std::size_t v = 0; v < w->size(); ++v) {
      even += parity(v) == 0;
    }
    int const big = even >= w->size() - even ? 0 : 1;

    Pattern                  base(w, 3);
    std::vector<std::size_t> free_cells;
    for (std::size_t v = 0; v < w->size(); ++v) {
      if (parity(v) == big) {
        free_cells.push_back(v);
      } else {
        base.assign(v, 0);
      }
    }
    WitnessFamily family(std::move(base), std::move(free_cells), {});
    family.member(0);
    return family;
  }

  WitnessFamily witness_family_even(GroupParams const& P, std::int64_t m, OddRowRule rule) {
    if (P.N() % 2 != 0) {
      throw ParameterError("witness_family_even requires N even");
    }
    if (m < 1) {
      throw ParameterError("witness_family_even requires m >= 1");
    }
    std::int64_t const N      = P.N();
    std::int64_t const height = 2 * m;
    auto const         w      = std::make_shared<Window const>(rectangle(P, height));
    std::int64_t const width  = static_cast<std::int64_t>(w->size()) / height;
    std::int64_t const period = 2 * N + 1;
    std::int64_t const blocks = width / period;

    Pattern                  base(w, 3);
    std::vector<std::size_t> free_cells;
    std::vector<std::size_t> fill_cells;
    for (std::int64_t i = 0; i < height; ++i) {
      for (std::int64_t k = 0; k < width; ++k) {
        auto const         v = static_cast<std::size_t>(i * width + k);
        std::int64_t const q = k % period;
        if (i % 2 == 0) {
          base.assign(v, q == 0 ? 0 : (q % 2 == 1 ? 1 : 2));
        } else if (k / period >= blocks) {
          fill_cells.push_back(v);
        } else if (q == 0) {
          free_cells.push_back(v);
        } else if (q == N || q == N + 1) {
          base.assign(v, 0);
        } else {
          bool const even_q = q % 2 == 0;
          Symbol     s      = even_q ? 1 : 2;
          if (rule == OddRowRule::even_two_odd_one) {
            s = even_q ? 2 : 1;
          }
          base.assign(v, s);
        }
      }
    }

    if (auto bad = find_violation(base, gcs(3))) {
      throw ConstructionError("even witness template violates " + describe_violation(*w, *bad));
    }
    auto const adj = adjacency(*w, induced_edges(*w));
    for (auto v : free_cells) {
      for (auto const& arc : adj[v]) {
        if (base[arc.other] && *base[arc.other] != 0) {
          throw ConstructionError("free cell " + emit_word(w->vertex(v))
                                  + " has a neighbour coloured "
                                  + std::to_string(*base[arc.other]));
        }
      }
    }
    WitnessFamily family(std::move(base), std::move(free_cells), std::move(fill_cells));
    family.member(0);
    return family;
  }

}  // namespace bsshift
