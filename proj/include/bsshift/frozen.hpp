#ifndef BSSHIFT_FROZEN_HPP_
#define BSSHIFT_FROZEN_HPP_

// Frozen 3-colourings and their finite-window verification; edge-isoperimetric
// ratios of rectangles.

#include <optional>
#include <string>
#include <vector>

#include "coloring.hpp"
#include "subshift.hpp"

namespace bsshift {

  // frozen_mod1, frozen_mod2 or frozen_mod0 according to N mod 3.
  ConfigOracle frozen_config(GroupParams const& P);

  struct EdgeWitness {
    Element   from;
    Element   to;  // from * label
    Generator label;
    Symbol    from_symbol;
    Symbol    to_symbol;
  };

  std::string to_string(EdgeWitness const& e);

  // First Cayley edge with an endpoint in w (w's vertices in order; a then b,
  // outgoing then incoming) whose symbols x forbids.
  std::optional<EdgeWitness> find_improper_edge(ConfigOracle const& x, Window const& w,
                                                NNSFT const& X);

  inline bool verify_proper(ConfigOracle const& x, Window const& w, NNSFT const& X) {
    return !find_improper_edge(x, w, X).has_value();
  }

  struct FrozenVerdict {
    std::string window;    // description of F
    bool        unique;    // exactly one filling, and it is x restricted to F
    Integer     fillings;  // admissible fillings of F with x fixed around F
  };

  // All fillings of F that are admissible on every edge touching F, with x
  // fixed on the cells outside F adjacent to F.
  FrozenVerdict verify_frozen_window(ConfigOracle const& x, Window const& F, NNSFT const& X,
                                     CountOptions const& options = {});

  // Same for a total pattern y standing in for the configuration: F is given
  // by ordinals of y's window, which must contain every neighbour of F.
  FrozenVerdict verify_frozen_window(Pattern const& y, std::vector<std::size_t> const& F,
                                     NNSFT const& X, CountOptions const& options = {});

  struct IsoperimetricRow {
    std::int64_t m;
    Integer      boundary;   // gamma_m
    Integer      cells;      // |R_m|
    Rational     ratio;      // gamma_m / |R_m|
    Rational     threshold;  // Delta/2 + ratio/2 + 1 with Delta = 4
  };

  std::vector<IsoperimetricRow> isoperimetric_ratio_table(GroupParams const& P,
                                                          std::int64_t m_max);

}  // namespace bsshift

#endif  // BSSHIFT_FROZEN_HPP_
