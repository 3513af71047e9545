#ifndef BSSHIFT_PERIODICITY_HPP_
#define BSSHIFT_PERIODICITY_HPP_

// Periodicity propagation along levels, and strongly periodic configurations
// with monochromatic a-rows in a nearest-neighbour SFT.

#include <cstdint>
#include <optional>
#include <vector>

#include "subshift.hpp"

namespace bsshift {

  // (b^-j a^k b^{i+j+l}) a^p == a^{p N^{i+l}} (b^-j a^k b^{i+j+l}), evaluated
  // with multiply.  Always true; a regression check of the group arithmetic.
  bool check_group_identity(GroupParams const& P, Integer const& p, std::int64_t l,
                            std::int64_t i, std::int64_t j, Integer const& k);

  struct PeriodicitySpec {
    Integer      p = 1;  // a-period, >= 1
    std::int64_t l = 0;  // level threshold, >= 0
  };

  // x_{v a^p} == x_v for every v in w of level >= l.  Throws PreconditionError
  // unless sigma_{a^{p N^l}} x == x exactly.
  bool check_section_periodicity(ConfigOracle const& x, PeriodicitySpec const& spec,
                                 Window const& w);

  // Level r carries levels[r mod q].
  struct PeriodicWitness {
    std::vector<Symbol> levels;

    bool operator==(PeriodicWitness const&) const = default;
  };

  bool horizontal_ok(PeriodicWitness const& w, NNSFT const& X);
  bool vertical_cycle_ok(PeriodicWitness const& w, NNSFT const& X);

  // Lexicographically least shortest cycle among symbols c with (c,c)
  // allowed for a, following b-allowed pairs; nullopt if there is none.
  std::optional<PeriodicWitness> find_periodic_monochromatic(NNSFT const& X);

  ConfigOracle witness_config(PeriodicWitness const& w, GroupParams const& P);

  // The level word rotated by n: evaluate(result, g) == evaluate(x, b^n g).
  // x must be a level-sequence configuration.
  ConfigOracle shift_limit_levels(ConfigOracle const& x, std::int64_t n);

  // "01..." for symbols below 10, otherwise comma separated.
  std::string levels_string(std::vector<Symbol> const& levels);

}  // namespace bsshift

#endif  // BSSHIFT_PERIODICITY_HPP_
