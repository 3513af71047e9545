#ifndef BSSHIFT_COLORING_HPP_
#define BSSHIFT_COLORING_HPP_

// Counting, extending, completing and gluing colourings; entropy tables;
// positive-entropy witness families.

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cayley.hpp"
#include "group.hpp"
#include "subshift.hpp"

namespace bsshift {

  ////////////////////////////////////////////////////////////////////////
  // Counting
  ////////////////////////////////////////////////////////////////////////

  enum class CountMethod { backtracking, frontier_dp };

  char const* to_string(CountMethod m);

  struct CountOptions {
    std::uint64_t max_nodes  = 500'000'000;  // backtracking search nodes
    std::size_t   max_states = 30'000'000;   // live DP states
    unsigned      threads    = 1;
  };

  struct CountStats {
    std::uint64_t nodes          = 0;  // search nodes or DP transitions
    std::size_t   peak_states    = 0;
    std::size_t   frontier_width = 0;
  };

  struct CountResult {
    Integer     count;
    CountMethod method;
    CountStats  stats;
  };

  // Exact number of total patterns on fixed.window() that are admissible for
  // X and agree with the assigned cells of fixed.  Branches in window order,
  // propagates cells with a single legal symbol, and multiplies the counts of
  // independent components of the unassigned part.  Throws ResourceError
  // when max_nodes is exceeded.
  CountResult count_colorings_backtracking(Pattern const& fixed, NNSFT const& X,
                                           CountOptions const& options = {});
  CountResult count_colorings_backtracking(std::shared_ptr<Window const> w, NNSFT const& X,
                                           CountOptions const& options = {});

  // Same search, but edges joining two assigned cells of `fixed` are not
  // checked: the number of ways to fill the unassigned cells.
  CountResult count_completions(Pattern const& fixed, NNSFT const& X,
                                CountOptions const& options = {});

  // Column-scan frontier DP on a rectangle window.  The state is the
  // colouring of the assigned cells that still have an unassigned neighbour,
  // stored sparsely; symbols are canonicalised when X is symbol-symmetric.
  // Results are identical for every thread count.
  CountResult count_colorings_frontier(Window const& rectangle_window, NNSFT const& X,
                                       CountOptions const& options = {});

  // Scan order used by count_colorings_frontier: plain column-major, or
  // column-major with each top-row path deferred to the column where it
  // closes, whichever keeps the smaller frontier.
  std::vector<std::uint32_t> rectangle_scan_order(Window const& rectangle_window);

  // Largest frontier reached when assigning w's vertices in `order`.
  std::size_t frontier_width(Window const& w, std::vector<std::uint32_t> const& order);

  // A (not uniformly) random admissible total pattern extending `fixed`, or
  // nullopt when none exists.
  std::optional<Pattern> sample_coloring(Pattern const& fixed, NNSFT const& X, std::mt19937_64& rng,
                                         std::uint64_t max_nodes = 10'000'000);

  ////////////////////////////////////////////////////////////////////////
  // Extension, completion, gluing
  ////////////////////////////////////////////////////////////////////////

  // Extends a proper colouring of R_m to R_{m+1} strip by strip (height 0
  // first, k ascending), taking the smallest legal symbol each time.
  // Requires X = gcs(n), n >= 3, and p total and admissible on rectangle(m).
  Pattern extend_rectangle(Pattern const& p, NNSFT const& X);

  struct GreedyOutcome {
    Pattern                    pattern;  // total on success, partial on failure
    std::optional<std::size_t> stuck;    // cell with no legal symbol
    std::vector<Symbol>        excluded;  // symbols its neighbours use, when stuck
  };

  // Greedy completion in breadth-first layers grown from the support, taking
  // the smallest legal symbol.  Works for any X; guaranteed only for gcs(n>=5).
  GreedyOutcome greedy_attempt(Pattern const& p, NNSFT const& X);

  // greedy_attempt with the preconditions X = gcs(n), n >= 5, p admissible.
  Pattern greedy_complete(Pattern const& p, NNSFT const& X);

  // Union of p and q completed greedily on w.  Requires disjoint supports
  // with no Cayley edge between them, both admissible, X = gcs(n >= 5).
  Pattern glue(Pattern const& p, Pattern const& q, NNSFT const& X,
               std::shared_ptr<Window const> w);

  ////////////////////////////////////////////////////////////////////////
  // Entropy
  ////////////////////////////////////////////////////////////////////////

  struct EntropyRow {
    std::int64_t           m = 0;
    Integer                cells;
    std::optional<Integer> count;
    double                 estimate = 0;  // log(count) / |R_m|
    CountMethod            method   = CountMethod::frontier_dp;
    bool                   lower_ok    = false;  // (n-2)^|R_m| <= count
    bool                   step_ok     = false;  // count <= prev (n-1)^|R_m \ R_{m-1}|
    bool                   spanning_ok = false;  // count <= n (n-1)^(|R_m|-1)
    std::string            error;

    bool bounds_ok() const {
      return count && lower_ok && step_ok && spanning_ok;
    }
  };

  std::vector<EntropyRow> entropy_table(GroupParams const& P, std::size_t n, std::int64_t m_max,
                                        CountOptions const& options = {});

  // Natural logarithm of a positive integer of any size.
  double log_integer(Integer const& x);

  ////////////////////////////////////////////////////////////////////////
  // Positive-entropy witness families for three colours
  ////////////////////////////////////////////////////////////////////////

  // A template pattern on a rectangle plus `free` cells, each of which may
  // independently hold 1 or 2; remaining `fill` cells are completed greedily
  // after the free choices.
  class WitnessFamily {
   public:
    WitnessFamily(Pattern base, std::vector<std::size_t> free_cells,
                  std::vector<std::size_t> fill_cells);

    Pattern const& base() const noexcept {
      return _base;
    }

    std::vector<std::size_t> const& free_cells() const noexcept {
      return _free;
    }

    std::vector<std::size_t> const& fill_cells() const noexcept {
      return _fill;
    }

    // 2^|free cells|.
    Integer size() const;

    // Bit t of index picks symbol 1 (clear) or 2 (set) for free cell t.
    // Throws ConstructionError naming an edge if the member is not admissible.
    Pattern member(std::uint64_t index) const;

   private:
    Pattern                       _base;
    std::vector<std::size_t>      _free;
    std::vector<std::size_t>      _fill;
    EdgeList                      _edges;
    std::vector<std::vector<Arc>> _adj;
  };

  // N odd: on R_m, the bipartition class (i + k even/odd) with fewer cells
  // is coloured 0 and every cell of the other class is free.
  WitnessFamily witness_family_odd(GroupParams const& P, std::int64_t m);

  // Symbol on an odd row at offset q (0 < q < 2N+1, q not N or N+1) of a block.
  enum class OddRowRule {
    even_one_odd_two,  // even offsets 1, odd offsets 2
    even_two_odd_one,  // even offsets 2, odd offsets 1
  };

  // N even: pattern on R_{2m}.  Even rows repeat the base word (0 (12)^N)
  // of period 2N+1; odd rows are cut into blocks of length 2N+1 whose first
  // cell is free, offsets N and N+1 hold 0 and the rest follow `rule`;
  // cells past the last whole block are filled greedily.  There are
  // m * floor(N^{2m} / (2N+1)) free cells.  The construction validates
  // itself and throws ConstructionError naming the first violating edge.
  WitnessFamily witness_family_even(GroupParams const& P, std::int64_t m,
                                    OddRowRule rule = OddRowRule::even_one_odd_two);

  std::string describe_violation(Window const& w, Violation const& v);

}  // namespace bsshift

#endif  // BSSHIFT_COLORING_HPP_
