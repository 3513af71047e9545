#ifndef BSSHIFT_SUBSHIFT_HPP_
#define BSSHIFT_SUBSHIFT_HPP_

// Patterns, nearest-neighbour SFTs and finitely described configurations.

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "cayley.hpp"
#include "group.hpp"

namespace bsshift {

  using Symbol = std::uint16_t;

  inline constexpr std::size_t kMaxAlphabet = std::size_t(1) << 16;

  class Pattern {
   public:
    // All cells unassigned.
    Pattern(std::shared_ptr<Window const> window, std::size_t alphabet);

    Window const& window() const noexcept {
      return *_window;
    }

    std::shared_ptr<Window const> const& window_ptr() const noexcept {
      return _window;
    }

    std::size_t alphabet() const noexcept {
      return _alphabet;
    }

    std::size_t size() const noexcept {
      return _cells.size();
    }

    std::optional<Symbol> const& operator[](std::size_t ordinal) const {
      return _cells.at(ordinal);
    }

    std::optional<Symbol> at(Element const& g) const;

    // Throws ParameterError for an out-of-range ordinal or symbol.
    void assign(std::size_t ordinal, Symbol s);
    void assign(Element const& g, Symbol s);
    void clear(std::size_t ordinal);

    bool is_total() const;
    std::size_t assigned_count() const;

    // Ordinals of assigned cells, ascending.
    std::vector<std::size_t> support() const;

    bool operator==(Pattern const& other) const;

   private:
    std::shared_ptr<Window const>      _window;
    std::size_t                        _alphabet;
    std::vector<std::optional<Symbol>> _cells;
  };

  // Nearest-neighbour SFT: (x_g, x_{gs}) must be an allowed pair for s.
  class NNSFT {
   public:
    explicit NNSFT(std::size_t alphabet);

    std::size_t alphabet() const noexcept {
      return _n;
    }

    bool allowed(Generator s, Symbol from, Symbol to) const {
      return _allowed[static_cast<std::size_t>(s)][from * _n + to] != 0;
    }

    void allow(Generator s, Symbol from, Symbol to, bool value = true);

    // Ordered pairs allowed for s, lexicographic.
    std::vector<std::pair<Symbol, Symbol>> pairs(Generator s) const;

    // True when every relabelling of symbols maps the SFT to itself.
    bool symbol_symmetric() const;

    bool operator==(NNSFT const&) const = default;

   private:
    std::size_t                         _n;
    std::array<std::vector<char>, 2>    _allowed;
  };

  // Proper n-colourings of the Cayley graph: x_g != x_{gs}.
  NNSFT gcs(std::size_t n);

  bool is_gcs(NNSFT const& X);

  struct Violation {
    Edge   edge;
    Symbol from_symbol;
    Symbol to_symbol;
  };

  // First induced edge (in edge-list order) whose two assigned endpoints carry
  // a forbidden pair.  Unassigned cells are never violations.
  std::optional<Violation> find_violation(Pattern const& p, NNSFT const& X);
  std::optional<Violation> find_violation(Pattern const& p, NNSFT const& X,
                                          EdgeList const& edges);

  inline bool locally_admissible(Pattern const& p, NNSFT const& X) {
    return !find_violation(p, X).has_value();
  }

  // frozen_mod1: 2(i-j) + k (mod 3), N = 1 (mod 3)
  // frozen_mod2: (i-j) + k (mod 3), N = 2 (mod 3)
  // frozen_mod2_scaled: (i-j) + N^j k (mod 3), N = 2 (mod 3); agrees with
  //   frozen_mod2 whenever j is even, and unlike it is a proper colouring
  // frozen_mod0: (k mod 2) + 2(i-j) (mod 3), N = 0 (mod 3)
  // parity2: i + j + k (mod 2), N odd
  enum class Formula { frozen_mod1, frozen_mod2, frozen_mod2_scaled, frozen_mod0, parity2 };

  char const* to_string(Formula f);

  // A total configuration of BS(1,N) given by a finite description.
  class ConfigOracle {
   public:
    struct FormulaConfig {
      Formula     variant;
      GroupParams params;
    };

    struct LevelSequenceConfig {
      std::vector<Symbol> word;   // level r has symbol word[(r + phase) mod |word|]
      std::int64_t        phase = 0;
      GroupParams         params;
    };

    struct ShiftedConfig {
      std::shared_ptr<ConfigOracle const> base;
      Element                             by;  // sigma_by(base)_h = base_{by^-1 h}
    };

    // Throws ParameterError when the formula does not fit N (see Formula).
    static ConfigOracle formula(Formula variant, GroupParams const& P);
    static ConfigOracle level_sequence(std::vector<Symbol> word, GroupParams const& P,
                                       std::int64_t phase = 0);
    static ConfigOracle shifted(ConfigOracle base, Element by);

    GroupParams const& params() const;

    // Upper bound on the symbols produced.
    std::size_t alphabet() const;

    std::variant<FormulaConfig, LevelSequenceConfig, ShiftedConfig> const& description() const {
      return _description;
    }

   private:
    explicit ConfigOracle(std::variant<FormulaConfig, LevelSequenceConfig, ShiftedConfig> d)
        : _description(std::move(d)) {}

    std::variant<FormulaConfig, LevelSequenceConfig, ShiftedConfig> _description;
  };

  Symbol evaluate(ConfigOracle const& x, Element const& g);

  // Total pattern with cell v equal to evaluate(x, v).
  Pattern restrict(ConfigOracle const& x, std::shared_ptr<Window const> w);

  // evaluate(sigma_g x, v) == evaluate(x, v) for every v in w.
  bool periodic_under(ConfigOracle const& x, Element const& g, Window const& w);

  // Exact decision of sigma_g x == x.  Throws ResourceError if the finite
  // search it reduces to exceeds max_checks evaluations.
  bool exact_stab(ConfigOracle const& x, Element const& g, std::size_t max_checks = 50'000'000);

}  // namespace bsshift

#endif  // BSSHIFT_SUBSHIFT_HPP_
