#ifndef BSSHIFT_GROUP_HPP_
#define BSSHIFT_GROUP_HPP_

// Exact arithmetic in the Baumslag-Solitar group BS(1,N) = <a, b | b a b^-1 = a^N>.
//
// Every element has a unique reduced normal form b^-j a^k b^i with i, j >= 0
// and NOT (i > 0 and j > 0 and N | k).  Elements are stored as that triple;
// words are only an input/output syntax.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace bsshift {

  using Integer  = boost::multiprecision::cpp_int;
  using Rational = boost::multiprecision::cpp_rational;

  // Largest exponent (in bits) an a-power may reach before OverflowError.
  inline constexpr std::size_t kExponentBitBudget = std::size_t(1) << 20;

  class GroupParams {
   public:
    // Throws ParameterError unless N >= 2.
    explicit GroupParams(std::int64_t N);

    std::int64_t N() const noexcept {
      return _N;
    }

    bool operator==(GroupParams const&) const = default;

   private:
    std::int64_t _N;
  };

  struct Element {
    std::int64_t j = 0;  // leading b^-1 count
    Integer      k = 0;  // a-exponent
    std::int64_t i = 0;  // trailing b count

    bool operator==(Element const& other) const {
      return j == other.j && i == other.i && k == other.k;
    }
  };

  // Lexicographic on (j, k, i); used only for canonical ordering of sets.
  bool operator<(Element const& x, Element const& y);

  struct ElementHash {
    std::size_t operator()(Element const& g) const noexcept;
  };

  inline Element identity() {
    return Element{};
  }

  // a^k, b^i and b^-j as elements.
  Element a_pow(Integer k);
  Element b_pow(std::int64_t e);

  bool is_reduced(Element const& g, GroupParams const& P);

  // The reduced element equal to b^-j a^k b^i.
  Element normalize(std::int64_t j, Integer k, std::int64_t i, GroupParams const& P);

  Element multiply(Element const& g, Element const& h, GroupParams const& P);

  // (j, k, i) -> (i, -k, j).
  Element invert(Element const& g);

  // k * N^e, checked against kExponentBitBudget.
  Integer psi_pow(Integer const& k, std::int64_t e, GroupParams const& P);

  // i - j; a homomorphism BS(1,N) -> Z that kills a.
  inline std::int64_t level(Element const& g) {
    return g.i - g.j;
  }

  // Word syntax: letters a, A (= a^-1), b, B (= b^-1), optionally followed by
  // ^<signed integer>; whitespace is ignored and "e" denotes the identity.
  Element parse_word(std::string_view word, GroupParams const& P);

  // Canonical spelling "B^j a^k b^i" (exponent 1 omitted, "e" for identity).
  std::string emit_word(Element const& g);

  // "(j,k,i)".
  std::string to_string(Element const& g);

}  // namespace bsshift

#endif  // BSSHIFT_GROUP_HPP_
