#include "bsshift/group.hpp"

#include <bit>
#include <cctype>
#include <limits>

#include "bsshift/errors.hpp"

namespace bsshift {

  namespace {
    std::int64_t checked_add(std::int64_t x, std::int64_t y) {
      std::int64_t result;
      if (__builtin_add_overflow(x, y, &result)) {
        throw OverflowError("b-exponent overflows 64 bits");
      }
      return result;
    }

    std::size_t bit_length(Integer const& x) {
      return x == 0 ? 0 : boost::multiprecision::msb(abs(x)) + 1;
    }
  }  // namespace

  GroupParams::GroupParams(std::int64_t N) : _N(N) {
    if (N < 2) {
      throw ParameterError("BS(1,N) requires N >= 2, got " + std::to_string(N));
    }
  }

  bool operator<(Element const& x, Element const& y) {
    if (x.j != y.j) {
      return x.j < y.j;
    }
    if (x.k != y.k) {
      return x.k < y.k;
    }
    return x.i < y.i;
  }

  std::size_t ElementHash::operator()(Element const& g) const noexcept {
    std::size_t seed = std::hash<Integer>()(g.k);
    seed ^= std::hash<std::int64_t>()(g.j) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
    seed ^= std::hash<std::int64_t>()(g.i) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
    return seed;
  }

  Element a_pow(Integer k) {
    return Element{0, std::move(k), 0};
  }

  Element b_pow(std::int64_t e) {
    return e >= 0 ? Element{0, 0, e} : Element{-e, 0, 0};
  }

  bool is_reduced(Element const& g, GroupParams const& P) {
    if (g.i < 0 || g.j < 0) {
      return false;
    }
    return !(g.i > 0 && g.j > 0 && g.k % P.N() == 0);
  }

  Element normalize(std::int64_t j, Integer k, std::int64_t i, GroupParams const& P) {
    if (i < 0 || j < 0) {
      throw ParameterError("normal form requires i, j >= 0");
    }
    Integer const N = P.N();
    while (i > 0 && j > 0) {
      Integer q, r;
      boost::multiprecision::divide_qr(k, N, q, r);
      if (r != 0) {
        break;
      }
      k = std::move(q);
      --i;
      --j;
    }
    return Element{j, std::move(k), i};
  }

  Integer psi_pow(Integer const& k, std::int64_t e, GroupParams const& P) {
    if (e < 0) {
      throw ParameterError("psi_pow requires a non-negative exponent");
    }
    if (k == 0 || e == 0) {
      return k;
    }
    auto const per_step = static_cast<std::size_t>(std::bit_width(static_cast<std::uint64_t>(P.N())));
    if (static_cast<std::uint64_t>(e) > kExponentBitBudget / per_step
        || bit_length(k) + static_cast<std::size_t>(e) * per_step > kExponentBitBudget) {
      throw OverflowError("a-exponent k*N^" + std::to_string(e) + " exceeds the exponent budget");
    }
    return k * boost::multiprecision::pow(Integer(P.N()), static_cast<unsigned>(e));
  }

  Element multiply(Element const& g, Element const& h, GroupParams const& P) {
    // b^-j1 a^k1 b^i1 . b^-j2 a^k2 b^i2, using b^d a^k = a^(k N^d) b^d.
    if (g.i >= h.j) {
      std::int64_t const d = g.i - h.j;
      return normalize(g.j, g.k + psi_pow(h.k, d, P), checked_add(d, h.i), P);
    }
    std::int64_t const d = h.j - g.i;
    return normalize(checked_add(g.j, d), psi_pow(g.k, d, P) + h.k, h.i, P);
  }

  Element invert(Element const& g) {
    return Element{g.i, -g.k, g.j};
  }

  Element parse_word(std::string_view word, GroupParams const& P) {
    Element result;
    std::size_t pos = 0;
    auto skip_space = [&] {
      while (pos < word.size() && std::isspace(static_cast<unsigned char>(word[pos]))) {
        ++pos;
      }
    };
    skip_space();
    while (pos < word.size()) {
      std::size_t const start = pos;
      char const letter = word[pos++];
      if (letter == 'e') {
        skip_space();
        continue;
      }
      if (letter != 'a' && letter != 'A' && letter != 'b' && letter != 'B') {
        throw ParseError(std::string("unknown letter '") + letter + "'", start);
      }
      Integer exponent = 1;
      skip_space();
      if (pos < word.size() && word[pos] == '^') {
        ++pos;
        skip_space();
        std::size_t const digits_start = pos;
        bool negative = false;
        if (pos < word.size() && (word[pos] == '-' || word[pos] == '+')) {
          negative = word[pos] == '-';
          ++pos;
        }
        std::size_t const first_digit = pos;
        while (pos < word.size() && std::isdigit(static_cast<unsigned char>(word[pos]))) {
          ++pos;
        }
        if (pos == first_digit) {
          throw ParseError("expected an integer exponent after '^'", digits_start);
        }
        exponent = Integer(std::string(word.substr(first_digit, pos - first_digit)));
        if (negative) {
          exponent = -exponent;
        }
      }
      if (letter == 'A' || letter == 'B') {
        exponent = -exponent;
      }
      Element factor;
      if (letter == 'a' || letter == 'A') {
        factor = a_pow(exponent);
      } else {
        if (abs(exponent) > Integer(std::numeric_limits<std::int32_t>::max())) {
          throw OverflowError("b-exponent out of range");
        }
        factor = b_pow(static_cast<std::int64_t>(exponent));
      }
      result = multiply(result, factor, P);
      skip_space();
    }
    return result;
  }

  std::string emit_word(Element const& g) {
    std::string out;
    auto append = [&out](std::string const& letter, std::string const& exponent) {
      if (!out.empty()) {
        out += ' ';
      }
      out += letter;
      if (exponent != "1") {
        out += '^' + exponent;
      }
    };
    if (g.j > 0) {
      append("B", std::to_string(g.j));
    }
    if (g.k != 0) {
      append("a", g.k.str());
    }
    if (g.i > 0) {
      append("b", std::to_string(g.i));
    }
    return out.empty() ? "e" : out;
  }

  std::string to_string(Element const& g) {
    return "(" + std::to_string(g.j) + "," + g.k.str() + "," + std::to_string(g.i) + ")";
  }

}  // namespace bsshift
