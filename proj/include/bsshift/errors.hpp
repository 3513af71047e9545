#ifndef BSSHIFT_ERRORS_HPP_
#define BSSHIFT_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bsshift {

  // Base of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Invalid parameters: N < 2, formula variant incompatible with N, etc.
  class ParameterError : public Error {
   public:
    using Error::Error;
  };

  // A documented precondition of an operation does not hold.
  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

  // An exponent or counter left the range we are willing to represent.
  class OverflowError : public Error {
   public:
    using Error::Error;
  };

  // A configured budget (vertices, search nodes, DP states) was exhausted.
  // Distinct from a mathematical answer of zero.
  class ResourceError : public Error {
   public:
    using Error::Error;
  };

  // A construction failed its own validation.
  class ConstructionError : public Error {
   public:
    using Error::Error;
  };

  class ParseError : public Error {
   public:
    ParseError(std::string const& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)),
          _position(position) {}

    std::size_t position() const noexcept {
      return _position;
    }

   private:
    std::size_t _position;
  };

}  // namespace bsshift

#endif  // BSSHIFT_ERRORS_HPP_
