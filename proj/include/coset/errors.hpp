// errors.hpp - exception types thrown by the core modules.
#ifndef COSET_ERRORS_HPP
#define COSET_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace coset {

// Base class for everything this library throws on bad input or a broken
// precondition.  Internal invariant violations use std::logic_error instead.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define COSET_DEFINE_ERROR(Name)        \
  struct Name : Error {                 \
    using Error::Error;                 \
  }

COSET_DEFINE_ERROR(UnsupportedSeries);
COSET_DEFINE_ERROR(InvalidRank);
COSET_DEFINE_ERROR(DimensionMismatch);
COSET_DEFINE_ERROR(ZeroRoot);
COSET_DEFINE_ERROR(NotARoot);
COSET_DEFINE_ERROR(NotASubsystem);
COSET_DEFINE_ERROR(GroupTooLarge);
COSET_DEFINE_ERROR(NotDominant);
COSET_DEFINE_ERROR(NotIntegral);
COSET_DEFINE_ERROR(NotWInvariant);
COSET_DEFINE_ERROR(NonIntegralPeel);
COSET_DEFINE_ERROR(ClosureViolation);
COSET_DEFINE_ERROR(EmptyComplement);
COSET_DEFINE_ERROR(NotInTransversal);
COSET_DEFINE_ERROR(CutoffBeforeFirstLine);
COSET_DEFINE_ERROR(NonPositiveScale);

#undef COSET_DEFINE_ERROR

// Space-spec syntax error; remembers where in the input it happened.
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t pos)
      : Error(what + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
  std::size_t position;
};

}  // namespace coset

#endif
