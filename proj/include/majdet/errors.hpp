#pragma once

#include <stdexcept>
#include <string>

namespace majdet {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define MAJDET_DEFINE_ERROR(Name)              \
  class Name : public Error {                  \
   public:                                     \
    explicit Name(const std::string& what)     \
        : Error(std::string(#Name ": ") + what) {} \
  }

MAJDET_DEFINE_ERROR(NotDivisible);
MAJDET_DEFINE_ERROR(MissingVariable);
MAJDET_DEFINE_ERROR(ConductorMismatch);
MAJDET_DEFINE_ERROR(SizeTooLarge);
MAJDET_DEFINE_ERROR(SizeMismatch);
MAJDET_DEFINE_ERROR(ShapeMismatch);
MAJDET_DEFINE_ERROR(OutOfRange);
MAJDET_DEFINE_ERROR(CardinalityMismatch);
MAJDET_DEFINE_ERROR(TooLargeForSymbolic);
MAJDET_DEFINE_ERROR(NonIntegerExponent);
MAJDET_DEFINE_ERROR(NonIntegerResult);
MAJDET_DEFINE_ERROR(InvalidDivisor);
MAJDET_DEFINE_ERROR(DegreeBoundExceeded);
MAJDET_DEFINE_ERROR(ParseError);
MAJDET_DEFINE_ERROR(InvalidArgument);

#undef MAJDET_DEFINE_ERROR

}  // namespace majdet
