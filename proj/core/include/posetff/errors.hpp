#pragma once

#include <stdexcept>
#include <string>

namespace posetff {

// Base for every error raised by the library. The CLI maps these onto exit
// code 2 (bad input) unless a command says otherwise.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define POSETFF_DEFINE_ERROR(Name)          \
  class Name : public Error {               \
   public:                                  \
    using Error::Error;                     \
  }

POSETFF_DEFINE_ERROR(CycleError);
POSETFF_DEFINE_ERROR(IdOutOfRange);
POSETFF_DEFINE_ERROR(SizeMismatch);
POSETFF_DEFINE_ERROR(BudgetExhausted);
POSETFF_DEFINE_ERROR(MalformedInterval);
POSETFF_DEFINE_ERROR(InvalidGraph);
POSETFF_DEFINE_ERROR(InvalidOrder);
POSETFF_DEFINE_ERROR(CoverageError);
POSETFF_DEFINE_ERROR(TooLarge);
POSETFF_DEFINE_ERROR(InvalidBlock);
POSETFF_DEFINE_ERROR(NoUpSet);
POSETFF_DEFINE_ERROR(InvalidDecomposition);
POSETFF_DEFINE_ERROR(InvalidColoring);
POSETFF_DEFINE_ERROR(ParamError);
POSETFF_DEFINE_ERROR(OutOfRange);
POSETFF_DEFINE_ERROR(GaveUp);
POSETFF_DEFINE_ERROR(ParseError);
POSETFF_DEFINE_ERROR(IoError);

// Raised when a proof-backed invariant fails at runtime. Reaching one of
// these means the implementation is wrong, not the input.
POSETFF_DEFINE_ERROR(InternalError);

#undef POSETFF_DEFINE_ERROR

}  // namespace posetff
