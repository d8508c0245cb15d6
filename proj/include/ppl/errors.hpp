#pragma once

#include <stdexcept>
#include <string>

namespace ppl {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define PPL_DEFINE_ERROR(Name)         \
  class Name : public Error {          \
   public:                             \
    using Error::Error;                \
  };

// Input and construction errors.
PPL_DEFINE_ERROR(InputError)
PPL_DEFINE_ERROR(OverlapError)
PPL_DEFINE_ERROR(CycleError)
PPL_DEFINE_ERROR(SizeLimit)
PPL_DEFINE_ERROR(BadParameters)
PPL_DEFINE_ERROR(IoError)

// Algebra.
PPL_DEFINE_ERROR(DuplicateNode)
PPL_DEFINE_ERROR(PrecondError)
PPL_DEFINE_ERROR(NonIntegralHStar)
PPL_DEFINE_ERROR(ConvergenceFailure)
PPL_DEFINE_ERROR(SupportError)

// Geometry and point posets.
PPL_DEFINE_ERROR(UnboundedError)
PPL_DEFINE_ERROR(NotPalindromic)
PPL_DEFINE_ERROR(PointNotInPoset)
PPL_DEFINE_ERROR(NodeCollision)
PPL_DEFINE_ERROR(NoMinimumVertex)

/// A proven identity failed: this is a bug, never a counterexample.
PPL_DEFINE_ERROR(InternalError)

#undef PPL_DEFINE_ERROR

}  // namespace ppl
