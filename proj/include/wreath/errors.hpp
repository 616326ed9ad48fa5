#pragma once

#include <stdexcept>

namespace wreath {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define WREATH_ERROR(Name)   \
  class Name : public Error { \
   public:                    \
    using Error::Error;       \
  }

WREATH_ERROR(FieldMismatch);
WREATH_ERROR(ShapeMismatch);
WREATH_ERROR(NotIdempotent);
WREATH_ERROR(DemimonadAxiomFailure);
WREATH_ERROR(AxiomFailure);
WREATH_ERROR(PathsDisagree);
WREATH_ERROR(InvalidLaw);
WREATH_ERROR(InvalidOneCell);
WREATH_ERROR(PreconditionFailure);
WREATH_ERROR(IndexOutOfRange);
WREATH_ERROR(NotAGroup);
WREATH_ERROR(MismatchWithGeneralFormula);
WREATH_ERROR(ParseError);

#undef WREATH_ERROR

}  // namespace wreath
