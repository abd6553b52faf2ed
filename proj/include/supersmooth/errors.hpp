#pragma once

#include <stdexcept>
#include <string>

namespace supersmooth {

// Base for every domain error raised by the library. The CLI maps these to
// exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define SUPERSMOOTH_ERROR(Name)          \
  class Name : public Error {            \
   public:                               \
    using Error::Error;                  \
  }

SUPERSMOOTH_ERROR(InvalidDirection);
SUPERSMOOTH_ERROR(InvalidRay);
SUPERSMOOTH_ERROR(DuplicateRay);
SUPERSMOOTH_ERROR(FanSizeError);
SUPERSMOOTH_ERROR(OriginHasNoSector);
SUPERSMOOTH_ERROR(SingularDecomposition);
SUPERSMOOTH_ERROR(ArityError);
SUPERSMOOTH_ERROR(MissingDirection);
SUPERSMOOTH_ERROR(InvalidSlopes);
SUPERSMOOTH_ERROR(Unsupported);
SUPERSMOOTH_ERROR(EvaluationError);
SUPERSMOOTH_ERROR(ParseError);
SUPERSMOOTH_ERROR(SchemaError);

#undef SUPERSMOOTH_ERROR

}  // namespace supersmooth
