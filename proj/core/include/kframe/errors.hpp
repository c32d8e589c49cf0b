#ifndef KFRAME_ERRORS_HPP
#define KFRAME_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kframe {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonFinite : Error {
  using Error::Error;
};
struct DimensionMismatch : Error {
  using Error::Error;
};
struct InvalidDimension : Error {
  using Error::Error;
};
struct NotHermitian : Error {
  using Error::Error;
};
struct NotPositiveDefinite : Error {
  using Error::Error;
};
struct DegenerateSubspace : Error {
  using Error::Error;
};
struct NotJOrthonormal : Error {
  using Error::Error;
};
struct NotFrameError : Error {
  using Error::Error;
};
struct SingularFrameOperator : Error {
  using Error::Error;
};
struct NotMajorized : Error {
  using Error::Error;
};
struct KMismatch : Error {
  using Error::Error;
};
struct DocumentError : Error {
  using Error::Error;
};

}  // namespace kframe

#endif
