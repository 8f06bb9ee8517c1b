#pragma once

#include <stdexcept>
#include <string>

namespace repflow {

// Base class for every error thrown by the toolkit.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SizeMismatch : Error {
  using Error::Error;
};
struct NonHermitianInput : Error {
  using Error::Error;
};
struct ConvergenceFailure : Error {
  using Error::Error;
};
struct NotPositiveDefinite : Error {
  using Error::Error;
};
struct SingularInput : Error {
  using Error::Error;
};
struct ParameterOutOfRange : Error {
  using Error::Error;
};
struct NotInGroup : Error {
  using Error::Error;
};
struct NotInCompact : Error {
  using Error::Error;
};
struct DirectionNotInP : Error {
  using Error::Error;
};
struct IndexOutOfRange : Error {
  using Error::Error;
};
struct WrongSignature : Error {
  using Error::Error;
};
struct WordSyntaxError : Error {
  using Error::Error;
};
struct BadDescriptor : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};
struct IoError : Error {
  using Error::Error;
};

}  // namespace repflow
