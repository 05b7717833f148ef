#pragma once

#include <stdexcept>
#include <string>

namespace flagein {

// Base class for all domain errors raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// (family, rank) is not a valid simple Lie type.  The message names the
// canonical alternative when one exists (e.g. D3 -> A3).
struct InvalidTypeError : Error {
  char family;
  int rank;
  InvalidTypeError(char f, int r, const std::string& msg)
      : Error(msg), family(f), rank(r) {}
};

struct DimensionMismatchError : Error {
  using Error::Error;
};

struct NotARootError : Error {
  using Error::Error;
};

// The painted simple root does not have height two.  For the height-one
// cases of the classical families the message names the Hermitian
// symmetric space that the painting produces instead.
struct HeightNotTwoError : Error {
  int mark;
  std::string hermitian_symmetric_name;  // empty when not applicable
  HeightNotTwoError(int m, std::string name, const std::string& msg)
      : Error(msg), mark(m), hermitian_symmetric_name(std::move(name)) {}
};

struct BadLevelError : Error {
  using Error::Error;
};

struct NotUniqueError : Error {
  using Error::Error;
};

struct NotDominantError : Error {
  using Error::Error;
};

struct NonIntegerResultError : Error {
  using Error::Error;
};

// A metric was passed to an operation that requires a point on one of the
// two Einstein rays.
struct NotCriticalError : Error {
  using Error::Error;
};

}  // namespace flagein
