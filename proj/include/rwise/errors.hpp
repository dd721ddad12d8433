#pragma once

#include <stdexcept>
#include <string>

namespace rwise {

/// Invalid parameters or malformed input. The CLI maps this to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The operation is defined only on families with some property the input lacks
/// (e.g. counting triangles of a family that is not r-wise t-intersecting). Exit code 3.
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A structural result that must hold did not (e.g. no cover pattern matched).
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace rwise
