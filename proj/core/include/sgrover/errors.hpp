#pragma once

#include <stdexcept>
#include <string>

namespace sgrover {

/// Complex fails the standing assumptions (purity, strong connectivity)
/// or an input file/facet list is malformed. CLI exit code 2.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Dimension or parameter outside the range an operation is defined for.
/// CLI exit code 3.
class RangeError : public std::runtime_error {
 public:
  explicit RangeError(const std::string& what) : std::runtime_error(what) {}
};

/// A stated precondition on the input data does not hold (e.g. a vector
/// is not in the required subspace). CLI exit code 4.
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical guarantee lost (residual above tolerance where the
/// construction promises better). CLI exit code 5.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sgrover
