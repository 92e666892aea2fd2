#pragma once

#include <stdexcept>
#include <string>

namespace qgan {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Dimensions of two operands do not agree.
struct DimensionError : Error {
  using Error::Error;
};

// A matrix required to be PSD has a significantly negative eigenvalue.
struct NotPsdError : Error {
  using Error::Error;
};

// An iterative routine failed to converge within its internal budget.
struct IterationError : Error {
  using Error::Error;
};

// A solver iterate became non-finite.
struct DivergenceError : Error {
  using Error::Error;
};

// The discriminator Gram matrix lost rank on the full-rank solver path.
struct RankCollapseError : Error {
  using Error::Error;
};

// A matrix that must stay symmetric drifted past the allowed threshold.
struct SymmetryError : Error {
  using Error::Error;
};

// A vector iterate collapsed onto the origin where the gradient is undefined.
struct ZeroVectorError : Error {
  using Error::Error;
};

// A matrix required to be invertible is singular at the configured floor.
struct SingularError : Error {
  using Error::Error;
};

// Two point sets that must have equal size/dimension do not.
struct SizeError : Error {
  using Error::Error;
};

// A problem instance exceeds the desk-scale guard.
struct BudgetError : Error {
  using Error::Error;
};

// Invalid experiment configuration.
struct ValidationError : Error {
  using Error::Error;
};

}  // namespace qgan
