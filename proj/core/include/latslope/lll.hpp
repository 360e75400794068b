#pragma once

#include "latslope/matrix.hpp"

namespace latslope {

struct LllResult {
  IntMatrix u;      // unimodular change of basis
  RatMatrix gram;   // u * g * u^T, delta-LLL-reduced
};

// Exact Gram-only LLL with delta = 3/4. Throws InputError when g is not
// symmetric positive definite.
LllResult lll_reduce(const RatMatrix& g);

}  // namespace latslope
