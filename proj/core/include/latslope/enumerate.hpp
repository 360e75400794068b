#pragma once

#include "latslope/matrix.hpp"

namespace latslope {

struct ShortVector {
  std::vector<Int> coeffs;
  Rat norm_sq;
};

// An enumeration produced more candidates than the configured guard allows;
// callers treat this as "instance too large", never as an empty result.
class EnumerationOverflow : public Error {
 public:
  using Error::Error;
};

// All nonzero x in Z^l with x g x^T <= bound, one representative per +-pair
// (first nonzero coordinate positive), sorted by (norm, lexicographic).
// Internally enumerates on the LLL-reduced form of g.
std::vector<ShortVector> enumerate_short(const RatMatrix& g, const Rat& bound,
                                         std::size_t max_results = 2000000);

}  // namespace latslope
