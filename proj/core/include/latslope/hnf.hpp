#pragma once

#include "latslope/matrix.hpp"

namespace latslope {

struct HnfResult {
  IntMatrix h;  // row Hermite normal form, zero rows at the bottom
  IntMatrix u;  // unimodular transform with u * m = h
};

// Unique row HNF: pivots positive, entries above each pivot reduced into
// [0, pivot), zero rows last.
HnfResult hnf(const IntMatrix& m);

// HNF with zero rows dropped.
IntMatrix hnf_basis(const IntMatrix& m);

// Z-basis (in HNF) of { x in Z^n : m * x^T = 0 }. The kernel lattice is
// saturated by construction.
IntMatrix integer_kernel(const IntMatrix& m);

// Basis (in HNF) of rowspace_Q(m) intersected with Z^n.
IntMatrix saturate(const IntMatrix& m);

bool is_saturated(const IntMatrix& m);

// For saturated full-row-rank c (k x n), returns a unimodular n x n matrix
// whose first k rows equal c.
IntMatrix complete_basis(const IntMatrix& c);

// Exact inverse of a unimodular integer matrix.
IntMatrix int_inverse(const IntMatrix& u);

}  // namespace latslope
