#pragma once

#include <optional>

#include "latslope/enumerate.hpp"
#include "latslope/lattice.hpp"

namespace latslope {

// Squared first minimum: min nonzero x G x^T, found by enumeration with a
// doubling bound seeded at the smallest diagonal entry.
Rat first_minimum(const Lattice& l);

enum class MinSlopeMethod { Brute, Invariant };

struct RankBound {
  std::size_t rank;       // sublattice rank searched
  Rat bound;              // squared-norm enumeration radius used at the top level
  bool via_dual;          // searched as rank (n - k) in the dual lattice
};

struct MinSlopeOptions {
  std::size_t rank_cap = 8;
  std::size_t max_enum = 2000000;  // per-enumeration vector guard
};

struct MinSlopeResult {
  SlopeValue value;
  Sublattice witness;                 // first minimizer in HNF-lex order
  MinSlopeMethod method;
  std::vector<RankBound> bounds;      // enumeration bounds, per rank
  std::vector<Sublattice> all_minimizers;  // every minimizing saturated subspace
};

// Exact minimal slope over all nonzero sublattices, together with all
// minimizing saturated subspaces. The search descends rank by rank: the
// first vector of a minimizing sublattice obeys the Minkowski-Hermite bound
// lambda_1(N)^2 <= (4/3)^((k-1)/2) det(N)^(1/k), so candidate lines are
// enumerated within that radius (shrinking as better determinants turn up)
// and the residual problem recurses into the quotient. Ranks above n/2 are
// searched in the dual lattice via the sharp bijection.
MinSlopeResult min_slope_bruteforce(const Lattice& l,
                                    const MinSlopeOptions& opts = {});

// The inclusion-maximal minimizing sublattice: the saturated sum of all
// minimizers. Its slope is asserted to equal the minimal slope.
Sublattice destabilizing(const Lattice& l, const MinSlopeOptions& opts = {});

struct Filtration {
  Lattice parent;
  std::vector<Sublattice> steps;           // {0} = S_0 < S_1 < ... < S_m = L
  std::vector<SlopeValue> quotient_slopes; // slopes of S_i / S_{i-1}
  struct PolygonVertex {
    unsigned long rank;
    Rat vol_sq;
    double approx_log_vol;
  };
  std::vector<PolygonVertex> polygon;      // m + 1 vertices
};

// Canonical filtration with strictly increasing quotient slopes; the strict
// increase is verified before returning.
Filtration canonical_filtration(const Lattice& l, const MinSlopeOptions& opts = {});

SlopeValue max_slope(const Lattice& l, const MinSlopeOptions& opts = {});
// The inclusion-minimal N with mu(L/N) maximal; {0} for semistable lattices.
Sublattice codestabilizing(const Lattice& l, const MinSlopeOptions& opts = {});

struct SemistabilityReport {
  bool semistable;
  SlopeValue mu;
  SlopeValue mu_min;
  std::optional<Sublattice> destabilizing;  // present when not semistable
  std::vector<RankBound> bounds;            // enumeration audit when semistable
};

SemistabilityReport is_semistable(const Lattice& l, const MinSlopeOptions& opts = {});

struct ParallelogramReport {
  bool vacuous;          // S1 contained in S2: both sides have rank zero
  bool holds;
  std::optional<SlopeValue> lhs;  // mu(S1 / S1 cap S2)
  std::optional<SlopeValue> rhs;  // mu(S1 + S2 / S2)
};

// mu(S1 / S1 cap S2) >= mu(S1 + S2 / S2), via exact determinant ratios.
ParallelogramReport parallelogram_check(const Lattice& l, const Sublattice& s1,
                                        const Sublattice& s2);

struct QuotientMinSlopeReport {
  SlopeValue mu_min_sub;
  SlopeValue mu_min_parent;
  SlopeValue mu_min_quotient;
  bool upper_ok;  // mu_min(S) >= mu_min(L)
  bool lower_ok;  // mu_min(L) >= min(mu_min(S), mu_min(L/S))
  bool holds() const { return upper_ok && lower_ok; }
};

// Requires 0 < rank(S) < rank(L).
QuotientMinSlopeReport quotient_minslope_check(const Lattice& l,
                                               const Sublattice& s,
                                               const MinSlopeOptions& opts = {});

}  // namespace latslope
