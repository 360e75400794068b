#pragma once

#include "latslope/grouprep.hpp"

namespace latslope {

// A split subspace of the tensor space: the direct sum of E_i (x) F_i where
// F_i is the sum of the F-side isotypic components selected by masks[i].
struct SplitSubspace {
  std::vector<std::uint32_t> masks;  // one bitmask per E-component
  std::vector<Subspace> f_parts;     // realized F_i, zero-dimensional allowed
  Subspace realized;                 // subspace of Q^(l*m)
};

GroupAction product_action(const GroupAction& act_g, const GroupAction& act_h);

// Every invariant subspace of the tensor of two multiplicity-free modules:
// each F_i ranges over the 2^s component sums, all-zero excluded. Ordered by
// the mixed-radix counter over masks.
std::vector<SplitSubspace> split_invariant_subspaces(
    const IsotypicDecomposition& dec_e, const IsotypicDecomposition& dec_f,
    std::size_t e_ambient, std::size_t f_ambient);

struct TensorMinSlope {
  MinSlopeResult result;
  SplitSubspace minimizing_split;
};

TensorMinSlope min_slope_tensor(const Lattice& l, const GroupAction& act_g,
                                const Lattice& m, const GroupAction& act_h,
                                const DecomposeOptions& opts = {});

enum class Verdict { Equal, StrictlyLess };

struct ConjectureReport {
  SlopeValue mu_min_l;
  SlopeValue mu_min_m;
  SlopeValue mu_min_tensor;
  SlopeValue product;
  Verdict verdict;
  SplitSubspace minimizing_split;
  Sublattice witness;  // minimizing sublattice of the tensor lattice
  std::size_t r, s;
  // StrictlyLess is re-verified through the brute-force path when the tensor
  // rank permits; a candidate counterexample is never reported unverified
  // without saying so.
  bool reverified;
};

struct ConjectureOptions {
  DecomposeOptions decompose;
  MinSlopeOptions brute;  // used for re-verification
};

ConjectureReport conjecture_check(const Lattice& l, const GroupAction& act_g,
                                  const Lattice& m, const GroupAction& act_h,
                                  const ConjectureOptions& opts = {});

// One named check of the index-diagram audit.
struct AuditCheck {
  std::string name;
  bool passed;
};

// Exact audit of the rank-two index diagram around the destabilizing split
// subspace U = E1 (x) F1 + E2 (x) F2 of L (x) M:
//
//   indices a = [L : L1 p L2], b = [M : M1 p M2],
//   alpha_i = (mu(L_i)/mu(L))^(l_i), beta_i analogous,
//   x = [P : L1(x)M1 p L2(x)M2],  t = [pi_U(T) : P],
//   x' = [pi_1L(x)pi'_1M p pi_2L(x)pi'_2M : pi_U(T)],
//   y, y' the mirror-image indices on the U-perp side.
//
// When F1, F2 partition the F-components the full two-sided diagram applies;
// otherwise only the left side is defined and the generalized per-side
// indices b_i = [pi'_iM : M_i] replace b.
struct TheoremAudit {
  bool applicable = false;
  std::string reason;          // set when not applicable
  bool full_diagram = false;   // false: left side only (masks overlap)

  std::size_t l1 = 0, l2 = 0, m1 = 0, m2 = 0;
  Int a, b;                    // b meaningful when b_defined
  bool b_defined = false;
  Rat b1, b2;                  // per-side indices [pi'_iM : M_i]
  Radical alpha1{Rat(1), 2}, alpha2{Rat(1), 2};
  Radical beta1{Rat(1), 2}, beta2{Rat(1), 2};
  Rat x, t, xp;                // left chain
  std::optional<Rat> y, yp;    // right chain, full diagram only
  long sign_product_1 = 0;     // (m1 - m2)(l1 - l2)
  long sign_product_2 = 0;     // (m1 - m2)(l2 - l1)
  std::vector<AuditCheck> checks;

  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

TheoremAudit theorem_audit(const Lattice& l, const GroupAction& act_g,
                           const Lattice& m, const GroupAction& act_h,
                           const DecomposeOptions& opts = {});

// Informational diagnostics mirroring the minimal-counterexample reductions:
// semistability of both factors and the span/intersection predicates of the
// minimizing split. Reported, never asserted.
struct ReductionPredicates {
  bool l_semistable;
  bool m_semistable;
  bool sum_e_full;
  bool sum_f_full;
  bool cap_f_zero;
};

ReductionPredicates reduction_predicates(const Lattice& l, const GroupAction& act_g,
                                         const Lattice& m, const GroupAction& act_h,
                                         const DecomposeOptions& opts = {});

}  // namespace latslope
