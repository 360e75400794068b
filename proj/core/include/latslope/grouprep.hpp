#pragma once

#include <optional>

#include "latslope/minslope.hpp"

namespace latslope {

// A finite group acting on a lattice: every generator is an integer matrix g
// with |det g| = 1 preserving the Gram matrix, g G g^T = G. Those two facts
// already force the generated group to be finite; the explicit closure is
// run to record the order when it fits under the cap.
struct GroupAction {
  Lattice parent;
  std::vector<IntMatrix> generators;
  std::optional<unsigned long> order;  // set when the closure fit the cap
};

struct ValidateOptions {
  unsigned long closure_cap = 1000000;
  // When true, exceeding the cap is an error instead of an unset order.
  bool strict_closure = false;
};

GroupAction validate_action(const Lattice& l, std::vector<IntMatrix> generators,
                            const ValidateOptions& opts = {});

// Basis of the commutant algebra { X : X g = g X for all generators }.
std::vector<RatMatrix> commutant(const GroupAction& action);

enum class MfStatus { MultiplicityFree, NotMultiplicityFree, Inconclusive };

struct IsotypicDecomposition {
  std::vector<Subspace> components;     // canonical order: (dim, basis-lex)
  std::size_t commutant_dim = 0;
  std::vector<std::size_t> component_endo_dims;
  MfStatus status = MfStatus::NotMultiplicityFree;
  std::string failure_stage;            // set when not multiplicity-free

  bool multiplicity_free() const { return status == MfStatus::MultiplicityFree; }
  std::size_t r() const { return components.size(); }
};

struct DecomposeOptions {
  unsigned long seed = 0x51a7e5ULL;
  int max_retries = 10;
};

// Splits the representation into isotypic components and certifies the
// multiplicity-free property: commutative commutant that splits over Q with
// distinct rational eigenvalues, every component with endomorphism dimension
// one. Failure of any stage reports NotMultiplicityFree with the stage named;
// exhausting the random splitting retries reports Inconclusive.
IsotypicDecomposition isotypic_decompose(const GroupAction& action,
                                         const DecomposeOptions& opts = {});

// The 2^r - 1 nonzero sums of components, ordered by subset bitmask.
std::vector<Subspace> invariant_subspaces(const IsotypicDecomposition& dec);

// Minimal slope through the invariant-subspace route: the destabilizing
// sublattice is automorphism-invariant, so for a multiplicity-free action it
// is cut out by one of the component sums.
MinSlopeResult min_slope_invariant(const Lattice& l, const GroupAction& action,
                                   const DecomposeOptions& opts = {});
MinSlopeResult min_slope_invariant(const Lattice& l,
                                   const IsotypicDecomposition& dec);

struct AutomorphismSearchOptions {
  std::size_t rank_cap = 6;
  unsigned long node_cap = 5000000;
};

// Backtracking search for all automorphisms: basis vectors map to equal-norm
// vectors with matching pairwise inner products.
GroupAction naive_automorphisms(const Lattice& l,
                                const AutomorphismSearchOptions& opts = {});

}  // namespace latslope
