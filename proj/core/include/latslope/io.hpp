#pragma once

#include <optional>
#include <string>

#include "latslope/minslope.hpp"
#include "latslope/rng.hpp"
#include "latslope/tensorconj.hpp"

namespace latslope {

// Lattice interchange format:
//   { "name": text,
//     "gram": [[rational strings]],
//     "group_generators": [[[int]]] }    (optional)
// Grams are validated on load (symmetry, positive definiteness); generators
// run through validate_action.
struct LoadedLattice {
  Lattice lattice;
  std::optional<GroupAction> action;
};

LoadedLattice load_lattice_text(const std::string& json_text);
LoadedLattice load_lattice_file(const std::string& path);
std::string lattice_to_json(const Lattice& l,
                            const std::vector<IntMatrix>* generators = nullptr);
void save_lattice_file(const std::string& path, const Lattice& l,
                       const std::vector<IntMatrix>* generators = nullptr);

std::string slope_to_json(const SlopeValue& s);
std::string minslope_to_json(const MinSlopeResult& r);
std::string filtration_to_json(const Filtration& f);
std::string semistable_to_json(const SemistabilityReport& r);
std::string conjecture_to_json(const ConjectureReport& r);
std::string audit_to_json(const TheoremAudit& a);

struct CorpusEntry {
  std::string name;
  Lattice lattice;
  std::optional<GroupAction> action;
  std::string provenance;
};

// Named corpus: zN, aN, dN (N <= 9), e6, e7, e8 with Weyl generators from the
// Cartan reflection formulas; diag_d1_..._dk with the full sign group;
// a2p2a2 / a2p3a2 orthogonal sums with the product Weyl action; glued2, the
// index-two glue of two orthogonal norm-one vectors.
CorpusEntry corpus(const std::string& name);
std::vector<std::string> corpus_names();

// Gram = B B^T for a seeded random integer matrix B with |entries| <= bound,
// resampled until nonsingular.
Lattice random_lattice(Xoshiro256& rng, std::size_t rank, long entry_bound = 3);

// Random saturated sublattice of the given rank.
Sublattice random_sublattice(Xoshiro256& rng, const Lattice& l, std::size_t rank);

}  // namespace latslope
