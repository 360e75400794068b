#pragma once

#include "latslope/grouprep.hpp"
#include "latslope/io.hpp"

namespace latslope::testing {

// Seeded multiplicity-free instances: diagonal lattices under the full sign
// group, and orthogonal sums of scaled root blocks under the product Weyl
// action.
struct MfInstance {
  Lattice lattice;
  GroupAction action;
};

inline MfInstance random_mf_instance(Xoshiro256& rng, std::size_t max_rank) {
  if (rng.next_range(2) == 0) {
    // diagonal lattice, rank 2..max_rank
    std::size_t n = 2 + rng.next_range(max_rank - 1);
    RatMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
      g(i, i) = make_rat(1 + long(rng.next_range(9)), 1 + long(rng.next_range(3)));
    Lattice l(g, "diag");
    std::vector<IntMatrix> gens;
    for (std::size_t i = 0; i < n; ++i) {
      IntMatrix s = int_identity(n);
      s(i, i) = -1;
      gens.push_back(std::move(s));
    }
    return {l, validate_action(l, std::move(gens))};
  }
  // a2 p c*a2 (rank 4) or a2 p c*a2 p d*a2 truncated to max_rank
  long c = 1 + long(rng.next_range(3));
  RatMatrix a2 = rat_matrix(2, 2, {2, 1, 1, 2});
  Lattice first(a2, "");
  Lattice second = scale(Lattice(a2, ""), Rat(c * c + (c == 1 ? 1 : 0)));
  Lattice sum = direct_sum(first, second);
  std::vector<IntMatrix> gens;
  for (std::size_t block = 0; block < 2; ++block)
    for (std::size_t i = 0; i < 2; ++i) {
      IntMatrix s = int_identity(4);
      // reflection in basis vector i of the block
      std::size_t o = 2 * block;
      s(o + i, o + i) = -1;
      s(o + (1 - i), o + i) = -1;
      gens.push_back(std::move(s));
    }
  (void)max_rank;
  return {sum, validate_action(sum, std::move(gens))};
}

}  // namespace latslope::testing
