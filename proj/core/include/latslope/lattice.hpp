#pragma once

#include <string>

#include "latslope/hnf.hpp"
#include "latslope/matrix.hpp"

namespace latslope {

// Exact representation of a positive real radicand^(1/root). Comparisons and
// products are done by cross-powering, so no root is ever extracted.
struct Radical {
  Rat radicand;      // > 0
  unsigned long root;  // >= 1

  double approx() const;
  bool is_rational() const;
  std::optional<Rat> rational_value() const;
};

enum class Order { Less, Equal, Greater };

Order compare(const Radical& a, const Radical& b);
Radical mul(const Radical& a, const Radical& b);
Radical radical_inverse(const Radical& a);
Radical radical_pow(const Radical& a, unsigned long k);

// The slope of a rank-r lattice of squared volume v is v^(1/(2r)); stored as
// the pair (vol_sq, rank) and compared by cross powers.
struct SlopeValue {
  Rat vol_sq;
  unsigned long rank;

  Radical as_radical() const { return {vol_sq, 2 * rank}; }
  double approx() const { return as_radical().approx(); }
};

Order compare(const SlopeValue& a, const SlopeValue& b);
inline bool slope_eq(const SlopeValue& a, const SlopeValue& b) {
  return compare(a, b) == Order::Equal;
}
inline bool slope_less(const SlopeValue& a, const SlopeValue& b) {
  return compare(a, b) == Order::Less;
}
// lcm-exponent product: (v1^(q/r1) * v2^(q/r2), q) with q = lcm(r1, r2).
SlopeValue mul(const SlopeValue& a, const SlopeValue& b);
SlopeValue slope_inverse(const SlopeValue& a);

// A Euclidean lattice given by the Gram matrix of an implicit basis; the Gram
// matrix is the single source of truth for volumes and inner products.
class Lattice {
 public:
  Lattice(RatMatrix gram, std::string label = "");

  const RatMatrix& gram() const { return gram_; }
  std::size_t rank() const { return gram_.rows(); }
  const std::string& label() const { return label_; }

  Rat vol_sq() const;  // det of the Gram matrix

  bool operator==(const Lattice& o) const { return gram_ == o.gram_; }

 private:
  RatMatrix gram_;
  std::string label_;
};

// A subspace of Q^ambient, canonicalized by reduced row echelon form.
class Subspace {
 public:
  Subspace() : ambient_(0), basis_(0, 0) {}  // empty placeholder
  Subspace(std::size_t ambient, RatMatrix basis);
  static Subspace zero(std::size_t ambient);
  static Subspace full(std::size_t ambient);
  static Subspace span_of_int(const IntMatrix& rows);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const RatMatrix& basis() const { return basis_; }

  Subspace sum(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;
  // Orthogonal complement with respect to the bilinear form g.
  Subspace orthogonal_complement(const RatMatrix& g) const;
  bool contains(const Subspace& o) const;
  bool contains_row(const RatMatrix& row) const;

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }

 private:
  std::size_t ambient_;
  RatMatrix basis_;
};

// A saturated (primitive) sublattice, stored as an HNF integer coefficient
// matrix relative to the parent's basis.
class Sublattice {
 public:
  Sublattice(Lattice parent, IntMatrix coeffs, bool saturate_input = true);
  static Sublattice zero(const Lattice& parent);
  static Sublattice full(const Lattice& parent);

  const Lattice& parent() const { return parent_; }
  const IntMatrix& coeffs() const { return coeffs_; }
  std::size_t rank() const { return coeffs_.rows(); }
  bool saturated() const { return saturated_; }

  RatMatrix gram() const;  // coeffs * G * coeffs^T
  Lattice as_lattice() const;
  Subspace span() const;

  bool operator==(const Sublattice& o) const { return coeffs_ == o.coeffs_; }

 private:
  Lattice parent_;
  IntMatrix coeffs_;
  bool saturated_;
};

SlopeValue slope(const Lattice& l);
SlopeValue slope_of(const Sublattice& s);

Lattice dual(const Lattice& l);
Lattice tensor(const Lattice& l, const Lattice& m);
Lattice direct_sum(const Lattice& l, const Lattice& m);
// Gram scaled by c (every vector norm scaled by c); c > 0.
Lattice scale(const Lattice& l, const Rat& c);

// The saturated sublattice L intersect F.
Sublattice intersect(const Lattice& l, const Subspace& f);

struct QuotientResult {
  Lattice lattice;     // L/S in the adapted basis (Schur complement Gram)
  IntMatrix adapted;   // unimodular; first k rows are S's coefficients
};
// Requires s saturated with 0 < rank < l.rank().
QuotientResult quotient(const Lattice& l, const Sublattice& s);
inline Lattice quotient_lattice(const Lattice& l, const Sublattice& s) {
  return quotient(l, s).lattice;
}

// Orthogonal projection image pi_F(L), computed as L / (L intersect F-perp).
Lattice project(const Lattice& l, const Subspace& f);

// Index of the finite-index submodule spanned by the rows of n (l x l).
Int index(const Lattice& l, const IntMatrix& n);

// The sharp image: saturated sublattice of dual(l) spanning the orthogonal
// complement of s under the duality pairing. In coefficients it is the
// integer kernel of s.
Sublattice sharp(const Lattice& l, const Sublattice& s);

// Integer coefficient rows of the preimage of a quotient sublattice under
// quotient(l, s): stack of s with the lifted rows, in HNF.
IntMatrix pullback_through_quotient(const Sublattice& s,
                                    const IntMatrix& adapted,
                                    const IntMatrix& quotient_coeffs);

}  // namespace latslope
