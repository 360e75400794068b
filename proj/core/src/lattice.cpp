#include "latslope/lattice.hpp"

#include <cmath>
#include <numeric>

namespace latslope {

double Radical::approx() const {
  return std::pow(rat_to_double(radicand), 1.0 / static_cast<double>(root));
}

bool Radical::is_rational() const { return rational_value().has_value(); }

std::optional<Rat> Radical::rational_value() const {
  return exact_root(radicand, root);
}

Order compare(const Radical& a, const Radical& b) {
  if (a.radicand <= 0 || b.radicand <= 0) throw Error("radical must be positive");
  unsigned long l = std::lcm(a.root, b.root);
  Rat pa = rat_pow(a.radicand, l / a.root);
  Rat pb = rat_pow(b.radicand, l / b.root);
  if (pa < pb) return Order::Less;
  if (pa > pb) return Order::Greater;
  return Order::Equal;
}

Radical mul(const Radical& a, const Radical& b) {
  unsigned long l = std::lcm(a.root, b.root);
  return {rat_pow(a.radicand, l / a.root) * rat_pow(b.radicand, l / b.root), l};
}

Radical radical_inverse(const Radical& a) { return {1 / a.radicand, a.root}; }

Radical radical_pow(const Radical& a, unsigned long k) {
  return {rat_pow(a.radicand, k), a.root};
}

Order compare(const SlopeValue& a, const SlopeValue& b) {
  Rat pa = rat_pow(a.vol_sq, b.rank);
  Rat pb = rat_pow(b.vol_sq, a.rank);
  if (pa < pb) return Order::Less;
  if (pa > pb) return Order::Greater;
  return Order::Equal;
}

SlopeValue mul(const SlopeValue& a, const SlopeValue& b) {
  unsigned long q = std::lcm(a.rank, b.rank);
  return {rat_pow(a.vol_sq, q / a.rank) * rat_pow(b.vol_sq, q / b.rank), q};
}

SlopeValue slope_inverse(const SlopeValue& a) { return {1 / a.vol_sq, a.rank}; }

Lattice::Lattice(RatMatrix gram, std::string label)
    : gram_(std::move(gram)), label_(std::move(label)) {
  if (gram_.rows() != gram_.cols() || gram_.rows() == 0)
    throw InputError("lattice Gram matrix must be square and nonempty");
  if (!is_symmetric(gram_)) throw InputError("lattice Gram matrix must be symmetric");
  if (!is_positive_definite(gram_))
    throw InputError("lattice Gram matrix must be positive definite");
}

Rat Lattice::vol_sq() const { return det_rat(gram_); }

Subspace::Subspace(std::size_t ambient, RatMatrix basis) : ambient_(ambient) {
  if (basis.rows() > 0 && basis.cols() != ambient)
    throw Error("subspace basis shape mismatch");
  if (basis.rows() == 0) {
    basis_ = RatMatrix(0, ambient);
  } else {
    basis_ = rref(basis).mat;
  }
}

Subspace Subspace::zero(std::size_t ambient) {
  return Subspace(ambient, RatMatrix(0, ambient));
}

Subspace Subspace::full(std::size_t ambient) {
  return Subspace(ambient, rat_identity(ambient));
}

Subspace Subspace::span_of_int(const IntMatrix& rows) {
  return Subspace(rows.cols(), to_rat(rows));
}

Subspace Subspace::sum(const Subspace& o) const {
  if (ambient_ != o.ambient_) throw Error("subspace ambient mismatch");
  return Subspace(ambient_, vstack(basis_, o.basis_));
}

Subspace Subspace::intersect(const Subspace& o) const {
  if (ambient_ != o.ambient_) throw Error("subspace ambient mismatch");
  // (U cap V) = (U0 + V0)0 where 0 is the standard-form annihilator
  RatMatrix ann = vstack(rational_kernel(basis_), rational_kernel(o.basis_));
  return Subspace(ambient_, rational_kernel(ann));
}

Subspace Subspace::orthogonal_complement(const RatMatrix& g) const {
  if (g.rows() != ambient_) throw Error("form dimension mismatch");
  if (dim() == 0) return Subspace::full(ambient_);
  return Subspace(ambient_, rational_kernel(basis_ * g));
}

bool Subspace::contains(const Subspace& o) const {
  return sum(o).dim() == dim();
}

bool Subspace::contains_row(const RatMatrix& row) const {
  return sum(Subspace(ambient_, row)).dim() == dim();
}

Sublattice::Sublattice(Lattice parent, IntMatrix coeffs, bool saturate_input)
    : parent_(std::move(parent)) {
  if (coeffs.rows() > 0 && coeffs.cols() != parent_.rank())
    throw Error("sublattice coefficient shape mismatch");
  coeffs_ = saturate_input ? saturate(coeffs) : hnf_basis(coeffs);
  saturated_ = saturate_input || is_saturated(coeffs_);
}

Sublattice Sublattice::zero(const Lattice& parent) {
  return Sublattice(parent, IntMatrix(0, parent.rank()), false);
}

Sublattice Sublattice::full(const Lattice& parent) {
  return Sublattice(parent, int_identity(parent.rank()), false);
}

RatMatrix Sublattice::gram() const {
  RatMatrix c = to_rat(coeffs_);
  return c * parent_.gram() * c.transpose();
}

Lattice Sublattice::as_lattice() const {
  if (rank() == 0) throw Error("zero sublattice has no lattice structure");
  return Lattice(gram(), parent_.label().empty() ? "" : parent_.label() + ".sub");
}

Subspace Sublattice::span() const {
  return Subspace::span_of_int(coeffs_);
}

SlopeValue slope(const Lattice& l) { return {l.vol_sq(), l.rank()}; }

SlopeValue slope_of(const Sublattice& s) {
  if (s.rank() == 0) throw Error("slope of the zero sublattice");
  return {det_rat(s.gram()), s.rank()};
}

Lattice dual(const Lattice& l) {
  return Lattice(inverse(l.gram()),
                 l.label().empty() ? "" : l.label() + "^");
}

Lattice tensor(const Lattice& l, const Lattice& m) {
  std::string label;
  if (!l.label().empty() || !m.label().empty())
    label = l.label() + "(x)" + m.label();
  return Lattice(kron(l.gram(), m.gram()), label);
}

Lattice direct_sum(const Lattice& l, const Lattice& m) {
  std::size_t a = l.rank(), b = m.rank();
  RatMatrix g(a + b, a + b);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < a; ++j) g(i, j) = l.gram()(i, j);
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j < b; ++j) g(a + i, a + j) = m.gram()(i, j);
  std::string label;
  if (!l.label().empty() || !m.label().empty())
    label = l.label() + "+" + m.label();
  return Lattice(g, label);
}

Lattice scale(const Lattice& l, const Rat& c) {
  if (c <= 0) throw InputError("scale factor must be positive");
  RatMatrix g = l.gram();
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) g(i, j) *= c;
  return Lattice(g, l.label());
}

Sublattice intersect(const Lattice& l, const Subspace& f) {
  if (f.ambient() != l.rank()) throw Error("subspace ambient mismatch");
  if (f.dim() == 0) return Sublattice::zero(l);
  return Sublattice(l, clear_denominators(f.basis()), true);
}

QuotientResult quotient(const Lattice& l, const Sublattice& s) {
  if (!s.saturated()) throw Error("quotient requires a saturated sublattice");
  std::size_t k = s.rank(), n = l.rank();
  if (k == 0 || k >= n) throw Error("quotient requires 0 < rank(S) < rank(L)");
  IntMatrix w = complete_basis(s.coeffs());
  RatMatrix wr = to_rat(w);
  RatMatrix adapted = wr * l.gram() * wr.transpose();
  RatMatrix g11(k, k), g12(k, n - k), g21(n - k, k), g22(n - k, n - k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) g11(i, j) = adapted(i, j);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n - k; ++j) g12(i, j) = adapted(i, k + j);
  for (std::size_t i = 0; i < n - k; ++i)
    for (std::size_t j = 0; j < k; ++j) g21(i, j) = adapted(k + i, j);
  for (std::size_t i = 0; i < n - k; ++i)
    for (std::size_t j = 0; j < n - k; ++j) g22(i, j) = adapted(k + i, k + j);
  RatMatrix schur = g22 - g21 * inverse(g11) * g12;
  std::string label = l.label().empty() ? "" : l.label() + "/sub";
  return {Lattice(schur, label), w};
}

Lattice project(const Lattice& l, const Subspace& f) {
  if (f.dim() == 0 || f.dim() >= l.rank())
    throw Error("projection requires a proper nonzero subspace");
  Subspace perp = f.orthogonal_complement(l.gram());
  return quotient(l, intersect(l, perp)).lattice;
}

Int index(const Lattice& l, const IntMatrix& n) {
  if (n.rows() != l.rank() || n.cols() != l.rank())
    throw Error("index requires a full-size coefficient matrix");
  Int d = det_int(n);
  if (d == 0) throw Error("index of a singular submodule");
  if (d < 0) d = -d;
  // postcondition: index^2 equals the Gram determinant ratio
  RatMatrix nr = to_rat(n);
  Rat ratio = det_rat(nr * l.gram() * nr.transpose()) / l.vol_sq();
  if (Rat(d) * Rat(d) != ratio) throw Error("index postcondition failed");
  return d;
}

Sublattice sharp(const Lattice& l, const Sublattice& s) {
  if (!s.saturated()) throw Error("sharp requires a saturated sublattice");
  IntMatrix k = integer_kernel(s.coeffs());
  return Sublattice(dual(l), k, false);
}

IntMatrix pullback_through_quotient(const Sublattice& s,
                                    const IntMatrix& adapted,
                                    const IntMatrix& quotient_coeffs) {
  std::size_t k = s.rank();
  std::size_t n = adapted.rows();
  IntMatrix w2(n - k, n);
  for (std::size_t i = 0; i < n - k; ++i)
    for (std::size_t j = 0; j < n; ++j) w2(i, j) = adapted(k + i, j);
  IntMatrix lifted = quotient_coeffs * w2;
  return hnf_basis(vstack(s.coeffs(), lifted));
}

}  // namespace latslope
