#pragma once

#include <vector>

#include "latslope/matrix.hpp"

namespace latslope {

// Polynomial over Q, coefficients in ascending degree, no trailing zeros.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs);
  static Poly zero() { return Poly(); }
  static Poly constant(const Rat& c);
  static Poly x_minus(const Rat& root);  // x - root

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rat& leading() const { return coeffs_.back(); }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  Rat coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Rat(0);
  }

  Rat eval(const Rat& x) const;
  Poly monic() const;
  Poly derivative() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  // Euclidean division; throws on zero divisor.
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }

 private:
  std::vector<Rat> coeffs_;
  void trim();
};

Poly poly_gcd(Poly a, Poly b);  // monic gcd
Poly poly_lcm(const Poly& a, const Poly& b);

// Least-degree monic p with p(m) = 0, by saturating Krylov spans.
Poly minimal_polynomial(const RatMatrix& m);

// All rational roots with multiplicity (ascending), via the rational-root
// theorem on the primitive integer form.
std::vector<Rat> rational_roots(const Poly& p);

std::string poly_to_string(const Poly& p);  // human-readable, variable "x"

}  // namespace latslope
