#include "latslope/lll.hpp"

namespace latslope {

namespace {

// Gram-Schmidt data computed straight from a Gram matrix: squared GS norms
// b[i] and coefficients mu[i][j] (j < i).
struct Gso {
  std::vector<Rat> b;
  std::vector<std::vector<Rat>> mu;
};

Gso gso_from_gram(const RatMatrix& g) {
  std::size_t n = g.rows();
  Gso s;
  s.b.assign(n, Rat(0));
  s.mu.assign(n, std::vector<Rat>(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      Rat v = g(i, j);
      for (std::size_t k = 0; k < j; ++k) v -= s.mu[i][k] * s.mu[j][k] * s.b[k];
      s.mu[i][j] = v / s.b[j];
    }
    Rat bi = g(i, i);
    for (std::size_t k = 0; k < i; ++k) bi -= s.mu[i][k] * s.mu[i][k] * s.b[k];
    if (bi <= 0) throw InputError("Gram matrix is not positive definite");
    s.b[i] = bi;
  }
  return s;
}

void apply_row_op(RatMatrix& g, IntMatrix& u, std::size_t dst, std::size_t src,
                  const Int& f) {
  // basis op b_dst -= f * b_src, mirrored on the Gram matrix from both sides
  if (f == 0) return;
  std::size_t n = g.rows();
  for (std::size_t j = 0; j < u.cols(); ++j) u(dst, j) -= f * u(src, j);
  Rat rf(f);
  for (std::size_t j = 0; j < n; ++j) g(dst, j) -= rf * g(src, j);
  for (std::size_t i = 0; i < n; ++i) g(i, dst) -= rf * g(i, src);
}

void swap_basis(RatMatrix& g, IntMatrix& u, std::size_t i, std::size_t j) {
  u.swap_rows(i, j);
  g.swap_rows(i, j);
  for (std::size_t r = 0; r < g.rows(); ++r) std::swap(g(r, i), g(r, j));
}

}  // namespace

LllResult lll_reduce(const RatMatrix& g) {
  if (!is_symmetric(g)) throw InputError("Gram matrix must be symmetric");
  std::size_t n = g.rows();
  RatMatrix cur = g;
  IntMatrix u = int_identity(n);
  if (n == 0) return {u, cur};
  const Rat delta(3, 4);
  Gso s = gso_from_gram(cur);  // also validates positive definiteness

  std::size_t k = 1;
  while (k < n) {
    // size-reduce row k against k-1, ..., 0
    for (std::size_t j = k; j-- > 0;) {
      Rat m = s.mu[k][j];
      if (m * 2 > 1 || m * 2 < -1) {
        Int r = rat_round_nearest(m);
        apply_row_op(cur, u, k, j, r);
        for (std::size_t t = 0; t <= j; ++t)
          s.mu[k][t] -= Rat(r) * (t == j ? Rat(1) : s.mu[j][t]);
      }
    }
    if (s.b[k] >= (delta - s.mu[k][k - 1] * s.mu[k][k - 1]) * s.b[k - 1]) {
      ++k;
    } else {
      swap_basis(cur, u, k, k - 1);
      s = gso_from_gram(cur);
      if (k > 1) --k;
    }
  }
  return {u, cur};
}

}  // namespace latslope
