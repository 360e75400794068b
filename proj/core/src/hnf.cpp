#include "latslope/hnf.hpp"

namespace latslope {

namespace {

void row_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const Int& f) {
  if (f == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) -= f * m(src, j);
}

void row_negate(IntMatrix& m, std::size_t i) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = -m(i, j);
}

}  // namespace

HnfResult hnf(const IntMatrix& m) {
  std::size_t rows = m.rows(), cols = m.cols();
  IntMatrix h = m;
  IntMatrix u = int_identity(rows);
  std::size_t r = 0;  // current pivot row
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // clear column c below row r by gcd chaining
    bool nonzero = false;
    for (std::size_t i = r; i < rows; ++i)
      if (h(i, c) != 0) { nonzero = true; break; }
    if (!nonzero) continue;
    for (;;) {
      // pick the row with the smallest nonzero |entry| in column c
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i) {
        if (h(i, c) == 0) continue;
        if (best == rows ||
            mpz_cmpabs(h(i, c).get_mpz_t(), h(best, c).get_mpz_t()) < 0)
          best = i;
      }
      h.swap_rows(r, best);
      u.swap_rows(r, best);
      bool done = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (h(i, c) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
        row_axpy(h, i, r, q);
        row_axpy(u, i, r, q);
        if (h(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (h(r, c) < 0) { row_negate(h, r); row_negate(u, r); }
    // reduce entries above the pivot into [0, pivot)
    for (std::size_t i = 0; i < r; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
      row_axpy(h, i, r, q);
      row_axpy(u, i, r, q);
    }
    ++r;
  }
  return {h, u};
}

IntMatrix hnf_basis(const IntMatrix& m) {
  IntMatrix h = hnf(m).h;
  std::size_t r = h.rows();
  while (r > 0) {
    bool zero = true;
    for (std::size_t j = 0; j < h.cols(); ++j)
      if (h(r - 1, j) != 0) { zero = false; break; }
    if (!zero) break;
    --r;
  }
  IntMatrix out(r, h.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < h.cols(); ++j) out(i, j) = h(i, j);
  return out;
}

IntMatrix integer_kernel(const IntMatrix& m) {
  // Bottom rows of the HNF transform of m^T (those mapped to zero rows) form
  // a Z-basis of the left kernel of m^T, i.e. of { x : m x^T = 0 }.
  IntMatrix mt = m.transpose();
  auto [h, u] = hnf(mt);
  std::size_t rank = 0;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    bool zero = true;
    for (std::size_t j = 0; j < h.cols(); ++j)
      if (h(i, j) != 0) { zero = false; break; }
    if (!zero) ++rank;
  }
  IntMatrix k(u.rows() - rank, u.cols());
  for (std::size_t i = rank; i < u.rows(); ++i)
    for (std::size_t j = 0; j < u.cols(); ++j) k(i - rank, j) = u(i, j);
  return hnf_basis(k);
}

IntMatrix saturate(const IntMatrix& m) {
  return integer_kernel(integer_kernel(m));
}

bool is_saturated(const IntMatrix& m) { return hnf_basis(m) == saturate(m); }

IntMatrix complete_basis(const IntMatrix& c) {
  std::size_t k = c.rows(), n = c.cols();
  if (k == 0) return int_identity(n);
  // u * c^T = [t; 0] with u unimodular, so c = t^T * (first k rows of u^{-T}).
  // Saturation forces |det t| = 1, hence replacing those rows by c keeps the
  // matrix unimodular.
  auto [h, u] = hnf(c.transpose());
  Int dt(1);
  for (std::size_t i = 0; i < k; ++i) dt *= h(i, i);
  if (dt == 0 || (dt != 1 && dt != -1))
    throw Error("complete_basis requires a saturated full-rank matrix");
  IntMatrix w = int_inverse(u).transpose();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) w(i, j) = c(i, j);
  return w;
}

IntMatrix int_inverse(const IntMatrix& u) {
  RatMatrix inv = inverse(to_rat(u));
  return to_int(inv);
}

}  // namespace latslope
