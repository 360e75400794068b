#include "latslope/matrix.hpp"

#include <algorithm>

namespace latslope {

RatMatrix to_rat(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
  return r;
}

IntMatrix to_int(const RatMatrix& m) {
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).get_den() != 1) throw Error("matrix entry not integral");
      r(i, j) = m(i, j).get_num();
    }
  return r;
}

RatMatrix rat_identity(std::size_t n) { return RatMatrix::identity(n); }
IntMatrix int_identity(std::size_t n) { return IntMatrix::identity(n); }

IntMatrix int_matrix(std::size_t rows, std::size_t cols,
                     std::initializer_list<long> entries) {
  if (entries.size() != rows * cols) throw Error("entry count mismatch");
  IntMatrix m(rows, cols);
  auto it = entries.begin();
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Int(*it++);
  return m;
}

RatMatrix rat_matrix(std::size_t rows, std::size_t cols,
                     std::initializer_list<long> entries) {
  return to_rat(int_matrix(rows, cols, entries));
}

Int det_int(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error("determinant of non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return Int(1);
  IntMatrix a = m;
  Int prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a(piv, k) == 0) ++piv;
      if (piv == n) return Int(0);
      a.swap_rows(k, piv);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

Rat det_rat(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw Error("determinant of non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return Rat(1);
  // Scale each row to integers, run fraction-free Bareiss, divide back.
  IntMatrix a(n, n);
  Rat scale(1);
  for (std::size_t i = 0; i < n; ++i) {
    Int l(1);
    for (std::size_t j = 0; j < n; ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den().get_mpz_t());
    for (std::size_t j = 0; j < n; ++j) {
      Rat v = m(i, j) * Rat(l);
      a(i, j) = v.get_num();
    }
    scale *= Rat(l);
  }
  return Rat(det_int(a)) / scale;
}

namespace {

// In-place Gauss-Jordan; returns pivot columns of the echelonized matrix.
std::vector<std::size_t> gauss_jordan(RatMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c) == 0) ++piv;
    if (piv == a.rows()) continue;
    a.swap_rows(r, piv);
    Rat inv = 1 / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rat f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

RatMatrix inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw Error("inverse of non-square matrix");
  std::size_t n = m.rows();
  RatMatrix a(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j);
    a(i, n + i) = 1;
  }
  auto pivots = gauss_jordan(a);
  if (pivots.size() != n || pivots.back() != n - 1)
    throw Error("singular matrix");
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = a(i, n + j);
  return inv;
}

RrefResult rref(const RatMatrix& m) {
  RatMatrix a = m;
  auto pivots = gauss_jordan(a);
  RatMatrix out(pivots.size(), m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = a(i, j);
  return {out, pivots};
}

std::size_t rank_rat(const RatMatrix& m) { return rref(m).pivots.size(); }

RatMatrix rational_kernel(const RatMatrix& m) {
  auto [r, pivots] = rref(m);
  std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  RatMatrix k(n - pivots.size(), n);
  std::size_t row = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    k(row, c) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) k(row, pivots[i]) = -r(i, c);
    ++row;
  }
  return rref(k).mat;  // canonical form
}

std::optional<RatMatrix> solve_left(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.cols()) throw Error("solve shape mismatch");
  // x * a = b  <=>  a^T x^T = b^T; echelonize [a^T | b^T].
  RatMatrix at = a.transpose();
  RatMatrix bt = b.transpose();
  RatMatrix aug(at.rows(), at.cols() + bt.cols());
  for (std::size_t i = 0; i < at.rows(); ++i) {
    for (std::size_t j = 0; j < at.cols(); ++j) aug(i, j) = at(i, j);
    for (std::size_t j = 0; j < bt.cols(); ++j) aug(i, at.cols() + j) = bt(i, j);
  }
  auto pivots = gauss_jordan(aug);
  RatMatrix xt(at.cols(), bt.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] >= at.cols()) return std::nullopt;  // inconsistent system
    for (std::size_t j = 0; j < bt.cols(); ++j)
      xt(pivots[i], j) = aug(i, at.cols() + j);
  }
  return xt.transpose();
}

IntMatrix clear_denominators(const RatMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Int l(1);
    for (std::size_t j = 0; j < m.cols(); ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den().get_mpz_t());
    Int g(0);
    std::vector<Int> row(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Rat v = m(i, j) * Rat(l);
      row[j] = v.get_num();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), row[j].get_mpz_t());
    }
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(i, j) = (g == 0) ? Int(0) : row[j] / g;
  }
  return out;
}

bool is_symmetric(const RatMatrix& m) {
  if (m.rows() != m.cols()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != m(j, i)) return false;
  return true;
}

bool is_positive_definite(const RatMatrix& m) {
  if (!is_symmetric(m)) return false;
  for (std::size_t k = 1; k <= m.rows(); ++k) {
    RatMatrix lead(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) lead(i, j) = m(i, j);
    if (det_rat(lead) <= 0) return false;
  }
  return true;
}

}  // namespace latslope
