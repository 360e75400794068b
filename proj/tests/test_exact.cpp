#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latslope/enumerate.hpp"
#include "latslope/hnf.hpp"
#include "latslope/lll.hpp"
#include "latslope/poly.hpp"
#include "latslope/rng.hpp"

using namespace latslope;

namespace {

IntMatrix random_int_matrix(Xoshiro256& rng, std::size_t r, std::size_t c,
                            long bound) {
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Int(rng.next_int(-bound, bound));
  return m;
}

// Naive box enumeration: |x_i| <= sqrt(B * (G^-1)_ii), filter by norm.
std::vector<std::vector<Int>> box_enumerate(const RatMatrix& g, const Rat& bound) {
  std::size_t n = g.rows();
  RatMatrix ginv = inverse(g);
  std::vector<long> box(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rat lim = bound * ginv(i, i);
    long b = 0;
    while (Rat(b + 1) * Rat(b + 1) <= lim) ++b;
    box[i] = b;
  }
  std::vector<std::vector<Int>> out;
  std::vector<long> x(n, 0);
  for (std::size_t i = 0; i < n; ++i) x[i] = -box[i];
  for (;;) {
    Rat norm(0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        norm += Rat(x[i]) * g(i, j) * Rat(x[j]);
    bool zero = true;
    for (auto v : x)
      if (v != 0) zero = false;
    if (!zero && norm <= bound) {
      // sign-normalize like enumerate_short
      std::vector<Int> v(n);
      bool flip = false;
      for (std::size_t i = 0; i < n; ++i)
        if (x[i] != 0) {
          flip = x[i] < 0;
          break;
        }
      for (std::size_t i = 0; i < n; ++i) v[i] = Int(flip ? -x[i] : x[i]);
      out.push_back(std::move(v));
    }
    std::size_t d = 0;
    while (d < n && x[d] == box[d]) {
      x[d] = -box[d];
      ++d;
    }
    if (d == n) break;
    ++x[d];
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

TEST_CASE("hnf of spec examples") {
  auto r1 = hnf(int_matrix(2, 2, {2, 0, 0, 2}));
  CHECK(r1.h == int_matrix(2, 2, {2, 0, 0, 2}));
  CHECK(r1.u == int_identity(2));

  auto r2 = hnf(int_matrix(2, 2, {0, 1, 1, 0}));
  CHECK(r2.h == int_identity(2));

  // reduced row HNF is the unique canonical form: entries above a pivot lie
  // in [0, pivot)
  auto r3 = hnf(int_matrix(2, 2, {2, 4, 1, 3}));
  CHECK(r3.h == int_matrix(2, 2, {1, 1, 0, 2}));
  CHECK(hnf_basis(int_matrix(2, 2, {1, 3, 0, 2})) == int_matrix(2, 2, {1, 1, 0, 2}));
}

TEST_CASE("hnf transform and idempotence on random matrices") {
  Xoshiro256 rng(42);
  for (int t = 0; t < 60; ++t) {
    std::size_t r = 1 + rng.next_range(4), c = 1 + rng.next_range(4);
    IntMatrix m = random_int_matrix(rng, r, c, 6);
    auto [h, u] = hnf(m);
    CHECK(u * m == h);
    Int du = det_int(u);
    CHECK((du == 1 || du == -1));
    CHECK(hnf(h).h == h);
  }
}

TEST_CASE("saturate") {
  CHECK(saturate(int_matrix(2, 2, {2, 0, 0, 2})) == int_identity(2));
  CHECK(saturate(int_matrix(2, 3, {1, 1, 0, 0, 2, 2})) ==
        int_matrix(2, 3, {1, 0, -1, 0, 1, 1}));
  CHECK(saturate(int_matrix(1, 1, {3})) == int_matrix(1, 1, {1}));
}

TEST_CASE("saturate is idempotent and contains the input rows") {
  Xoshiro256 rng(7);
  for (int t = 0; t < 40; ++t) {
    std::size_t r = 1 + rng.next_range(3), c = r + rng.next_range(3);
    IntMatrix m = random_int_matrix(rng, r, c, 5);
    IntMatrix s = saturate(m);
    CHECK(saturate(s) == s);
    // every row of m lies in the integer row span of s
    if (s.rows() > 0) {
      auto sol = solve_left(to_rat(s), to_rat(m));
      REQUIRE(sol.has_value());
      for (const auto& v : sol->data()) CHECK(v.get_den() == 1);
    }
  }
}

TEST_CASE("determinant, inverse, kernel") {
  CHECK(det_rat(rat_matrix(2, 2, {2, 1, 1, 2})) == 3);
  CHECK(inverse(rat_identity(3)) == rat_identity(3));
  RatMatrix k = rational_kernel(rat_matrix(1, 2, {1, 1}));
  REQUIRE(k.rows() == 1);
  CHECK(k(0, 0) * 1 + k(0, 1) * (-1) != 0);  // spans (1, -1)
  CHECK(k(0, 0) + k(0, 1) == 0);
  CHECK_THROWS_AS(inverse(rat_matrix(2, 2, {1, 1, 1, 1})), Error);
}

TEST_CASE("det is multiplicative on random 4x4 rational matrices") {
  Xoshiro256 rng(1000);
  for (int t = 0; t < 1000; ++t) {
    IntMatrix an = random_int_matrix(rng, 4, 4, 4);
    IntMatrix bn = random_int_matrix(rng, 4, 4, 4);
    RatMatrix a = to_rat(an), b = to_rat(bn);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        a(i, j) /= 3;
        b(i, j) /= 2;
      }
    CHECK(det_rat(a * b) == det_rat(a) * det_rat(b));
  }
}

TEST_CASE("minimal polynomial") {
  CHECK(minimal_polynomial(rat_identity(2)) ==
        Poly({make_rat(-1), make_rat(1)}));
  CHECK(minimal_polynomial(rat_matrix(2, 2, {0, 1, 1, 0})) ==
        Poly({make_rat(-1), make_rat(0), make_rat(1)}));
  RatMatrix d(3, 3);
  d(0, 0) = 2;
  d(1, 1) = 2;
  d(2, 2) = 5;
  // (x-2)(x-5) = x^2 - 7x + 10
  CHECK(minimal_polynomial(d) == Poly({make_rat(10), make_rat(-7), make_rat(1)}));
}

TEST_CASE("rational roots") {
  Poly p({make_rat(-1), make_rat(0), make_rat(1)});  // x^2 - 1
  auto r = rational_roots(p);
  REQUIRE(r.size() == 2);
  CHECK(r[0] == -1);
  CHECK(r[1] == 1);

  auto r2 = rational_roots(Poly({make_rat(-3), make_rat(2)}));  // 2x - 3
  REQUIRE(r2.size() == 1);
  CHECK(r2[0] == make_rat(3, 2));

  CHECK(rational_roots(Poly({make_rat(-2), make_rat(0), make_rat(1)})).empty());
}

TEST_CASE("lll on spec examples") {
  auto r1 = lll_reduce(rat_identity(2));
  CHECK(r1.gram == rat_identity(2));

  auto r2 = lll_reduce(rat_matrix(2, 2, {4, 0, 0, 1}));
  CHECK(r2.gram == rat_matrix(2, 2, {1, 0, 0, 4}));

  auto r3 = lll_reduce(rat_matrix(2, 2, {1, 1, 1, 2}));
  CHECK(r3.gram == rat_identity(2));

  CHECK_THROWS_AS(lll_reduce(rat_matrix(2, 2, {1, 2, 2, 1})), InputError);
}

TEST_CASE("lll preserves the determinant exactly") {
  Xoshiro256 rng(5);
  for (int t = 0; t < 40; ++t) {
    std::size_t n = 2 + rng.next_range(4);
    IntMatrix b = random_int_matrix(rng, n, n, 4);
    if (det_int(b) == 0) continue;
    RatMatrix g = to_rat(b) * to_rat(b).transpose();
    auto red = lll_reduce(g);
    CHECK(det_rat(red.gram) == det_rat(g));
    RatMatrix ur = to_rat(red.u);
    CHECK(ur * g * ur.transpose() == red.gram);
  }
}

TEST_CASE("enumerate_short on spec examples") {
  auto v1 = enumerate_short(rat_identity(2), Rat(1));
  REQUIRE(v1.size() == 2);
  CHECK(v1[0].norm_sq == 1);
  CHECK(v1[1].norm_sq == 1);

  auto v2 = enumerate_short(rat_matrix(2, 2, {2, 1, 1, 2}), Rat(2));
  CHECK(v2.size() == 3);  // (1,0), (0,1), (1,-1) up to sign

  CHECK(enumerate_short(rat_identity(2), make_rat(1, 2)).empty());
}

TEST_CASE("enumerate_short agrees with naive box enumeration") {
  Xoshiro256 rng(99);
  for (int t = 0; t < 30; ++t) {
    std::size_t n = 1 + rng.next_range(4);
    IntMatrix b = random_int_matrix(rng, n, n, 3);
    if (det_int(b) == 0) continue;
    RatMatrix g = to_rat(b) * to_rat(b).transpose();
    Rat bound = g(0, 0) + 2;
    auto fast = enumerate_short(g, bound);
    auto naive = box_enumerate(g, bound);
    REQUIRE(fast.size() == naive.size());
    std::vector<std::vector<Int>> fast_sorted;
    for (const auto& sv : fast) fast_sorted.push_back(sv.coeffs);
    std::sort(fast_sorted.begin(), fast_sorted.end());
    CHECK(fast_sorted == naive);
  }
}

TEST_CASE("complete_basis extends saturated rows to a unimodular matrix") {
  Xoshiro256 rng(31);
  for (int t = 0; t < 40; ++t) {
    std::size_t n = 2 + rng.next_range(4);
    std::size_t k = 1 + rng.next_range(n - 1);
    IntMatrix m = saturate(random_int_matrix(rng, k, n, 4));
    if (m.rows() != k) continue;
    IntMatrix w = complete_basis(m);
    Int d = det_int(w);
    CHECK((d == 1 || d == -1));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < n; ++j) CHECK(w(i, j) == m(i, j));
  }
}
