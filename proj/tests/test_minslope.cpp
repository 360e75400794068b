#include <doctest.h>

#include "helpers.hpp"
#include "latslope/io.hpp"
#include "latslope/minslope.hpp"
#include "oracles.hpp"

using namespace latslope;

namespace {

Lattice diag_lattice(std::initializer_list<long> d) {
  RatMatrix g(d.size(), d.size());
  std::size_t i = 0;
  for (long v : d) g(i, i) = v, ++i;
  return Lattice(g, "diag");
}

}  // namespace

TEST_CASE("first minimum") {
  CHECK(first_minimum(Lattice(rat_identity(4))) == 1);
  CHECK(first_minimum(corpus("a2").lattice) == 2);
  CHECK(first_minimum(diag_lattice({1, 4})) == 1);
}

TEST_CASE("minimal slope brute force on named lattices") {
  auto a2 = min_slope_bruteforce(corpus("a2").lattice);
  CHECK(a2.value.vol_sq == 3);
  CHECK(a2.value.rank == 2);
  CHECK(a2.witness.rank() == 2);  // the whole lattice is the only minimizer
  CHECK(a2.all_minimizers.size() == 1);

  auto d14 = min_slope_bruteforce(diag_lattice({1, 4}));
  CHECK(d14.value.vol_sq == 1);
  CHECK(d14.value.rank == 1);
  CHECK(d14.witness.coeffs() == int_matrix(1, 2, {1, 0}));

  // rank-1 lattices are semistable by definition
  auto r1 = min_slope_bruteforce(Lattice(rat_matrix(1, 1, {7})));
  CHECK(r1.value.vol_sq == 7);
  CHECK(r1.value.rank == 1);
}

TEST_CASE("enumeration bounds are recorded per rank") {
  auto res = min_slope_bruteforce(corpus("a3").lattice);
  CHECK(res.bounds.size() == 2);  // ranks 1 and 2; rank 3 is the lattice itself
  CHECK(res.bounds[0].rank == 1);
  CHECK_FALSE(res.bounds[0].via_dual);
  CHECK(res.bounds[1].rank == 2);
  CHECK(res.bounds[1].via_dual);
  CHECK(res.bounds[1].bound > 0);
}

TEST_CASE("destabilizing sublattice") {
  Lattice z2(rat_identity(2), "z2");
  CHECK(destabilizing(z2).rank() == 2);  // e1, e2 and Z^2 all reach slope 1

  CHECK(destabilizing(diag_lattice({1, 4})).coeffs() == int_matrix(1, 2, {1, 0}));

  auto block = destabilizing(corpus("a2p2a2").lattice);
  CHECK(block.coeffs() == int_matrix(2, 4, {1, 0, 0, 0, 0, 1, 0, 0}));
}

TEST_CASE("canonical filtration") {
  auto f1 = canonical_filtration(diag_lattice({1, 4}));
  REQUIRE(f1.steps.size() == 3);
  CHECK(f1.steps[1].coeffs() == int_matrix(1, 2, {1, 0}));
  CHECK(f1.quotient_slopes[0].vol_sq == 1);
  CHECK(f1.quotient_slopes[1].vol_sq == 4);

  auto f2 = canonical_filtration(corpus("a2").lattice);
  CHECK(f2.steps.size() == 2);  // {0} and L: semistable
  CHECK(f2.quotient_slopes.size() == 1);

  auto f3 = canonical_filtration(corpus("a2p2a2").lattice);
  REQUIRE(f3.steps.size() == 3);
  CHECK(f3.steps[1].rank() == 2);
  CHECK(f3.quotient_slopes[0].vol_sq == 3);
  CHECK(f3.quotient_slopes[1].vol_sq == 48);
  CHECK(f3.polygon.size() == 3);
  CHECK(f3.polygon[2].vol_sq == 144);
}

TEST_CASE("max slope and codestabilizing") {
  Lattice d14 = diag_lattice({1, 4});
  CHECK(compare(max_slope(d14), SlopeValue{Rat(4), 1}) == Order::Equal);
  CHECK(codestabilizing(d14).coeffs() == int_matrix(1, 2, {1, 0}));

  // semistable: mu_max = mu_min = mu and the codestabilizing sublattice is 0
  Lattice a2 = corpus("a2").lattice;
  CHECK(compare(max_slope(a2), slope(a2)) == Order::Equal);
  CHECK(codestabilizing(a2).rank() == 0);

  auto sum = corpus("a2p2a2").lattice;
  CHECK(compare(max_slope(sum), SlopeValue{Rat(48), 2}) == Order::Equal);
}

TEST_CASE("semistability verdicts") {
  for (int n = 2; n <= 4; ++n) {
    auto rep = is_semistable(corpus("a" + std::to_string(n)).lattice);
    CHECK(rep.semistable);
    CHECK(rep.mu_min.vol_sq == n + 1);
    CHECK(rep.mu_min.rank == unsigned(n));
    CHECK_FALSE(rep.bounds.empty());
  }
  auto bad = is_semistable(diag_lattice({1, 4}));
  CHECK_FALSE(bad.semistable);
  REQUIRE(bad.destabilizing.has_value());
  CHECK(bad.destabilizing->coeffs() == int_matrix(1, 2, {1, 0}));
}

TEST_CASE("parallelogram constraint") {
  Lattice z2(rat_identity(2));
  Sublattice e1(z2, int_matrix(1, 2, {1, 0}));
  Sublattice e2(z2, int_matrix(1, 2, {0, 1}));
  auto r1 = parallelogram_check(z2, e1, e2);
  CHECK_FALSE(r1.vacuous);
  CHECK(r1.holds);
  CHECK(compare(*r1.lhs, *r1.rhs) == Order::Equal);

  Sublattice diag(z2, int_matrix(1, 2, {1, 1}));
  auto r2 = parallelogram_check(z2, diag, e2);
  CHECK(r2.holds);
  CHECK(r2.lhs->vol_sq == 2);
  CHECK(r2.rhs->vol_sq == 1);

  auto r3 = parallelogram_check(z2, e1, e1);
  CHECK(r3.vacuous);
  CHECK(r3.holds);
}

TEST_CASE("quotient minimal slope sandwich") {
  Lattice d14 = diag_lattice({1, 4});
  auto r1 = quotient_minslope_check(d14, Sublattice(d14, int_matrix(1, 2, {1, 0})));
  CHECK(r1.holds());
  CHECK(r1.mu_min_sub.vol_sq == 1);

  Lattice a2 = corpus("a2").lattice;
  auto r2 = quotient_minslope_check(a2, Sublattice(a2, int_matrix(1, 2, {1, 0})));
  CHECK(r2.holds());
  CHECK(r2.mu_min_sub.vol_sq == 2);
  CHECK(r2.mu_min_quotient.vol_sq == make_rat(3, 2));

  Xoshiro256 rng(55);
  for (int t = 0; t < 60; ++t) {
    std::size_t n = 2 + rng.next_range(4);
    Lattice l = random_lattice(rng, n, 2);
    std::size_t k = 1 + rng.next_range(n - 1);
    CHECK(quotient_minslope_check(l, random_sublattice(rng, l, k)).holds());
  }
}

TEST_CASE("filtration slopes increase and dualize correctly") {
  Xoshiro256 rng(2024);
  for (int t = 0; t < 40; ++t) {
    std::size_t n = 2 + rng.next_range(4);  // rank 2..5
    Lattice l = random_lattice(rng, n, 3);
    auto f = canonical_filtration(l);  // strict increase asserted inside
    for (std::size_t i = 1; i < f.quotient_slopes.size(); ++i)
      CHECK(compare(f.quotient_slopes[i - 1], f.quotient_slopes[i]) == Order::Less);

    // sharp images of the steps, reversed, give the filtration of the dual
    auto fd = canonical_filtration(dual(l));
    REQUIRE(fd.steps.size() == f.steps.size());
    std::size_t mm = f.steps.size() - 1;
    for (std::size_t i = 1; i < f.steps.size(); ++i) {
      Sublattice expected = sharp(l, f.steps[mm - i]);
      CHECK(fd.steps[i].coeffs() == expected.coeffs());
    }

    CHECK(compare(max_slope(l), slope_inverse(min_slope_bruteforce(dual(l)).value)) ==
          Order::Equal);
    auto rep = is_semistable(l);
    CHECK(rep.semistable == (f.steps.size() == 2));
  }
}

TEST_CASE("brute force agrees with the naive subset-scan oracle") {
  for (const char* name : {"z2", "z3", "z4", "a2", "a3", "a4", "d4", "glued2",
                           "diag_1_2", "diag_1_3", "diag_2_3", "diag_1_2_3"}) {
    Lattice l = corpus(name).lattice;
    auto fast = min_slope_bruteforce(l);
    auto naive = testing::naive_min_slope(l);
    INFO("corpus ", name);
    CHECK(compare(fast.value, naive.value) == Order::Equal);
    std::set<std::string> fast_keys;
    for (const auto& w : fast.all_minimizers)
      fast_keys.insert(testing::key_of(w.coeffs()));
    CHECK(fast_keys == naive.minimizing_keys);
  }
  Xoshiro256 rng(808);
  int done = 0;
  while (done < 25) {
    std::size_t n = 2 + rng.next_range(3);  // rank 2..4
    Lattice l = random_lattice(rng, n, 1);
    auto fast = min_slope_bruteforce(l);
    auto naive = testing::naive_min_slope(l);
    CHECK(compare(fast.value, naive.value) == Order::Equal);
    std::set<std::string> fast_keys;
    for (const auto& w : fast.all_minimizers)
      fast_keys.insert(testing::key_of(w.coeffs()));
    CHECK(fast_keys == naive.minimizing_keys);
    ++done;
  }
}

TEST_CASE("rank cap is enforced") {
  MinSlopeOptions opts;
  opts.rank_cap = 2;
  CHECK_THROWS_AS(min_slope_bruteforce(corpus("a3").lattice, opts), CapExceeded);
}
