#include <doctest.h>

#include "latslope/io.hpp"
#include "latslope/lattice.hpp"

using namespace latslope;

namespace {

Lattice a2_lattice() { return Lattice(rat_matrix(2, 2, {2, 1, 1, 2}), "a2"); }

Lattice glued_lattice() {
  RatMatrix g(2, 2);
  g(0, 0) = 1;
  g(0, 1) = g(1, 0) = make_rat(1, 2);
  g(1, 1) = make_rat(1, 2);
  return Lattice(g, "glued2");
}

Lattice diag_lattice(std::initializer_list<long> d) {
  RatMatrix g(d.size(), d.size());
  std::size_t i = 0;
  for (long v : d) {
    g(i, i) = v;
    ++i;
  }
  return Lattice(g, "diag");
}

}  // namespace

TEST_CASE("slope of basic lattices") {
  CHECK(slope(Lattice(rat_identity(2))).vol_sq == 1);
  CHECK(slope(Lattice(rat_identity(2))).rank == 2);
  CHECK(slope(a2_lattice()).vol_sq == 3);
  CHECK(slope(diag_lattice({1, 4})).vol_sq == 4);
}

TEST_CASE("slope_of sublattices") {
  Lattice d14 = diag_lattice({1, 4});
  Sublattice e1(d14, int_matrix(1, 2, {1, 0}));
  CHECK(slope_of(e1).vol_sq == 1);
  CHECK(slope_of(e1).rank == 1);

  Sublattice v(a2_lattice(), int_matrix(1, 2, {1, -1}));
  CHECK(slope_of(v).vol_sq == 2);

  CHECK(compare(slope_of(Sublattice::full(d14)), slope(d14)) == Order::Equal);
}

TEST_CASE("slope compare and mul") {
  CHECK(compare(SlopeValue{Rat(3), 2}, SlopeValue{Rat(2), 1}) == Order::Less);
  CHECK(compare(SlopeValue{Rat(1), 3}, SlopeValue{Rat(1), 7}) == Order::Equal);
  SlopeValue p = mul(SlopeValue{Rat(3), 2}, SlopeValue{Rat(4), 3});
  CHECK(p.vol_sq == 432);
  CHECK(p.rank == 6);
}

TEST_CASE("compare is a total order compatible with mul") {
  Xoshiro256 rng(12);
  std::vector<SlopeValue> vals;
  for (int i = 0; i < 14; ++i)
    vals.push_back({make_rat(1 + long(rng.next_range(30)),
                             1 + long(rng.next_range(9))),
                    1 + rng.next_range(5)});
  for (const auto& a : vals)
    for (const auto& b : vals) {
      Order ab = compare(a, b);
      Order ba = compare(b, a);
      CHECK((ab == Order::Equal) == (ba == Order::Equal));
      if (ab == Order::Less) CHECK(ba == Order::Greater);
      for (const auto& t : vals)
        if (ab != Order::Greater)
          CHECK(compare(mul(a, t), mul(b, t)) != Order::Greater);
    }
}

TEST_CASE("dual lattice") {
  Lattice a2 = a2_lattice();
  Lattice d = dual(a2);
  CHECK(d.gram()(0, 0) == make_rat(2, 3));
  CHECK(d.gram()(0, 1) == make_rat(-1, 3));
  CHECK(slope(d).vol_sq == make_rat(1, 3));

  CHECK(dual(Lattice(rat_identity(3))).gram() == rat_identity(3));

  Xoshiro256 rng(4);
  for (int t = 0; t < 15; ++t) {
    Lattice l = random_lattice(rng, 2 + rng.next_range(3), 3);
    CHECK(dual(dual(l)).gram() == l.gram());
    CHECK(compare(slope(dual(l)), slope_inverse(slope(l))) == Order::Equal);
  }
}

TEST_CASE("tensor product") {
  Lattice z2(rat_identity(2), "z2");
  Lattice a2 = a2_lattice();
  Lattice t = tensor(z2, a2);
  CHECK(t.rank() == 4);
  CHECK(t.vol_sq() == 9);

  Lattice t2 = tensor(a2, a2);
  CHECK(t2.vol_sq() == 81);
  CHECK(compare(slope(t2), mul(slope(a2), slope(a2))) == Order::Equal);

  Lattice z1(rat_identity(1), "z1");
  CHECK(tensor(z1, a2).gram() == a2.gram());
}

TEST_CASE("direct sum") {
  CHECK(direct_sum(Lattice(rat_identity(1)), Lattice(rat_identity(1))).gram() ==
        rat_identity(2));
  Lattice s = direct_sum(a2_lattice(), scale(a2_lattice(), Rat(4)));
  CHECK(s.vol_sq() == 144);
  // mu(M p N)^(m+n) = mu(M)^m mu(N)^n
  Radical lhs = radical_pow(slope(s).as_radical(), 4);
  Radical rhs = mul(radical_pow(slope(a2_lattice()).as_radical(), 2),
                    radical_pow(slope(scale(a2_lattice(), Rat(4))).as_radical(), 2));
  CHECK(compare(lhs, rhs) == Order::Equal);
}

TEST_CASE("intersect with a subspace") {
  Lattice z2(rat_identity(2));
  Sublattice s = intersect(z2, Subspace(2, rat_matrix(1, 2, {1, 1})));
  CHECK(s.coeffs() == int_matrix(1, 2, {1, 1}));

  Lattice glued = glued_lattice();
  Sublattice line = intersect(glued, Subspace(2, rat_matrix(1, 2, {-1, 2})));
  CHECK(line.coeffs() == int_matrix(1, 2, {1, -2}));
  CHECK(det_rat(line.gram()) == 1);

  CHECK(intersect(z2, Subspace::full(2)).coeffs() == int_identity(2));
}

TEST_CASE("quotient via the adapted basis") {
  Lattice d14 = diag_lattice({1, 4});
  auto q1 = quotient(d14, Sublattice(d14, int_matrix(1, 2, {1, 0})));
  CHECK(q1.lattice.gram() == rat_matrix(1, 1, {4}));

  Lattice z2(rat_identity(2));
  auto q2 = quotient(z2, Sublattice(z2, int_matrix(1, 2, {1, 1})));
  CHECK(q2.lattice.gram()(0, 0) == make_rat(1, 2));
  CHECK(z2.vol_sq() == Rat(2) * q2.lattice.vol_sq());

  Lattice a2 = a2_lattice();
  auto q3 = quotient(a2, Sublattice(a2, int_matrix(1, 2, {1, 0})));
  CHECK(q3.lattice.gram()(0, 0) == make_rat(3, 2));
  CHECK(a2.vol_sq() == Rat(2) * q3.lattice.vol_sq());
}

TEST_CASE("projection is the quotient by the orthogonal intersection") {
  Lattice z2(rat_identity(2));
  CHECK(project(z2, Subspace(2, rat_matrix(1, 2, {1, 0}))).gram() ==
        rat_identity(1));

  Lattice glued = glued_lattice();
  Lattice p = project(glued, Subspace(2, rat_matrix(1, 2, {1, 0})));
  CHECK(p.vol_sq() == make_rat(1, 4));

  Subspace f(2, rat_matrix(1, 2, {1, 0}));
  Sublattice perp = intersect(glued, f.orthogonal_complement(glued.gram()));
  CHECK(glued.vol_sq() == det_rat(perp.gram()) * p.vol_sq());
}

TEST_CASE("index of finite-index submodules") {
  Lattice z2(rat_identity(2));
  CHECK(index(z2, int_matrix(2, 2, {2, 0, 0, 2})) == 4);
  CHECK(index(z2, int_identity(2)) == 1);

  Lattice glued = glued_lattice();
  CHECK(index(glued, int_matrix(2, 2, {1, 0, -1, 2})) == 2);
}

TEST_CASE("sharp duality") {
  Lattice z2(rat_identity(2));
  Sublattice e1(z2, int_matrix(1, 2, {1, 0}));
  CHECK(sharp(z2, e1).coeffs() == int_matrix(1, 2, {0, 1}));

  Lattice d14 = diag_lattice({1, 4});
  Sublattice s(d14, int_matrix(1, 2, {1, 0}));
  Sublattice sh = sharp(d14, s);
  Lattice dl = dual(d14);
  auto q = quotient(dl, sh);
  CHECK(compare(slope(q.lattice), slope_inverse(slope_of(s))) == Order::Equal);

  Xoshiro256 rng(21);
  for (int t = 0; t < 20; ++t) {
    std::size_t n = 2 + rng.next_range(3);
    Lattice l = random_lattice(rng, n, 3);
    Sublattice sub = random_sublattice(rng, l, 1 + rng.next_range(n - 1));
    Sublattice back = sharp(dual(l), sharp(l, sub));
    CHECK(back.coeffs() == sub.coeffs());
  }
}

TEST_CASE("exact sequence identity and sandwich on random instances") {
  Xoshiro256 rng(77);
  for (int t = 0; t < 120; ++t) {
    std::size_t n = 2 + rng.next_range(4);
    Lattice l = random_lattice(rng, n, 3);
    std::size_t k = 1 + rng.next_range(n - 1);
    Sublattice s = random_sublattice(rng, l, k);
    Lattice q = quotient(l, s).lattice;
    CHECK(l.vol_sq() == det_rat(s.gram()) * q.vol_sq());

    SlopeValue ml = slope(l), ms = slope_of(s), mq = slope(q);
    SlopeValue lo = compare(ms, mq) == Order::Less ? ms : mq;
    SlopeValue hi = compare(ms, mq) == Order::Less ? mq : ms;
    CHECK(compare(lo, ml) != Order::Greater);
    CHECK(compare(ml, hi) != Order::Greater);
    bool all_equal = compare(ms, mq) == Order::Equal &&
                     compare(ml, ms) == Order::Equal;
    if (!all_equal) {
      CHECK(compare(lo, ml) == Order::Less);
      CHECK(compare(ml, hi) == Order::Less);
    }
  }
}

TEST_CASE("tensor slope multiplicativity on random pairs") {
  Xoshiro256 rng(31);
  for (int t = 0; t < 40; ++t) {
    Lattice l = random_lattice(rng, 1 + rng.next_range(3), 3);
    Lattice m = random_lattice(rng, 1 + rng.next_range(3), 3);
    CHECK(compare(slope(tensor(l, m)), mul(slope(l), slope(m))) == Order::Equal);
  }
}

TEST_CASE("lattice validation rejects bad grams") {
  CHECK_THROWS_AS(Lattice(rat_matrix(2, 2, {1, 2, 3, 4})), InputError);
  CHECK_THROWS_AS(Lattice(rat_matrix(2, 2, {1, 2, 2, 1})), InputError);
  CHECK_THROWS_AS(Lattice(rat_matrix(1, 1, {0})), InputError);
}
