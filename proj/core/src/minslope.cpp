#include "latslope/minslope.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include "latslope/lll.hpp"

namespace latslope {

Rat first_minimum(const Lattice& l) {
  Rat bound = l.gram()(0, 0);
  for (std::size_t i = 1; i < l.rank(); ++i)
    bound = std::min(bound, l.gram()(i, i));
  for (;;) {
    auto vecs = enumerate_short(l.gram(), bound);
    if (!vecs.empty()) return vecs.front().norm_sq;
    bound *= 2;  // cannot trigger: a basis vector realizes the seed bound
  }
}

namespace {

struct DetSearch {
  Rat det;
  std::vector<IntMatrix> witnesses;  // HNF coefficient matrices
};

std::string coeff_key(const IntMatrix& m) {
  std::string k;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      k += m(i, j).get_str();
      k += ',';
    }
  return k;
}

// Schur-complement quotient by a primitive row, without re-validating SPD.
struct RawQuotient {
  RatMatrix gram;     // rank n-1
  IntMatrix adapted;  // unimodular, first row = v
};

RawQuotient raw_quotient_by_line(const RatMatrix& g, const std::vector<Int>& v) {
  std::size_t n = g.rows();
  IntMatrix c(1, n);
  for (std::size_t j = 0; j < n; ++j) c(0, j) = v[j];
  IntMatrix w = complete_basis(c);
  RatMatrix wr = to_rat(w);
  RatMatrix a = wr * g * wr.transpose();
  RatMatrix schur(n - 1, n - 1);
  Rat inv = 1 / a(0, 0);
  for (std::size_t i = 0; i < n - 1; ++i)
    for (std::size_t j = 0; j < n - 1; ++j)
      schur(i, j) = a(i + 1, j + 1) - a(i + 1, 0) * inv * a(0, j + 1);
  return {schur, w};
}

// Smallest 1/64-grid rational B with B^(2k) >= (4/3)^(k(k-1)) * budget^2,
// i.e. an exact upper bound for gamma_k * budget^(1/k) with the Hermite
// bound gamma_k <= (4/3)^((k-1)/2).
Rat line_radius(std::size_t k, const Rat& budget) {
  Rat target = rat_pow(make_rat(4, 3), k * (k - 1)) * budget * budget;
  return rat_upper_root(target, 2 * k);
}

bool line_admissible(std::size_t k, const Rat& norm_sq, const Rat& budget) {
  return rat_pow(norm_sq, 2 * k) <=
         rat_pow(make_rat(4, 3), k * (k - 1)) * budget * budget;
}

struct LineCandidate {
  std::vector<Int> coeffs;  // primitive, sign-normalized
  Rat norm_sq;
};

std::vector<LineCandidate> candidate_lines(const RatMatrix& g, const Rat& radius,
                                           std::size_t max_enum) {
  auto vecs = enumerate_short(g, radius, max_enum);
  std::vector<LineCandidate> lines;
  std::map<std::vector<Int>, Rat> seen;
  for (const auto& sv : vecs) {
    Int content(0);
    for (const auto& t : sv.coeffs)
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), t.get_mpz_t());
    std::vector<Int> prim = sv.coeffs;
    Rat norm = sv.norm_sq;
    if (content > 1) {
      for (auto& t : prim) t /= content;
      norm /= Rat(content * content);
    }
    auto it = seen.find(prim);
    if (it == seen.end()) seen.emplace(std::move(prim), norm);
  }
  for (auto& [coeffs, norm] : seen) lines.push_back({coeffs, norm});
  std::sort(lines.begin(), lines.end(),
            [](const LineCandidate& a, const LineCandidate& b) {
              if (a.norm_sq != b.norm_sq) return a.norm_sq < b.norm_sq;
              return a.coeffs < b.coeffs;
            });
  return lines;
}

// Minimal determinant over saturated rank-k sublattices of the lattice with
// Gram matrix g, among those with det <= budget (inclusive), with every
// witness achieving the minimum. top_radius reports the enumeration radius
// used at the outermost level.
std::optional<DetSearch> min_det_descend(const RatMatrix& g, std::size_t k,
                                         Rat budget, std::size_t max_enum,
                                         Rat* top_radius) {
  std::size_t n = g.rows();
  if (k == 0 || k > n) throw Error("bad descent rank");
  if (k == n) {
    Rat d = det_rat(g);
    if (d > budget) return std::nullopt;
    if (top_radius) *top_radius = Rat(0);
    return DetSearch{d, {int_identity(n)}};
  }
  Rat radius = line_radius(k, budget);
  if (top_radius) *top_radius = radius;
  auto lines = candidate_lines(g, radius, max_enum);

  std::optional<Rat> best;
  std::map<std::string, IntMatrix> witnesses;
  auto offer = [&](const Rat& cand, std::vector<IntMatrix>&& wits) {
    if (cand > budget) return;
    if (!best || cand < *best) {
      best = cand;
      witnesses.clear();
    }
    if (cand == *best)
      for (auto& w : wits) {
        IntMatrix h = hnf_basis(w);
        witnesses.emplace(coeff_key(h), std::move(h));
      }
  };

  for (const auto& line : lines) {
    Rat effective = best ? std::min(*best, budget) : budget;
    if (!line_admissible(k, line.norm_sq, effective)) break;  // sorted ascending
    if (k == 1) {
      IntMatrix w(1, n);
      for (std::size_t j = 0; j < n; ++j) w(0, j) = line.coeffs[j];
      std::vector<IntMatrix> ws;
      ws.push_back(std::move(w));
      offer(line.norm_sq, std::move(ws));
      continue;
    }
    auto q = raw_quotient_by_line(g, line.coeffs);
    Rat sub_budget = (best ? std::min(*best, budget) : budget) / line.norm_sq;
    auto sub = min_det_descend(q.gram, k - 1, sub_budget, max_enum, nullptr);
    if (!sub) continue;
    Rat cand = line.norm_sq * sub->det;
    // pull each sub-witness back through the adapted basis
    std::vector<IntMatrix> pulled;
    pulled.reserve(sub->witnesses.size());
    IntMatrix w2(n - 1, n);
    for (std::size_t i = 0; i < n - 1; ++i)
      for (std::size_t j = 0; j < n; ++j) w2(i, j) = q.adapted(i + 1, j);
    IntMatrix v(1, n);
    for (std::size_t j = 0; j < n; ++j) v(0, j) = line.coeffs[j];
    for (const auto& sw : sub->witnesses)
      pulled.push_back(hnf_basis(vstack(v, sw * w2)));
    offer(cand, std::move(pulled));
  }
  if (!best) return std::nullopt;
  DetSearch out{*best, {}};
  for (auto& [key, w] : witnesses) out.witnesses.push_back(std::move(w));
  return out;
}

// Minimal det at rank k among k-subsets of the basis: the initial budget.
Rat basis_subset_budget(const RatMatrix& g, std::size_t k) {
  std::size_t n = g.rows();
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  std::optional<Rat> best;
  for (;;) {
    RatMatrix minor(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor(i, j) = g(idx[i], idx[j]);
    Rat d = det_rat(minor);
    if (!best || d < *best) best = d;
    // next combination
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return *best;
}

struct RankSearchOutcome {
  Rat det;
  std::vector<IntMatrix> witnesses;
  RankBound bound;
};

// Minimal determinant over saturated rank-k sublattices of l (1 <= k < n),
// searched in whichever of l / dual(l) gives the shallower descent.
RankSearchOutcome min_det_rank(const Lattice& l, std::size_t k,
                               const MinSlopeOptions& opts) {
  std::size_t n = l.rank();
  bool via_dual = k > n - k;
  const Lattice side = via_dual ? dual(l) : l;
  std::size_t kk = via_dual ? n - k : k;

  auto red = lll_reduce(side.gram());
  Rat budget = basis_subset_budget(red.gram, kk);
  Rat radius(0);
  auto found =
      min_det_descend(red.gram, kk, budget, opts.max_enum, &radius);
  if (!found) throw Error("descent lost its own initial witness");

  // map witnesses out of the reduced basis
  std::vector<IntMatrix> wits;
  for (const auto& w : found->witnesses) wits.push_back(hnf_basis(w * red.u));

  Rat d = found->det;
  if (via_dual) {
    // sharp bijection: det_L(N) = det(L) * det_dual(N#); witnesses map to
    // their kernels.
    d *= l.vol_sq();
    std::vector<IntMatrix> mapped;
    for (const auto& w : wits) mapped.push_back(integer_kernel(w));
    wits = std::move(mapped);
  }
  std::sort(wits.begin(), wits.end(), [](const IntMatrix& a, const IntMatrix& b) {
    return a.data() < b.data();
  });
  return {d, std::move(wits), RankBound{k, radius, via_dual}};
}

}  // namespace

MinSlopeResult min_slope_bruteforce(const Lattice& l, const MinSlopeOptions& opts) {
  std::size_t n = l.rank();
  if (n > opts.rank_cap)
    throw CapExceeded("rank " + std::to_string(n) + " exceeds the configured cap " +
                      std::to_string(opts.rank_cap));

  std::optional<SlopeValue> best;
  std::vector<Sublattice> minimizers;
  std::vector<RankBound> bounds;

  auto offer = [&](const SlopeValue& sv, std::vector<Sublattice>&& wits) {
    if (!best || compare(sv, *best) == Order::Less) {
      best = sv;
      minimizers.clear();
    }
    if (compare(sv, *best) == Order::Equal)
      for (auto& w : wits) minimizers.push_back(std::move(w));
  };

  for (std::size_t k = 1; k < n; ++k) {
    auto outcome = min_det_rank(l, k, opts);
    bounds.push_back(outcome.bound);
    std::vector<Sublattice> wits;
    wits.reserve(outcome.witnesses.size());
    for (auto& w : outcome.witnesses) wits.emplace_back(l, std::move(w), false);
    offer(SlopeValue{outcome.det, k}, std::move(wits));
  }
  {
    std::vector<Sublattice> full;
    full.push_back(Sublattice::full(l));
    offer(slope(l), std::move(full));
  }

  std::sort(minimizers.begin(), minimizers.end(),
            [](const Sublattice& a, const Sublattice& b) {
              if (a.rank() != b.rank()) return a.rank() < b.rank();
              return a.coeffs().data() < b.coeffs().data();
            });
  minimizers.erase(std::unique(minimizers.begin(), minimizers.end()),
                   minimizers.end());
  return {*best, minimizers.front(), MinSlopeMethod::Brute, bounds, minimizers};
}

Sublattice destabilizing(const Lattice& l, const MinSlopeOptions& opts) {
  auto res = min_slope_bruteforce(l, opts);
  IntMatrix stacked(0, l.rank());
  for (const auto& s : res.all_minimizers) stacked = vstack(stacked, s.coeffs());
  Sublattice sum(l, stacked, true);
  if (compare(slope_of(sum), res.value) != Order::Equal)
    throw Error("destabilizing sublattice failed its slope assertion");
  return sum;
}

Filtration canonical_filtration(const Lattice& l, const MinSlopeOptions& opts) {
  Filtration f{l, {}, {}, {}};
  f.steps.push_back(Sublattice::zero(l));

  // peel destabilizing sublattices, pulling quotient steps back to L
  std::vector<IntMatrix> chain;  // coefficient matrices of S_1 ⊂ ... ⊂ S_m
  struct Level {
    Lattice lat;
    // maps a sublattice of `lat` to coefficients in the original basis
    std::function<IntMatrix(const IntMatrix&)> lift;
  };
  Level cur{l, [](const IntMatrix& c) { return c; }};
  for (;;) {
    Sublattice d = destabilizing(cur.lat, opts);
    chain.push_back(cur.lift(d.coeffs()));
    if (d.rank() == cur.lat.rank()) break;
    auto q = quotient(cur.lat, d);
    auto prev_lift = cur.lift;
    IntMatrix adapted = q.adapted;
    Sublattice dcopy = d;
    cur = Level{q.lattice, [prev_lift, adapted, dcopy](const IntMatrix& c) {
                  return prev_lift(pullback_through_quotient(dcopy, adapted, c));
                }};
  }
  for (const auto& c : chain) f.steps.emplace_back(l, c, false);

  Rat prev_det(1);
  unsigned long prev_rank = 0;
  f.polygon.push_back({0, Rat(1), 0.0});
  for (std::size_t i = 1; i < f.steps.size(); ++i) {
    Rat d = det_rat(f.steps[i].gram());
    unsigned long r = f.steps[i].rank();
    f.quotient_slopes.push_back(SlopeValue{d / prev_det, r - prev_rank});
    f.polygon.push_back({r, d, 0.5 * std::log(rat_to_double(d))});
    prev_det = d;
    prev_rank = r;
  }
  for (std::size_t i = 1; i < f.quotient_slopes.size(); ++i)
    if (compare(f.quotient_slopes[i - 1], f.quotient_slopes[i]) != Order::Less)
      throw Error("canonical filtration slopes fail to increase strictly");
  return f;
}

SlopeValue max_slope(const Lattice& l, const MinSlopeOptions& opts) {
  return slope_inverse(min_slope_bruteforce(dual(l), opts).value);
}

Sublattice codestabilizing(const Lattice& l, const MinSlopeOptions& opts) {
  Sublattice d = destabilizing(dual(l), opts);
  return Sublattice(l, integer_kernel(d.coeffs()), false);
}

SemistabilityReport is_semistable(const Lattice& l, const MinSlopeOptions& opts) {
  auto res = min_slope_bruteforce(l, opts);
  SlopeValue mu = slope(l);
  bool ss = compare(res.value, mu) == Order::Equal;
  SemistabilityReport rep{ss, mu, res.value, std::nullopt, res.bounds};
  if (!ss) rep.destabilizing = destabilizing(l, opts);
  return rep;
}

ParallelogramReport parallelogram_check(const Lattice& l, const Sublattice& s1,
                                        const Sublattice& s2) {
  if (s1.rank() == 0)
    return {true, true, std::nullopt, std::nullopt};
  Sublattice meet = intersect(l, s1.span().intersect(s2.span()));
  if (meet.rank() == s1.rank())  // S1 contained in S2
    return {true, true, std::nullopt, std::nullopt};
  IntMatrix join_basis = hnf_basis(vstack(s1.coeffs(), s2.coeffs()));
  RatMatrix jr = to_rat(join_basis);
  Rat det_join = det_rat(jr * l.gram() * jr.transpose());
  Rat det_s1 = det_rat(s1.gram());
  Rat det_s2 = s2.rank() == 0 ? Rat(1) : det_rat(s2.gram());
  Rat det_meet = meet.rank() == 0 ? Rat(1) : det_rat(meet.gram());
  unsigned long dr = s1.rank() - meet.rank();
  SlopeValue lhs{det_s1 / det_meet, dr};
  SlopeValue rhs{det_join / det_s2, dr};
  bool holds = compare(lhs, rhs) != Order::Less;
  return {false, holds, lhs, rhs};
}

QuotientMinSlopeReport quotient_minslope_check(const Lattice& l,
                                               const Sublattice& s,
                                               const MinSlopeOptions& opts) {
  if (s.rank() == 0 || s.rank() >= l.rank())
    throw Error("quotient check requires 0 < rank(S) < rank(L)");
  SlopeValue mm_s = min_slope_bruteforce(s.as_lattice(), opts).value;
  SlopeValue mm_l = min_slope_bruteforce(l, opts).value;
  SlopeValue mm_q =
      min_slope_bruteforce(quotient(l, s).lattice, opts).value;
  SlopeValue lower = compare(mm_s, mm_q) == Order::Less ? mm_s : mm_q;
  return {mm_s, mm_l, mm_q, compare(mm_s, mm_l) != Order::Less,
          compare(mm_l, lower) != Order::Less};
}

}  // namespace latslope
