// Test-side oracles, deliberately independent of the search strategy used by
// the library: minimal slope by exhaustive k-subset scan over short vectors
// within a certified static radius.
#pragma once

#include <map>
#include <set>

#include "latslope/lll.hpp"
#include "latslope/minslope.hpp"

namespace latslope::testing {

struct NaiveMinSlope {
  SlopeValue value;
  std::set<std::string> minimizing_keys;  // HNF coefficient keys
};

inline std::string key_of(const IntMatrix& m) {
  std::string k;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      k += m(i, j).get_str();
      k += ',';
    }
  return k;
}

// For every rank k: radius B_k = gamma_k^k * D_k / lambda1^(2(k-1)) scaled by
// the basis-correction safety factor max(1, (k/2)^2), with D_k the smallest
// determinant among k-subsets of an LLL-reduced basis and gamma_k^k bounded
// by (4/3)^(k(k-1)/2). Every k-subset of the enumerated vectors is saturated
// and its determinant taken; no pruning, no duality.
inline NaiveMinSlope naive_min_slope(const Lattice& l) {
  std::size_t n = l.rank();
  auto red = lll_reduce(l.gram());
  Rat lambda1 = first_minimum(l);

  std::optional<SlopeValue> best;
  std::set<std::string> keys;
  auto offer = [&](const SlopeValue& sv, const IntMatrix& coeffs) {
    if (!best || compare(sv, *best) == Order::Less) {
      best = sv;
      keys.clear();
    }
    if (compare(sv, *best) == Order::Equal) keys.insert(key_of(coeffs));
  };

  for (std::size_t k = 1; k < n; ++k) {
    // D_k over basis subsets
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    std::optional<Rat> dk;
    for (;;) {
      RatMatrix minor(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) minor(i, j) = red.gram(idx[i], idx[j]);
      Rat d = det_rat(minor);
      if (!dk || d < *dk) dk = d;
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    Rat safety = k <= 2 ? Rat(1) : make_rat(long(k * k), 4);
    Rat bk = rat_pow(make_rat(4, 3), k * (k - 1) / 2) * *dk /
             rat_pow(lambda1, k - 1) * safety;
    auto vecs = enumerate_short(l.gram(), bk, 4000);

    // all k-subsets, saturated
    std::vector<std::size_t> pick(k);
    std::function<void(std::size_t, std::size_t)> scan = [&](std::size_t at,
                                                             std::size_t from) {
      if (at == k) {
        IntMatrix rows(k, n);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < n; ++j) rows(i, j) = vecs[pick[i]].coeffs[j];
        if (rank_rat(to_rat(rows)) != k) return;
        IntMatrix sat = saturate(rows);
        RatMatrix sr = to_rat(sat);
        offer({det_rat(sr * l.gram() * sr.transpose()), k}, sat);
        return;
      }
      for (std::size_t c = from; c < vecs.size(); ++c) {
        pick[at] = c;
        scan(at + 1, c + 1);
      }
    };
    scan(0, 0);
  }
  offer(slope(l), int_identity(n));
  return {*best, keys};
}

}  // namespace latslope::testing
