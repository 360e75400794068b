#include "latslope/enumerate.hpp"

#include <algorithm>
#include <functional>

#include "latslope/lll.hpp"

namespace latslope {

namespace {

// LDL^T factors of an SPD Gram matrix: g = l d l^T with l unit lower
// triangular, d positive diagonal. Then x g x^T = sum_k d_k (x_k + c_k)^2
// with c_k = sum_{j>k} l(j,k) x_j.
struct Ldlt {
  RatMatrix l;
  std::vector<Rat> d;
};

Ldlt ldlt(const RatMatrix& g) {
  std::size_t n = g.rows();
  Ldlt f{rat_identity(n), std::vector<Rat>(n)};
  RatMatrix a = g;
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) <= 0) throw InputError("Gram matrix is not positive definite");
    f.d[k] = a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) f.l(i, k) = a(i, k) / a(k, k);
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j <= i; ++j) {
        a(i, j) -= f.l(i, k) * a(k, j);
        a(j, i) = a(i, j);
      }
  }
  return f;
}

}  // namespace

std::vector<ShortVector> enumerate_short(const RatMatrix& g, const Rat& bound,
                                         std::size_t max_results) {
  if (!is_symmetric(g)) throw InputError("Gram matrix must be symmetric");
  std::size_t n = g.rows();
  std::vector<ShortVector> out;
  if (n == 0 || bound < 0) return out;

  auto red = lll_reduce(g);
  Ldlt f = ldlt(red.gram);

  std::vector<Int> x(n, Int(0));
  std::vector<ShortVector> raw;
  // lvl counts coordinates still unset; coordinate lvl-1 is chosen here
  std::function<void(std::size_t, const Rat&)> walk = [&](std::size_t lvl,
                                                          const Rat& used) {
    std::size_t k = lvl - 1;
    Rat c(0);
    for (std::size_t j = k + 1; j < n; ++j)
      if (x[j] != 0) c += f.l(j, k) * Rat(x[j]);
    Rat room = (bound - used) / f.d[k];
    Int lo = ceil_c_minus_sqrt(-c, room);
    Int hi = floor_c_plus_sqrt(-c, room);
    for (Int v = lo; v <= hi; ++v) {
      x[k] = v;
      Rat dv = Rat(v) + c;
      Rat used2 = used + f.d[k] * dv * dv;
      if (k == 0) {
        bool zero = std::all_of(x.begin(), x.end(),
                                [](const Int& t) { return t == 0; });
        if (!zero) {
          if (raw.size() >= 2 * max_results)
            throw EnumerationOverflow("short-vector enumeration overflow");
          raw.push_back({x, used2});
        }
      } else {
        walk(k, used2);
      }
    }
    x[k] = 0;
  };
  walk(n, Rat(0));

  // map back to the original basis, normalize signs, dedupe, sort
  for (auto& sv : raw) {
    std::vector<Int> orig(n, Int(0));
    for (std::size_t i = 0; i < n; ++i) {
      if (sv.coeffs[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) orig[j] += sv.coeffs[i] * red.u(i, j);
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (orig[j] == 0) continue;
      if (orig[j] < 0)
        for (auto& t : orig) t = -t;
      break;
    }
    sv.coeffs = std::move(orig);
  }
  std::sort(raw.begin(), raw.end(), [](const ShortVector& a, const ShortVector& b) {
    if (a.norm_sq != b.norm_sq) return a.norm_sq < b.norm_sq;
    return a.coeffs < b.coeffs;
  });
  raw.erase(std::unique(raw.begin(), raw.end(),
                        [](const ShortVector& a, const ShortVector& b) {
                          return a.coeffs == b.coeffs;
                        }),
            raw.end());
  if (raw.size() > max_results)
    throw EnumerationOverflow("short-vector enumeration overflow");
  return raw;
}

}  // namespace latslope
