#include "latslope/poly.hpp"

#include <algorithm>
#include <sstream>

namespace latslope {

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::constant(const Rat& c) { return Poly({c}); }

Poly Poly::x_minus(const Rat& root) { return Poly({-root, Rat(1)}); }

Rat Poly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  std::vector<Rat> c = coeffs_;
  Rat inv = 1 / leading();
  for (auto& v : c) v *= inv;
  return Poly(std::move(c));
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return Poly();
  std::vector<Rat> c(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    c[i - 1] = coeffs_[i] * Rat(static_cast<long>(i));
  return Poly(std::move(c));
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rat> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<Rat> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
  return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rat> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Poly(std::move(c));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error("polynomial division by zero");
  std::vector<Rat> rem = a.coeffs_;
  std::vector<Rat> quot;
  int db = b.degree();
  if (static_cast<int>(rem.size()) - 1 >= db)
    quot.assign(rem.size() - db, Rat(0));
  Rat lb_inv = 1 / b.leading();
  for (int d = static_cast<int>(rem.size()) - 1; d >= db; --d) {
    Rat f = rem[d] * lb_inv;
    if (f == 0) continue;
    quot[d - db] = f;
    for (int i = 0; i <= db; ++i) rem[d - db + i] -= f * b.coeffs_[i];
  }
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly poly_lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  Poly g = poly_gcd(a, b);
  return divmod(a * b, g).first.monic();
}

Poly minimal_polynomial(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw Error("minimal polynomial of non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return Poly({Rat(1)});
  Poly result = Poly::constant(Rat(1));
  for (std::size_t s = 0; s < n; ++s) {
    // Krylov iteration from e_s: find the first linear dependency among
    // e_s, e_s m, e_s m^2, ...
    RatMatrix krylov(n + 1, n);
    RatMatrix v(1, n);
    v(0, s) = 1;
    std::size_t steps = 0;
    for (;;) {
      for (std::size_t j = 0; j < n; ++j) krylov(steps, j) = v(0, j);
      RatMatrix sub(steps + 1, n);
      for (std::size_t i = 0; i <= steps; ++i)
        for (std::size_t j = 0; j < n; ++j) sub(i, j) = krylov(i, j);
      if (rank_rat(sub) <= steps) {
        // v_steps depends on earlier iterates: solve for the combination
        RatMatrix prev(steps, n);
        for (std::size_t i = 0; i < steps; ++i)
          for (std::size_t j = 0; j < n; ++j) prev(i, j) = krylov(i, j);
        RatMatrix last(1, n);
        for (std::size_t j = 0; j < n; ++j) last(0, j) = krylov(steps, j);
        auto sol = solve_left(prev, last);
        if (!sol) throw Error("krylov dependency solve failed");
        std::vector<Rat> coeffs(steps + 1);
        for (std::size_t i = 0; i < steps; ++i) coeffs[i] = -(*sol)(0, i);
        coeffs[steps] = 1;
        result = poly_lcm(result, Poly(std::move(coeffs)));
        break;
      }
      v = v * m;
      ++steps;
    }
    if (result.degree() == static_cast<int>(n)) break;  // cannot grow further
  }
  return result.monic();
}

std::vector<Rat> rational_roots(const Poly& p) {
  if (p.is_zero()) throw Error("rational roots of the zero polynomial");
  Poly q = p;
  std::vector<Rat> roots;
  // strip zero roots first
  while (q.coeff(0) == 0 && q.degree() > 0) {
    roots.push_back(Rat(0));
    std::vector<Rat> c(q.coeffs().begin() + 1, q.coeffs().end());
    q = Poly(std::move(c));
  }
  if (q.degree() == 0) {
    std::sort(roots.begin(), roots.end());
    return roots;
  }
  // primitive integer form
  Int den_lcm(1);
  for (const auto& c : q.coeffs())
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<Int> ic(q.coeffs().size());
  Int content(0);
  for (std::size_t i = 0; i < ic.size(); ++i) {
    Rat v = q.coeffs()[i] * Rat(den_lcm);
    ic[i] = v.get_num();
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), ic[i].get_mpz_t());
  }
  for (auto& v : ic) v /= content;

  auto divisors = [](Int n) {
    if (n < 0) n = -n;
    std::vector<Int> ds;
    for (Int d(1); d * d <= n; ++d)
      if (n % d == 0) {
        ds.push_back(d);
        if (d * d != n) ds.push_back(n / d);
      }
    return ds;
  };
  std::vector<Rat> candidates;
  for (const Int& pnum : divisors(ic.front()))
    for (const Int& pden : divisors(ic.back())) {
      candidates.push_back(make_rat(pnum, pden));
      candidates.push_back(make_rat(-pnum, pden));
    }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());
  for (const Rat& cand : candidates) {
    while (q.degree() > 0 && q.eval(cand) == 0) {
      roots.push_back(cand);
      q = divmod(q, Poly::x_minus(cand)).first;
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::string poly_to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = p.degree(); d >= 0; --d) {
    Rat c = p.coeff(static_cast<std::size_t>(d));
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    Rat a = abs(c);
    if (a != 1 || d == 0) os << rat_to_string(a);
    if (d >= 1) os << (a != 1 ? "*x" : "x");
    if (d >= 2) os << "^" << d;
    first = false;
  }
  return os.str();
}

}  // namespace latslope
