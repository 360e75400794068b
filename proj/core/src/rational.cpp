#include "latslope/rational.hpp"

#include <cmath>

namespace latslope {

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw InputError("empty rational literal");
  std::string num = s, den = "1";
  if (auto pos = s.find('/'); pos != std::string::npos) {
    num = s.substr(0, pos);
    den = s.substr(pos + 1);
    if (num.empty() || den.empty()) throw InputError("malformed rational: " + s);
  }
  Int n, d;
  if (n.set_str(num, 10) != 0 || d.set_str(den, 10) != 0)
    throw InputError("malformed rational: " + s);
  if (d == 0) throw InputError("zero denominator: " + s);
  Rat q(n, d);
  q.canonicalize();
  return q;
}

std::string rat_to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double rat_to_double(const Rat& q) { return q.get_d(); }

Int rat_floor(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

Int rat_ceil(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

Int rat_round_nearest(const Rat& q) {
  // round(q) with ties toward zero: floor(q + 1/2) for q >= 0, ceil(q - 1/2) otherwise
  Rat half(1, 2);
  if (q >= 0) return rat_floor(q + half);
  return rat_ceil(q - half);
}

Int isqrt_floor(const Int& n) {
  if (n < 0) throw Error("isqrt of negative");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

Rat rat_pow(const Rat& base, unsigned long exp) {
  Rat r;
  // base is canonical, so componentwise powers stay canonical
  mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()), exp);
  mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()), exp);
  return r;
}

Int int_pow(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

std::optional<Rat> exact_sqrt(const Rat& q) { return exact_root(q, 2); }

std::optional<Rat> exact_root(const Rat& q, unsigned long r) {
  if (q < 0) return std::nullopt;
  if (r == 0) throw Error("zeroth root");
  Int num, den;
  int num_ok = mpz_root(num.get_mpz_t(), q.get_num().get_mpz_t(), r);
  int den_ok = mpz_root(den.get_mpz_t(), q.get_den().get_mpz_t(), r);
  if (!num_ok || !den_ok) return std::nullopt;
  return make_rat(num, den);
}

Int floor_c_plus_sqrt(const Rat& c, const Rat& t) {
  if (t < 0) throw Error("negative radicand");
  // Seed with a double estimate, then correct with the exact predicate
  // n <= c + sqrt(t)  <=>  n - c <= 0  or  (n - c)^2 <= t.
  double est = rat_to_double(c) + std::sqrt(rat_to_double(t));
  Int n(static_cast<long>(std::floor(est)));
  auto ok = [&](const Int& v) {
    Rat d = Rat(v) - c;
    return d <= 0 || d * d <= t;
  };
  while (!ok(n)) --n;
  while (ok(n + 1)) ++n;
  return n;
}

Int ceil_c_minus_sqrt(const Rat& c, const Rat& t) {
  // n >= c - sqrt(t)  <=>  -n <= -c + sqrt(t)
  return -floor_c_plus_sqrt(-c, t);
}

Rat rat_upper_root(const Rat& x, unsigned long r) {
  if (x < 0) throw Error("negative radicand");
  if (x == 0) return Rat(0);
  if (r == 1) return x;
  double est = std::pow(rat_to_double(x), 1.0 / static_cast<double>(r));
  Int grains(static_cast<long>(std::ceil(est * 64.0)));
  if (grains < 1) grains = 1;
  Rat b = make_rat(grains, Int(64));
  Rat step(1, 64);
  while (rat_pow(b, r) < x) b += step;
  while (b > step && rat_pow(b - step, r) >= x) b -= step;
  return b;
}

}  // namespace latslope
