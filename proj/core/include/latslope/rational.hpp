#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace latslope {

// Arbitrary-precision integers and rationals. mpq_class keeps fractions
// canonicalized (lowest terms, positive denominator), which is exactly the
// representation contract we need.
using Int = mpz_class;
using Rat = mpq_class;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad user-supplied data (malformed JSON, non-SPD Gram, invalid generator...).
class InputError : public Error {
 public:
  using Error::Error;
};

// An instance exceeded a configured search cap; never silently truncated.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

inline Rat make_rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat make_rat(const Int& num, const Int& den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// Parses "p/q" or "p". Throws InputError on malformed input or zero denominator.
Rat rat_from_string(const std::string& s);

// Formats as "p/q", or "p" when the denominator is 1.
std::string rat_to_string(const Rat& q);

double rat_to_double(const Rat& q);

Int rat_floor(const Rat& q);
Int rat_ceil(const Rat& q);
Int rat_round_nearest(const Rat& q);  // ties toward zero

// floor(sqrt(n)) for n >= 0.
Int isqrt_floor(const Int& n);

Rat rat_pow(const Rat& base, unsigned long exp);
Int int_pow(const Int& base, unsigned long exp);

// Exact square root when q is a perfect square of a rational.
std::optional<Rat> exact_sqrt(const Rat& q);

// Exact r-th root when q is a perfect r-th power of a rational (q >= 0, r >= 1).
std::optional<Rat> exact_root(const Rat& q, unsigned long r);

// Largest integer n with n <= c + sqrt(t), exact (t >= 0).
Int floor_c_plus_sqrt(const Rat& c, const Rat& t);
// Smallest integer n with n >= c - sqrt(t), exact (t >= 0).
Int ceil_c_minus_sqrt(const Rat& c, const Rat& t);

// Smallest multiple of 1/64 that is >= x^(1/r), for x >= 0. Used to turn
// irrational search radii into exact rational upper bounds.
Rat rat_upper_root(const Rat& x, unsigned long r);

}  // namespace latslope
