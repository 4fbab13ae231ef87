#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace torusdual {

/// Arbitrary-precision integer used by every exact computation in the library.
using Integer = mpz_class;
using IntVector = std::vector<Integer>;

inline Integer abs_value(const Integer& a) { return abs(a); }

inline Integer gcd_of(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer lcm_of(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

/// Nearest-integer quotient a / b (ties toward floor). Keeps remainders |r| <= |b|/2.
inline Integer round_quotient(const Integer& a, const Integer& b) {
  Integer q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  // The floor remainder shares the sign of b; stepping q up flips it to the shorter side.
  Integer twice = 2 * r;
  if (abs(twice) > abs(b)) q += 1;
  return q;
}

/// Floor quotient and nonnegative remainder for a positive modulus.
inline Integer floor_mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline bool divides(const Integer& d, const Integer& a) {
  if (d == 0) return a == 0;
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

/// Extended gcd: returns g = s*a + t*b with g >= 0.
inline Integer extended_gcd(const Integer& a, const Integer& b, Integer& s, Integer& t) {
  Integer g;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

/// Reduces an integer into [0, m) when m > 0; leaves it untouched when m == 0 (a free coordinate).
inline void reduce_mod(Integer& a, const Integer& m) {
  if (m > 0) mpz_fdiv_r(a.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
}

inline std::string to_string(const Integer& a) { return a.get_str(); }

}  // namespace torusdual
