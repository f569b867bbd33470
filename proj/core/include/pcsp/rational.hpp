#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace pcsp {

// Exact arbitrary-precision rational. GMP keeps the canonical form the spec
// of the type asks for: positive denominator, reduced, zero = 0/1.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

// Nearest integer; halves are the caller's problem (the solver construction
// guarantees no coordinate sits at 1/2 before rounding).
inline Integer round_nearest(const Rational& r) {
  Rational shifted = r + Rational(1, 2);
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), shifted.get_num().get_mpz_t(), shifted.get_den().get_mpz_t());
  return q;
}

} // namespace pcsp
