#pragma once

#include <gmpxx.h>

namespace kirby {

// All linking-matrix arithmetic is exact.  Int is an arbitrary-precision
// integer, Rat an arbitrary-precision rational (used only where a genuine
// quotient appears, e.g. continued-fraction values).
using Int = mpz_class;
using Rat = mpq_class;

// gmpxx has no long long constructor; route counts and signatures (which
// fit comfortably in a machine word) through long.
inline Int to_int(long long v) { return Int(static_cast<long>(v)); }

inline int sgn(const Int& v) { return mpz_sgn(v.get_mpz_t()); }
inline bool is_odd(const Int& v) { return mpz_odd_p(v.get_mpz_t()) != 0; }
inline bool is_even(const Int& v) { return mpz_even_p(v.get_mpz_t()) != 0; }

inline Int abs_int(const Int& v) {
  Int r;
  mpz_abs(r.get_mpz_t(), v.get_mpz_t());
  return r;
}

// Quotient q minimizing |a - q*b| (ties broken toward the truncated
// quotient).  Used by the Smith reduction to shrink remainders fast.
inline Int nearest_quotient(const Int& a, const Int& b) {
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  Int two_r = 2 * abs_int(r);
  if (two_r > abs_int(b)) {
    q += (sgn(r) == sgn(b)) ? 1 : -1;
  }
  return q;
}

}  // namespace kirby
