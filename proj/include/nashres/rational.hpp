#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nashres {

// mpq_class keeps values canonical (reduced, positive denominator) after every
// arithmetic operation; construction from a numerator/denominator pair goes
// through make_rational, which canonicalizes.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Integer floor_of(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

/// "p/q" with the denominator always present; used in every JSON report.
inline std::string fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Human form: "3" for integers, "3/2" otherwise.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits");
  return z.get_si();
}

}  // namespace nashres
