#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace adeflat {

/// Exact rational in lowest terms with positive denominator (GMP mpq).
using Rational = mpq_class;
using BigInt = mpz_class;

/// Thrown for violated preconditions of the exact-algebra layer.
class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial or number text.
class ParseError : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline BigInt floor_of(const Rational& r) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

inline BigInt ceil_of(const Rational& r) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

inline long to_long(const BigInt& z) {
  if (!z.fits_slong_p()) throw AlgebraError("integer does not fit in long: " + z.get_str());
  return z.get_si();
}

inline double to_double(const Rational& r) { return r.get_d(); }

inline Rational rational_pow(const Rational& base, unsigned exp) {
  Rational out(1);
  for (unsigned i = 0; i < exp; ++i) out *= base;
  return out;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Parses "p" or "p/q"; throws AlgebraError on malformed input or zero denominator.
inline Rational parse_rational(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0) throw AlgebraError("malformed rational: '" + text + "'");
  if (r.get_den() == 0) throw AlgebraError("zero denominator: '" + text + "'");
  r.canonicalize();
  return r;
}

inline BigInt factorial(unsigned n) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

}  // namespace adeflat
