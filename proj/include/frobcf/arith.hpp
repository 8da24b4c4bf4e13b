#pragma once

// Exact scalars. Everything that decides a predicate goes through these.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace frobcf {

using Int = mpz_class;
using Rat = mpq_class;

/// Bad user input: malformed matrix text, wrong dimension, unmet precondition.
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// An internal consistency check failed (a convention bug, never bad input).
struct IntegrityError : std::logic_error {
  using std::logic_error::logic_error;
};

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

/// Floor division, rounding toward negative infinity.
inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline bool is_square(const Int& a) {
  return sgn(a) >= 0 && mpz_perfect_square_p(a.get_mpz_t()) != 0;
}

inline Int isqrt(const Int& a) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
  return r;
}

inline bool fits_i64(const Int& a) { return mpz_fits_slong_p(a.get_mpz_t()) != 0; }

inline long to_i64(const Int& a) {
  if (!fits_i64(a)) throw IntegrityError("integer does not fit in 64 bits: " + a.get_str());
  return a.get_si();
}

/// Canonical text of a rational: "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rat& r) { return r.get_str(); }
inline std::string to_string(const Int& r) { return r.get_str(); }

Rat parse_rational(const std::string& text);

}  // namespace frobcf
