// Exact integers and rationals (GMP) plus the error types shared by all modules.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace kneadkit {

using BigInt = mpz_class;
using Rational = mpq_class;

// Precondition or input-domain violation.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A structural property that must hold did not.
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// "p/q" (or "p" when q == 1).
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

// Accepts "p", "p/q", and finite decimals such as "-1.25" or "1e-3".
Rational parse_rational(std::string_view text);
BigInt parse_bigint(std::string_view text);

double to_double(const Rational& q);

// Exact value of a finite double.
Rational from_double(double x);

// p/q in lowest terms; mpq_class(p, q) alone does not reduce.
inline Rational frac(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline int sign(const Rational& q) { return sgn(q); }

inline double as_double(double x) { return x; }
inline double as_double(const Rational& q) { return q.get_d(); }

}  // namespace kneadkit
