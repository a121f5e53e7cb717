// Exact polynomials, truncated power series and rational functions over Q.
#pragma once

#include "kneadkit/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace kneadkit {

// Coefficients lowest degree first; trailing zeros are trimmed.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<long> coeffs);

  static Poly monomial(const Rational& c, std::size_t k);
  static Poly constant(const Rational& c) { return monomial(c, 0); }
  // 1 - t^p
  static Poly one_minus_t_pow(std::size_t p);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

  Rational operator()(const Rational& x) const;
  double eval(double x) const;
  Poly derivative() const;
  Poly compose(const Poly& inner) const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& k, const Poly& a);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  // Euclidean division; throws DomainError on division by zero.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

 private:
  void trim();
  std::vector<Rational> c_;
};

// Monic gcd (zero if both are zero).
Poly gcd(Poly a, Poly b);

// Power series known through t^order.
class Series {
 public:
  explicit Series(std::size_t order = 0);
  Series(std::vector<Rational> coeffs, std::size_t order);

  static Series one(std::size_t order);
  static Series from_poly(const Poly& p, std::size_t order);

  std::size_t order() const { return c_.size() - 1; }
  const Rational& operator[](std::size_t i) const { return c_.at(i); }
  Rational& operator[](std::size_t i) { return c_.at(i); }
  const std::vector<Rational>& coeffs() const { return c_; }

  Series truncated(std::size_t order) const;
  // t^k * s, same order.
  Series shifted(std::size_t k) const;
  // s(alpha t)
  Series compose_scale(const Rational& alpha) const;
  // Derivative, known through t^(order-1).
  Series derivative() const;
  Series recip() const;

  Series operator-() const;
  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator*(const Series& a, const Series& b);
  friend Series operator*(const Rational& k, const Series& a);
  // Coefficientwise equality through the smaller order.
  friend bool operator==(const Series& a, const Series& b);

  bool is_zero() const;
  // Index of the last nonzero coefficient, or -1.
  int last_nonzero() const;
  // The polynomial s, provided at least `min_trailing_zeros` coefficients vanish at the top.
  std::optional<Poly> as_polynomial(std::size_t min_trailing_zeros) const;
  bool is_integral() const;

 private:
  std::vector<Rational> c_;
};

Series exp_series(const Series& s);  // needs s[0] == 0
Series log_series(const Series& s);  // needs s[0] == 1

// Cofactor expansion, m <= 6. Empty matrix has determinant 1.
Series series_matrix_det(const std::vector<std::vector<Series>>& m, std::size_t order);

// num/den with gcd removed and den(0) == 1.
class RationalFn {
 public:
  RationalFn() : num_(Poly{0}), den_(Poly{1}) {}
  RationalFn(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  Series expand(std::size_t order) const;

  friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
  friend bool operator==(const RationalFn& a, const RationalFn& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  RationalFn inverse() const;

 private:
  Poly num_;
  Poly den_;
};

Series rf_to_series(const RationalFn& rf, std::size_t order);
bool series_matches_rf(const Series& s, const RationalFn& rf);

struct PeriodicityCertificate {
  std::size_t preperiod = 0;
  std::size_t period = 0;
  std::size_t depth = 0;  // coefficients inspected
};

struct PeriodicityLimits {
  std::size_t max_preperiod = 0;
  std::size_t max_period = 0;
};

// Smallest period first, then smallest preperiod. Default limits are depth/3.
std::optional<PeriodicityCertificate> detect_eventual_periodicity(
    std::span<const long long> coeffs, std::optional<PeriodicityLimits> limits = {});

// prefix(t) + t^|prefix| cycle(t) / (1 - t^|cycle|)
RationalFn rational_from_eventually_periodic(std::span<const Rational> prefix,
                                             std::span<const Rational> cycle);

struct CyclotomicPeel {
  std::vector<int> exponents;  // ascending, with multiplicity
  Poly residual;
  bool complete() const { return residual == Poly{1}; }
};

// Writes p = prod (1 - t^e) * residual, peeling the largest admissible e first.
CyclotomicPeel cyclotomic_peel(const Poly& p);

}  // namespace kneadkit
