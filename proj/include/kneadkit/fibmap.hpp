// Tent map T(x) = lambda min(x, 1-x) with Fibonacci combinatorics: cut times,
// parameter search, the interval families I_k, J_k, D_k, M_k and their diameters.
#pragma once

#include "kneadkit/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace kneadkit {

// S(-2) = 0, S(-1) = 1, S(k) = S(k-1) + S(k-2).
long long cut_time(int k);
std::vector<long long> cut_times(int k);  // S(0..k)

// epsilon_1..epsilon_length of the Fibonacci kneading sequence: +1 left of c, -1 right.
std::vector<int> target_kneading(std::size_t length);

// c_0 = 1/2, c_{n+1} = T(c_n), exact.
class TentOrbit {
 public:
  TentOrbit(Rational lambda, std::size_t last);
  const Rational& lambda() const { return lambda_; }
  const Rational& operator[](std::size_t n) const { return c_.at(n); }
  std::size_t size() const { return c_.size(); }
  // +1 left of c, -1 right, 0 at c.
  int side(std::size_t n) const;
  Rational distance_to_c(std::size_t n) const;

 private:
  Rational lambda_;
  std::vector<Rational> c_;
};

struct LambdaResult {
  Rational lambda;  // agrees with the target through `symbols` iterates
  Rational lo, hi;
  int depth = 0;
  std::size_t symbols = 0;
  int steps = 0;
};

// Bisection in lambda on the kneading order until the bracket is below tol and the
// midpoint's itinerary matches the target for S(depth+1) symbols.
LambdaResult find_fib_lambda(int depth, double tol);

// For all 0 < i < S(k), i != S(k-1): |c_i - c| > |c_{S(k-1)} - c|.
bool closest_return_holds(const TentOrbit& orbit, int k);

struct LabeledInterval {
  int left = 0, right = 0;  // orbit indices of the endpoints in positional order (0 = c)
  Rational lo, hi;
  Rational length() const { return hi - lo; }
  bool contains(const LabeledInterval& o) const { return lo <= o.lo && o.hi <= hi; }
  bool meets(const LabeledInterval& o) const { return !(hi < o.lo || o.hi < lo); }
  std::pair<int, int> labels() const { return {std::min(left, right), std::max(left, right)}; }
};

struct FamilyLevel {
  int k = 0;
  LabeledInterval I, J, D;
  std::vector<LabeledInterval> M;  // I_k^n (n < S(k-1)) then J_k^n (n < S(k-2))
};

struct IntervalFamily {
  TentOrbit orbit;
  std::vector<FamilyLevel> levels;  // k = 0..kmax+2
};

// Throws DomainError if lambda's itinerary leaves the Fibonacci combinatorics too early.
IntervalFamily interval_families(const Rational& lambda, int kmax);

struct StructureReport {
  std::vector<std::pair<std::string, bool>> checks;
  bool ok() const;
};

StructureReport verify_structure(const IntervalFamily& fam, int kmax);

struct DiameterRow {
  int k = 0;
  double nu = 0;        // |D_k| / |D_{k+1}|
  double C = 0;         // nu_k lambda^{-S(k)}
  double one_minus_C = 0;  // computed before rounding
  double residual = 0;  // |lambda^{S(k-1)} - nu_{k-1} - 1/nu_k|, k >= 1
  double scale = 0;     // lambda^{S(k-1)}
  double product_error = 0;  // relative error of the product formula at level k
};

struct DiameterReport {
  std::vector<DiameterRow> rows;  // k = 0..kmax
  bool nu_above_one = false;
  bool C_in_unit_interval = false;
  bool C_increasing = false;
};

DiameterReport diameter_ratios(const IntervalFamily& fam, int kmax);

}  // namespace kneadkit
