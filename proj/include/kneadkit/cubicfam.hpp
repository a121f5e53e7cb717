// The bimodal cubic family F_s(x) = a(s) x^3 + b(s) x^2 + 1 whose critical point 0
// has the orbit 0 -> 1 -> -s -> 0.
#pragma once

#include "kneadkit/series.hpp"
#include "kneadkit/subshift.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace kneadkit {

using RealPoly = Poly;

struct CubicParam {
  Rational s, a, b, c;  // c is the non-zero critical point
};

CubicParam cubic_param(const Rational& s);  // s >= 1
RealPoly cubic_family(const Rational& s);   // coefficients (1, 0, b, a)

bool verify_critical_orbit(const Rational& s);

struct CriticalValue {
  Rational direct;    // F_s(c_s)
  Rational shortcut;  // 4 b^3 / (27 a^2) + 1
  Rational factored;  // -p(s)^2 q(s) / (27 s^2 (s+1) (s^3+s^2-1)^2)
  bool consistent() const { return direct == shortcut && direct == factored; }
};
CriticalValue critical_value(const Rational& s);

// p(s) = s^4 + s^3 - 3s - 2 and q(s) = 4s^4 + 4s^3 - 3s + 1.
RealPoly s_star_poly();
RealPoly critical_value_cofactor();

struct SStar {
  double value = 0;
  Rational lo, hi;  // p(lo) < 0 < p(hi)
};
SStar s_star(double tol);

// Floating evaluation at a fixed parameter.
class CubicMap {
 public:
  explicit CubicMap(double s);
  double s() const { return s_; }
  double a() const { return a_; }
  double b() const { return b_; }
  double critical() const { return c_; }
  double operator()(double x) const { return (a_ * x + b_) * x * x + 1.0; }
  double derivative(double x) const { return (3.0 * a_ * x + 2.0 * b_) * x; }
  double iterate(double x, int n) const;

 private:
  double s_, a_, b_, c_;
};

struct Interval {
  double lo = 0, hi = 0;
  double length() const { return hi - lo; }
  bool contains(double x) const { return lo <= x && x <= hi; }
};

// Outermost 2-cycle alpha < beta bounding the real filled Julia set.
Interval filled_julia_endpoints(double s);

// x in [lo, hi] with g(x) = y for g monotone on [lo, hi]; nullopt if y is not attained.
std::optional<double> invert_monotone(const std::function<double(double)>& g, double lo, double hi,
                                      double y, double tol = 1e-15);

struct CountOptions {
  double root_tol = 1e-12;     // relative to |[alpha, beta]|
  double dedupe_rel = 1e-9;    // relative to |[alpha, beta]|
  double zero_band = 1e-12;    // |F^n(x) - x| treated as 0
};

struct CountResult {
  long count = 0;
  std::vector<double> points;      // distinct solutions of F^n(x) = x
  std::vector<double> unresolved;  // near tangencies left undecided
  std::size_t laps = 0;
};

CountResult count_periodic(double s, int n, const CountOptions& opts = {});

struct BranchSystem {
  double s = 0;
  CubicMap f{1.0};
  double p0 = 0, p1 = 0, p2 = 0;  // repelling 3-cycle, p2 < 0 < p0 < p1
  double l0 = 0, l1 = 0, y_hat = 0;
  Interval J, J1, J2, K1, K2;
  double phi1(double y) const;  // (F^2 restricted to J1)^{-1}
  double phi2(double y) const;  // (F restricted to J2)^{-1}
  double apply(const Word& v, double y) const;  // phi_{v_0} o ... o phi_{v_last}
};

// Throws InvariantViolation when a containment or separation margin is below tol.
BranchSystem build_branch_system(double s, double tol = 1e-9);

struct RepellerPiece {
  Word word;      // w in the Fibonacci language
  Interval piece; // phi_{vee(w)}(J)
};

// Pieces sorted by position; throws InvariantViolation on empty or overlapping pieces.
std::vector<RepellerPiece> repeller_pieces(const BranchSystem& bs, int depth);
double max_diameter(const std::vector<RepellerPiece>& pieces);

}  // namespace kneadkit
