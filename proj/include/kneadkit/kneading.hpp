// Kneading invariants of piecewise monotone maps: addresses, theta series,
// the kneading matrix and determinant, and the unimodal closed forms.
#pragma once

#include "kneadkit/combinatorics.hpp"
#include "kneadkit/series.hpp"

#include <functional>
#include <span>
#include <vector>

namespace kneadkit {

enum class Side : int { Minus = -1, Plus = 1 };

// Lap I_index (0..m), turning point C_index (1..m), or inside a tolerance band.
struct Address {
  enum class Kind { Lap, Turning, Ambiguous };
  Kind kind = Kind::Lap;
  int index = 0;
};

class AmbiguousAddress : public DomainError {
 public:
  AmbiguousAddress(double x, double band);
  double x, band;
};

// Exact map: the PL model of a PM combinatorics.
class PLMap {
 public:
  using value_type = Rational;
  explicit PLMap(PLModel model);

  int modality() const { return static_cast<int>(turning_.size()); }
  const std::vector<int>& shape() const { return shape_; }
  const std::vector<Rational>& turning_points() const { return turning_; }
  Rational operator()(const Rational& x) const { return model_(x); }
  Address address(const Rational& x) const;
  const PLModel& model() const { return model_; }
  double band() const { return 0; }

 private:
  PLModel model_;
  std::vector<Rational> turning_;
  std::vector<int> shape_;
};

// Floating map; points within `band` of a turning point (but not equal) are ambiguous.
class NumericMap {
 public:
  using value_type = double;
  NumericMap(std::function<double(double)> f, std::vector<double> turning, std::vector<int> shape,
             double band);

  int modality() const { return static_cast<int>(turning_.size()); }
  const std::vector<int>& shape() const { return shape_; }
  const std::vector<double>& turning_points() const { return turning_; }
  double operator()(double x) const { return f_(x); }
  Address address(double x) const;
  double band() const { return band_; }

 private:
  std::function<double(double)> f_;
  std::vector<double> turning_;
  std::vector<int> shape_;
  double band_;
};

// theta(c_i^side) split by lap: component j holds the coefficients of I_j.
struct ThetaSeries {
  std::vector<Series> lap;
};

template <class Map>
ThetaSeries theta_series(const Map& f, int turning, Side side, std::size_t order) {
  int m = f.modality();
  if (turning < 1 || turning > m) throw DomainError("turning index out of range");
  ThetaSeries th{std::vector<Series>(static_cast<std::size_t>(m) + 1, Series(order))};
  typename Map::value_type x = f.turning_points()[turning - 1];
  int at_turning = turning;
  int sd = static_cast<int>(side);
  int prod = 1;
  for (std::size_t n = 0; n <= order; ++n) {
    if (!at_turning) {
      Address a = f.address(x);
      if (a.kind == Address::Kind::Ambiguous)
        throw AmbiguousAddress(as_double(x), f.band());
      if (a.kind == Address::Kind::Turning) at_turning = a.index;
      else {
        th.lap[a.index][n] = prod;
        int eps = f.shape()[a.index];
        prod *= eps;
        sd *= eps;
      }
    }
    if (at_turning) {
      int lap = sd > 0 ? at_turning : at_turning - 1;
      th.lap[lap][n] = prod;
      int eps = f.shape()[lap];
      prod *= eps;
      sd *= eps;
    }
    x = f(x);
    at_turning = 0;
  }
  return th;
}

struct KneadingData {
  std::vector<int> shape;                   // s_0..s_m
  std::vector<std::vector<Series>> matrix;  // row i-1: N_{c_i, j}, j = 0..m
  std::size_t order = 0;
};

template <class Map>
KneadingData kneading_matrix(const Map& f, std::size_t order) {
  if (f.modality() == 0) throw DomainError("kneading matrix needs at least one turning point");
  KneadingData kd{f.shape(), {}, order};
  for (int i = 1; i <= f.modality(); ++i) {
    auto plus = theta_series(f, i, Side::Plus, order);
    auto minus = theta_series(f, i, Side::Minus, order);
    std::vector<Series> row;
    for (std::size_t j = 0; j < plus.lap.size(); ++j) row.push_back(plus.lap[j] - minus.lap[j]);
    kd.matrix.push_back(std::move(row));
  }
  return kd;
}

struct KneadingDeterminant {
  Series D;
  std::vector<Series> per_column;  // (-1)^j det(D_j) / (1 - s_j t), j = 0..m
};

// Throws InvariantViolation if the columns disagree or D(0) != 1.
KneadingDeterminant kneading_determinant(const KneadingData& kd);

template <class Map>
KneadingDeterminant kneading_determinant(const Map& f, std::size_t order) {
  return kneading_determinant(kneading_matrix(f, order));
}

// eps[k] = epsilon_{k+1}; D = sum_n eps_1..eps_n t^n.
Series unimodal_kneading(std::span<const int> eps, std::size_t order);

// Exact D for epsilon = prefix followed by cycle repeated forever.
RationalFn unimodal_rational_form(std::span<const int> prefix, std::span<const int> cycle);

// epsilon_1..epsilon_count of a unimodal map, with epsilon_n = eps_1..eps_{n-1} on returns to c.
template <class Map>
std::vector<int> unimodal_eps(const Map& f, std::size_t count) {
  if (f.modality() != 1) throw DomainError("unimodal_eps needs a unimodal map");
  std::vector<int> eps;
  int prod = 1;
  auto x = f(f.turning_points()[0]);
  for (std::size_t n = 1; n <= count; ++n) {
    Address a = f.address(x);
    int e = 0;
    if (a.kind == Address::Kind::Ambiguous)
      throw AmbiguousAddress(as_double(x), f.band());
    e = a.kind == Address::Kind::Turning ? prod : f.shape()[a.index];
    eps.push_back(e);
    prod *= e;
    x = f(x);
  }
  return eps;
}

struct VuStructure {
  bool dominant_row_local = false;  // dominant row vanishes outside columns j-1, j
  bool other_rows_polynomial = false;
  bool factors = false;             // det(D_{j-1}) = P(t) N_{c_j, j}
  std::optional<Poly> P;
  bool ok() const { return dominant_row_local && other_rows_polynomial && factors; }
};

// `dominant` is the 1-based index of the dominant turning point.
VuStructure vu_structure_check(const KneadingData& kd, int dominant);

}  // namespace kneadkit
