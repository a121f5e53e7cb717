// Combinatorial data rho, its piecewise-linear model, and the virtually
// unimodal construction.
#pragma once

#include "kneadkit/rational.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kneadkit {

// rho = (rho_0..rho_n) with entries in {0..n}, n >= 1.
class Combinatorics {
 public:
  explicit Combinatorics(std::vector<int> entries);
  static Combinatorics parse(std::string_view text);  // "0,2,3,1,0"

  int n() const { return static_cast<int>(rho_.size()) - 1; }
  int operator[](int i) const { return rho_.at(static_cast<std::size_t>(i)); }
  const std::vector<int>& entries() const { return rho_; }
  std::string to_string() const;

  friend bool operator==(const Combinatorics&, const Combinatorics&) = default;

 private:
  std::vector<int> rho_;
};

// F(x) = (rho_{j+1}-rho_j)(x-j) + rho_j on [j, j+1].
class PLModel {
 public:
  explicit PLModel(Combinatorics rho) : rho_(std::move(rho)) {}

  int n() const { return rho_.n(); }
  const Combinatorics& combinatorics() const { return rho_; }
  int slope(int lap) const { return rho_[lap + 1] - rho_[lap]; }
  // Lap containing x, the left one at integer points (lap 0 at x = 0).
  int lap_of(const Rational& x) const;
  Rational operator()(const Rational& x) const;
  Rational on_lap(int lap, const Rational& x) const;

 private:
  Combinatorics rho_;
};

template <class T>
struct OrbitInfo {
  std::size_t preperiod = 0;
  std::vector<T> cycle;
};

std::vector<int> turning_points(const Combinatorics& rho);
OrbitInfo<int> orbit(const Combinatorics& rho, int i);
// Every point ever visited from i.
std::vector<int> orbit_set(const Combinatorics& rho, int i);

struct PmCheck {
  bool ok = false;
  std::optional<int> witness;  // i with rho_i == rho_{i+1}
};
PmCheck is_pm(const Combinatorics& rho);

// Marks {0,n}, the boundary orbits and the turning orbits, then reindexes.
struct Remarking {
  std::vector<int> marked;  // sorted, in the original coordinates
  Combinatorics induced;
};
Remarking induced_combinatorics(const Combinatorics& rho);

struct OwnCheck {
  bool ok = false;
  Remarking remarking;
};
OwnCheck is_own_combinatorics(const Combinatorics& rho);

bool is_framed(const Combinatorics& rho);

// Dominant turning point, if rho is virtually unimodal.
std::optional<int> is_virtually_unimodal(const Combinatorics& rho);

enum class PointType { Fatou, Julia };
std::vector<PointType> classify_points(const Combinatorics& rho);

struct ExpandingCheck {
  bool ok = false;
  std::vector<std::pair<int, int>> separation;  // (j, m(j)) for each Julia edge
  std::optional<int> failing_edge;
};
ExpandingCheck is_expanding(const Combinatorics& rho);

Combinatorics generate_vu(int nu);

struct DegenerateFamily {
  std::vector<int> itinerary;  // lap word
  Rational lo, hi;             // F^p = id on [lo, hi]
};

struct PeriodicOrbits {
  std::vector<OrbitInfo<Rational>> orbits;  // minimal period p, each starting at its least point
  std::vector<DegenerateFamily> degenerate;
};

// All x with F^p(x) = x, sorted; identity pieces go to `degenerate` and contribute their endpoints.
std::vector<Rational> fixed_points_of_iterate(const PLModel& f, int p,
                                              std::vector<DegenerateFamily>* degenerate = nullptr);
PeriodicOrbits periodic_orbits_of_pl(const PLModel& f, int p);

// The period-3 unimodal combinatorics (0,2,3,1,0) that seeds the construction.
Combinatorics base_unimodal();

// points = (k_1..k_{nu-1}), periodic for the base model, in [1,3], alternating, k_{nu-1} <= 2.
Combinatorics build_vu_from_periodic_points(std::span<const Rational> points);

// x -> n - x conjugate.
Combinatorics reflect(const Combinatorics& rho);

}  // namespace kneadkit
