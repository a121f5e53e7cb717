#include "kneadkit/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace kneadkit {

Combinatorics::Combinatorics(std::vector<int> entries) : rho_(std::move(entries)) {
  if (rho_.size() < 2) throw DomainError("combinatorics needs at least two entries");
  int n = this->n();
  for (std::size_t i = 0; i < rho_.size(); ++i)
    if (rho_[i] < 0 || rho_[i] > n)
      throw DomainError("entry " + std::to_string(i) + " outside {0.." + std::to_string(n) + "}");
}

Combinatorics Combinatorics::parse(std::string_view text) {
  std::vector<int> v;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw DomainError("empty entry in combinatorics");
    item = item.substr(b, e - b + 1);
    std::size_t used = 0;
    int x = 0;
    try {
      x = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw DomainError("malformed entry '" + item + "'");
    }
    if (used != item.size()) throw DomainError("malformed entry '" + item + "'");
    v.push_back(x);
  }
  return Combinatorics(std::move(v));
}

std::string Combinatorics::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < rho_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(rho_[i]);
  }
  return s;
}

int PLModel::lap_of(const Rational& x) const {
  if (x < 0 || x > n()) throw DomainError("point " + kneadkit::to_string(x) + " outside [0,n]");
  BigInt fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  int j = static_cast<int>(fl.get_si());
  return std::min(j, n() - 1);
}

Rational PLModel::on_lap(int lap, const Rational& x) const {
  return Rational(slope(lap)) * (x - lap) + rho_[lap];
}

Rational PLModel::operator()(const Rational& x) const { return on_lap(lap_of(x), x); }

std::vector<int> turning_points(const Combinatorics& rho) {
  if (auto pm = is_pm(rho); !pm.ok)
    throw DomainError("adjacent equal entries at " + std::to_string(*pm.witness));
  std::vector<int> t;
  for (int i = 1; i < rho.n(); ++i) {
    bool up_before = rho[i] > rho[i - 1];
    bool up_after = rho[i + 1] > rho[i];
    if (up_before != up_after) t.push_back(i);
  }
  return t;
}

OrbitInfo<int> orbit(const Combinatorics& rho, int i) {
  std::vector<int> first_seen(rho.n() + 1, -1);
  std::vector<int> path;
  int x = i;
  while (first_seen[x] < 0) {
    first_seen[x] = static_cast<int>(path.size());
    path.push_back(x);
    x = rho[x];
  }
  OrbitInfo<int> out;
  out.preperiod = static_cast<std::size_t>(first_seen[x]);
  out.cycle.assign(path.begin() + first_seen[x], path.end());
  return out;
}

std::vector<int> orbit_set(const Combinatorics& rho, int i) {
  auto o = orbit(rho, i);
  std::set<int> s(o.cycle.begin(), o.cycle.end());
  int x = i;
  for (std::size_t k = 0; k < o.preperiod; ++k, x = rho[x]) s.insert(x);
  return {s.begin(), s.end()};
}

PmCheck is_pm(const Combinatorics& rho) {
  for (int i = 0; i < rho.n(); ++i)
    if (rho[i] == rho[i + 1]) return {false, i};
  return {true, std::nullopt};
}

Remarking induced_combinatorics(const Combinatorics& rho) {
  std::set<int> marked;
  for (int seed : {0, rho.n()})
    for (int x : orbit_set(rho, seed)) marked.insert(x);
  for (int t : turning_points(rho))
    for (int x : orbit_set(rho, t)) marked.insert(x);
  std::vector<int> xs(marked.begin(), marked.end());
  std::map<int, int> index;
  for (std::size_t k = 0; k < xs.size(); ++k) index[xs[k]] = static_cast<int>(k);
  std::vector<int> induced;
  for (int x : xs) induced.push_back(index.at(rho[x]));
  return {xs, Combinatorics(std::move(induced))};
}

OwnCheck is_own_combinatorics(const Combinatorics& rho) {
  Remarking r = induced_combinatorics(rho);
  bool ok = static_cast<int>(r.marked.size()) == rho.n() + 1;
  return {ok, std::move(r)};
}

bool is_framed(const Combinatorics& rho) {
  auto boundary = [&](int v) { return v == 0 || v == rho.n(); };
  return boundary(rho[0]) && boundary(rho[rho.n()]);
}

namespace {

struct Hull {
  int lo, hi;
  bool contains(int x) const { return lo <= x && x <= hi; }
};

Hull hull_of(const Combinatorics& rho, int c) {
  int a = rho[c], b = rho[rho[c]];
  return {std::min(a, b), std::max(a, b)};
}

bool satisfies_vu(const Combinatorics& rho, const std::vector<int>& trn, int c) {
  Hull h = hull_of(rho, c);
  // VU1
  for (int t : trn) {
    bool inside = h.lo < t && t < h.hi;
    if (inside != (t == c)) return false;
  }
  // F(H) = H on the integer skeleton
  int lo = rho[h.lo], hi = rho[h.lo];
  for (int x = h.lo; x <= h.hi; ++x) {
    lo = std::min(lo, rho[x]);
    hi = std::max(hi, rho[x]);
  }
  if (lo != h.lo || hi != h.hi) return false;
  // VU2
  for (int x : orbit_set(rho, c))
    if (!h.contains(x)) return false;
  // VU3
  for (int t : trn) {
    auto pts = orbit_set(rho, t);
    if (std::none_of(pts.begin(), pts.end(), [&](int x) { return h.contains(x); })) return false;
  }
  return true;
}

}  // namespace

std::optional<int> is_virtually_unimodal(const Combinatorics& rho) {
  auto trn = turning_points(rho);
  for (int c : trn)
    if (satisfies_vu(rho, trn, c)) return c;
  return std::nullopt;
}

std::vector<PointType> classify_points(const Combinatorics& rho) {
  auto trn = turning_points(rho);
  std::vector<PointType> out;
  for (int i = 0; i <= rho.n(); ++i) {
    auto pts = orbit_set(rho, i);
    bool hits = std::any_of(pts.begin(), pts.end(), [&](int x) {
      return std::find(trn.begin(), trn.end(), x) != trn.end();
    });
    out.push_back(hits ? PointType::Fatou : PointType::Julia);
  }
  return out;
}

ExpandingCheck is_expanding(const Combinatorics& rho) {
  auto cls = classify_points(rho);
  ExpandingCheck out;
  out.ok = true;
  for (int j = 0; j < rho.n(); ++j) {
    if (cls[j] != PointType::Julia || cls[j + 1] != PointType::Julia) continue;
    std::set<std::pair<int, int>> seen;
    int a = j, b = j + 1, m = 0;
    bool separated = false;
    while (seen.insert({a, b}).second) {
      if (std::abs(a - b) > 1) {
        separated = true;
        break;
      }
      a = rho[a];
      b = rho[b];
      ++m;
    }
    if (!separated) {
      out.ok = false;
      out.failing_edge = j;
      return out;
    }
    out.separation.emplace_back(j, m);
  }
  return out;
}

// Pattern read off the two worked vectors (7,3,4,5,6,3,2,0) and (0,6,4,5,6,7,4,3,0):
// the added turning points 1..nu-1 alternate between the marked orbit points
// 8/3 and 5/3 (indices nu+3, nu+1), ending on 5/3; the block nu..nu+4 is the
// shifted xi = (3,4,5,2,1); rho_0 flips with the parity of nu so the map stays framed.
Combinatorics generate_vu(int nu) {
  if (nu < 2) throw DomainError("generate_vu needs nu >= 2");
  int n = nu + 5;
  std::vector<int> r(n + 1);
  r[0] = nu % 2 == 0 ? n : 0;
  for (int i = nu - 1, k = 0; i >= 1; --i, ++k) r[i] = k % 2 == 0 ? nu + 1 : nu + 3;
  const int block[] = {nu + 2, nu + 3, nu + 4, nu + 1, nu};
  for (int i = 0; i < 5; ++i) r[nu + i] = block[i];
  r[n] = 0;
  return Combinatorics(std::move(r));
}

// ---- periodic points of the PL model ---------------------------------------

namespace {

struct Cylinder {
  Rational lo, hi;  // x-range
  Rational a, b;    // F^k(x) = a x + b on [lo, hi]
  std::vector<int> word;
};

void extend(const PLModel& f, int p, Cylinder cyl, std::set<Rational>& points,
            std::vector<DegenerateFamily>& degenerate) {
  if (static_cast<int>(cyl.word.size()) == p) {
    if (cyl.a != 1) {
      Rational x = cyl.b / (1 - cyl.a);
      if (cyl.lo <= x && x <= cyl.hi) points.insert(x);
    } else if (cyl.b == 0 && cyl.lo == cyl.hi) {
      points.insert(cyl.lo);  // cylinder pinched to a lap endpoint: an ordinary point
    } else if (cyl.b == 0) {
      degenerate.push_back({cyl.word, cyl.lo, cyl.hi});
      points.insert(cyl.lo);
      points.insert(cyl.hi);
    }
    return;
  }
  Rational y0 = cyl.a * cyl.lo + cyl.b, y1 = cyl.a * cyl.hi + cyl.b;
  Rational ylo = std::min(y0, y1), yhi = std::max(y0, y1);
  for (int j = 0; j < f.n(); ++j) {
    Rational lo = std::max(ylo, Rational(j)), hi = std::min(yhi, Rational(j + 1));
    if (lo > hi) continue;
    // pull [lo, hi] back through x -> a x + b
    Rational x0 = (lo - cyl.b) / cyl.a, x1 = (hi - cyl.b) / cyl.a;
    Cylinder next;
    next.lo = std::min(x0, x1);
    next.hi = std::max(x0, x1);
    Rational s = f.slope(j);
    next.a = s * cyl.a;
    next.b = s * (cyl.b - j) + f.combinatorics()[j];
    next.word = cyl.word;
    next.word.push_back(j);
    extend(f, p, std::move(next), points, degenerate);
  }
}

}  // namespace

std::vector<Rational> fixed_points_of_iterate(const PLModel& f, int p,
                                              std::vector<DegenerateFamily>* degenerate) {
  if (p < 1) throw DomainError("period must be at least 1");
  if (auto pm = is_pm(f.combinatorics()); !pm.ok)
    throw DomainError("adjacent equal entries at " + std::to_string(*pm.witness));
  std::set<Rational> points;
  std::vector<DegenerateFamily> deg;
  Cylinder root{Rational(0), Rational(f.n()), Rational(1), Rational(0), {}};
  extend(f, p, root, points, deg);
  if (degenerate) *degenerate = std::move(deg);
  return {points.begin(), points.end()};
}

PeriodicOrbits periodic_orbits_of_pl(const PLModel& f, int p) {
  PeriodicOrbits out;
  auto pts = fixed_points_of_iterate(f, p, &out.degenerate);
  std::set<Rational> used;
  for (const Rational& x : pts) {
    if (used.count(x)) continue;
    std::vector<Rational> cyc{x};
    for (Rational y = f(x); y != x; y = f(y)) cyc.push_back(y);
    for (const auto& y : cyc) used.insert(y);
    if (static_cast<int>(cyc.size()) != p) continue;
    auto least = std::min_element(cyc.begin(), cyc.end());
    std::rotate(cyc.begin(), least, cyc.end());
    out.orbits.push_back({0, std::move(cyc)});
  }
  return out;
}

Combinatorics base_unimodal() { return Combinatorics({0, 2, 3, 1, 0}); }

Combinatorics build_vu_from_periodic_points(std::span<const Rational> points) {
  PLModel f(base_unimodal());
  int nu = static_cast<int>(points.size()) + 1;
  std::set<Rational> marked{Rational(1), Rational(2), Rational(3)};
  for (const Rational& k : points) {
    if (k < 1 || k > 3) throw DomainError("periodic point " + to_string(k) + " outside [1,3]");
    std::set<Rational> seen;
    Rational y = k;
    while (seen.insert(y).second) y = f(y);
    if (y != k) throw DomainError("point " + to_string(k) + " is not periodic");
    marked.insert(seen.begin(), seen.end());
  }
  if (!points.empty() && points.back() > 2)
    throw DomainError("last periodic point must be at most 2");
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    int s = sgn(points[i] - points[i + 1]);
    if (s == 0) throw DomainError("alternation violated: equal consecutive points");
    if (i > 0 && s == sgn(points[i - 1] - points[i]))
      throw DomainError("alternation violated at " + std::to_string(i + 1));
  }
  std::vector<Rational> y(marked.begin(), marked.end());
  auto index = [&](const Rational& v) {  // 1-based position among the marked points
    return static_cast<int>(std::lower_bound(y.begin(), y.end(), v) - y.begin()) + 1;
  };
  int np = static_cast<int>(y.size());
  int n = nu + np;
  std::vector<int> r(n + 1);
  r[0] = (nu - 1) % 2 == 0 ? 0 : n;
  for (int i = 1; i <= nu - 1; ++i) r[i] = index(points[i - 1]) + nu - 1;
  for (int i = 1; i <= np; ++i) r[nu - 1 + i] = index(f(y[i - 1])) + nu - 1;
  r[n] = 0;
  return Combinatorics(std::move(r));
}

Combinatorics reflect(const Combinatorics& rho) {
  int n = rho.n();
  std::vector<int> r(n + 1);
  for (int i = 0; i <= n; ++i) r[i] = n - rho[n - i];
  return Combinatorics(std::move(r));
}

}  // namespace kneadkit
