#include "kneadkit/cubicfam.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace kneadkit {

CubicParam cubic_param(const Rational& s) {
  if (s < 1) throw DomainError("cubic family needs s >= 1");
  Rational k = 1 / (s * s * (s + 1));
  CubicParam p;
  p.s = s;
  p.a = k - 1;
  p.b = -s - k;
  p.c = Rational(-2 * p.b) / (3 * p.a);
  return p;
}

RealPoly cubic_family(const Rational& s) {
  CubicParam p = cubic_param(s);
  return RealPoly(std::vector<Rational>{1, 0, p.b, p.a});
}

bool verify_critical_orbit(const Rational& s) {
  RealPoly f = cubic_family(s);
  return f(0) == 1 && f(1) == -s && f(-s) == 0;
}

RealPoly s_star_poly() { return RealPoly{-2, -3, 0, 1, 1}; }
RealPoly critical_value_cofactor() { return RealPoly{1, -3, 0, 4, 4}; }

CriticalValue critical_value(const Rational& s) {
  CubicParam p = cubic_param(s);
  CriticalValue v;
  v.direct = cubic_family(s)(p.c);
  v.shortcut = 4 * p.b * p.b * p.b / (27 * p.a * p.a) + 1;
  Rational ps = s_star_poly()(s), qs = critical_value_cofactor()(s);
  Rational r = s * s * s + s * s - 1;
  v.factored = -(ps * ps * qs) / (27 * s * s * (s + 1) * r * r);
  return v;
}

SStar s_star(double tol) {
  if (!(tol > 0)) throw DomainError("tolerance must be positive");
  RealPoly p = s_star_poly();
  Rational lo = 1, hi = 2, width = from_double(tol);
  if (!(p(lo) < 0 && p(hi) > 0)) throw InvariantViolation("p does not change sign on [1,2]");
  while (hi - lo > width) {
    Rational mid = (lo + hi) / 2;
    if (p(mid) < 0)
      lo = mid;
    else
      hi = mid;
  }
  return {to_double((lo + hi) / 2), lo, hi};
}

CubicMap::CubicMap(double s) : s_(s) {
  if (!(s >= 1)) throw DomainError("cubic family needs s >= 1");
  double k = 1.0 / (s * s * (s + 1.0));
  a_ = k - 1.0;
  b_ = -s - k;
  c_ = -2.0 * b_ / (3.0 * a_);
}

double CubicMap::iterate(double x, int n) const {
  for (int i = 0; i < n; ++i) x = (*this)(x);
  return x;
}

std::optional<double> invert_monotone(const std::function<double(double)>& g, double lo, double hi,
                                      double y, double tol) {
  double glo = g(lo), ghi = g(hi);
  bool increasing = ghi >= glo;
  if (y < std::min(glo, ghi) || y > std::max(glo, ghi)) return std::nullopt;
  for (int it = 0; it < 200 && hi - lo > tol * std::max(1.0, std::abs(lo)); ++it) {
    double mid = 0.5 * (lo + hi);
    double gm = g(mid);
    if ((gm < y) == increasing)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

namespace {

double bisect_sign_change(const std::function<double(double)>& g, double lo, double hi) {
  double glo = g(lo);
  for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(lo)); ++it) {
    double mid = 0.5 * (lo + hi);
    double gm = g(mid);
    if (gm == 0) return mid;
    if ((gm < 0) == (glo < 0)) {
      lo = mid;
      glo = gm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Sign changes of g on a uniform grid, refined by bisection.
std::vector<double> grid_roots(const std::function<double(double)>& g, double lo, double hi,
                               int samples) {
  std::vector<double> roots;
  double h = (hi - lo) / samples;
  double x0 = lo, g0 = g(lo);
  for (int i = 1; i <= samples; ++i) {
    double x1 = lo + i * h, g1 = g(x1);
    if (!std::isfinite(g0) || !std::isfinite(g1)) {
      x0 = x1;
      g0 = g1;
      continue;
    }
    if (g0 == 0)
      roots.push_back(x0);
    else if ((g0 < 0) != (g1 < 0) && g1 != 0)
      roots.push_back(bisect_sign_change(g, x0, x1));
    x0 = x1;
    g0 = g1;
  }
  return roots;
}

}  // namespace

Interval filled_julia_endpoints(double s) {
  CubicMap f(s);
  double R = 2.0 + 2.0 * (std::abs(f.b()) + 1.0) / std::abs(f.a());
  auto g = [&](double x) { return f(f(x)) - x; };
  std::vector<double> cycle;
  for (double r : grid_roots(g, -R, R, 40000))
    if (std::abs(f(r) - r) > 1e-7) cycle.push_back(r);
  if (cycle.size() < 2) throw InvariantViolation("no period-2 orbit bounding the filled Julia set");
  Interval k{*std::min_element(cycle.begin(), cycle.end()),
             *std::max_element(cycle.begin(), cycle.end())};
  double slack = 1e-9 * k.length();
  if (std::abs(f(k.lo) - k.hi) > 1e-7 * k.length())
    throw InvariantViolation("extremal period-2 points are not swapped");
  for (double x : {k.lo, k.hi, 0.0, f.critical()}) {
    if (!k.contains(x)) continue;
    double y = f(x);
    if (y < k.lo - slack || y > k.hi + slack)
      throw InvariantViolation("no bounded invariant interval found");
  }
  return k;
}

CountResult count_periodic(double s, int n, const CountOptions& opts) {
  if (n < 1 || n > 8) throw DomainError("period must lie in 1..8");
  CubicMap f(s);
  Interval K = filled_julia_endpoints(s);
  double len = K.length();
  double L = K.lo - 1e-9 * len, U = K.hi + 1e-9 * len;
  double c = f.critical();
  auto F = [&](double x) { return f(x); };

  // Lap boundaries of F^n: preimages of the critical points up to order n-1.
  struct Branch {
    double lo, hi;
  };
  std::vector<Branch> branches;
  if (c > L) branches.push_back({L, c});
  branches.push_back({std::max(c, L), 0.0});
  branches.push_back({0.0, U});
  std::vector<double> level;
  for (double x : {c, 0.0})
    if (x > L && x < U) level.push_back(x);
  std::vector<double> cuts = level;
  for (int k = 1; k < n; ++k) {
    std::vector<double> next;
    for (double y : level)
      for (const auto& br : branches)
        if (auto x = invert_monotone(F, br.lo, br.hi, y)) next.push_back(*x);
    cuts.insert(cuts.end(), next.begin(), next.end());
    level = std::move(next);
  }
  cuts.push_back(L);
  cuts.push_back(U);
  std::sort(cuts.begin(), cuts.end());
  std::vector<double> bounds;
  for (double x : cuts)
    if (bounds.empty() || x - bounds.back() > 1e-14 * len) bounds.push_back(x);

  auto Fn = [&](double x) { return f.iterate(x, n); };
  double xtol = opts.root_tol * len;
  std::vector<double> roots, near;
  struct Cell {
    double a, b, fa, fb;
  };
  for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
    std::vector<Cell> stack{{bounds[i], bounds[i + 1], Fn(bounds[i]), Fn(bounds[i + 1])}};
    while (!stack.empty()) {
      Cell cell = stack.back();
      stack.pop_back();
      double ga = cell.fa - cell.a, gb = cell.fb - cell.b;
      if (std::abs(ga) <= opts.zero_band) {
        roots.push_back(cell.a);
        ga = 0;
      }
      if (std::abs(gb) <= opts.zero_band) {
        roots.push_back(cell.b);
        gb = 0;
      }
      // F^n is monotone on the lap, so F^n - x is squeezed between these.
      double lo = std::min(cell.fa, cell.fb) - cell.b, hi = std::max(cell.fa, cell.fb) - cell.a;
      if (lo > opts.zero_band || hi < -opts.zero_band) continue;
      if (cell.b - cell.a <= xtol) {
        if (ga != 0 && gb != 0) {
          if ((ga < 0) != (gb < 0))
            roots.push_back(bisect_sign_change([&](double x) { return Fn(x) - x; }, cell.a, cell.b));
          else
            near.push_back(0.5 * (cell.a + cell.b));
        }
        continue;
      }
      double m = 0.5 * (cell.a + cell.b), fm = Fn(m);
      stack.push_back({m, cell.b, fm, cell.fb});
      stack.push_back({cell.a, m, cell.fa, fm});
    }
  }

  std::sort(roots.begin(), roots.end());
  double dedupe = opts.dedupe_rel * len;
  CountResult out;
  out.laps = bounds.size() - 1;
  for (double r : roots)
    if (out.points.empty() || r - out.points.back() > dedupe) out.points.push_back(r);
  for (double x : near) {
    bool explained = std::any_of(out.points.begin(), out.points.end(),
                                 [&](double r) { return std::abs(r - x) <= dedupe + 4 * xtol; });
    if (!explained && (out.unresolved.empty() || x - out.unresolved.back() > dedupe))
      out.unresolved.push_back(x);
  }
  out.count = static_cast<long>(out.points.size());
  return out;
}

// ---- branch system ---------------------------------------------------------

double BranchSystem::phi2(double y) const {
  auto F = [this](double x) { return f(x); };
  auto x = invert_monotone(F, 0.0, K2.hi + (K2.hi - K2.lo), y);
  if (!x) throw InvariantViolation("phi2 undefined at " + std::to_string(y));
  return *x;
}

double BranchSystem::phi1(double y) const {
  double z = phi2(y);
  auto F = [this](double x) { return f(x); };
  auto x = invert_monotone(F, std::max(f.critical(), -s), 0.0, z);
  if (!x) throw InvariantViolation("phi1 undefined at " + std::to_string(y));
  return *x;
}

double BranchSystem::apply(const Word& v, double y) const {
  for (std::size_t i = v.size(); i-- > 0;) y = v[i] == '1' ? phi1(y) : phi2(y);
  return y;
}

namespace {

void require_margin(double margin, double tol, const char* what) {
  if (!(margin > tol)) {
    std::ostringstream os;
    os << "branch system invariant violated: " << what << " (margin " << margin << ", tol " << tol
       << ")";
    throw InvariantViolation(os.str());
  }
}

}  // namespace

BranchSystem build_branch_system(double s, double tol) {
  BranchSystem bs;
  bs.s = s;
  bs.f = CubicMap(s);
  const CubicMap& f = bs.f;
  Interval K = filled_julia_endpoints(s);

  // Repelling 3-cycle: F^3(x) - x with the critical cycle and the fixed points divided out.
  auto G = [&](double x) {
    double den = (f(x) - x) * x * (x - 1.0) * (x + s);
    return (f.iterate(x, 3) - x) / den;
  };
  double eps = 1e-6 * K.length();
  std::vector<double> roots;
  for (double r : grid_roots(G, K.lo + eps, K.hi - eps, 20000))
    if (std::abs(f.iterate(r, 3) - r) < 1e-8) roots.push_back(r);
  auto neg = std::count_if(roots.begin(), roots.end(), [](double x) { return x < 0; });
  if (roots.size() != 3 || neg != 1)
    throw InvariantViolation("expected one repelling 3-cycle, found " +
                             std::to_string(roots.size()) + " points");
  bs.p2 = roots.front();
  bs.p0 = f(bs.p2);
  bs.p1 = f(bs.p0);

  bs.l0 = 0.5 * (-s + bs.p2);
  double l0_3 = f.iterate(bs.l0, 3);
  require_margin(bs.l0 - l0_3, tol, "F^3(l0) < l0");
  bs.l1 = 0.5 * (l0_3 + bs.l0);
  double y = f(bs.l0);
  auto F = [&](double x) { return f(x); };
  auto yh = invert_monotone(F, std::max(f.critical(), -s), 0.0, f(y));
  if (!yh) throw InvariantViolation("symmetric point not found");
  bs.y_hat = *yh;

  bs.J = {l0_3, f.iterate(bs.l1, 2)};
  bs.J1 = {bs.l1, bs.y_hat};
  bs.J2 = {f(bs.l1), f.iterate(bs.l0, 2)};

  require_margin(bs.J.length(), tol, "J nonempty");
  require_margin(bs.J1.length(), tol, "J1 nonempty");
  require_margin(bs.J2.length(), tol, "J2 nonempty");
  require_margin(bs.J1.lo - bs.J.lo, tol, "closure(J1) inside J");
  require_margin(0.0 - bs.J1.hi, tol, "critical point 0 right of J1");
  require_margin(bs.J2.lo - 0.0, tol, "critical point 0 left of J2");
  require_margin(bs.J.hi - bs.J2.hi, tol, "closure(J2) inside J");
  require_margin(bs.J1.lo - f.critical(), tol, "critical point c_s outside J1");

  double m1 = 0.5 * std::min(bs.J1.lo - bs.J.lo, -bs.J1.hi);
  double m2 = 0.5 * std::min(bs.J2.lo, bs.J.hi - bs.J2.hi);
  bs.K1 = {bs.J1.lo - m1, bs.J1.hi + m1};
  bs.K2 = {bs.J2.lo - m2, bs.J2.hi + m2};
  return bs;
}

std::vector<RepellerPiece> repeller_pieces(const BranchSystem& bs, int depth) {
  if (depth < 0 || depth > 12) throw DomainError("depth must lie in 0..12");
  std::vector<RepellerPiece> out;
  for (const Word& w : fib_language(depth)) {
    Word v = vee_map(w);
    double a = bs.apply(v, bs.J.lo), b = bs.apply(v, bs.J.hi);
    out.push_back({w, {std::min(a, b), std::max(a, b)}});
  }
  std::sort(out.begin(), out.end(),
            [](const RepellerPiece& x, const RepellerPiece& y) { return x.piece.lo < y.piece.lo; });
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (!(out[i].piece.length() > 0))
      throw InvariantViolation("empty repeller piece for " + out[i].word.str());
    if (i + 1 < out.size() && !(out[i].piece.hi < out[i + 1].piece.lo))
      throw InvariantViolation("overlapping repeller pieces " + out[i].word.str() + ", " +
                               out[i + 1].word.str());
  }
  return out;
}

double max_diameter(const std::vector<RepellerPiece>& pieces) {
  double m = 0;
  for (const auto& p : pieces) m = std::max(m, p.piece.length());
  return m;
}

}  // namespace kneadkit
