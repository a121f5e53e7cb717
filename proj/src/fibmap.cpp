#include "kneadkit/fibmap.hpp"

#include <algorithm>
#include <cmath>

namespace kneadkit {

long long cut_time(int k) {
  if (k < -2) throw DomainError("cut times start at S(-2)");
  long long a = 0, b = 1;  // S(-2), S(-1)
  for (int i = -2; i < k; ++i) {
    long long c = a + b;
    a = b;
    b = c;
  }
  return a;
}

std::vector<long long> cut_times(int k) {
  std::vector<long long> s;
  for (int i = 0; i <= k; ++i) s.push_back(cut_time(i));
  return s;
}

std::vector<int> target_kneading(std::size_t length) {
  if (length < 1) throw DomainError("target length must be positive");
  std::vector<int> eps{-1};  // c_1 lies right of c
  for (int k = 1; eps.size() < length; ++k) {
    auto from = static_cast<std::size_t>(cut_time(k - 2));
    std::vector<int> seg(eps.begin(), eps.begin() + static_cast<long>(from));
    seg.back() = -seg.back();
    eps.insert(eps.end(), seg.begin(), seg.end());
  }
  eps.resize(length);
  // c_{S(k)} is right of c for k = 0, 3 (mod 4) and left for k = 1, 2 (mod 4).
  for (int k = 0; static_cast<std::size_t>(cut_time(k)) <= length; ++k) {
    int expect = (k % 4 == 0 || k % 4 == 3) ? -1 : 1;
    if (eps[static_cast<std::size_t>(cut_time(k)) - 1] != expect)
      throw InvariantViolation("side pattern of c_S(" + std::to_string(k) + ") violated");
  }
  return eps;
}

TentOrbit::TentOrbit(Rational lambda, std::size_t last) : lambda_(std::move(lambda)) {
  if (lambda_ <= 1 || lambda_ > 2) throw DomainError("tent slope must lie in (1, 2]");
  c_.reserve(last + 1);
  Rational half(1, 2);
  c_.push_back(half);
  for (std::size_t n = 0; n < last; ++n) {
    const Rational& x = c_.back();
    Rational y = x <= half ? Rational(lambda_ * x) : Rational(lambda_ * (1 - x));
    c_.push_back(std::move(y));
  }
}

int TentOrbit::side(std::size_t n) const {
  int s = sgn(c_.at(n) - Rational(1, 2));
  return -s;
}

Rational TentOrbit::distance_to_c(std::size_t n) const { return abs(c_.at(n) - Rational(1, 2)); }

namespace {

// Tent orbit for a dyadic slope L / 2^beta, kept as m / 2^e without rationals.
struct DyadicOrbit {
  mpz_class L;
  unsigned long beta;
  mpz_class m = 1;
  unsigned long e = 1;

  int side() const {  // +1 left of 1/2, 0 at, -1 right
    std::size_t bits = mpz_sizeinbase(m.get_mpz_t(), 2);
    if (m == 0 || bits < e) return 1;
    if (bits == e && mpz_scan1(m.get_mpz_t(), 0) == e - 1) return 0;
    return -1;
  }
  void step() {
    if (side() < 0) {
      mpz_class one;
      mpz_setbit(one.get_mpz_t(), e);
      m = one - m;
    }
    m *= L;
    e += beta;
    if (m != 0) {
      unsigned long tz = mpz_scan1(m.get_mpz_t(), 0);
      unsigned long drop = std::min(tz, e);
      if (drop) {
        mpz_tdiv_q_2exp(m.get_mpz_t(), m.get_mpz_t(), drop);
        e -= drop;
      }
    }
  }
};

struct Comparison {
  int order;          // sign of K(lambda) - target in the kneading order
  std::size_t agree;  // length of the common prefix
};

Comparison compare_kneading(const Rational& lambda, const std::vector<int>& target) {
  const mpz_class& den = lambda.get_den();
  if (mpz_popcount(den.get_mpz_t()) != 1) throw DomainError("bisection slope must be dyadic");
  DyadicOrbit o{lambda.get_num(), mpz_sizeinbase(den.get_mpz_t(), 2) - 1};
  int parity = 1;
  for (std::size_t n = 0; n < target.size(); ++n) {
    o.step();
    int s = o.side();
    if (s != target[n]) {
      // L < C < R, reversed after an odd number of R symbols
      int diff = (-s > -target[n]) ? 1 : -1;
      return {diff * parity, n};
    }
    if (s < 0) parity = -parity;
  }
  return {0, target.size()};
}

}  // namespace

LambdaResult find_fib_lambda(int depth, double tol) {
  if (depth < 1 || depth > 20) throw DomainError("depth must lie in 1..20");
  if (!(tol > 0)) throw DomainError("tolerance must be positive");
  auto symbols = static_cast<std::size_t>(cut_time(depth + 1));
  std::vector<int> target = target_kneading(2 * symbols);
  Rational lo = 1, hi = 2, width = from_double(tol);
  if (compare_kneading(lo, target).order >= 0 || compare_kneading(hi, target).order <= 0)
    throw DomainError("target kneading is not bracketed by (1, 2)");
  LambdaResult r;
  r.depth = depth;
  r.symbols = symbols;
  for (;;) {
    Rational mid = (lo + hi) / 2;
    Comparison c = compare_kneading(mid, target);
    ++r.steps;
    if (c.order == 0 || (hi - lo <= width && c.agree >= symbols)) {
      r.lambda = mid;
      break;
    }
    if (c.order < 0)
      lo = mid;
    else
      hi = mid;
    if (r.steps > 100000) throw InvariantViolation("lambda bisection did not settle");
  }
  r.lo = lo;
  r.hi = hi;
  return r;
}

bool closest_return_holds(const TentOrbit& orbit, int k) {
  if (k < 1) return true;
  auto prev = static_cast<std::size_t>(cut_time(k - 1));
  auto bound = static_cast<std::size_t>(cut_time(k));
  if (bound >= orbit.size()) throw DomainError("orbit too short for the closest-return check");
  Rational d = orbit.distance_to_c(prev);
  for (std::size_t i = 1; i < bound; ++i)
    if (i != prev && !(orbit.distance_to_c(i) > d)) return false;
  return true;
}

namespace {

LabeledInterval labeled(const TentOrbit& o, long long i, long long j) {
  auto a = static_cast<std::size_t>(i), b = static_cast<std::size_t>(j);
  LabeledInterval iv;
  if (o[a] <= o[b]) {
    iv.left = static_cast<int>(i);
    iv.right = static_cast<int>(j);
    iv.lo = o[a];
    iv.hi = o[b];
  } else {
    iv.left = static_cast<int>(j);
    iv.right = static_cast<int>(i);
    iv.lo = o[b];
    iv.hi = o[a];
  }
  return iv;
}

}  // namespace

IntervalFamily interval_families(const Rational& lambda, int kmax) {
  if (kmax < 0 || kmax > 16) throw DomainError("kmax must lie in 0..16");
  auto last = static_cast<std::size_t>(cut_time(kmax + 4));
  IntervalFamily fam{TentOrbit(lambda, last), {}};
  std::vector<int> target = target_kneading(last);
  for (std::size_t n = 1; n <= last; ++n)
    if (fam.orbit.side(n) != target[n - 1])
      throw DomainError("lambda follows the Fibonacci combinatorics only up to iterate " +
                        std::to_string(n - 1) + "; kmax too large");
  const TentOrbit& o = fam.orbit;
  for (int k = 0; k <= kmax + 2; ++k) {
    FamilyLevel lv;
    lv.k = k;
    long long S = cut_time(k), Sm1 = cut_time(k - 1), Sm2 = cut_time(k - 2);
    lv.I = labeled(o, S, k % 2 == 0 ? cut_time(k + 1) : cut_time(k + 2));
    lv.J = labeled(o, Sm1, cut_time(k + 1) + Sm1);
    lv.D = labeled(o, 0, S);
    lv.M.push_back(lv.I);
    for (long long n = 1; n < Sm1; ++n) lv.M.push_back(labeled(o, n, S + n));
    for (long long n = 0; n < Sm2; ++n) lv.M.push_back(labeled(o, Sm1 + n, cut_time(k + 1) + Sm1 + n));
    fam.levels.push_back(std::move(lv));
  }
  return fam;
}

bool StructureReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
}

StructureReport verify_structure(const IntervalFamily& fam, int kmax) {
  if (static_cast<int>(fam.levels.size()) < kmax + 2) throw DomainError("family built too shallow");
  const auto& L = fam.levels;
  const TentOrbit& o = fam.orbit;
  StructureReport rep;

  bool sides = true;
  for (int k = 0; k <= kmax + 2; ++k) {
    int expect = (k % 4 == 0 || k % 4 == 3) ? -1 : 1;
    sides = sides && o.side(static_cast<std::size_t>(cut_time(k))) == expect;
  }
  rep.checks.emplace_back("side pattern of c_S(k)", sides);

  bool closest = true;
  for (int k = 1; k <= kmax; ++k) closest = closest && closest_return_holds(o, k);
  rep.checks.emplace_back("closest returns", closest);

  bool jnested = true, jdisjoint = true;
  for (int k = 1; k <= kmax; ++k)
    for (int kp = k + 1; kp <= kmax; ++kp) {
      jnested = jnested && L[kp - 1].D.contains(L[kp].J) && L[k].I.contains(L[kp - 1].D);
      jdisjoint = jdisjoint && !L[k].J.meets(L[kp].J);
    }
  rep.checks.emplace_back("J_k' in D_k'-1 in I_k", jnested);
  rep.checks.emplace_back("J_k, J_k' disjoint", jdisjoint);

  bool counts = true, disjoint = true, nested = true, trace = true;
  for (int k = 0; k <= kmax + 1; ++k) {
    const auto& M = L[k].M;
    counts = counts && static_cast<long long>(M.size()) == cut_time(k);
    for (std::size_t a = 0; a < M.size(); ++a)
      for (std::size_t b = a + 1; b < M.size(); ++b) disjoint = disjoint && !M[a].meets(M[b]);
    if (k > kmax) continue;
    for (const auto& piece : L[k + 1].M)
      nested = nested && std::any_of(M.begin(), M.end(),
                                     [&](const LabeledInterval& big) { return big.contains(piece); });
    // pieces of M_{k+1} inside I_k are exactly I_{k+1} and J_{k+1}
    std::vector<std::pair<int, int>> inside;
    for (const auto& piece : L[k + 1].M)
      if (piece.meets(L[k].I)) {
        trace = trace && L[k].I.contains(piece);
        inside.push_back(piece.labels());
      }
    std::sort(inside.begin(), inside.end());
    std::vector<std::pair<int, int>> expect{L[k + 1].I.labels(), L[k + 1].J.labels()};
    std::sort(expect.begin(), expect.end());
    trace = trace && inside == expect;
  }
  rep.checks.emplace_back("|M_k| = S(k)", counts);
  rep.checks.emplace_back("M_k pieces pairwise disjoint", disjoint);
  rep.checks.emplace_back("M_k+1 in M_k", nested);
  rep.checks.emplace_back("M_k+1 meets I_k in I_k+1 and J_k+1", trace);

  bool injective = true;
  Rational c(1, 2);
  for (int k = 0; k <= kmax; ++k) {
    long long S = cut_time(k), Sm1 = cut_time(k - 1);
    for (long long i = 0; i + 1 < Sm1; ++i) {
      LabeledInterval iv = labeled(o, 1 + i, S + 1 + i);
      injective = injective && !(iv.lo < c && c < iv.hi);
    }
  }
  rep.checks.emplace_back("T^j injective on [c_1, c_S(k)+1]", injective);
  return rep;
}

DiameterReport diameter_ratios(const IntervalFamily& fam, int kmax) {
  if (static_cast<int>(fam.levels.size()) < kmax + 2) throw DomainError("family built too shallow");
  const Rational& lambda = fam.orbit.lambda();
  auto lam_pow = [&](long long e) {
    Rational r(1);
    mpz_pow_ui(r.get_num_mpz_t(), lambda.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(r.get_den_mpz_t(), lambda.get_den_mpz_t(), static_cast<unsigned long>(e));
    r.canonicalize();
    return r;
  };
  std::vector<Rational> nu;
  for (int k = 0; k <= kmax; ++k) nu.push_back(fam.levels[k].D.length() / fam.levels[k + 1].D.length());

  std::vector<Rational> C;
  for (int k = 0; k <= kmax; ++k) C.push_back(nu[k] / lam_pow(cut_time(k)));

  DiameterReport rep;
  double lam = to_double(lambda);
  double d0 = to_double(fam.levels[0].D.length());
  double log_prod_C = 0;
  for (int k = 0; k <= kmax; ++k) {
    DiameterRow row;
    row.k = k;
    row.nu = to_double(nu[k]);
    row.C = to_double(C[k]);
    row.one_minus_C = to_double(1 - C[k]);
    if (k >= 1) {
      Rational scale = lam_pow(cut_time(k - 1));
      row.scale = to_double(scale);
      row.residual = to_double(abs(scale - nu[k - 1] - 1 / nu[k]));
    }
    // |D_{k+1}| lambda^{S(k+2)-S(1)} against |D_0| / prod_{i<=k} C_i, in logs
    log_prod_C += std::log(row.C);
    double lhs = std::log(to_double(fam.levels[k + 1].D.length())) +
                 static_cast<double>(cut_time(k + 2) - cut_time(1)) * std::log(lam);
    double rhs = std::log(d0) - log_prod_C;
    row.product_error = std::abs(std::expm1(lhs - rhs));
    rep.rows.push_back(row);
  }
  rep.nu_above_one = std::all_of(rep.rows.begin(), rep.rows.end(), [](const auto& r) { return r.nu > 1; });
  // C_k approaches 1 far faster than double resolution, so decide these exactly
  rep.C_in_unit_interval = std::all_of(C.begin(), C.end(), [](const Rational& c) { return c > 0 && c < 1; });
  rep.C_increasing = true;
  for (std::size_t i = 1; i < C.size(); ++i) rep.C_increasing = rep.C_increasing && C[i] > C[i - 1];
  return rep;
}

}  // namespace kneadkit
