#include "kneadkit/series.hpp"

#include <algorithm>
#include <map>

namespace kneadkit {

// ---- Poly ----------------------------------------------------------------

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<long> coeffs) {
  for (long v : coeffs) c_.emplace_back(v);
  trim();
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::monomial(const Rational& c, std::size_t k) {
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return Poly(std::move(v));
}

Poly Poly::one_minus_t_pow(std::size_t p) {
  std::vector<Rational> v(p + 1);
  v[0] = 1;
  v[p] -= 1;
  return Poly(std::move(v));
}

Rational Poly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double Poly::eval(double x) const {
  double acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * static_cast<long>(i);
  return Poly(std::move(v));
}

Poly Poly::compose(const Poly& inner) const {
  Poly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + constant(*it);
  return acc;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
  return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(v));
}

Poly operator*(const Rational& k, const Poly& a) {
  Poly r = a;
  for (auto& x : r.c_) x *= k;
  r.trim();
  return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> rem = a.c_;
  int db = b.degree();
  if (a.degree() < db) return {Poly{}, a};
  std::vector<Rational> quo(a.degree() - db + 1);
  const Rational& lead = b.c_.back();
  for (int k = a.degree() - db; k >= 0; --k) {
    Rational q = rem[k + db] / lead;
    quo[k] = q;
    if (q == 0) continue;
    for (int j = 0; j <= db; ++j) rem[k + j] -= q * b.c_[j];
  }
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = Poly::divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  Rational lead = a.coeffs().back();
  return Rational(1 / lead) * a;
}

// ---- Series --------------------------------------------------------------

Series::Series(std::size_t order) : c_(order + 1) {}

Series::Series(std::vector<Rational> coeffs, std::size_t order) : c_(std::move(coeffs)) {
  c_.resize(order + 1);
}

Series Series::one(std::size_t order) {
  Series s(order);
  s.c_[0] = 1;
  return s;
}

Series Series::from_poly(const Poly& p, std::size_t order) {
  Series s(order);
  for (std::size_t i = 0; i <= order && i < p.coeffs().size(); ++i) s.c_[i] = p.coeffs()[i];
  return s;
}

Series Series::truncated(std::size_t order) const {
  if (order > this->order()) throw DomainError("cannot extend a truncated series");
  return Series(std::vector<Rational>(c_.begin(), c_.begin() + order + 1), order);
}

Series Series::shifted(std::size_t k) const {
  Series r(order());
  for (std::size_t i = 0; i + k <= order(); ++i) r.c_[i + k] = c_[i];
  return r;
}

Series Series::compose_scale(const Rational& alpha) const {
  Series r = *this;
  Rational p = 1;
  for (auto& x : r.c_) {
    x *= p;
    p *= alpha;
  }
  return r;
}

Series Series::derivative() const {
  if (order() == 0) return Series(0);
  Series r(order() - 1);
  for (std::size_t i = 1; i <= order(); ++i) r.c_[i - 1] = c_[i] * static_cast<long>(i);
  return r;
}

Series Series::recip() const {
  if (c_[0] == 0) throw DomainError("series with zero constant term is not invertible");
  Series r(order());
  Rational inv0 = 1 / c_[0];
  r.c_[0] = inv0;
  for (std::size_t n = 1; n <= order(); ++n) {
    Rational acc = 0;
    for (std::size_t k = 1; k <= n; ++k)
      if (c_[k] != 0) acc += c_[k] * r.c_[n - k];
    r.c_[n] = -acc * inv0;
  }
  return r;
}

Series Series::operator-() const {
  Series r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Series operator+(const Series& a, const Series& b) {
  std::size_t n = std::min(a.order(), b.order());
  Series r(n);
  for (std::size_t i = 0; i <= n; ++i) r.c_[i] = a.c_[i] + b.c_[i];
  return r;
}

Series operator-(const Series& a, const Series& b) {
  std::size_t n = std::min(a.order(), b.order());
  Series r(n);
  for (std::size_t i = 0; i <= n; ++i) r.c_[i] = a.c_[i] - b.c_[i];
  return r;
}

Series operator*(const Series& a, const Series& b) {
  std::size_t n = std::min(a.order(), b.order());
  Series r(n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j)
      if (b.c_[j] != 0) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return r;
}

Series operator*(const Rational& k, const Series& a) {
  Series r = a;
  for (auto& x : r.c_) x *= k;
  return r;
}

bool operator==(const Series& a, const Series& b) {
  std::size_t n = std::min(a.order(), b.order());
  for (std::size_t i = 0; i <= n; ++i)
    if (a.c_[i] != b.c_[i]) return false;
  return true;
}

bool Series::is_zero() const { return last_nonzero() < 0; }

int Series::last_nonzero() const {
  for (std::size_t i = c_.size(); i-- > 0;)
    if (c_[i] != 0) return static_cast<int>(i);
  return -1;
}

std::optional<Poly> Series::as_polynomial(std::size_t min_trailing_zeros) const {
  int d = last_nonzero();
  std::size_t zeros = order() - static_cast<std::size_t>(d + 1) + 1;
  if (d < 0) zeros = order() + 1;
  if (zeros < min_trailing_zeros) return std::nullopt;
  return Poly(std::vector<Rational>(c_.begin(), c_.begin() + (d + 1)));
}

bool Series::is_integral() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q.get_den() == 1; });
}

Series exp_series(const Series& s) {
  if (s[0] != 0) throw DomainError("exp_series needs a zero constant term");
  std::size_t n = s.order();
  Series r(n);
  r[0] = 1;
  // n b_n = sum_k k a_k b_{n-k}
  for (std::size_t m = 1; m <= n; ++m) {
    Rational acc = 0;
    for (std::size_t k = 1; k <= m; ++k)
      if (s[k] != 0) acc += Rational(static_cast<long>(k)) * s[k] * r[m - k];
    r[m] = acc / static_cast<long>(m);
  }
  return r;
}

Series log_series(const Series& s) {
  if (s[0] != 1) throw DomainError("log_series needs constant term 1");
  std::size_t n = s.order();
  Series q = s.derivative() * s.truncated(n == 0 ? 0 : n - 1).recip();
  Series r(n);
  for (std::size_t m = 1; m <= n; ++m) r[m] = q[m - 1] / static_cast<long>(m);
  return r;
}

Series series_matrix_det(const std::vector<std::vector<Series>>& m, std::size_t order) {
  std::size_t k = m.size();
  if (k == 0) return Series::one(order);
  if (k > 12) throw DomainError("determinant size beyond cofactor limit");
  for (const auto& row : m)
    if (row.size() != k) throw DomainError("determinant of a non-square matrix");
  // Laplace expansion along rows, memoised on the set of columns still free.
  std::map<unsigned, Series> memo;
  auto rec = [&](auto&& self, std::size_t row, unsigned used) -> Series {
    if (row == k) return Series::one(order);
    auto it = memo.find(used);
    if (it != memo.end()) return it->second;
    Series acc(order);
    int parity = 0;
    for (std::size_t col = 0; col < k; ++col) {
      if (used & (1u << col)) continue;
      const Series& entry = m[row][col];
      if (!entry.is_zero()) {
        Series term = entry * self(self, row + 1, used | (1u << col));
        acc = (parity % 2 == 0) ? acc + term : acc - term;
      }
      ++parity;
    }
    memo.emplace(used, acc);
    return acc;
  };
  return rec(rec, 0, 0u).truncated(order);
}

// ---- RationalFn ----------------------------------------------------------

RationalFn::RationalFn(Poly num, Poly den) {
  if (den.is_zero() || den.coeff(0) == 0)
    throw DomainError("rational function denominator must have nonzero constant term");
  Poly g = gcd(num, den);
  if (!num.is_zero() && g.degree() > 0) {
    num = Poly::divmod(num, g).first;
    den = Poly::divmod(den, g).first;
  }
  Rational k = 1 / den.coeff(0);
  num_ = k * num;
  den_ = k * den;
}

Series RationalFn::expand(std::size_t order) const {
  return Series::from_poly(num_, order) * Series::from_poly(den_, order).recip();
}

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
  return RationalFn(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
  return RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFn RationalFn::inverse() const { return RationalFn(den_, num_); }

Series rf_to_series(const RationalFn& rf, std::size_t order) { return rf.expand(order); }

bool series_matches_rf(const Series& s, const RationalFn& rf) {
  return s == rf.expand(s.order());
}

// ---- periodicity and peeling ---------------------------------------------

std::optional<PeriodicityCertificate> detect_eventual_periodicity(
    std::span<const long long> a, std::optional<PeriodicityLimits> limits) {
  std::size_t m = a.size();
  PeriodicityLimits lim = limits.value_or(PeriodicityLimits{m / 3, m / 3});
  for (std::size_t k = 1; k <= lim.max_period; ++k) {
    for (std::size_t p = 0; p <= lim.max_preperiod; ++p) {
      if (m < p + 2 * k) break;
      bool ok = true;
      for (std::size_t i = p; i + k < m && ok; ++i) ok = a[i + k] == a[i];
      if (ok) return PeriodicityCertificate{p, k, m};
    }
  }
  return std::nullopt;
}

RationalFn rational_from_eventually_periodic(std::span<const Rational> prefix,
                                             std::span<const Rational> cycle) {
  if (cycle.empty()) throw DomainError("empty cycle");
  Poly pre(std::vector<Rational>(prefix.begin(), prefix.end()));
  Poly cyc(std::vector<Rational>(cycle.begin(), cycle.end()));
  Poly den = Poly::one_minus_t_pow(cycle.size());
  Poly num = pre * den + Poly::monomial(1, prefix.size()) * cyc;
  return RationalFn(num, den);
}

CyclotomicPeel cyclotomic_peel(const Poly& p) {
  if (p.coeff(0) != 1) throw DomainError("cyclotomic_peel needs constant term 1");
  CyclotomicPeel out;
  Poly r = p;
  bool progress = true;
  while (progress && r.degree() > 0) {
    progress = false;
    for (int e = r.degree(); e >= 1; --e) {
      auto [q, rem] = Poly::divmod(r, Poly::one_minus_t_pow(static_cast<std::size_t>(e)));
      if (rem.is_zero()) {
        out.exponents.push_back(e);
        r = q;
        progress = true;
        break;
      }
    }
  }
  std::sort(out.exponents.begin(), out.exponents.end());
  out.residual = r;
  return out;
}

}  // namespace kneadkit
