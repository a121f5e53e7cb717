#include "kneadkit/kneading.hpp"

#include <cmath>
#include <sstream>

namespace kneadkit {

namespace {

std::string describe_ambiguity(double x, double band) {
  std::ostringstream os;
  os << "address of " << x << " is ambiguous within band " << band;
  return os.str();
}

}  // namespace

AmbiguousAddress::AmbiguousAddress(double x_, double band_)
    : DomainError(describe_ambiguity(x_, band_)), x(x_), band(band_) {}

PLMap::PLMap(PLModel model) : model_(std::move(model)) {
  const auto& rho = model_.combinatorics();
  auto trn = kneadkit::turning_points(rho);
  for (int t : trn) turning_.emplace_back(t);
  // sign of the lap between consecutive turning points
  int start = 0;
  for (std::size_t k = 0; k <= trn.size(); ++k) {
    shape_.push_back(rho[start + 1] > rho[start] ? 1 : -1);
    if (k < trn.size()) start = trn[k];
  }
}

Address PLMap::address(const Rational& x) const {
  if (x < 0 || x > model_.n()) throw DomainError("point outside the domain");
  for (std::size_t k = 0; k < turning_.size(); ++k) {
    if (x == turning_[k]) return {Address::Kind::Turning, static_cast<int>(k) + 1};
    if (x < turning_[k]) return {Address::Kind::Lap, static_cast<int>(k)};
  }
  return {Address::Kind::Lap, static_cast<int>(turning_.size())};
}

NumericMap::NumericMap(std::function<double(double)> f, std::vector<double> turning,
                       std::vector<int> shape, double band)
    : f_(std::move(f)), turning_(std::move(turning)), shape_(std::move(shape)), band_(band) {
  if (shape_.size() != turning_.size() + 1) throw DomainError("shape needs modality + 1 signs");
}

Address NumericMap::address(double x) const {
  for (std::size_t k = 0; k < turning_.size(); ++k) {
    if (x == turning_[k]) return {Address::Kind::Turning, static_cast<int>(k) + 1};
    if (std::abs(x - turning_[k]) <= band_) return {Address::Kind::Ambiguous, static_cast<int>(k) + 1};
    if (x < turning_[k]) return {Address::Kind::Lap, static_cast<int>(k)};
  }
  return {Address::Kind::Lap, static_cast<int>(turning_.size())};
}

KneadingDeterminant kneading_determinant(const KneadingData& kd) {
  std::size_t m = kd.matrix.size();
  std::size_t N = kd.order;
  KneadingDeterminant out;
  for (std::size_t j = 0; j <= m; ++j) {
    std::vector<std::vector<Series>> minor;
    for (const auto& row : kd.matrix) {
      std::vector<Series> r;
      for (std::size_t c = 0; c <= m; ++c)
        if (c != j) r.push_back(row[c]);
      minor.push_back(std::move(r));
    }
    Series det = series_matrix_det(minor, N);
    Series den = Series::from_poly(Poly{1, -kd.shape[j]}, N);
    Series d = det * den.recip();
    if (j % 2 == 1) d = -d;
    out.per_column.push_back(std::move(d));
  }
  for (std::size_t j = 1; j <= m; ++j)
    if (!(out.per_column[j] == out.per_column[0]))
      throw InvariantViolation("kneading determinant depends on the deleted column (" +
                               std::to_string(j) + ")");
  out.D = out.per_column[0];
  if (out.D[0] != 1) throw InvariantViolation("kneading determinant does not start with 1");
  return out;
}

Series unimodal_kneading(std::span<const int> eps, std::size_t order) {
  if (eps.size() < order) throw DomainError("need at least `order` signs");
  Series d(order);
  int prod = 1;
  d[0] = 1;
  for (std::size_t n = 1; n <= order; ++n) {
    int e = eps[n - 1];
    if (e != 1 && e != -1) throw DomainError("signs must be +1 or -1");
    prod *= e;
    d[n] = prod;
  }
  return d;
}

RationalFn unimodal_rational_form(std::span<const int> prefix, std::span<const int> cycle) {
  if (cycle.empty()) throw DomainError("empty sign cycle");
  auto sign_at = [&](std::size_t i) {  // epsilon_{i+1}
    return i < prefix.size() ? prefix[i] : cycle[(i - prefix.size()) % cycle.size()];
  };
  // Partial products repeat with period 2|cycle| once the prefix is consumed.
  std::size_t P = prefix.size(), K = 2 * cycle.size();
  std::vector<Rational> head, tail;
  int prod = 1;
  for (std::size_t n = 0; n < P + K; ++n) {
    (n < P ? head : tail).emplace_back(prod);
    int e = sign_at(n);
    if (e != 1 && e != -1) throw DomainError("signs must be +1 or -1");
    prod *= e;
  }
  return rational_from_eventually_periodic(head, tail);
}

VuStructure vu_structure_check(const KneadingData& kd, int dominant) {
  int m = static_cast<int>(kd.matrix.size());
  if (dominant < 1 || dominant > m) throw DomainError("dominant index out of range");
  std::size_t half = kd.order / 2;
  VuStructure out;
  out.dominant_row_local = true;
  out.other_rows_polynomial = true;
  for (int i = 1; i <= m; ++i) {
    for (int c = 0; c <= m; ++c) {
      if (c == dominant - 1 || c == dominant) continue;
      const Series& e = kd.matrix[i - 1][c];
      if (i == dominant) {
        if (!e.is_zero()) out.dominant_row_local = false;
      } else if (!e.as_polynomial(half)) {
        out.other_rows_polynomial = false;
      }
    }
  }
  std::vector<std::vector<Series>> minor;
  for (const auto& row : kd.matrix) {
    std::vector<Series> r;
    for (int c = 0; c <= m; ++c)
      if (c != dominant - 1) r.push_back(row[c]);
    minor.push_back(std::move(r));
  }
  Series det = series_matrix_det(minor, kd.order);
  Series q = det * kd.matrix[dominant - 1][dominant].recip();
  out.P = q.as_polynomial(half);
  out.factors = out.P.has_value();
  return out;
}

}  // namespace kneadkit
