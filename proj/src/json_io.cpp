#include "kneadkit/json_io.hpp"

namespace kneadkit {

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const BigInt& z) {
  if (z.fits_slong_p()) return static_cast<long long>(z.get_si());
  return z.get_str();
}

Json to_json(const Poly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_json(c));
  if (p.is_zero()) a.push_back("0");
  return a;
}

Json to_json(const Series& s) {
  Json a = Json::array();
  for (const auto& c : s.coeffs()) a.push_back(to_json(c));
  return Json{{"order", s.order()}, {"coeffs", a}};
}

Json to_json(const RationalFn& rf) { return Json{{"num", to_json(rf.num())}, {"den", to_json(rf.den())}}; }

Json to_json(const Combinatorics& rho) { return Json{{"rho", rho.entries()}}; }

Json to_json(const AdjMatrix& a) {
  Json rows = Json::array();
  for (const auto& r : a.rows()) {
    Json row = Json::array();
    for (const auto& x : r) row.push_back(to_json(x));
    rows.push_back(row);
  }
  return Json{{"k", a.k()}, {"rows", rows}};
}

Json to_json(const std::vector<Word>& words) {
  Json a = Json::array();
  for (const auto& w : words) a.push_back(w.str());
  return a;
}

Json to_json(const std::vector<BigInt>& counts) {
  Json a = Json::array();
  for (const auto& c : counts) a.push_back(to_json(c));
  return a;
}

Json to_json(const KneadingData& kd, const KneadingDeterminant& det) {
  Json matrix = Json::array();
  for (const auto& row : kd.matrix) {
    Json r = Json::array();
    for (const auto& e : row) r.push_back(to_json(e));
    matrix.push_back(r);
  }
  Json cols = Json::array();
  for (const auto& d : det.per_column) cols.push_back(to_json(d));
  return Json{{"shape", kd.shape}, {"matrix", matrix}, {"D", to_json(det.D)}, {"per_column", cols}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(BigInt(std::to_string(j.get<long long>())));
  throw DomainError("expected a rational as string or integer");
}

Poly poly_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("expected a coefficient array");
  std::vector<Rational> c;
  for (const auto& x : j) c.push_back(rational_from_json(x));
  return Poly(std::move(c));
}

Series series_from_json(const Json& j) {
  if (!j.contains("order") || !j.contains("coeffs")) throw DomainError("series needs order and coeffs");
  auto order = j.at("order").get<std::size_t>();
  const Json& cs = j.at("coeffs");
  if (cs.size() != order + 1) throw DomainError("series coefficient count does not match order");
  std::vector<Rational> c;
  for (const auto& x : cs) c.push_back(rational_from_json(x));
  return Series(std::move(c), order);
}

RationalFn rational_fn_from_json(const Json& j) {
  return RationalFn(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

Combinatorics combinatorics_from_json(const Json& j) {
  return Combinatorics(j.at("rho").get<std::vector<int>>());
}

AdjMatrix adj_matrix_from_json(const Json& j) {
  std::vector<std::vector<BigInt>> rows;
  for (const auto& r : j.at("rows")) {
    std::vector<BigInt> row;
    for (const auto& x : r) row.push_back(rational_from_json(x).get_num());
    rows.push_back(std::move(row));
  }
  AdjMatrix a(std::move(rows));
  if (j.contains("k") && j.at("k").get<std::size_t>() != a.k()) throw DomainError("k does not match rows");
  return a;
}

}  // namespace kneadkit
