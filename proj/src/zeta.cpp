#include "kneadkit/zeta.hpp"

namespace kneadkit {

Series zeta_from_counts(std::span<const BigInt> counts, std::size_t order) {
  if (counts.size() < order) throw DomainError("need N_1..N_order");
  Series s(order);
  for (std::size_t n = 1; n <= order; ++n) s[n] = Rational(counts[n - 1], static_cast<long>(n));
  for (std::size_t n = 1; n <= order; ++n) s[n].canonicalize();
  return exp_series(s);
}

std::vector<BigInt> counts_from_zeta(const Series& zeta) {
  if (zeta[0] != 1) throw DomainError("zeta must start with 1");
  std::size_t N = zeta.order();
  // t zeta'/zeta: coefficient of t^n is N_n
  Series q = zeta.derivative() * zeta.truncated(N - 1).recip();
  std::vector<BigInt> out;
  for (std::size_t n = 1; n <= N; ++n) {
    const Rational& c = q[n - 1];
    if (c.get_den() != 1)
      throw InvariantViolation("non-integer periodic count at n = " + std::to_string(n));
    out.push_back(c.get_num());
  }
  return out;
}

std::vector<BigInt> counts_from_zeta(const RationalFn& zeta, std::size_t order) {
  return counts_from_zeta(zeta.expand(order));
}

RationalFn zeta_vu_closed_form(int nu) {
  if (nu < 2) throw DomainError("closed form needs nu >= 2");
  Poly phi = Poly::one_minus_t_pow(nu % 2 == 0 ? 2 : 1);
  Poly den = phi * Poly::one_minus_t_pow(3) * Poly{1, -1, -1};
  return RationalFn(Poly{1}, den);
}

MtRelation mt_relation_check(const Series& zeta, const Series& D) {
  MtRelation out;
  out.phi = (zeta * D).recip();
  out.polynomial = out.phi.as_polynomial((out.phi.order() + 1) / 2);
  if (out.polynomial) {
    auto peel = cyclotomic_peel(*out.polynomial);
    if (peel.complete()) out.factors = peel.exponents;
  }
  return out;
}

MtRelation mt_relation_check(const RationalFn& zeta, const Series& D, std::size_t order) {
  return mt_relation_check(zeta.expand(order), D.truncated(order));
}

}  // namespace kneadkit
