// Artin-Mazur zeta functions from periodic-point counts, and the
// zeta/kneading relation zeta * D * Phi = 1 with a cyclotomic correction Phi.
#pragma once

#include "kneadkit/series.hpp"

#include <optional>
#include <span>
#include <vector>

namespace kneadkit {

// exp(sum_{n>=1} N_n t^n / n); counts[k] = N_{k+1}.
Series zeta_from_counts(std::span<const BigInt> counts, std::size_t order);

// N_1..N_order recovered as the coefficients of t zeta'/zeta; throws InvariantViolation
// when a count is not an integer.
std::vector<BigInt> counts_from_zeta(const Series& zeta);
std::vector<BigInt> counts_from_zeta(const RationalFn& zeta, std::size_t order);

// 1 / (Phi_nu(t) (1 - t^3) (1 - t - t^2)), Phi_nu = 1 - t^2 (nu even), 1 - t (nu odd).
RationalFn zeta_vu_closed_form(int nu);

struct MtRelation {
  Series phi;                             // 1 / (zeta D) through the order
  std::optional<Poly> polynomial;         // phi, if it truncates
  std::optional<std::vector<int>> factors;  // exponents e of prod (1 - t^e)
};

MtRelation mt_relation_check(const Series& zeta, const Series& D);
MtRelation mt_relation_check(const RationalFn& zeta, const Series& D, std::size_t order);

}  // namespace kneadkit
