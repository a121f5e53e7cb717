// JSON forms of the exchanged values. Objects use std::map, so keys come out sorted.
#pragma once

#include "kneadkit/combinatorics.hpp"
#include "kneadkit/kneading.hpp"
#include "kneadkit/series.hpp"
#include "kneadkit/subshift.hpp"

#include "json.hpp"

namespace kneadkit {

using Json = nlohmann::json;

Json to_json(const Rational& q);  // "p/q" string
Json to_json(const BigInt& z);    // number when it fits in 64 bits, string otherwise
Json to_json(const Poly& p);      // coefficient strings, lowest degree first
Json to_json(const Series& s);    // {"order":N,"coeffs":[...]}
Json to_json(const RationalFn& rf);  // {"num":[...],"den":[...]}
Json to_json(const Combinatorics& rho);  // {"rho":[...]}
Json to_json(const AdjMatrix& a);        // {"k":2,"rows":[[...]]}
Json to_json(const std::vector<Word>& words);
Json to_json(const std::vector<BigInt>& counts);
Json to_json(const KneadingData& kd, const KneadingDeterminant& det);

Rational rational_from_json(const Json& j);
Poly poly_from_json(const Json& j);
Series series_from_json(const Json& j);
RationalFn rational_fn_from_json(const Json& j);
Combinatorics combinatorics_from_json(const Json& j);
AdjMatrix adj_matrix_from_json(const Json& j);

}  // namespace kneadkit
