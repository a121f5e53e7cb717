#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kneadkit/series.hpp"

#include <random>

using namespace kneadkit;

namespace {

Series S(std::initializer_list<long> c, std::size_t order) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return Series(v, order);
}

std::vector<long> ints(const Series& s) {
  std::vector<long> out;
  for (std::size_t i = 0; i <= s.order(); ++i) out.push_back(s[i].get_num().get_si());
  return out;
}

Series random_series(std::mt19937& rng, std::size_t order, bool zero_const = false) {
  std::uniform_int_distribution<int> d(-5, 5);
  std::vector<Rational> c;
  for (std::size_t i = 0; i <= order; ++i) c.push_back(frac(d(rng), 1 + static_cast<long>(rng() % 3)));
  if (zero_const) c[0] = 0;
  return Series(c, order);
}

}  // namespace

TEST_CASE("unit, geometric reciprocal and long multiplication") {
  Series s = S({3, 1, 4, 1, 5}, 4);
  CHECK(Series::one(4) * s == s);
  CHECK(ints(S({1, -1}, 4).recip()) == std::vector<long>{1, 1, 1, 1, 1});
  Series prod = S({1, -1, -1}, 6) * S({1, 0, 0, -1}, 6).recip();
  CHECK(ints(prod) == std::vector<long>{1, -1, -1, 1, -1, -1, 1});
}

TEST_CASE("mixed orders take the minimum") {
  Series a = S({1, 1}, 3), b = S({1, 2}, 7);
  CHECK((a + b).order() == 3);
  CHECK((a * b).order() == 3);
}

TEST_CASE("exp and log") {
  CHECK(exp_series(Series(5)) == Series::one(5));
  std::vector<Rational> c{0};
  for (int n = 1; n <= 5; ++n) c.push_back(frac(1, n));
  CHECK(ints(exp_series(Series(c, 5))) == std::vector<long>{1, 1, 1, 1, 1, 1});

  // log(1/(1-t-t^2)) = sum (l_{n-1}+l_{n+1}) t^n / n ; Lucas numbers 1,3,4,7,11,18,29,47
  Series L = log_series(S({1, -1, -1}, 8).recip());
  const long lucas[] = {1, 3, 4, 7, 11, 18, 29, 47};
  CHECK(L[0] == 0);
  for (int n = 1; n <= 8; ++n) CHECK(L[n] == frac(lucas[n - 1], n));
}

TEST_CASE("rational functions expand") {
  RationalFn geo(Poly{1}, Poly{1, -2});
  CHECK(ints(rf_to_series(geo, 3)) == std::vector<long>{1, 2, 4, 8});
  RationalFn fib(Poly{1}, Poly{1, -1, -1});
  CHECK(ints(rf_to_series(fib, 7)) == std::vector<long>{1, 1, 2, 3, 5, 8, 13, 21});
  RationalFn d(Poly{1, -2}, Poly{1, -1});
  CHECK(ints(rf_to_series(d, 4)) == std::vector<long>{1, -1, -1, -1, -1});
  CHECK(series_matches_rf(rf_to_series(d, 20), d));
  CHECK_FALSE(series_matches_rf(rf_to_series(fib, 20), d));
}

TEST_CASE("rational functions are reduced and normalized") {
  RationalFn r(Poly{2, -2}, Poly{2, -4, 2});  // 2(1-t) / 2(1-t)^2
  CHECK(r.num() == Poly{1});
  CHECK(r.den() == Poly{1, -1});
  CHECK_THROWS_AS(RationalFn(Poly{1}, Poly{0, 1}), DomainError);
}

TEST_CASE("eventual periodicity detector") {
  std::vector<long long> ones(30, 1);
  auto c1 = detect_eventual_periodicity(ones);
  REQUIRE(c1);
  CHECK(c1->preperiod == 0);
  CHECK(c1->period == 1);

  std::vector<long long> d(30, -1);
  d[0] = 1;
  auto c2 = detect_eventual_periodicity(d);
  REQUIRE(c2);
  CHECK(c2->preperiod == 1);
  CHECK(c2->period == 1);

  // needs two full repetitions after the preperiod
  std::vector<long long> short_seq{1, 2, 3, 1, 2};
  CHECK_FALSE(detect_eventual_periodicity(short_seq));

  // 0,1,1,0,1,0,1,1,... Fibonacci word is aperiodic
  std::string w = "0";
  std::string prev = "0", cur = "01";
  while (cur.size() < 96) {
    std::string next = cur + prev;
    prev = cur;
    cur = next;
  }
  std::vector<long long> fw;
  for (int i = 0; i < 96; ++i) fw.push_back(cur[i] - '0');
  CHECK_FALSE(detect_eventual_periodicity(fw));
}

TEST_CASE("rational form of eventually periodic sequences") {
  auto R = [](std::initializer_list<long> v) {
    std::vector<Rational> out;
    for (long x : v) out.emplace_back(x);
    return out;
  };
  auto pre0 = R({}), cyc1 = R({1});
  CHECK(rational_from_eventually_periodic(pre0, cyc1) == RationalFn(Poly{1}, Poly{1, -1}));
  auto pre1 = R({1}), cycm = R({-1});
  CHECK(rational_from_eventually_periodic(pre1, cycm) == RationalFn(Poly{1, -2}, Poly{1, -1}));
  auto cyc3 = R({1, -1, -1});
  CHECK(rational_from_eventually_periodic(pre0, cyc3) == RationalFn(Poly{1, -1, -1}, Poly{1, 0, 0, -1}));
}

TEST_CASE("cyclotomic peel") {
  auto a = cyclotomic_peel(Poly{1, 0, -1});
  CHECK(a.exponents == std::vector<int>{2});
  CHECK(a.complete());
  auto b = cyclotomic_peel(Poly::one_minus_t_pow(1) * Poly::one_minus_t_pow(3));
  CHECK(b.exponents == std::vector<int>{1, 3});
  CHECK(b.complete());
  auto c = cyclotomic_peel(Poly{1, 1});
  CHECK(c.exponents.empty());
  CHECK(c.residual == Poly{1, 1});
  // smallest-first would strip (1-t) from 1-t^2 and leave 1+t
  auto d = cyclotomic_peel(Poly::one_minus_t_pow(2) * Poly::one_minus_t_pow(2) * Poly::one_minus_t_pow(5));
  CHECK(d.exponents == std::vector<int>{2, 2, 5});
}

TEST_CASE("series determinants") {
  std::vector<std::vector<Series>> one{{S({2, 3}, 4)}};
  CHECK(series_matrix_det(one, 4) == S({2, 3}, 4));
  std::vector<std::vector<Series>> id{{Series::one(4), Series(4)}, {Series(4), Series::one(4)}};
  CHECK(series_matrix_det(id, 4) == Series::one(4));
  std::vector<std::vector<Series>> m{{Series::one(4), S({0, 1}, 4)}, {S({0, 1}, 4), Series::one(4)}};
  CHECK(ints(series_matrix_det(m, 4)) == std::vector<long>{1, 0, -1, 0, 0});
}

TEST_CASE("property: ring axioms on random series") {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t N = 6 + trial % 5;
    Series a = random_series(rng, N), b = random_series(rng, N), c = random_series(rng, N);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    if (a[0] != 0) CHECK(a * a.recip() == Series::one(N));
  }
}

TEST_CASE("property: exp and log are inverse") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    Series a = random_series(rng, 8, true);
    CHECK(log_series(exp_series(a)) == a);
    Series b = Series::one(8) + random_series(rng, 8, true);
    CHECK(exp_series(log_series(b)) == b);
  }
}

TEST_CASE("property: rational form reproduces the sequence") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> val(-3, 3), len(0, 5), plen(1, 5);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Rational> pre, cyc;
    for (int i = len(rng); i > 0; --i) pre.emplace_back(val(rng));
    for (int i = plen(rng); i > 0; --i) cyc.emplace_back(val(rng));
    Series s = rf_to_series(rational_from_eventually_periodic(pre, cyc), 40);
    for (std::size_t i = 0; i <= 40; ++i)
      CHECK(s[i] == (i < pre.size() ? pre[i] : cyc[(i - pre.size()) % cyc.size()]));
  }
}

TEST_CASE("property: peel multiplies back") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> e(1, 7), k(1, 4);
  for (int trial = 0; trial < 40; ++trial) {
    Poly p{1};
    int factors = k(rng);
    for (int i = 0; i < factors; ++i) p = p * Poly::one_minus_t_pow(static_cast<std::size_t>(e(rng)));
    if (trial % 3 == 0) p = p * Poly{1, 1, 1};
    auto peel = cyclotomic_peel(p);
    Poly back = peel.residual;
    for (int x : peel.exponents) back = back * Poly::one_minus_t_pow(static_cast<std::size_t>(x));
    CHECK(back == p);
    if (trial % 3 != 0) CHECK(peel.complete());
  }
}
