#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kneadkit/combinatorics.hpp"

#include <algorithm>
#include <random>

using namespace kneadkit;

namespace {

Combinatorics C(std::initializer_list<int> v) { return Combinatorics(std::vector<int>(v)); }

Combinatorics random_pm(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> d(0, n);
  std::vector<int> r(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) {
    do r[i] = d(rng);
    while (i > 0 && r[i] == r[i - 1]);
  }
  return Combinatorics(r);
}

std::vector<int> julia_indices(const Combinatorics& rho) {
  auto cls = classify_points(rho);
  std::vector<int> out;
  for (std::size_t i = 0; i < cls.size(); ++i)
    if (cls[i] == PointType::Julia) out.push_back(static_cast<int>(i));
  return out;
}

}  // namespace

TEST_CASE("parsing and validation") {
  CHECK(Combinatorics::parse("0,2,3,1,0").entries() == std::vector<int>{0, 2, 3, 1, 0});
  CHECK(Combinatorics::parse("0,2,3,1,0").to_string() == "0,2,3,1,0");
  CHECK_THROWS_AS(Combinatorics::parse("0"), DomainError);
  CHECK_THROWS_AS(Combinatorics::parse("0,5"), DomainError);
  CHECK_THROWS_AS(Combinatorics::parse("0,x,1"), DomainError);
}

TEST_CASE("PL model") {
  PLModel f(C({0, 2, 3, 1, 0}));
  CHECK(f(Rational(2)) == 3);
  CHECK(f(frac(3, 2)) == frac(5, 2));
  CHECK(PLModel(C({0, 1}))(frac(1, 2)) == frac(1, 2));
  CHECK_THROWS_AS(f(Rational(5)), DomainError);
}

TEST_CASE("turning points") {
  CHECK(turning_points(C({0, 2, 3, 1, 0})) == std::vector<int>{2});
  CHECK(turning_points(C({0, 1, 2, 3})).empty());
  CHECK(turning_points(C({7, 3, 4, 5, 6, 3, 2, 0})) == std::vector<int>{1, 4});
}

TEST_CASE("orbits") {
  auto o = orbit(C({0, 2, 3, 1, 0}), 2);
  CHECK(o.preperiod == 0);
  CHECK(o.cycle == std::vector<int>{2, 3, 1});
  auto z = orbit(C({0, 2, 3, 1, 0}), 0);
  CHECK(z.preperiod == 0);
  CHECK(z.cycle == std::vector<int>{0});
  auto w = orbit(C({7, 3, 4, 5, 6, 3, 2, 0}), 1);
  CHECK(w.preperiod == 1);
  CHECK(w.cycle == std::vector<int>{3, 5});
}

TEST_CASE("condition (1)") {
  auto a = is_pm(C({0, 3, 3, 2, 0}));
  CHECK_FALSE(a.ok);
  CHECK(a.witness == 1);
  CHECK(is_pm(C({0, 1})).ok);
  CHECK(is_pm(C({0, 2, 3, 1, 0})).ok);
}

TEST_CASE("own combinatorics") {
  auto bad = is_own_combinatorics(C({0, 3, 4, 7, 6, 5, 2, 1, 0}));
  CHECK_FALSE(bad.ok);
  // marks 0,1,3,7,8; the literal (0,1,3,7,0) has entries beyond n = 4
  CHECK(bad.remarking.marked == std::vector<int>{0, 1, 3, 7, 8});
  CHECK(bad.remarking.induced == C({0, 2, 3, 1, 0}));
  CHECK(is_own_combinatorics(C({0, 2, 3, 1, 0})).ok);
  CHECK(is_own_combinatorics(C({5, 2, 3, 4, 2, 0})).ok);
}

TEST_CASE("framed") {
  CHECK(is_framed(C({7, 3, 4, 5, 6, 3, 2, 0})));
  CHECK(is_framed(C({0, 1})));
  CHECK(is_framed(C({5, 2, 3, 4, 2, 0})));
  CHECK_FALSE(is_framed(C({1, 2, 3, 1})));
}

TEST_CASE("virtually unimodal") {
  CHECK(is_virtually_unimodal(C({5, 2, 3, 4, 2, 0})) == 3);
  CHECK_FALSE(is_virtually_unimodal(C({6, 2, 1, 4, 5, 3, 0})));
  CHECK(is_virtually_unimodal(C({0, 2, 3, 1, 0})) == 2);
  CHECK(is_virtually_unimodal(C({7, 3, 4, 5, 6, 3, 2, 0})) == 4);
  // turning points of this one are 2 and 4
  CHECK(turning_points(C({6, 2, 1, 4, 5, 3, 0})) == std::vector<int>{2, 4});
}

TEST_CASE("Fatou and Julia points") {
  CHECK(julia_indices(C({7, 3, 4, 5, 6, 3, 2, 0})) == std::vector<int>{0, 3, 5, 7});
  CHECK(julia_indices(C({0, 1, 2, 3})) == std::vector<int>{0, 1, 2, 3});
  CHECK(julia_indices(C({0, 2, 3, 1, 0})) == std::vector<int>{0, 4});
}

TEST_CASE("expanding") {
  CHECK(is_expanding(generate_vu(2)).ok);
  CHECK(is_expanding(generate_vu(3)).ok);
  // Julia pair (0,1) is fixed, so it never separates
  auto e = is_expanding(C({0, 1, 3, 2}));
  CHECK_FALSE(e.ok);
  CHECK(e.failing_edge == 0);
  // both Julia points of (0,2,1,3) are endpoints, gap n = 3 > 1 already
  CHECK(is_expanding(C({0, 2, 1, 3})).ok);
}

TEST_CASE("generated virtually unimodal combinatorics") {
  CHECK(generate_vu(2) == C({7, 3, 4, 5, 6, 3, 2, 0}));
  CHECK(generate_vu(3) == C({0, 6, 4, 5, 6, 7, 4, 3, 0}));
  CHECK(generate_vu(4) == C({9, 5, 7, 5, 6, 7, 8, 5, 4, 0}));
  CHECK_THROWS_AS(generate_vu(1), DomainError);
}

TEST_CASE("periodic orbits of the PL model") {
  PLModel f(C({0, 2, 3, 1, 0}));
  auto two = periodic_orbits_of_pl(f, 2);
  REQUIRE(two.orbits.size() == 1);
  CHECK(two.orbits[0].cycle == std::vector<Rational>{frac(5, 3), frac(8, 3)});
  auto one = periodic_orbits_of_pl(f, 1);
  REQUIRE(one.orbits.size() == 2);
  CHECK(one.orbits[0].cycle == std::vector<Rational>{Rational(0)});
  CHECK(one.orbits[1].cycle == std::vector<Rational>{frac(7, 3)});
  CHECK(one.degenerate.empty());
  auto id = periodic_orbits_of_pl(PLModel(C({0, 1})), 1);
  CHECK(id.degenerate.size() == 1);
  CHECK(id.orbits.size() == 2);
}

TEST_CASE("building from periodic points") {
  std::vector<Rational> a{frac(5, 3)};
  CHECK(build_vu_from_periodic_points(a) == generate_vu(2));
  std::vector<Rational> b{frac(8, 3), frac(5, 3)};
  CHECK(build_vu_from_periodic_points(b) == generate_vu(3));
  std::vector<Rational> c{frac(5, 3), frac(8, 3), frac(5, 3)};
  CHECK(build_vu_from_periodic_points(c) == generate_vu(4));
  CHECK(build_vu_from_periodic_points({}) == C({0, 2, 3, 1, 0}));
  std::vector<Rational> bad{frac(3, 2)};
  CHECK_THROWS_AS(build_vu_from_periodic_points(bad), DomainError);
}

TEST_CASE("property: generated combinatorics satisfy every predicate") {
  for (int nu = 2; nu <= 16; ++nu) {
    CAPTURE(nu);
    Combinatorics r = generate_vu(nu);
    CHECK(is_pm(r).ok);
    CHECK(is_own_combinatorics(r).ok);
    CHECK(is_framed(r));
    CHECK(is_virtually_unimodal(r) == nu + 2);
    CHECK(is_expanding(r).ok);
    CHECK(turning_points(r).size() == static_cast<std::size_t>(nu));
  }
}

TEST_CASE("property: random combinatorics") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 2 + trial % 7;
    Combinatorics r = random_pm(rng, n);
    CAPTURE(r.to_string());
    // turning points are exactly the sign changes
    std::vector<int> sc;
    for (int i = 1; i < n; ++i)
      if ((r[i] - r[i - 1]) * (r[i + 1] - r[i]) < 0) sc.push_back(i);
    CHECK(turning_points(r) == sc);
    for (int i = 0; i <= n; ++i) {
      auto o = orbit(r, i);
      CHECK(o.preperiod + o.cycle.size() <= static_cast<std::size_t>(n + 1));
      CHECK(r[o.cycle.back()] == o.cycle.front());
    }
    auto own = is_own_combinatorics(r);
    if (own.ok) CHECK(own.remarking.induced == r);
    // induced combinatorics is itself its own
    CHECK(is_own_combinatorics(own.remarking.induced).ok);
    PLModel f(r);
    int p = 1 + trial % 4;
    for (const auto& orb : periodic_orbits_of_pl(f, p).orbits) {
      Rational x = orb.cycle.front();
      for (int k = 0; k < p; ++k) x = f(x);
      CHECK(x == orb.cycle.front());
      CHECK(orb.cycle.size() == static_cast<std::size_t>(p));
    }
    if (auto c = is_virtually_unimodal(r)) {
      int a = r[r[*c]], b = r[*c];
      int lo = std::min(a, b), hi = std::max(a, b);
      int img_lo = n, img_hi = 0;
      for (int i = lo; i <= hi; ++i) {
        img_lo = std::min(img_lo, r[i]);
        img_hi = std::max(img_hi, r[i]);
      }
      CHECK(img_lo == lo);
      CHECK(img_hi == hi);
    }
    CHECK(reflect(reflect(r)) == r);
  }
}
