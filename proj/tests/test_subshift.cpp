#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kneadkit/subshift.hpp"

#include <algorithm>

using namespace kneadkit;

namespace {

std::vector<std::string> strs(const std::vector<Word>& ws) {
  std::vector<std::string> out;
  for (const auto& w : ws) out.push_back(w.str());
  return out;
}

std::vector<long> longs(const std::vector<BigInt>& v) {
  std::vector<long> out;
  for (const auto& x : v) out.push_back(x.get_si());
  return out;
}

}  // namespace

TEST_CASE("Fibonacci language") {
  CHECK(strs(fib_language(0)) == std::vector<std::string>{""});
  CHECK(strs(fib_language(1)) == std::vector<std::string>{"1", "2"});
  CHECK(strs(fib_language(2)) == std::vector<std::string>{"12", "21", "22"});
  CHECK(fib_language(3).size() == 5);
}

TEST_CASE("Fibonacci numbers") {
  auto l = fib_numbers(5);
  CHECK(longs(l) == std::vector<long>{0, 1, 1, 2, 3, 5});
}

TEST_CASE("trace counts") {
  CHECK(longs(sft_periodic_counts(AdjMatrix::fibonacci(), 4)) == std::vector<long>{1, 3, 4, 7});
  CHECK(longs(sft_periodic_counts(AdjMatrix::parse("1,0,0;0,1,0;0,0,1"), 5)) ==
        std::vector<long>{3, 3, 3, 3, 3});
  CHECK(longs(sft_periodic_counts(AdjMatrix::parse("2"), 6)) == std::vector<long>{2, 4, 8, 16, 32, 64});
  CHECK(AdjMatrix::fibonacci().trace() == 1);
  CHECK_THROWS_AS(AdjMatrix::parse("0,1;1"), DomainError);
  CHECK_THROWS_AS(AdjMatrix::parse("0,-1;1,1"), DomainError);
}

TEST_CASE("vee map") {
  CHECK(vee_map(Word("2")).str() == "2");
  CHECK(vee_map(Word("12")).str() == "1");
  CHECK(vee_map(Word("2122")).str() == "212");
  CHECK(vee_map(Word("1")).str() == "1");
  CHECK_THROWS_AS(vee_map(Word("112")), DomainError);
}

TEST_CASE("property: language sizes, traces, vee lengths") {
  auto l = fib_numbers(24);
  for (int n = 1; n <= 20; ++n) {
    auto lang = fib_language(n);
    CHECK(BigInt(static_cast<unsigned long>(lang.size())) == l[n + 2]);
    CHECK(std::is_sorted(lang.begin(), lang.end()));
    if (n <= 14)
      for (const auto& w : lang) {
        CHECK(w.str().find("11") == std::string::npos);
        Word v = vee_map(w);
        // a 1 stands for an F^2 branch, a 2 for an F branch; a trailing 1 has no partner
        std::size_t cost = 2 * v.count('1') + v.count('2');
        CHECK(cost == w.size() + (w[w.size() - 1] == '1' ? 1 : 0));
      }
  }
  auto counts = sft_periodic_counts(AdjMatrix::fibonacci(), 20);
  for (int n = 1; n <= 20; ++n) CHECK(counts[n - 1] == l[n - 1] + l[n + 1]);
}
