// Finite words, the Fibonacci shift and periodic-point counts of subshifts of finite type.
#pragma once

#include "kneadkit/rational.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace kneadkit {

// A finite word; symbols are single characters ('1', '2' for the Fibonacci shift).
class Word {
 public:
  Word() = default;
  explicit Word(std::string symbols) : s_(std::move(symbols)) {}

  std::size_t size() const { return s_.size(); }
  bool empty() const { return s_.empty(); }
  char operator[](std::size_t i) const { return s_.at(i); }
  const std::string& str() const { return s_; }
  std::size_t count(char symbol) const;
  Word power(std::size_t k) const;

  friend Word operator+(const Word& a, const Word& b) { return Word(a.s_ + b.s_); }
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::string s_;
};

// Words of length n over {1,2} avoiding "11", in lexicographic order.
std::vector<Word> fib_language(int n);

// l_0 = 0, l_1 = 1, l_{k+1} = l_k + l_{k-1}; returns l_0..l_n.
std::vector<BigInt> fib_numbers(int n);

// Collapses every "12" to "1" (a 1 followed by a symbol), keeps 2s and a trailing 1.
Word vee_map(const Word& w);

class AdjMatrix {
 public:
  explicit AdjMatrix(std::vector<std::vector<BigInt>> rows);
  static AdjMatrix parse(std::string_view text);  // "0,1;1,1"
  static AdjMatrix fibonacci() { return parse("0,1;1,1"); }

  std::size_t k() const { return rows_.size(); }
  const std::vector<std::vector<BigInt>>& rows() const { return rows_; }
  BigInt trace() const;
  friend AdjMatrix operator*(const AdjMatrix& a, const AdjMatrix& b);

 private:
  std::vector<std::vector<BigInt>> rows_;
};

// N_1..N_n with N_k = tr(A^k).
std::vector<BigInt> sft_periodic_counts(const AdjMatrix& a, int n);

}  // namespace kneadkit
