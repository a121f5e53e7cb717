#include "kneadkit/subshift.hpp"

#include <algorithm>
#include <sstream>

namespace kneadkit {

std::size_t Word::count(char symbol) const {
  return static_cast<std::size_t>(std::count(s_.begin(), s_.end(), symbol));
}

Word Word::power(std::size_t k) const {
  std::string out;
  out.reserve(s_.size() * k);
  for (std::size_t i = 0; i < k; ++i) out += s_;
  return Word(std::move(out));
}

std::vector<Word> fib_language(int n) {
  if (n < 0) throw DomainError("word length must be nonnegative");
  std::vector<std::string> layer{""};
  for (int len = 0; len < n; ++len) {
    std::vector<std::string> next;
    for (const auto& w : layer) {
      if (w.empty() || w.back() != '1') next.push_back(w + '1');
      next.push_back(w + '2');
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  std::vector<Word> out;
  for (auto& w : layer) out.emplace_back(std::move(w));
  return out;
}

std::vector<BigInt> fib_numbers(int n) {
  std::vector<BigInt> l{0, 1};
  while (static_cast<int>(l.size()) <= n) l.push_back(l[l.size() - 1] + l[l.size() - 2]);
  l.resize(static_cast<std::size_t>(std::max(n, 0)) + 1);
  return l;
}

Word vee_map(const Word& w) {
  std::string out;
  const std::string& s = w.str();
  if (s.find("11") != std::string::npos) throw DomainError("word " + s + " contains 11");
  for (std::size_t i = 0; i < s.size(); ++i) {
    out += s[i];
    if (s[i] == '1' && i + 1 < s.size()) ++i;  // drop the forced 2
  }
  return Word(std::move(out));
}

AdjMatrix::AdjMatrix(std::vector<std::vector<BigInt>> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw DomainError("empty adjacency matrix");
  for (const auto& r : rows_) {
    if (r.size() != rows_.size()) throw DomainError("adjacency matrix must be square");
    for (const auto& x : r)
      if (x < 0) throw DomainError("adjacency entries must be nonnegative");
  }
}

AdjMatrix AdjMatrix::parse(std::string_view text) {
  std::vector<std::vector<BigInt>> rows;
  std::istringstream in{std::string(text)};
  std::string row;
  while (std::getline(in, row, ';')) {
    std::vector<BigInt> r;
    std::istringstream rin(row);
    std::string item;
    while (std::getline(rin, item, ',')) {
      auto b = item.find_first_not_of(" \t");
      auto e = item.find_last_not_of(" \t");
      if (b == std::string::npos) throw DomainError("empty matrix entry");
      r.push_back(parse_bigint(item.substr(b, e - b + 1)));
    }
    rows.push_back(std::move(r));
  }
  return AdjMatrix(std::move(rows));
}

BigInt AdjMatrix::trace() const {
  BigInt t = 0;
  for (std::size_t i = 0; i < k(); ++i) t += rows_[i][i];
  return t;
}

AdjMatrix operator*(const AdjMatrix& a, const AdjMatrix& b) {
  std::size_t k = a.k();
  if (b.k() != k) throw DomainError("matrix size mismatch");
  std::vector<std::vector<BigInt>> r(k, std::vector<BigInt>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t l = 0; l < k; ++l)
      if (a.rows_[i][l] != 0)
        for (std::size_t j = 0; j < k; ++j) r[i][j] += a.rows_[i][l] * b.rows_[l][j];
  return AdjMatrix(std::move(r));
}

std::vector<BigInt> sft_periodic_counts(const AdjMatrix& a, int n) {
  if (n < 1) throw DomainError("need at least one count");
  std::vector<BigInt> counts;
  AdjMatrix p = a;
  for (int k = 1; k <= n; ++k) {
    counts.push_back(p.trace());
    if (k < n) p = p * a;
  }
  return counts;
}

}  // namespace kneadkit
