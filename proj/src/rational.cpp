#include "kneadkit/rational.hpp"

#include <cctype>
#include <cmath>

namespace kneadkit {

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const BigInt& z) { return z.get_str(); }

BigInt parse_bigint(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw DomainError("empty integer");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw DomainError("malformed integer '" + s + "'");
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j])))
      throw DomainError("malformed integer '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  return BigInt(s, 10);
}

namespace {

// Finite decimal with optional exponent.
Rational parse_decimal(const std::string& s) {
  std::size_t epos = s.find_first_of("eE");
  std::string mant = s.substr(0, epos);
  long exp10 = 0;
  if (epos != std::string::npos) {
    std::string e = s.substr(epos + 1);
    exp10 = parse_bigint(e).get_si();
  }
  bool neg = false;
  if (!mant.empty() && (mant[0] == '-' || mant[0] == '+')) {
    neg = mant[0] == '-';
    mant.erase(0, 1);
  }
  std::size_t dot = mant.find('.');
  std::string digits = mant;
  if (dot != std::string::npos) {
    digits = mant.substr(0, dot) + mant.substr(dot + 1);
    exp10 -= static_cast<long>(mant.size() - dot - 1);
  }
  if (digits.empty()) throw DomainError("malformed number '" + s + "'");
  Rational q(parse_bigint(digits));
  BigInt p10;
  mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
  if (exp10 >= 0)
    q *= p10;
  else
    q /= p10;
  q.canonicalize();
  return neg ? Rational(-q) : q;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(0, 1);
  if (s.empty()) throw DomainError("empty number");
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    BigInt num = parse_bigint(s.substr(0, slash));
    BigInt den = parse_bigint(s.substr(slash + 1));
    if (den == 0) throw DomainError("zero denominator in '" + s + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  if (s.find_first_of(".eE") != std::string::npos) return parse_decimal(s);
  return Rational(parse_bigint(s));
}

double to_double(const Rational& q) { return q.get_d(); }

Rational from_double(double x) {
  if (!std::isfinite(x)) throw DomainError("non-finite double");
  Rational q(x);
  return q;
}

}  // namespace kneadkit
