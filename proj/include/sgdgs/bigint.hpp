#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/rational_adaptor.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sgdgs {

// Expression templates off: values behave like plain value types under auto.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>, boost::multiprecision::et_off>;

inline BigInt numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline int sign(const BigInt& v) { return v.sign(); }
inline int sign(const Rational& v) { return v.sign(); }

inline BigInt abs(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

inline bool is_integral(const Rational& q) { return denominator(q) == 1; }

inline std::string to_string(const BigInt& v) { return v.str(); }

inline std::string to_string(const Rational& q) {
  if (is_integral(q)) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

/// Parses an optionally signed decimal integer; a leading '+' is accepted.
inline BigInt parse_bigint(std::string_view text) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t start = text.front() == '-' ? 1 : 0;
  if (start == text.size()) throw std::invalid_argument("bad integer literal '" + std::string(text) + "'");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') throw std::invalid_argument("bad integer literal '" + std::string(text) + "'");
  }
  return BigInt(std::string(text));
}

/// num/den in lowest terms; a negative denominator moves its sign up.
inline Rational make_rational(BigInt num, BigInt den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

/// Parses `a` or `a/b`; the result is canonical.
inline Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text));
  BigInt num = parse_bigint(text.substr(0, slash));
  BigInt den = parse_bigint(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return make_rational(num, den);
}

inline BigInt pow(BigInt base, unsigned exp) {
  BigInt result = 1;
  while (exp != 0) {
    if (exp & 1U) result *= base;
    exp >>= 1U;
    if (exp != 0) base *= base;
  }
  return result;
}

/// Floor of the square root of a nonnegative integer (Newton iteration).
inline BigInt isqrt(const BigInt& n) {
  if (n < 0) throw std::domain_error("isqrt of negative integer");
  if (n < 2) return n;
  BigInt x = BigInt(1) << ((boost::multiprecision::msb(n) / 2) + 1);
  while (true) {
    BigInt y = (x + n / x) >> 1;
    if (y >= x) break;
    x = y;
  }
  while (x * x > n) --x;
  while ((x + 1) * (x + 1) <= n) ++x;
  return x;
}

/// 2-adic valuation; zero has none and throws.
inline unsigned two_adic_valuation(const BigInt& n) {
  if (n == 0) throw std::domain_error("2-adic valuation of zero");
  return static_cast<unsigned>(boost::multiprecision::lsb(abs(n)));
}

}  // namespace sgdgs
