#pragma once

#include "bigint.hpp"
#include "errors.hpp"

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace sgdgs {

/// Dense univariate polynomial, coefficients in ascending degree.
/// The coefficient vector never ends in a zero, so the zero polynomial is empty.
template <typename T>
class Polynomial {
 public:
  using value_type = T;

  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<T> coeffs) : coeffs_(coeffs) { trim(); }

  static Polynomial constant(T c) { return Polynomial(std::vector<T>{std::move(c)}); }
  static Polynomial x() { return Polynomial(std::vector<T>{T(0), T(1)}); }
  /// c * x^k
  static Polynomial monomial(T c, std::size_t k) {
    std::vector<T> v(k + 1, T(0));
    v[k] = std::move(c);
    return Polynomial(std::move(v));
  }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<T>& coefficients() const { return coeffs_; }
  T coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : T(0); }
  const T& lead() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
  }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  T operator()(const T& at) const {
    T acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const T& s) {
    if (s == 0) {
      coeffs_.clear();
      return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const T& s) { return a *= s; }
  friend Polynomial operator*(const T& s, Polynomial a) { return a *= s; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> out(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<T> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * T(static_cast<long long>(k));
    return Polynomial(std::move(d));
  }

  /// p(-x)
  Polynomial reflected() const {
    Polynomial r = *this;
    for (std::size_t k = 1; k < r.coeffs_.size(); k += 2) r.coeffs_[k] = -r.coeffs_[k];
    return r;
  }

  /// p(x^2)
  Polynomial in_square() const {
    if (is_zero()) return {};
    std::vector<T> v(2 * coeffs_.size() - 1, T(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) v[2 * k] = coeffs_[k];
    return Polynomial(std::move(v));
  }

  /// Human-readable form in descending degree, e.g. "x^2 - 1".
  std::string to_string(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
      T c = coeffs_[k];
      if (c == 0) continue;
      bool neg = c < 0;
      T mag = neg ? T(-c) : c;
      if (first) {
        if (neg) os << "-";
      } else {
        os << (neg ? " - " : " + ");
      }
      first = false;
      bool unit = (mag == 1);
      if (!unit || k == 0) os << sgdgs::to_string(mag);
      if (k >= 1) {
        if (!unit) os << "*";
        os << var;
        if (k >= 2) os << "^" << k;
      }
    }
    return os.str();
  }

  /// Space-separated ascending coefficients, the polynomial text format.
  std::string to_coefficient_line() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (k) out += ' ';
      out += sgdgs::to_string(coeffs_[k]);
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

using IntPolynomial = Polynomial<BigInt>;
using RatPolynomial = Polynomial<Rational>;

inline RatPolynomial to_rational(const IntPolynomial& p) {
  std::vector<Rational> v;
  v.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) v.emplace_back(c);
  return RatPolynomial(std::move(v));
}

/// Quotient and remainder over a field.
template <typename T>
std::pair<Polynomial<T>, Polynomial<T>> divmod(const Polynomial<T>& a, const Polynomial<T>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial<T>{}, a};
  std::vector<T> rem = a.coefficients();
  const int db = b.degree();
  std::vector<T> quot(static_cast<std::size_t>(a.degree() - db + 1), T(0));
  const T& lb = b.lead();
  for (int k = a.degree(); k >= db; --k) {
    if (rem[k] == 0) continue;
    T factor = rem[k] / lb;
    quot[k - db] = factor;
    for (int j = 0; j <= db; ++j) rem[k - db + j] -= factor * b.coefficients()[j];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Polynomial<T>(std::move(quot)), Polynomial<T>(std::move(rem))};
}

template <typename T>
Polynomial<T> operator%(const Polynomial<T>& a, const Polynomial<T>& b) {
  return divmod(a, b).second;
}

inline RatPolynomial make_monic(const RatPolynomial& p) {
  if (p.is_zero()) return p;
  return p * Rational(1 / p.lead());
}

/// Monic gcd over the rationals; gcd(0, 0) = 0.
inline RatPolynomial gcd(RatPolynomial a, RatPolynomial b) {
  while (!b.is_zero()) {
    RatPolynomial r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

struct ExtendedGcd {
  RatPolynomial gcd;  // monic
  RatPolynomial s;    // s*a + t*b = gcd
  RatPolynomial t;
};

inline ExtendedGcd extended_gcd(const RatPolynomial& a, const RatPolynomial& b) {
  RatPolynomial r0 = a, r1 = b;
  RatPolynomial s0 = RatPolynomial::constant(1), s1;
  RatPolynomial t0, t1 = RatPolynomial::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rational inv = 1 / r0.lead();
  return {r0 * inv, s0 * inv, t0 * inv};
}

/// gcd of the coefficients, nonnegative; zero for the zero polynomial.
inline BigInt content(const IntPolynomial& p) {
  BigInt g = 0;
  for (const auto& c : p.coefficients()) {
    g = boost::multiprecision::gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

/// p / content(p), with positive leading coefficient.
inline IntPolynomial primitive_part(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  BigInt g = content(p);
  if (p.lead() < 0) g = -g;
  std::vector<BigInt> v = p.coefficients();
  for (auto& c : v) c /= g;
  return IntPolynomial(std::move(v));
}

/// Clears denominators and takes the primitive part.
inline IntPolynomial primitive_part(const RatPolynomial& p) {
  if (p.is_zero()) return {};
  BigInt l = 1;
  for (const auto& c : p.coefficients()) l = boost::multiprecision::lcm(l, denominator(c));
  std::vector<BigInt> v;
  v.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) v.push_back(numerator(c) * (l / denominator(c)));
  return primitive_part(IntPolynomial(std::move(v)));
}

/// Exact division in Z[x]; empty result when b does not divide a.
inline std::optional<IntPolynomial> exact_divide(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.is_zero()) return IntPolynomial{};
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<BigInt> rem = a.coefficients();
  const int db = b.degree();
  std::vector<BigInt> quot(static_cast<std::size_t>(a.degree() - db + 1), BigInt(0));
  const BigInt& lb = b.lead();
  for (int k = a.degree(); k >= db; --k) {
    if (rem[k] == 0) continue;
    BigInt q, r;
    boost::multiprecision::divide_qr(rem[k], lb, q, r);
    if (r != 0) return std::nullopt;
    quot[k - db] = q;
    for (int j = 0; j <= db; ++j) rem[k - db + j] -= q * b.coefficients()[j];
  }
  for (int j = 0; j < db; ++j) {
    if (rem[j] != 0) return std::nullopt;
  }
  return IntPolynomial(std::move(quot));
}

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, computed in Z[x].
inline IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("pseudo-remainder by zero polynomial");
  if (a.degree() < b.degree()) return a;
  std::vector<BigInt> rem = a.coefficients();
  const int db = b.degree();
  const BigInt& lb = b.lead();
  for (int k = a.degree(); k >= db; --k) {
    BigInt top = rem[k];
    for (int j = 0; j <= k; ++j) rem[j] *= lb;
    for (int j = 0; j <= db; ++j) rem[k - db + j] -= top * b.coefficients()[j];
  }
  rem.resize(static_cast<std::size_t>(db));
  return IntPolynomial(std::move(rem));
}

/// Parses the ascending-coefficient text format: "-1 0 1" is x^2 - 1.
inline IntPolynomial parse_int_polynomial(const std::string& line) {
  std::istringstream in(line);
  std::vector<BigInt> coeffs;
  std::string tok;
  while (in >> tok) {
    try {
      coeffs.push_back(parse_bigint(tok));
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("polynomial: ") + e.what());
    }
  }
  if (coeffs.empty()) throw ParseError("polynomial: no coefficients");
  return IntPolynomial(std::move(coeffs));
}

}  // namespace sgdgs
