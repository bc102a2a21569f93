#pragma once

#include "bigint.hpp"
#include "polynomial.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

namespace sgdgs::modp {

// Polynomials over F_p for a word-sized prime p, ascending coefficients,
// no trailing zeros. Used by the irreducibility test and Zassenhaus.
using Poly = std::vector<std::uint64_t>;

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}
inline int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = mulmod(r, b, p);
    b = mulmod(b, b, p);
    e >>= 1;
  }
  return r;
}

inline std::uint64_t inverse(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw std::domain_error("modp: inverse of zero");
  return powmod(a, p - 2, p);
}

inline std::uint64_t reduce(const BigInt& v, std::uint64_t p) {
  BigInt r = v % p;
  if (r < 0) r += p;
  return r.convert_to<std::uint64_t>();
}

inline Poly reduce(const IntPolynomial& f, std::uint64_t p) {
  Poly a;
  a.reserve(f.coefficients().size());
  for (const auto& c : f.coefficients()) a.push_back(reduce(c, p));
  trim(a);
  return a;
}

inline Poly add(const Poly& a, const Poly& b, std::uint64_t p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint64_t x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
    r[i] = (x + y) % p;
  }
  trim(r);
  return r;
}

inline Poly sub(const Poly& a, const Poly& b, std::uint64_t p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint64_t x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
    r[i] = (x + p - y) % p;
  }
  trim(r);
  return r;
}

inline Poly mul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
  }
  trim(r);
  return r;
}

inline Poly scale(const Poly& a, std::uint64_t s, std::uint64_t p) {
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mulmod(a[i], s, p);
  trim(r);
  return r;
}

inline std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, std::uint64_t p) {
  if (b.empty()) throw std::domain_error("modp: division by zero polynomial");
  if (a.size() < b.size()) return {Poly{}, a};
  Poly rem = a;
  const std::size_t db = b.size() - 1;
  Poly quot(a.size() - db, 0);
  const std::uint64_t inv_lead = inverse(b.back(), p);
  for (std::size_t k = a.size(); k-- > db;) {
    if (rem[k] == 0) continue;
    std::uint64_t f = mulmod(rem[k], inv_lead, p);
    quot[k - db] = f;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] = (rem[k - db + j] + p - mulmod(f, b[j], p)) % p;
  }
  rem.resize(db);
  trim(rem);
  trim(quot);
  return {quot, rem};
}

inline Poly mod(const Poly& a, const Poly& b, std::uint64_t p) { return divmod(a, b, p).second; }

inline Poly monic(const Poly& a, std::uint64_t p) {
  if (a.empty()) return a;
  return scale(a, inverse(a.back(), p), p);
}

inline Poly gcd(Poly a, Poly b, std::uint64_t p) {
  while (!b.empty()) {
    Poly r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

/// Returns (g, s, t) with s a + t b = g, g monic.
inline std::tuple<Poly, Poly, Poly> extended_gcd(const Poly& a, const Poly& b, std::uint64_t p) {
  Poly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, p);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, sub(s0, mul(q, s1, p), p));
    t0 = std::exchange(t1, sub(t0, mul(q, t1, p), p));
  }
  if (r0.empty()) return {r0, s0, t0};
  std::uint64_t inv = inverse(r0.back(), p);
  return {scale(r0, inv, p), scale(s0, inv, p), scale(t0, inv, p)};
}

inline Poly mulmod_poly(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p) {
  return mod(mul(a, b, p), m, p);
}

/// base^e mod m for an arbitrary-precision exponent.
inline Poly powmod(Poly base, BigInt e, const Poly& m, std::uint64_t p) {
  Poly result{1};
  result = mod(result, m, p);
  base = mod(base, m, p);
  while (e > 0) {
    if (boost::multiprecision::bit_test(e, 0)) result = mulmod_poly(result, base, m, p);
    e >>= 1;
    if (e > 0) base = mulmod_poly(base, base, m, p);
  }
  return result;
}

inline Poly derivative(const Poly& a, std::uint64_t p) {
  if (a.size() <= 1) return {};
  Poly d(a.size() - 1);
  for (std::size_t k = 1; k < a.size(); ++k) d[k - 1] = mulmod(a[k], k % p, p);
  trim(d);
  return d;
}

struct DegreeBlock {
  Poly product;  // monic product of all irreducible factors of this degree
  int degree;
};

/// Distinct-degree factorization of a monic squarefree polynomial.
inline std::vector<DegreeBlock> distinct_degree_factor(Poly f, std::uint64_t p) {
  std::vector<DegreeBlock> out;
  const Poly x{0, 1};
  Poly h = mod(x, f, p);
  int d = 0;
  while (degree(f) >= 2 * (d + 1)) {
    ++d;
    h = powmod(h, BigInt(p), f, p);
    Poly g = gcd(f, sub(h, x, p), p);
    if (degree(g) > 0) {
      out.push_back({g, d});
      f = divmod(f, g, p).first;
      h = mod(h, f, p);
    }
  }
  if (degree(f) > 0) out.push_back({monic(f, p), degree(f)});
  return out;
}

/// f monic squarefree of degree >= 1 with p not dividing disc(f): irreducible iff
/// it has no factor of degree <= deg/2.
inline bool is_irreducible(const Poly& f, std::uint64_t p) {
  if (degree(f) <= 1) return degree(f) == 1;
  const Poly x{0, 1};
  Poly h = mod(x, f, p);
  for (int d = 1; 2 * d <= degree(f); ++d) {
    h = powmod(h, BigInt(p), f, p);
    if (degree(gcd(f, sub(h, x, p), p)) > 0) return false;
  }
  return true;
}

/// Cantor-Zassenhaus equal-degree splitting for odd p.
inline std::vector<Poly> equal_degree_factor(const Poly& f, int d, std::uint64_t p, std::mt19937_64& rng) {
  if (degree(f) == d) return {monic(f, p)};
  if (p == 2) throw std::domain_error("equal_degree_factor: p must be odd");
  const BigInt exponent = (pow(BigInt(p), static_cast<unsigned>(d)) - 1) / 2;
  std::uniform_int_distribution<std::uint64_t> coeff(0, p - 1);
  while (true) {
    Poly a(static_cast<std::size_t>(degree(f)));
    for (auto& c : a) c = coeff(rng);
    trim(a);
    if (degree(a) < 1) continue;
    Poly g = gcd(f, a, p);
    if (degree(g) > 0 && degree(g) < degree(f)) {
      auto left = equal_degree_factor(g, d, p, rng);
      auto right = equal_degree_factor(divmod(f, g, p).first, d, p, rng);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
    Poly b = sub(powmod(a, exponent, f, p), Poly{1}, p);
    g = gcd(f, b, p);
    if (degree(g) > 0 && degree(g) < degree(f)) {
      auto left = equal_degree_factor(g, d, p, rng);
      auto right = equal_degree_factor(divmod(f, g, p).first, d, p, rng);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
  }
}

/// Monic irreducible factors of a squarefree polynomial, sorted by (degree, coefficients).
inline std::vector<Poly> factor_squarefree(const Poly& f, std::uint64_t p, std::uint64_t seed = 0x5eed) {
  std::mt19937_64 rng(seed);
  std::vector<Poly> out;
  for (const auto& block : distinct_degree_factor(monic(f, p), p)) {
    auto parts = equal_degree_factor(block.product, block.degree, p, rng);
    out.insert(out.end(), parts.begin(), parts.end());
  }
  std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return out;
}

}  // namespace sgdgs::modp
