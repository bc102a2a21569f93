#pragma once

#include "bigint.hpp"
#include "errors.hpp"
#include "modpoly.hpp"
#include "polynomial.hpp"
#include "resultant.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace sgdgs {

enum class Irreducibility { Irreducible, Reducible, Unknown };

inline const char* to_string(Irreducibility s) {
  switch (s) {
    case Irreducibility::Irreducible: return "Irreducible";
    case Irreducibility::Reducible: return "Reducible";
    case Irreducibility::Unknown: return "Unknown";
  }
  return "?";
}

/// Outcome of an irreducibility test over Q. For Reducible, `factor` is a
/// primitive divisor of nontrivial degree; for Irreducible, `method` names how
/// it was established.
struct IrreducibilityVerdict {
  Irreducibility status = Irreducibility::Unknown;
  IntPolynomial factor;
  std::string method;

  bool irreducible() const { return status == Irreducibility::Irreducible; }
};

struct IrreducibilityOptions {
  int fast_path_primes = 25;
  bool allow_full_factorization = true;
  std::uint64_t seed = 0x5eed;
};

namespace detail {

inline std::uint64_t next_prime(std::uint64_t p) {
  for (std::uint64_t q = p + 1;; ++q) {
    bool prime = q >= 2;
    for (std::uint64_t d = 2; d * d <= q && prime; ++d) prime = q % d != 0;
    if (prime) return q;
  }
}

inline BigInt mod_floor(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return r;
}

/// Representative in (-m/2, m/2].
inline BigInt symmetric_mod(const BigInt& a, const BigInt& m) {
  BigInt r = mod_floor(a, m);
  if (r * 2 > m) r -= m;
  return r;
}

inline IntPolynomial reduce_poly(const IntPolynomial& f, const BigInt& m, bool symmetric = false) {
  std::vector<BigInt> v;
  v.reserve(f.coefficients().size());
  for (const auto& c : f.coefficients()) v.push_back(symmetric ? symmetric_mod(c, m) : mod_floor(c, m));
  return IntPolynomial(std::move(v));
}

inline IntPolynomial lift_poly(const modp::Poly& a) {
  std::vector<BigInt> v(a.begin(), a.end());
  return IntPolynomial(std::move(v));
}

inline BigInt mod_inverse(const BigInt& a, const BigInt& m) {
  BigInt r0 = mod_floor(a, m), r1 = m, s0 = 1, s1 = 0;
  while (r1 != 0) {
    BigInt q = r0 / r1;
    r0 = std::exchange(r1, r0 - q * r1);
    s0 = std::exchange(s1, s0 - q * s1);
  }
  if (r0 != 1) throw std::domain_error("mod_inverse: not invertible");
  return mod_floor(s0, m);
}

/// Lifts f = g h (mod p) to f = G H (mod p^k) with G monic and G = g, H = h (mod p).
inline std::pair<IntPolynomial, IntPolynomial> hensel_lift_pair(const IntPolynomial& f, const modp::Poly& g,
                                                                const modp::Poly& h, std::uint64_t p,
                                                                unsigned k) {
  auto [one, s, t] = modp::extended_gcd(g, h, p);
  if (modp::degree(one) != 0) throw InvariantViolation("hensel: modular factors are not coprime");
  IntPolynomial big_g = lift_poly(g), big_h = lift_poly(h);
  BigInt pk = p;
  for (unsigned step = 1; step < k; ++step) {
    IntPolynomial err = f - big_g * big_h;
    std::vector<BigInt> ev;
    for (const auto& c : err.coefficients()) {
      if (c % pk != 0) throw InvariantViolation("hensel: residual not divisible by p^k");
      ev.push_back(c / pk);
    }
    modp::Poly e = modp::reduce(IntPolynomial(std::move(ev)), p);
    auto [q, dg] = modp::divmod(modp::mul(t, e, p), g, p);
    modp::Poly dh = modp::add(modp::mul(s, e, p), modp::mul(q, h, p), p);
    big_g += lift_poly(dg) * pk;
    big_h += lift_poly(dh) * pk;
    pk *= p;
  }
  return {reduce_poly(big_g, pk), reduce_poly(big_h, pk)};
}

/// Lifts the monic modular factorization of f to monic factors modulo p^k.
inline std::vector<IntPolynomial> hensel_lift(IntPolynomial f, const std::vector<modp::Poly>& factors,
                                              std::uint64_t p, unsigned k) {
  const BigInt pk = pow(BigInt(p), k);
  std::vector<IntPolynomial> out;
  for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
    modp::Poly rest = modp::reduce(IntPolynomial::constant(f.lead()), p);
    for (std::size_t j = i + 1; j < factors.size(); ++j) rest = modp::mul(rest, factors[j], p);
    auto [g, h] = hensel_lift_pair(f, factors[i], rest, p, k);
    out.push_back(std::move(g));
    f = std::move(h);
  }
  const BigInt inv = mod_inverse(f.lead(), pk);
  out.push_back(reduce_poly(f * inv, pk));
  return out;
}

/// 2^deg * ceil(||f||_2) * |lc f|: bounds coefficients of lc(f) * (any factor) / lc(factor).
inline BigInt factor_coefficient_bound(const IntPolynomial& f) {
  BigInt norm2 = 0;
  for (const auto& c : f.coefficients()) norm2 += c * c;
  return (BigInt(1) << f.degree()) * (isqrt(norm2) + 1) * abs(f.lead());
}

struct PrimeChoice {
  std::uint64_t prime = 0;
  std::vector<modp::Poly> factors;
};

}  // namespace detail

/// Irreducible factors in Z[x] of a primitive squarefree polynomial (Zassenhaus:
/// factor mod p, Hensel-lift past twice the coefficient bound, recombine subsets).
/// Factors are primitive with positive leading coefficient, sorted by degree.
inline std::vector<IntPolynomial> factor_squarefree_zassenhaus(IntPolynomial f, std::uint64_t seed = 0x5eed,
                                                               std::uint64_t* prime_used = nullptr) {
  f = primitive_part(f);
  if (f.degree() <= 1) return {f};
  // pick the odd prime with fewest modular factors among the first few good ones
  detail::PrimeChoice best;
  int good = 0;
  for (std::uint64_t p = 3; good < 8; p = detail::next_prime(p)) {
    if (f.lead() % p == 0) continue;
    modp::Poly fp = modp::reduce(f, p);
    if (modp::degree(modp::gcd(fp, modp::derivative(fp, p), p)) > 0) continue;
    ++good;
    auto facs = modp::factor_squarefree(fp, p, seed);
    if (best.prime == 0 || facs.size() < best.factors.size()) best = {p, std::move(facs)};
    if (best.factors.size() == 1) break;
  }
  if (prime_used) *prime_used = best.prime;
  if (best.factors.size() == 1) return {f};

  const BigInt bound = 2 * detail::factor_coefficient_bound(f);
  unsigned k = 1;
  BigInt pk = best.prime;
  while (pk <= bound) {
    pk *= best.prime;
    ++k;
  }
  std::vector<IntPolynomial> lifted = detail::hensel_lift(f, best.factors, best.prime, k);

  std::vector<IntPolynomial> found;
  std::size_t subset_size = 1;
  while (2 * subset_size <= lifted.size()) {
    const std::size_t r = lifted.size();
    std::vector<std::size_t> idx(subset_size);
    for (std::size_t i = 0; i < subset_size; ++i) idx[i] = i;
    bool split = false;
    while (true) {
      IntPolynomial cand = IntPolynomial::constant(f.lead());
      for (std::size_t i : idx) cand = detail::reduce_poly(cand * lifted[i], pk);
      cand = primitive_part(detail::reduce_poly(cand, pk, true));
      if (cand.degree() > 0 && f.coeff(0) != 0 && cand.coeff(0) != 0 && f.coeff(0) % cand.coeff(0) != 0) {
        // constant-term test fails
      } else if (cand.degree() > 0) {
        if (auto q = exact_divide(f, cand)) {
          found.push_back(cand);
          f = std::move(*q);
          std::vector<IntPolynomial> rest;
          for (std::size_t i = 0, j = 0; i < r; ++i) {
            if (j < idx.size() && idx[j] == i) {
              ++j;
              continue;
            }
            rest.push_back(std::move(lifted[i]));
          }
          lifted = std::move(rest);
          split = true;
          break;
        }
      }
      // next combination
      std::size_t pos = subset_size;
      while (pos > 0 && idx[pos - 1] == r - subset_size + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t i = pos; i < subset_size; ++i) idx[i] = idx[i - 1] + 1;
    }
    if (!split) ++subset_size;
  }
  if (f.degree() > 0) found.push_back(primitive_part(f));
  std::sort(found.begin(), found.end(), [](const IntPolynomial& a, const IntPolynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.coefficients() < b.coefficients();
  });
  return found;
}

struct PolyFactor {
  IntPolynomial factor;
  unsigned multiplicity = 1;
};

/// f = content * prod factor^multiplicity with primitive factors of positive
/// leading coefficient; content carries the sign.
struct PolyFactorization {
  BigInt content = 1;
  std::vector<PolyFactor> factors;

  IntPolynomial product() const {
    IntPolynomial p = IntPolynomial::constant(content);
    for (const auto& f : factors)
      for (unsigned i = 0; i < f.multiplicity; ++i) p *= f.factor;
    return p;
  }
};

/// Complete factorization over Z: Yun squarefree decomposition then Zassenhaus.
inline PolyFactorization factor(const IntPolynomial& f, std::uint64_t seed = 0x5eed) {
  if (f.is_zero()) throw std::domain_error("factor: zero polynomial");
  PolyFactorization out;
  out.content = content(f);
  if (f.lead() < 0) out.content = -out.content;
  if (f.degree() == 0) return out;
  // Yun's algorithm over Q
  RatPolynomial a = to_rational(primitive_part(f));
  RatPolynomial b = gcd(a, a.derivative());
  RatPolynomial c = divmod(a, b).first;
  RatPolynomial d = divmod(a.derivative(), b).first - c.derivative();
  unsigned mult = 1;
  while (c.degree() > 0) {
    RatPolynomial g = gcd(c, d);
    if (g.degree() > 0) {
      for (auto& irr : factor_squarefree_zassenhaus(primitive_part(g), seed)) out.factors.push_back({irr, mult});
    }
    c = divmod(c, g).first;
    d = divmod(d, g).first - c.derivative();
    ++mult;
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const PolyFactor& x, const PolyFactor& y) {
    if (x.factor.degree() != y.factor.degree()) return x.factor.degree() < y.factor.degree();
    return x.factor.coefficients() < y.factor.coefficients();
  });
  return out;
}

/// Irreducibility over Q. Tries f mod p for the first `fast_path_primes`
/// primes not dividing lc(f) * disc(f); falls back to full factorization.
inline IrreducibilityVerdict is_irreducible(const IntPolynomial& input, const IrreducibilityOptions& opts = {}) {
  if (input.is_zero()) throw std::domain_error("is_irreducible: zero polynomial");
  if (input.degree() < 1) throw std::domain_error("is_irreducible: degree must be at least 1");
  const IntPolynomial f = primitive_part(input);
  IrreducibilityVerdict v;
  if (f.degree() == 1) {
    v.status = Irreducibility::Irreducible;
    v.method = "degree 1";
    return v;
  }
  RatPolynomial fr = to_rational(f);
  RatPolynomial g = gcd(fr, fr.derivative());
  if (g.degree() > 0) {
    v.status = Irreducibility::Reducible;
    v.factor = primitive_part(g);
    v.method = "repeated factor gcd(f, f')";
    return v;
  }
  const BigInt lc_disc = f.lead() * discriminant(f);
  int tried = 0;
  for (std::uint64_t p = 2; tried < opts.fast_path_primes; p = detail::next_prime(p)) {
    if (lc_disc % p == 0) continue;
    ++tried;
    if (modp::is_irreducible(modp::monic(modp::reduce(f, p), p), p)) {
      v.status = Irreducibility::Irreducible;
      v.method = "irreducible mod " + std::to_string(p);
      return v;
    }
  }
  if (!opts.allow_full_factorization) {
    v.status = Irreducibility::Unknown;
    v.method = "modular fast path inconclusive";
    return v;
  }
  std::uint64_t prime = 0;
  auto factors = factor_squarefree_zassenhaus(f, opts.seed, &prime);
  if (factors.size() == 1) {
    v.status = Irreducibility::Irreducible;
    v.method = "full factorization (Zassenhaus, p = " + std::to_string(prime) + ")";
  } else {
    v.status = Irreducibility::Reducible;
    v.factor = factors.front();
    v.method = "full factorization (Zassenhaus, p = " + std::to_string(prime) + ")";
  }
  return v;
}

}  // namespace sgdgs
