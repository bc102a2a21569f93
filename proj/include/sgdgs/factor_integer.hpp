#pragma once

#include "bigint.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace sgdgs {

struct PrimePower {
  BigInt prime;
  unsigned exponent = 0;
  bool probable = false;  // primality established by randomized Miller-Rabin only

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization with a unit sign; primes strictly increasing.
struct Factorization {
  int unit = 1;
  std::vector<PrimePower> factors;

  bool probabilistic() const {
    return std::any_of(factors.begin(), factors.end(), [](const PrimePower& f) { return f.probable; });
  }

  BigInt product() const {
    BigInt v = unit;
    for (const auto& f : factors) v *= pow(f.prime, f.exponent);
    return v;
  }

  /// e.g. "5 * 11 * 4754599" or "7^2 * 347 * 357175051"; "1" when empty.
  std::string to_string() const {
    std::string out = unit < 0 ? "-" : "";
    if (factors.empty()) return out + "1";
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) out += " * ";
      out += factors[i].prime.str();
      if (factors[i].exponent > 1) out += "^" + std::to_string(factors[i].exponent);
    }
    return out;
  }
};

namespace detail {

inline const BigInt& two_pow_64() {
  static const BigInt v = BigInt(1) << 64;
  return v;
}

inline bool miller_rabin_round(const BigInt& n, const BigInt& d, unsigned s, const BigInt& base) {
  BigInt a = base % n;
  if (a == 0) return true;
  BigInt x = boost::multiprecision::powm(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = x * x % n;
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace detail

struct PrimalityResult {
  bool prime = false;
  bool probable = false;  // true when the verdict is probabilistic
};

/// Miller-Rabin: deterministic with the first twelve prime bases below 2^64,
/// otherwise 64 random rounds.
inline PrimalityResult primality(const BigInt& n, std::uint64_t seed = 0x9e3779b97f4a7c15ULL) {
  if (n < 2) return {false, false};
  static constexpr unsigned small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (unsigned p : small) {
    if (n == p) return {true, false};
    if (n % p == 0) return {false, false};
  }
  BigInt d = n - 1;
  unsigned s = 0;
  while (!boost::multiprecision::bit_test(d, 0)) {
    d >>= 1;
    ++s;
  }
  if (n < detail::two_pow_64()) {
    for (unsigned p : small)
      if (!detail::miller_rabin_round(n, d, s, BigInt(p))) return {false, false};
    return {true, false};
  }
  std::mt19937_64 rng(seed);
  for (int round = 0; round < 64; ++round) {
    BigInt base = 2;
    for (int w = 0; w < 4; ++w) base = (base << 64) + rng();
    base = 2 + base % (n - 3);
    if (!detail::miller_rabin_round(n, d, s, base)) return {false, false};
  }
  return {true, true};
}

inline bool is_prime(const BigInt& n) { return primality(n).prime; }

namespace detail {

/// Brent's variant of Pollard rho; returns a nontrivial factor of composite odd n.
inline BigInt pollard_brent(const BigInt& n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  while (true) {
    BigInt y = BigInt(rng()) % n, c = 1 + BigInt(rng()) % (n - 1), m = 128;
    BigInt g = 1, r = 1, q = 1, x, ys;
    while (g == 1) {
      x = y;
      for (BigInt i = 0; i < r; ++i) y = (y * y + c) % n;
      BigInt k = 0;
      while (k < r && g == 1) {
        ys = y;
        BigInt lim = std::min(m, r - k);
        for (BigInt i = 0; i < lim; ++i) {
          y = (y * y + c) % n;
          q = q * abs(BigInt(x - y)) % n;
        }
        g = boost::multiprecision::gcd(q, n);
        k += m;
      }
      r <<= 1;
    }
    if (g == n) {
      do {
        ys = (ys * ys + c) % n;
        g = boost::multiprecision::gcd(abs(BigInt(x - ys)), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

inline void split_into(const BigInt& n, std::vector<std::pair<BigInt, bool>>& primes, std::uint64_t seed) {
  if (n == 1) return;
  PrimalityResult pr = primality(n);
  if (pr.prime) {
    primes.emplace_back(n, pr.probable);
    return;
  }
  BigInt d = pollard_brent(n, seed);
  split_into(d, primes, seed + 1);
  split_into(n / d, primes, seed + 2);
}

}  // namespace detail

/// Complete factorization: trial division by small primes, then Brent-Pollard rho
/// on the remaining cofactor with a Miller-Rabin certificate on each prime.
inline Factorization factor_integer(BigInt n) {
  if (n == 0) throw std::domain_error("factor_integer: zero has no factorization");
  Factorization out;
  if (n < 0) {
    out.unit = -1;
    n = -n;
  }
  std::vector<std::pair<BigInt, bool>> primes;
  constexpr unsigned trial_bound = 10000;
  for (unsigned p = 2; p < trial_bound && BigInt(p) * p <= n; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      primes.emplace_back(BigInt(p), false);
      n /= p;
    }
  }
  detail::split_into(n, primes, 0xfac7);
  std::sort(primes.begin(), primes.end());
  for (const auto& [p, probable] : primes) {
    if (!out.factors.empty() && out.factors.back().prime == p) {
      ++out.factors.back().exponent;
    } else {
      out.factors.push_back({p, 1, probable});
    }
  }
  return out;
}

struct OddSquarefreeResult {
  bool value = false;
  Factorization factorization;
};

/// True iff n is odd and no prime divides it twice.
inline OddSquarefreeResult is_odd_squarefree(const BigInt& n) {
  if (n < 1) throw std::domain_error("is_odd_squarefree: argument must be positive");
  OddSquarefreeResult r;
  r.factorization = factor_integer(n);
  r.value = boost::multiprecision::bit_test(n, 0) &&
            std::all_of(r.factorization.factors.begin(), r.factorization.factors.end(),
                        [](const PrimePower& f) { return f.exponent == 1; });
  return r;
}

}  // namespace sgdgs
