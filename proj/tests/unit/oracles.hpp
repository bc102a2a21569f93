#pragma once

// Slow, independent reference implementations used only by the tests.

#include "sgdgs/matrix.hpp"
#include "sgdgs/polynomial.hpp"
#include "sgdgs/signed_graph.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using sgdgs::BigInt;
using sgdgs::IntMatrix;
using sgdgs::IntPolynomial;
using sgdgs::SignedEdge;
using sgdgs::SignedGraph;

/// Leibniz expansion over all permutations.
inline BigInt leibniz_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  BigInt total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inversions;
    BigInt term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n && term != 0; ++i) term *= m(i, p[i]);
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

/// det(xI - A) by Laplace expansion along the first row with polynomial entries.
inline IntPolynomial cofactor_charpoly(const IntMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<std::vector<IntPolynomial>> m(n, std::vector<IntPolynomial>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = IntPolynomial::constant(BigInt(-a(i, j))) + (i == j ? IntPolynomial::x() : IntPolynomial());
  std::function<IntPolynomial(const std::vector<std::size_t>&, std::size_t)> rec = [&](const std::vector<std::size_t>& cols, std::size_t row) {
    if (cols.empty()) return IntPolynomial::constant(1);
    IntPolynomial total;
    for (std::size_t k = 0; k < cols.size(); ++k) {
      if (m[row][cols[k]].is_zero()) continue;
      std::vector<std::size_t> rest = cols;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
      IntPolynomial term = m[row][cols[k]] * rec(rest, row + 1);
      total = k % 2 ? total - term : total + term;
    }
    return total;
  };
  std::vector<std::size_t> cols(n);
  std::iota(cols.begin(), cols.end(), 0);
  return rec(cols, 0);
}

/// prod_{i<j} (r_i - r_j)^2
inline BigInt root_product_discriminant(const std::vector<long>& roots) {
  BigInt d = 1;
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j) d *= BigInt(roots[i] - roots[j]) * BigInt(roots[i] - roots[j]);
  return d;
}

inline IntPolynomial from_roots(const std::vector<long>& roots) {
  IntPolynomial p = IntPolynomial::constant(1);
  for (long r : roots) p *= IntPolynomial({BigInt(-r), BigInt(1)});
  return p;
}

/// Remainder of a by a monic b over Z, by schoolbook long division.
inline std::vector<BigInt> monic_remainder(std::vector<BigInt> a, const std::vector<BigInt>& b) {
  const std::size_t db = b.size() - 1;
  for (std::size_t k = a.size(); k-- > db;) {
    const BigInt c = a[k];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) a[k - db + j] -= c * b[j];
  }
  a.resize(db);
  return a;
}

/// True iff a monic f of small height has a monic factor of degree 1..deg/2,
/// found by enumerating all candidates inside the Mignotte box.
inline bool brute_force_reducible(const IntPolynomial& f) {
  const int n = f.degree();
  const auto& fc = f.coefficients();
  if (fc[0] == 0) return n > 1;
  BigInt norm2 = 0;
  for (const auto& c : fc) norm2 += c * c;
  BigInt norm = 1;
  while (norm * norm < norm2) ++norm;
  const BigInt f0 = fc[0] < 0 ? BigInt(-fc[0]) : fc[0];
  std::vector<BigInt> const_divisors;
  for (BigInt d = 1; d <= f0; ++d)
    if (f0 % d == 0) {
      const_divisors.push_back(d);
      const_divisors.push_back(-d);
    }
  for (int d = 1; d <= n / 2; ++d) {
    std::vector<long> bound(static_cast<std::size_t>(d));
    for (int i = 1; i < d; ++i) {
      BigInt binom = 1;
      for (int t = 0; t < i; ++t) binom = binom * (d - t) / (t + 1);
      bound[static_cast<std::size_t>(i)] = static_cast<long>(binom * norm);
    }
    std::vector<BigInt> g(static_cast<std::size_t>(d) + 1, BigInt(0));
    g[static_cast<std::size_t>(d)] = 1;
    std::function<bool(int)> rec = [&](int i) -> bool {
      if (i == d) {
        for (const auto& c0 : const_divisors) {
          g[0] = c0;
          auto r = monic_remainder(fc, g);
          if (std::all_of(r.begin(), r.end(), [](const BigInt& x) { return x == 0; })) return true;
        }
        return false;
      }
      for (long c = -bound[static_cast<std::size_t>(i)]; c <= bound[static_cast<std::size_t>(i)]; ++c) {
        g[static_cast<std::size_t>(i)] = c;
        if (rec(i + 1)) return true;
      }
      return false;
    };
    if (rec(1)) return true;
  }
  return false;
}

/// Deterministic Miller-Rabin for 64-bit inputs with 128-bit products.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  auto mul = [n](std::uint64_t a, std::uint64_t b) { return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n); };
  auto pw = [&](std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  };
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pw(a, d);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul(x, x);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// Canonical code of a free tree on <= 16 vertices: the larger of the rooted
/// codes at its centers, each code a bit string packed into 64 bits.
class TreeCoder {
 public:
  std::uint64_t code(int n, const std::vector<std::pair<int, int>>& edges) {
    adj_.assign(static_cast<std::size_t>(n), {});
    for (auto [u, v] : edges) {
      adj_[static_cast<std::size_t>(u)].push_back(v);
      adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    if (n == 1) return 2;
    // centers by repeated leaf stripping
    std::vector<int> deg(static_cast<std::size_t>(n)), layer;
    for (int v = 0; v < n; ++v) {
      deg[static_cast<std::size_t>(v)] = static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
      if (deg[static_cast<std::size_t>(v)] <= 1) layer.push_back(v);
    }
    int remaining = n;
    while (remaining > 2) {
      remaining -= static_cast<int>(layer.size());
      std::vector<int> next;
      for (int v : layer)
        for (int w : adj_[static_cast<std::size_t>(v)])
          if (--deg[static_cast<std::size_t>(w)] == 1) next.push_back(w);
      layer = next;
    }
    std::uint64_t best = 0;
    for (int c : layer) best = std::max(best, rooted(c, -1).first);
    return best;
  }

 private:
  // (bits, length), "1" + children sorted descending + "0"
  std::pair<std::uint64_t, int> rooted(int v, int parent) {
    std::vector<std::pair<std::uint64_t, int>> kids;
    for (int w : adj_[static_cast<std::size_t>(v)])
      if (w != parent) kids.push_back(rooted(w, v));
    std::sort(kids.begin(), kids.end(), [](const auto& a, const auto& b) {
      const std::uint64_t ka = a.first << (64 - a.second), kb = b.first << (64 - b.second);
      return ka != kb ? ka > kb : a.second > b.second;
    });
    std::uint64_t bits = 1;
    int len = 1;
    for (auto [b, l] : kids) {
      bits = (bits << l) | b;
      len += l;
    }
    return {bits << 1, len + 1};
  }

  std::vector<std::vector<int>> adj_;
};

/// Number of free trees on n vertices, by decoding Prufer sequences and
/// deduplicating canonical codes. For n >= 3 only sequences starting with 0
/// are decoded: relabelling a leaf as 1 and its neighbour as 0 shows every
/// tree has such a sequence.
inline std::size_t prufer_tree_count(int n, bool restrict_first = true) {
  if (n <= 2) return 1;
  const int len = n - 2;
  std::vector<int> seq(static_cast<std::size_t>(len), 0);
  std::set<std::uint64_t> codes;
  TreeCoder coder;
  std::vector<int> degree(static_cast<std::size_t>(n));
  std::vector<std::pair<int, int>> edges;
  for (;;) {
    std::fill(degree.begin(), degree.end(), 1);
    for (int s : seq) ++degree[static_cast<std::size_t>(s)];
    edges.clear();
    for (int s : seq) {
      int leaf = 0;
      while (degree[static_cast<std::size_t>(leaf)] != 1) ++leaf;
      edges.emplace_back(leaf, s);
      --degree[static_cast<std::size_t>(leaf)];
      --degree[static_cast<std::size_t>(s)];
    }
    int u = -1, v = -1;
    for (int w = 0; w < n; ++w)
      if (degree[static_cast<std::size_t>(w)] == 1) (u < 0 ? u : v) = w;
    edges.emplace_back(u, v);
    codes.insert(coder.code(n, edges));
    // odometer, optionally holding seq[0] at 0
    int k = len - 1;
    const int stop = restrict_first ? 1 : 0;
    while (k >= stop && seq[static_cast<std::size_t>(k)] == n - 1) seq[static_cast<std::size_t>(k--)] = 0;
    if (k < stop) break;
    ++seq[static_cast<std::size_t>(k)];
  }
  return codes.size();
}

/// Isomorphism by trying every vertex permutation.
inline bool brute_force_isomorphic(const SignedGraph& g, const SignedGraph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  const IntMatrix a = sgdgs::adjacency(g), b = sgdgs::adjacency(h);
  const std::size_t n = a.rows();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = i + 1; j < n && ok; ++j) ok = a(i, j) == b(p[i], p[j]);
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

inline SignedGraph random_signed_graph(int n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution edge(density), neg(0.5);
  std::vector<SignedEdge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (edge(rng)) edges.push_back({u, v, neg(rng) ? -1 : 1});
  return SignedGraph(n, edges);
}

/// Random labelled tree via a random Prufer sequence, with random signs.
inline SignedGraph random_signed_tree(int n, std::mt19937_64& rng) {
  if (n == 1) return SignedGraph(1, {});
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::bernoulli_distribution neg(0.5);
  std::vector<int> seq(static_cast<std::size_t>(std::max(n - 2, 0)));
  for (auto& s : seq) s = pick(rng);
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int s : seq) ++degree[static_cast<std::size_t>(s)];
  std::vector<SignedEdge> edges;
  for (int s : seq) {
    int leaf = 0;
    while (degree[static_cast<std::size_t>(leaf)] != 1) ++leaf;
    edges.push_back({std::min(leaf, s), std::max(leaf, s), neg(rng) ? -1 : 1});
    --degree[static_cast<std::size_t>(leaf)];
    --degree[static_cast<std::size_t>(s)];
  }
  int u = -1, v = -1;
  for (int w = 0; w < n; ++w)
    if (degree[static_cast<std::size_t>(w)] == 1) (u < 0 ? u : v) = w;
  edges.push_back({u, v, neg(rng) ? -1 : 1});
  return SignedGraph(n, edges);
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace oracle
