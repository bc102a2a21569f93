#include "oracles.hpp"
#include "sgdgs/datasets.hpp"
#include "sgdgs/signed_graph.hpp"
#include "sgdgs/spectra.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace sgdgs;

namespace {

SignedGraph path(int n, int sign = 1) {
  std::vector<SignedEdge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1, sign});
  return SignedGraph(n, e);
}

SignedGraph triangle(int negatives) {
  std::vector<SignedEdge> e{{0, 1, 1}, {1, 2, 1}, {0, 2, 1}};
  for (int k = 0; k < negatives; ++k) e[static_cast<std::size_t>(k)].sign = -1;
  return SignedGraph(3, e);
}

std::vector<int> subset_from_mask(int n, unsigned mask) {
  std::vector<int> u;
  for (int v = 0; v < n; ++v)
    if (mask >> v & 1u) u.push_back(v);
  return u;
}

}  // namespace

TEST(SignedGraph, ValidatesInput) {
  EXPECT_THROW(SignedGraph(2, {{0, 0, 1}}), PreconditionError);
  EXPECT_THROW(SignedGraph(2, {{0, 2, 1}}), PreconditionError);
  EXPECT_THROW(SignedGraph(2, {{0, 1, 2}}), PreconditionError);
  EXPECT_THROW(SignedGraph(2, {{0, 1, 1}, {1, 0, -1}}), PreconditionError);
  EXPECT_NO_THROW(SignedGraph(1, {}));
}

TEST(Adjacency, Examples) {
  EXPECT_EQ(adjacency(SignedGraph(2, {{0, 1, 1}})), (IntMatrix{{0, 1}, {1, 0}}));
  EXPECT_EQ(adjacency(SignedGraph(2, {{0, 1, -1}})), (IntMatrix{{0, -1}, {-1, 0}}));
  const IntMatrix m = datasets::remark1_m();
  const IntMatrix a = adjacency(datasets::remark1_a());
  EXPECT_EQ(a.block(0, 9, 9, 9), m);
  EXPECT_EQ(a.block(9, 0, 9, 9), m.transpose());
  EXPECT_TRUE(a.block(0, 0, 9, 9).is_zero());
  EXPECT_TRUE(a.block(9, 9, 9, 9).is_zero());
  EXPECT_EQ(from_adjacency(a), datasets::remark1_a());
}

TEST(Bipartition, TreesUseDepthParity) {
  const Bipartition b = bipartition(path(4));
  EXPECT_EQ(b.left, (std::vector<int>{0, 2}));
  EXPECT_EQ(b.right, (std::vector<int>{1, 3}));
  std::mt19937_64 rng(31);
  for (int t = 0; t < 50; ++t) {
    const SignedGraph g = oracle::random_signed_tree(2 + t % 12, rng);
    const Bipartition bp = bipartition(g);
    EXPECT_NO_THROW(validate_bipartition(g, bp));
    EXPECT_EQ(bp.left.front(), 0);
  }
}

TEST(Bipartition, OddCycleWitness) {
  try {
    bipartition(triangle(0));
    FAIL() << "expected NotBipartiteError";
  } catch (const NotBipartiteError& e) {
    const auto& w = e.odd_closed_walk();
    ASSERT_GE(w.size(), 4u);
    EXPECT_EQ(w.front(), w.back());
    EXPECT_EQ((w.size() - 1) % 2, 1u);
  }
}

TEST(Bipartition, RemarkOneHasEqualParts) {
  const Bipartition b = bipartition(datasets::remark1_a());
  EXPECT_EQ(b.left.size(), 9u);
  EXPECT_EQ(b.right.size(), 9u);
}

TEST(BipartiteAdjacency, Examples) {
  EXPECT_EQ(bipartite_adjacency(SignedGraph(2, {{0, 1, 1}}), bipartition(SignedGraph(2, {{0, 1, 1}}))), (IntMatrix{{1}}));
  EXPECT_EQ(bipartite_adjacency(path(4), Bipartition{{0, 2}, {1, 3}}), (IntMatrix{{1, 0}, {1, 1}}));
  EXPECT_EQ(bipartite_adjacency(datasets::remark1_a(), bipartition(datasets::remark1_a())), datasets::remark1_m());
  EXPECT_EQ(bipartite_adjacency(datasets::remark2_b(), bipartition(datasets::remark2_b())), datasets::remark2_m_tilde());
  EXPECT_THROW(bipartite_adjacency(path(4), Bipartition{{0, 1}, {2, 3}}), PreconditionError);
}

TEST(Switching, ExamplesAndInvolution) {
  const SignedGraph e(2, {{0, 1, 1}});
  EXPECT_EQ(switching(e, {}), e);
  EXPECT_EQ(switching(e, {0}), SignedGraph(2, {{0, 1, -1}}));
  EXPECT_THROW(switching(e, {5}), PreconditionError);
  std::mt19937_64 rng(32);
  for (int t = 0; t < 100; ++t) {
    const int n = 2 + t % 8;
    const SignedGraph g = oracle::random_signed_graph(n, 0.5, rng);
    const std::vector<int> u = subset_from_mask(n, static_cast<unsigned>(rng()));
    EXPECT_EQ(switching(switching(g, u), u), g);
    SwitchingMatrix d{std::vector<int>(static_cast<std::size_t>(n), 1)};
    for (int v : u) d.diagonal[static_cast<std::size_t>(v)] = -1;
    EXPECT_EQ(adjacency(switching(g, u)), d.to_matrix() * adjacency(g) * d.to_matrix());
  }
}

TEST(Switching, PreservesAdjacencyCharpoly) {
  std::mt19937_64 rng(33);
  for (int t = 0; t < 500; ++t) {
    const int n = 2 + t % 10;
    const SignedGraph g = t % 2 ? oracle::random_signed_tree(n, rng) : oracle::random_signed_graph(n, 0.4, rng);
    const std::vector<int> u = subset_from_mask(n, static_cast<unsigned>(rng()));
    EXPECT_EQ(charpoly(adjacency(switching(g, u))), charpoly(adjacency(g)));
  }
}

TEST(Switching, CanChangeGeneralizedSpectrum) {
  // exhaustive over all signed graphs and switching sets on 2..5 vertices, first hit wins
  std::optional<std::pair<SignedGraph, std::vector<int>>> witness;
  for (int n = 2; n <= 5 && !witness; ++n) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    const std::size_t m = slots.size();
    std::uint64_t limit = 1;
    for (std::size_t k = 0; k < m; ++k) limit *= 3;
    for (std::uint64_t code = 0; code < limit && !witness; ++code) {
      std::vector<SignedEdge> e;
      std::uint64_t c = code;
      for (std::size_t k = 0; k < m; ++k, c /= 3)
        if (c % 3) e.push_back({slots[k].first, slots[k].second, c % 3 == 1 ? 1 : -1});
      const SignedGraph g(n, e);
      const GeneralizedSpectrum s = generalized_spectrum(adjacency(g));
      for (unsigned mask = 1; mask < (1u << n) && !witness; ++mask) {
        const auto u = subset_from_mask(n, mask);
        if (!(generalized_spectrum(adjacency(switching(g, u))) == s)) witness.emplace(g, u);
      }
    }
  }
  ASSERT_TRUE(witness.has_value());
  // a single positive edge switched at one end: J - I - A goes from 0 to [[0, 2], [2, 0]]
  EXPECT_EQ(witness->first, SignedGraph(2, {{0, 1, 1}}));
  EXPECT_EQ(witness->second, (std::vector<int>{0}));
  const SignedGraph h = switching(witness->first, witness->second);
  EXPECT_EQ(charpoly(complement_matrix(adjacency(witness->first))), IntPolynomial({0, 0, 1}));
  EXPECT_EQ(charpoly(complement_matrix(adjacency(h))), IntPolynomial({-4, 0, 1}));
}

TEST(Balance, Examples) {
  EXPECT_FALSE(is_balanced(triangle(1)).balanced);
  EXPECT_FALSE(is_balanced(triangle(1)).unbalanced_cycle.empty());
  EXPECT_TRUE(is_balanced(triangle(2)).balanced);
  EXPECT_TRUE(is_balanced(triangle(0)).balanced);
  EXPECT_FALSE(is_balanced(triangle(3)).balanced);
}

TEST(Balance, TreesAlwaysBalancedWithCertificate) {
  std::mt19937_64 rng(34);
  for (int t = 0; t < 100; ++t) {
    const SignedGraph g = oracle::random_signed_tree(1 + t % 14, rng);
    const BalanceResult r = is_balanced(g);
    ASSERT_TRUE(r.balanced);
    ASSERT_TRUE(r.certificate.has_value());
    const IntMatrix d = r.certificate->to_matrix();
    EXPECT_EQ(d * adjacency(g) * d, adjacency(underlying(g)));
  }
}

TEST(Isomorphism, Examples) {
  const SignedGraph a = datasets::remark1_a();
  const auto id = are_isomorphic(a, a);
  ASSERT_TRUE(id.has_value());
  EXPECT_EQ(permutation_matrix(*id).transpose() * adjacency(a) * permutation_matrix(*id), adjacency(a));
  EXPECT_FALSE(are_isomorphic(SignedGraph(2, {{0, 1, 1}}), SignedGraph(2, {{0, 1, -1}})).has_value());
  EXPECT_FALSE(are_isomorphic(datasets::remark1_a(), datasets::remark1_b()).has_value());
  EXPECT_FALSE(are_isomorphic(datasets::remark2_a(), datasets::remark2_b()).has_value());
}

TEST(Isomorphism, RelabelledCopiesAreFoundWithWitness) {
  std::mt19937_64 rng(35);
  for (int t = 0; t < 100; ++t) {
    const int n = 1 + t % 12;
    const SignedGraph g = t % 2 ? oracle::random_signed_tree(n, rng) : oracle::random_signed_graph(n, 0.4, rng);
    const SignedGraph h = relabel(g, oracle::random_permutation(n, rng));
    const auto m = are_isomorphic(g, h);
    ASSERT_TRUE(m.has_value());
    const IntMatrix p = permutation_matrix(*m);
    EXPECT_EQ(p.transpose() * adjacency(g) * p, adjacency(h));
    const auto back = are_isomorphic(h, g);
    ASSERT_TRUE(back.has_value());
  }
}

TEST(Isomorphism, AgreesWithBruteForce) {
  std::mt19937_64 rng(36);
  int positives = 0;
  for (int t = 0; t < 300; ++t) {
    const int n = 2 + t % 6;
    const bool trees = t % 2 == 0;
    const SignedGraph g = trees ? oracle::random_signed_tree(n, rng) : oracle::random_signed_graph(n, 0.5, rng);
    const SignedGraph h = trees ? oracle::random_signed_tree(n, rng) : oracle::random_signed_graph(n, 0.5, rng);
    const bool brute = oracle::brute_force_isomorphic(g, h);
    EXPECT_EQ(are_isomorphic(g, h).has_value(), brute) << format_sg(g) << format_sg(h);
    EXPECT_EQ(are_isomorphic(h, g).has_value(), brute);
    positives += brute;
  }
  EXPECT_GT(positives, 10);
}

TEST(SgFormat, ParseAndWrite) {
  const SignedGraph g = parse_sg("4 3\n3 4 -\n1 2 +1\n2 3 -1\n");
  EXPECT_EQ(g, SignedGraph(4, {{0, 1, 1}, {1, 2, -1}, {2, 3, -1}}));
  EXPECT_EQ(format_sg(g), "4 3\n1 2 +1\n2 3 -1\n3 4 -1\n");
  EXPECT_EQ(parse_sg("2 1\n1 2 1\n"), SignedGraph(2, {{0, 1, 1}}));
  EXPECT_EQ(parse_sg(format_sg(datasets::remark2_a())), datasets::remark2_a());
  EXPECT_THROW(parse_sg("3 1\n1 4 +1\n"), ParseError);
  EXPECT_THROW(parse_sg("3 2\n1 2 +1\n"), ParseError);
  EXPECT_THROW(parse_sg("3 1\n1 2 0\n"), ParseError);
  EXPECT_THROW(parse_sg("3 1\n2 2 +1\n"), ParseError);
}
