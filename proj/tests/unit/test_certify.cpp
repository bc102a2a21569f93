#include "oracles.hpp"
#include "sgdgs/certify.hpp"
#include "sgdgs/datasets.hpp"
#include "sgdgs/search.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace sgdgs;

namespace {

SignedGraph path(int n) {
  std::vector<SignedEdge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1, 1});
  return SignedGraph(n, e);
}

const std::vector<SignedGraph>& certified_trees_on_ten() {
  static const std::vector<SignedGraph> out = [] {
    std::vector<SignedGraph> c;
    for (const auto& t : enumerate_trees(10).trees)
      if (certify_tree(t).certified()) c.push_back(t);
    return c;
  }();
  return out;
}

}  // namespace

TEST(Certify, ExampleOne) {
  const DgsCertificate c = certify_from_charpoly(datasets::example1_charpoly());
  EXPECT_TRUE(c.certified());
  EXPECT_TRUE(c.reason.empty());
  ASSERT_TRUE(c.s.has_value());
  EXPECT_EQ(*c.s, BigInt(261502945));
  EXPECT_EQ(c.s_factorization->to_string(), "5 * 11 * 4754599");
  EXPECT_EQ(to_string(c.verdict), std::string("Certified-DGS"));
}

TEST(Certify, RemarkOneFailsOnSquareFactor) {
  const DgsCertificate c = certify_from_charpoly(datasets::remark1_charpoly());
  EXPECT_FALSE(c.certified());
  EXPECT_TRUE(c.irreducible());
  EXPECT_TRUE(c.s_odd);
  EXPECT_FALSE(c.s_squarefree);
  EXPECT_EQ(c.reason, "s is not square-free (7^2 divides s)");
}

TEST(Certify, RemarkOneTreeAgreesWithCharpoly) {
  const DgsCertificate c = certify_tree(datasets::remark1_a());
  EXPECT_EQ(c.charpoly, datasets::remark1_charpoly());
  ASSERT_TRUE(c.cross_check.has_value());
  EXPECT_TRUE(c.cross_check->agrees);
  EXPECT_FALSE(c.certified());
}

TEST(Certify, RemarkTwoIsReducible) {
  const DgsCertificate c = certify_from_charpoly(datasets::remark2_charpoly());
  EXPECT_FALSE(c.certified());
  EXPECT_FALSE(c.irreducible());
  EXPECT_EQ(c.reason, "charpoly is reducible over Q");
  ASSERT_TRUE(c.s.has_value());
  EXPECT_EQ(*c.s, BigInt(1039749538000LL));
  EXPECT_FALSE(c.s_odd);
}

TEST(Certify, SmallTrees) {
  const DgsCertificate k2 = certify_tree(path(2));
  EXPECT_FALSE(k2.certified());
  EXPECT_EQ(*k2.delta, 4);
  EXPECT_EQ(*k2.s, 1);
  EXPECT_EQ(k2.reason, "charpoly is reducible over Q");

  const DgsCertificate p4 = certify_tree(path(4));
  EXPECT_FALSE(p4.certified());
  EXPECT_FALSE(p4.irreducible());

  const DgsCertificate p3 = certify_tree(path(3));
  EXPECT_FALSE(p3.certified());
  EXPECT_EQ(p3.reason.rfind("structure:", 0), 0u);
}

TEST(Certify, RejectsNonTreesAndBadPolynomials) {
  EXPECT_THROW(certify_tree(SignedGraph(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, -1}})), PreconditionError);
  EXPECT_THROW(certify_tree(SignedGraph(4, {{0, 1, 1}, {2, 3, 1}})), PreconditionError);
  EXPECT_THROW(certify_from_charpoly(IntPolynomial({1, 0, 2})), PreconditionError);
  EXPECT_THROW(certify_from_charpoly(IntPolynomial({7})), PreconditionError);
}

TEST(Certify, OddDegreeIsStructural) {
  const DgsCertificate c = certify_from_charpoly(IntPolynomial({-1, -1, 0, 1}));
  EXPECT_FALSE(c.certified());
  EXPECT_EQ(c.reason, "structure: odd degree 3");
}

TEST(Certify, NonSquareQuotientIsStructural) {
  // x^2 - 3: Delta = 12, 12 / 4 = 3
  const DgsCertificate c = certify_from_charpoly(IntPolynomial({-3, 0, 1}));
  EXPECT_FALSE(c.s.has_value());
  EXPECT_EQ(c.reason.rfind("structure:", 0), 0u);
}

TEST(Certify, CertifiedTreesOnTenVertices) {
  const auto& trees = certified_trees_on_ten();
  EXPECT_EQ(trees.size(), 3u);
  for (const auto& t : trees) {
    const DgsCertificate c = certify_tree(t);
    EXPECT_EQ(two_adic_valuation(*c.delta), 10u);
    EXPECT_EQ(abs(c.charpoly.coeff(0)), 1);
    EXPECT_TRUE(c.probabilistic_flags.empty());
  }
}

TEST(Certify, SignsDoNotChangeTheCertificate) {
  const SignedGraph t = certified_trees_on_ten().front();
  const DgsCertificate base = certify_tree(t);
  for (const auto& s : enumerate_signings(t)) {
    const DgsCertificate c = certify_tree(s);
    EXPECT_EQ(c.charpoly, base.charpoly);
    EXPECT_EQ(c.verdict, base.verdict);
  }
}

TEST(DiscriminantIdentity, Degenerate) {
  EXPECT_EQ(discriminant(IntPolynomial({-5, 1})), 1);
  const DiscriminantIdentity e = discriminant_identity_check(path(2));
  EXPECT_EQ(e.lhs, 4);
  EXPECT_EQ(e.rhs, 4);
  // 4-cycle: parts {0, 1} and {2, 3}, M = J
  const DiscriminantIdentity z = discriminant_identity_check(SignedGraph(4, {{0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 1}}));
  EXPECT_EQ(z.det_m, 0);
  EXPECT_EQ(z.lhs, 0);
  EXPECT_TRUE(z.holds);
  EXPECT_THROW(discriminant_identity_check(path(3)), PreconditionError);
}

TEST(DiscriminantIdentity, RandomEvenTrees) {
  std::mt19937_64 rng(2024);
  int balanced = 0;
  for (int i = 0; i < 500; ++i) {
    const int n = 2 * (1 + static_cast<int>(rng() % 6));
    const SignedGraph t = oracle::random_signed_tree(n, rng);
    const Bipartition b = bipartition(t);
    if (b.left.size() == b.right.size()) {
      const DiscriminantIdentity d = discriminant_identity_check(t);
      EXPECT_TRUE(d.holds) << format_sg(t);
      ++balanced;
    } else {
      EXPECT_EQ(discriminant(charpoly(adjacency(t))), 0) << format_sg(t);
    }
  }
  EXPECT_GT(balanced, 100);
}
