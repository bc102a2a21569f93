#include "oracles.hpp"
#include "sgdgs/datasets.hpp"
#include "sgdgs/matrix.hpp"
#include "sgdgs/signed_graph.hpp"
#include "sgdgs/spectra.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace sgdgs;

namespace {

IntMatrix random_int_matrix(std::size_t r, std::size_t c, int lo, int hi, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

IntMatrix path_adjacency(int n) {
  std::vector<SignedEdge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1, 1});
  return adjacency(SignedGraph(n, e));
}

}  // namespace

TEST(Det, SmallExamples) {
  EXPECT_EQ(det(IntMatrix{{0, 1}, {1, 0}}), -1);
  EXPECT_EQ(det(IntMatrix::identity(5)), 1);
  EXPECT_EQ(det(walk_matrix(path_adjacency(4))), 0);
  EXPECT_EQ(det(IntMatrix(0, 0)), 1);
}

TEST(Det, NonSquareThrows) { EXPECT_THROW(det(IntMatrix(2, 3)), DimensionError); }

TEST(Det, MatchesLeibniz) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + static_cast<std::size_t>(t % 6);
    IntMatrix m = random_int_matrix(n, n, -4, 4, rng);
    EXPECT_EQ(det(m), oracle::leibniz_det(m));
  }
}

TEST(Det, TransposeInvariant) {
  std::mt19937_64 rng(12);
  for (std::size_t n = 1; n <= 12; ++n) {
    IntMatrix m = random_int_matrix(n, n, -9, 9, rng);
    EXPECT_EQ(det(m), det(m.transpose())) << n;
  }
}

TEST(Charpoly, SmallExamples) {
  EXPECT_EQ(charpoly(IntMatrix{{0, 1}, {1, 0}}), IntPolynomial({-1, 0, 1}));
  EXPECT_EQ(charpoly(IntMatrix(4, 4)), IntPolynomial::monomial(1, 4));
  EXPECT_EQ(charpoly(IntMatrix{{7}}), IntPolynomial({-7, 1}));
}

TEST(Charpoly, RemarkOneBlockMatrix) {
  const IntPolynomial expected = datasets::remark1_charpoly();
  EXPECT_EQ(expected.to_string(), "x^18 - 17*x^16 + 116*x^14 - 410*x^12 + 809*x^10 - 897*x^8 + 538*x^6 - 162*x^4 + 22*x^2 - 1");
  EXPECT_EQ(charpoly(adjacency(datasets::remark1_a())), expected);
  EXPECT_EQ(charpoly(adjacency(datasets::remark1_b())), expected);
}

TEST(Charpoly, MatchesCofactorExpansion) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 1 + static_cast<std::size_t>(t % 6);
    IntMatrix m = random_int_matrix(n, n, -3, 3, rng);
    EXPECT_EQ(charpoly(m), oracle::cofactor_charpoly(m));
  }
}

TEST(Charpoly, PermutationInvariantAndTrace) {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 2 + static_cast<std::size_t>(t % 9);
    IntMatrix a = random_int_matrix(n, n, -5, 5, rng);
    const IntMatrix p = permutation_matrix(oracle::random_permutation(static_cast<int>(n), rng));
    const IntPolynomial phi = charpoly(a);
    EXPECT_EQ(charpoly(IntMatrix(p.transpose() * a * p)), phi);
    EXPECT_EQ(phi.coeff(n - 1), -a.trace());
    EXPECT_TRUE(phi.is_monic());
    EXPECT_EQ(phi.degree(), static_cast<int>(n));
  }
}

TEST(Charpoly, RationalMatrix) {
  RatMatrix m{{Rational(1, 2), 0}, {0, Rational(1, 3)}};
  EXPECT_EQ(charpoly(m), RatPolynomial({Rational(1, 6), Rational(-5, 6), 1}));
}

TEST(RatInverse, Examples) {
  EXPECT_EQ(rat_inverse(RatMatrix::identity(3)), RatMatrix::identity(3));
  EXPECT_EQ(rat_inverse(RatMatrix{{2, 0}, {0, 4}}), (RatMatrix{{Rational(1, 2), 0}, {0, Rational(1, 4)}}));
  const RatMatrix w = to_rational(walk_matrix(adjacency(datasets::remark1_a())));
  EXPECT_EQ(w * rat_inverse(w), RatMatrix::identity(18));
}

TEST(RatInverse, SingularCarriesWitness) {
  try {
    rat_inverse(RatMatrix{{1, 2}, {2, 4}});
    FAIL() << "expected SingularMatrixError";
  } catch (const SingularMatrixError& e) {
    EXPECT_EQ(e.determinant(), 0);
  }
}

TEST(RatInverse, Involution) {
  std::mt19937_64 rng(15);
  std::uniform_int_distribution<int> d(-6, 6), den(1, 5);
  int done = 0;
  while (done < 25) {
    const std::size_t n = 1 + static_cast<std::size_t>(done % 7);
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(d(rng), den(rng));
    if (det(to_integer(RatMatrix(Rational(common_denominator(m)) * m))) == 0) continue;
    EXPECT_EQ(rat_inverse(rat_inverse(m)), m);
    EXPECT_EQ(m * rat_inverse(m), RatMatrix::identity(n));
    ++done;
  }
}

TEST(RationalCanonical, LowestTermsPositiveDenominator) {
  const Rational q = make_rational(6, -4);
  EXPECT_EQ(numerator(q), -3);
  EXPECT_EQ(denominator(q), 2);
  EXPECT_EQ(parse_rational("3/-6"), Rational(-1, 2));
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
}

TEST(MatrixOps, ComplementAndProducts) {
  EXPECT_EQ(complement_matrix(IntMatrix(2, 2)), (IntMatrix{{0, 1}, {1, 0}}));
  const IntMatrix jmi = IntMatrix::ones(4, 4) - IntMatrix::identity(4);
  EXPECT_TRUE(complement_matrix(jmi).is_zero());
  EXPECT_THROW(IntMatrix(2, 3) * IntMatrix(2, 3), DimensionError);
  EXPECT_EQ((IntMatrix{{1, 2}, {3, 4}}).transpose(), (IntMatrix{{1, 3}, {2, 4}}));
}

TEST(MatrixOps, RemarkOneConjugation) {
  const RatMatrix q = datasets::remark1_q();
  const RatMatrix a = to_rational(adjacency(datasets::remark1_a()));
  EXPECT_EQ(q.transpose() * a * q, to_rational(adjacency(datasets::remark1_b())));
}

TEST(MatrixText, RoundTripAndErrors) {
  const RatMatrix m = parse_matrix<Rational>("2 2\n1/2 -3\n0 4/6\n");
  EXPECT_EQ(m(1, 1), Rational(2, 3));
  EXPECT_EQ(parse_matrix<Rational>(format_matrix(m)), m);
  const IntMatrix a = adjacency(datasets::remark2_a());
  EXPECT_EQ(parse_matrix<BigInt>(format_matrix(a)), a);
  EXPECT_THROW(parse_matrix<BigInt>("1 1\n1/2\n"), ParseError);
  EXPECT_THROW(parse_matrix<BigInt>("2 2\n1 2 3\n"), ParseError);
  EXPECT_THROW(parse_matrix<BigInt>("2 x\n"), ParseError);
}
