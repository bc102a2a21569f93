#pragma once

#include "bigint.hpp"
#include "errors.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"
#include "signed_graph.hpp"

#include <string>
#include <vector>

namespace sgdgs::datasets {

// Two generalized-cospectral signed trees on 18 vertices with a common
// irreducible characteristic polynomial whose reduced discriminant has the
// repeated factor 7. Q = diag(Q1, Q2) / 7 conjugates A(M) to A(MTilde).
inline constexpr int kRemark1M[9][9] = {
    {-1,  0,  0,  0,  0,  0,  0,  0,  0},
    {-1, -1,  0,  0,  0,  0,  0,  0,  0},
    { 1,  0, -1,  0,  0,  0,  0,  0,  0},
    { 0,  0,  1, -1,  0,  0,  0,  0,  0},
    { 0, -1,  0,  0, -1,  1,  0,  0,  0},
    { 0,  0,  0,  0, -1,  0,  0,  0,  0},
    { 0,  0,  0,  0, -1,  0, -1,  1,  0},
    { 0,  0,  0,  0,  0,  0, -1,  0,  0},
    { 0,  0,  0,  0,  0, -1,  0,  0, -1},
};

inline constexpr int kRemark1MTilde[9][9] = {
    { 0,  0,  0,  0,  0,  0,  0,  1, -1},
    { 0,  0,  0, -1, -1,  0,  1,  0,  0},
    { 0,  0,  0, -1,  0,  0,  0,  0,  0},
    {-1, -1,  0,  0,  0,  0,  0,  0,  0},
    { 0, -1, -1,  0,  0,  0,  0,  0,  0},
    {-1,  0,  0,  0,  0,  0,  1,  0,  0},
    { 0,  0,  0,  0,  0,  0, -1,  0,  0},
    { 0,  0,  0,  0,  0,  0,  0, -1,  0},
    {-1,  0,  0,  0,  0, -1,  0,  0,  1},
};

// Entries of 7 * Q1 and 7 * Q2.
inline constexpr int kRemark1Q1Scaled[9][9] = {
    {-1, -1, -2, -2,  4,  3,  3,  2,  1},
    {-2, -2,  3,  3,  1, -1, -1,  4,  2},
    { 2,  2,  4, -3, -1,  1,  1,  3, -2},
    { 4, -3,  1,  1, -2,  2,  2, -1,  3},
    {-3,  4,  1,  1, -2,  2,  2, -1,  3},
    { 3,  3, -1, -1,  2, -2, -2,  1,  4},
    { 1,  1,  2,  2,  3,  4, -3, -2, -1},
    { 2,  2, -3,  4, -1,  1,  1,  3, -2},
    { 1,  1,  2,  2,  3, -3,  4, -2, -1},
};

inline constexpr int kRemark1Q2Scaled[9][9] = {
    { 2,  2,  4, -3, -1,  1,  1,  3, -2},
    { 2,  2, -3,  4, -1,  1,  1,  3, -2},
    {-2, -2,  3,  3,  1, -1, -1,  4,  2},
    { 4, -3,  1,  1, -2,  2,  2, -1,  3},
    { 1,  1,  2,  2,  3,  4, -3, -2, -1},
    {-3,  4,  1,  1, -2,  2,  2, -1,  3},
    { 3,  3, -1, -1,  2, -2, -2,  1,  4},
    {-1, -1, -2, -2,  4,  3,  3,  2,  1},
    { 1,  1,  2,  2,  3, -3,  4, -2, -1},
};

// Two controllable generalized-cospectral signed trees on 18 vertices with a
// reducible characteristic polynomial; their conjugator (entries of 5 * Q)
// has no block structure.
inline constexpr int kRemark2M[9][9] = {
    { 1,  0,  0,  0,  0,  0,  0,  0,  0},
    {-1,  1,  0,  0,  0,  0, -1,  0,  0},
    { 0, -1, -1,  0,  0,  0,  0,  0,  0},
    { 0,  0, -1,  1,  0,  0,  0,  0,  0},
    { 0,  1,  0,  0,  1, -1,  0,  0,  0},
    { 0,  0,  0,  0,  1,  0,  0,  0,  0},
    { 0,  0,  0,  0,  0,  0, -1,  0,  0},
    { 0,  0,  0,  0,  0,  0,  1,  1,  0},
    { 0,  0,  0,  0,  0,  0,  0, -1, -1},
};

inline constexpr int kRemark2MTilde[9][9] = {
    { 1,  0,  0,  0,  0,  0,  0,  0,  0},
    {-1,  1, -1,  0,  0,  0,  0,  0,  0},
    { 0,  0, -1,  0,  0,  0,  0,  0,  0},
    { 0,  0,  1,  1,  0,  0,  0,  0,  0},
    { 0,  0,  0, -1, -1,  0,  0,  0,  0},
    { 0, -1,  0,  0,  0,  1,  0,  0,  0},
    { 0,  1,  0,  0,  0,  0,  1,  0,  1},
    { 0,  0,  0,  0,  0, -1,  0, -1,  0},
    { 0,  0,  0,  0,  0,  0,  0,  0, -1},
};

inline constexpr int kRemark2QScaled[18][18] = {
    { 5,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0},
    { 0,  5,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0},
    { 0,  0,  0,  0,  0,  3, -2,  1, -1,  0,  0,  0,  0,  0,  1, -1,  2,  2},
    { 0,  0,  0,  0,  0, -1, -1, -2,  2,  0,  0,  0,  0,  0,  3,  2,  1,  1},
    { 0,  0,  0,  0,  0, -2,  3,  1, -1,  0,  0,  0,  0,  0,  1, -1,  2,  2},
    { 0,  0,  0,  0,  0,  1,  1,  2, -2,  0,  0,  0,  0,  0,  2,  3, -1, -1},
    { 0,  0,  5,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0},
    { 0,  0,  0,  5,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0},
    { 0,  0,  0,  0,  5,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0},
    { 0,  0,  0,  0,  0,  0,  0,  0,  0,  5,  0,  0,  0,  0,  0,  0,  0,  0},
    { 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  5,  0,  0,  0,  0,  0,  0,  0},
    { 0,  0,  0,  0,  0, -1, -1,  3,  2,  0,  0,  0,  0,  0, -2,  2,  1,  1},
    { 0,  0,  0,  0,  0,  2,  2, -1,  1,  0,  0,  0,  0,  0, -1,  1,  3, -2},
    { 0,  0,  0,  0,  0,  2,  2, -1,  1,  0,  0,  0,  0,  0, -1,  1, -2,  3},
    { 0,  0,  0,  0,  0,  1,  1,  2,  3,  0,  0,  0,  0,  0,  2, -2, -1, -1},
    { 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  5,  0,  0,  0,  0,  0,  0},
    { 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  5,  0,  0,  0,  0,  0},
    { 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  5,  0,  0,  0,  0},
};

// A pair of cospectral 14-vertex trees share this polynomial; ascending coefficients.
inline constexpr int kExample1Charpoly[] = {-1, 0, 16, 0, -79, 0, 157, 0, -143, 0, 63, 0, -13, 0, 1};

// Characteristic polynomial shared by the Remark-1 trees, ascending.
inline constexpr int kRemark1Charpoly[] = {-1, 0, 22, 0, -162, 0, 538, 0, -897, 0, 809, 0, -410, 0, 116, 0, -17, 0, 1};

// Factors of the Remark-2 characteristic polynomial, ascending.
inline const std::vector<std::vector<int>> kRemark2CharpolyFactors = {
    {-1, 1}, {1, 1}, {-1, -1, 1}, {-1, 1, 1}, {1, 0, -21, 0, 95, 0, -119, 0, 60, 0, -13, 0, 1}};

namespace detail {

template <std::size_t R, std::size_t C>
IntMatrix to_matrix(const int (&m)[R][C]) {
  IntMatrix out(R, C);
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < C; ++j) out(i, j) = m[i][j];
  return out;
}

template <std::size_t R, std::size_t C>
RatMatrix to_scaled_rational(const int (&m)[R][C], int denominator) {
  RatMatrix out(R, C);
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < C; ++j) out(i, j) = Rational(m[i][j], denominator);
  return out;
}

inline RatMatrix block_diagonal(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
  return out;
}

template <std::size_t N>
IntPolynomial to_polynomial(const int (&c)[N]) {
  return IntPolynomial(std::vector<BigInt>(std::begin(c), std::end(c)));
}

}  // namespace detail

inline IntMatrix remark1_m() { return detail::to_matrix(kRemark1M); }
inline IntMatrix remark1_m_tilde() { return detail::to_matrix(kRemark1MTilde); }
inline RatMatrix remark1_q1() { return detail::to_scaled_rational(kRemark1Q1Scaled, 7); }
inline RatMatrix remark1_q2() { return detail::to_scaled_rational(kRemark1Q2Scaled, 7); }
inline RatMatrix remark1_q() { return detail::block_diagonal(remark1_q1(), remark1_q2()); }
inline IntPolynomial remark1_charpoly() { return detail::to_polynomial(kRemark1Charpoly); }

inline IntMatrix remark2_m() { return detail::to_matrix(kRemark2M); }
inline IntMatrix remark2_m_tilde() { return detail::to_matrix(kRemark2MTilde); }
inline RatMatrix remark2_q() { return detail::to_scaled_rational(kRemark2QScaled, 5); }
inline IntPolynomial remark2_charpoly() {
  IntPolynomial p = IntPolynomial::constant(1);
  for (const auto& f : kRemark2CharpolyFactors) p *= IntPolynomial(std::vector<BigInt>(f.begin(), f.end()));
  return p;
}

inline IntPolynomial example1_charpoly() { return detail::to_polynomial(kExample1Charpoly); }

/// Signed trees whose adjacency is [[O, M], [M^T, O]].
inline SignedGraph remark1_a() { return from_bipartite_adjacency(remark1_m()); }
inline SignedGraph remark1_b() { return from_bipartite_adjacency(remark1_m_tilde()); }
inline SignedGraph remark2_a() { return from_bipartite_adjacency(remark2_m()); }
inline SignedGraph remark2_b() { return from_bipartite_adjacency(remark2_m_tilde()); }

inline const std::vector<std::string>& names() {
  static const std::vector<std::string> n{"remark1", "remark2", "example1-poly"};
  return n;
}

inline const std::vector<std::string>& graph_names() {
  static const std::vector<std::string> n{"remark1-a", "remark1-b", "remark2-a", "remark2-b"};
  return n;
}

/// Graph datasets addressable by the names in graph_names().
inline SignedGraph graph(const std::string& name) {
  if (name == "remark1-a") return remark1_a();
  if (name == "remark1-b") return remark1_b();
  if (name == "remark2-a") return remark2_a();
  if (name == "remark2-b") return remark2_b();
  throw PreconditionError("unknown graph dataset '" + name + "'");
}

}  // namespace sgdgs::datasets
