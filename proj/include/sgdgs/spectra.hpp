#pragma once

#include "bigint.hpp"
#include "errors.hpp"
#include "factor_poly.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"
#include "signed_graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sgdgs {

/// n x n matrix whose k-th column is A^k e.
inline IntMatrix walk_matrix(const IntMatrix& a) {
  a.require_square("walk_matrix");
  const std::size_t n = a.rows();
  IntMatrix w(n, n);
  std::vector<BigInt> col(n, BigInt(1));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) w(i, k) = col[i];
    if (k + 1 < n) col = a.apply(col);
  }
  return w;
}

inline bool is_controllable(const IntMatrix& a) { return det(walk_matrix(a)) != 0; }

/// Characteristic polynomials of A and of J - I - A.
struct GeneralizedSpectrum {
  IntPolynomial adjacency;
  IntPolynomial complement;

  friend bool operator==(const GeneralizedSpectrum&, const GeneralizedSpectrum&) = default;

  /// Stable text key, usable for hashing and grouping.
  std::string key() const { return adjacency.to_coefficient_line() + "|" + complement.to_coefficient_line(); }
};

inline GeneralizedSpectrum generalized_spectrum(const IntMatrix& a) {
  a.require_square("generalized_spectrum");
  return {charpoly(a), charpoly(complement_matrix(a))};
}

inline bool are_generalized_cospectral(const IntMatrix& a, const IntMatrix& b) {
  a.require_square("are_generalized_cospectral");
  b.require_square("are_generalized_cospectral");
  if (a.rows() != b.rows()) throw DimensionError("are_generalized_cospectral: dimension mismatch");
  return generalized_spectrum(a) == generalized_spectrum(b);
}

/// Q = W(A) W(B)^{-1} with its three defining properties checked exactly.
struct QRecovery {
  RatMatrix q;
  bool orthogonal = false;   // Q^T Q = I
  bool regular = false;      // Q e = e
  bool conjugating = false;  // Q^T A Q = B

  bool valid() const { return orthogonal && regular && conjugating; }

  std::vector<std::string> failures() const {
    std::vector<std::string> f;
    if (!orthogonal) f.emplace_back("not orthogonal (Q^T Q != I)");
    if (!regular) f.emplace_back("not regular (Q e != e)");
    if (!conjugating) f.emplace_back("does not conjugate (Q^T A Q != B)");
    return f;
  }
};

inline bool is_orthogonal(const RatMatrix& q) { return q.is_square() && q.transpose() * q == RatMatrix::identity(q.rows()); }

inline bool is_regular(const RatMatrix& q) {
  for (std::size_t i = 0; i < q.rows(); ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < q.cols(); ++j) s += q(i, j);
    if (s != 1) return false;
  }
  return true;
}

/// Recovers the unique regular rational orthogonal conjugator for controllable
/// A and B. Failed properties are reported in the result, not thrown: they
/// signal that A and B are not generalized cospectral.
inline QRecovery recover_q(const IntMatrix& a, const IntMatrix& b) {
  a.require_square("recover_q");
  b.require_square("recover_q");
  if (a.rows() != b.rows()) throw DimensionError("recover_q: dimension mismatch");
  const IntMatrix wa = walk_matrix(a), wb = walk_matrix(b);
  const bool ca = det(wa) != 0, cb = det(wb) != 0;
  if (!ca && !cb) throw PreconditionError("recover_q: neither side is controllable (det W(A) = det W(B) = 0)");
  if (!ca) throw PreconditionError("recover_q: first matrix is not controllable (det W(A) = 0)");
  if (!cb) throw PreconditionError("recover_q: second matrix is not controllable (det W(B) = 0)");
  QRecovery r;
  r.q = to_rational(wa) * rat_inverse(to_rational(wb));
  r.orthogonal = is_orthogonal(r.q);
  r.regular = is_regular(r.q);
  r.conjugating = r.q.transpose() * to_rational(a) * r.q == to_rational(b);
  return r;
}

enum class QShape { Permutation, SignedPermutation, BlockDiagonal, AntiBlockDiagonal, General };

inline const char* to_string(QShape s) {
  switch (s) {
    case QShape::Permutation: return "Permutation";
    case QShape::SignedPermutation: return "SignedPermutation";
    case QShape::BlockDiagonal: return "BlockDiagonal";
    case QShape::AntiBlockDiagonal: return "AntiBlockDiagonal";
    case QShape::General: return "General";
  }
  return "?";
}

/// Structural classification of Q. `tag` is the most specific shape; the
/// flags record every shape that holds, so a permutation matrix that also
/// respects the split reports block_diagonal as well.
struct QClassification {
  QShape tag = QShape::General;
  bool permutation = false;
  bool signed_permutation = false;
  bool block_diagonal = false;
  bool anti_block_diagonal = false;
  std::optional<std::size_t> split;
  // Q = [[Q1, O], [O, Q2]] or [[O, Q1], [Q2, O]]
  std::optional<RatMatrix> q1;
  std::optional<RatMatrix> q2;

  bool has_theorem_block_form() const { return block_diagonal || anti_block_diagonal; }
};

inline QClassification classify_q(const RatMatrix& q, std::optional<std::size_t> split = std::nullopt) {
  q.require_square("classify_q");
  const std::size_t n = q.rows();
  if (split && *split > n) throw DimensionError("classify_q: split exceeds matrix order");
  QClassification c;
  c.split = split;

  bool signed_perm = true, perm = true;
  std::vector<int> col_count(n, 0);
  for (std::size_t i = 0; i < n && signed_perm; ++i) {
    int row_count = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& v = q(i, j);
      if (v == 0) continue;
      if (v != 1 && v != -1) {
        signed_perm = false;
        break;
      }
      if (v == -1) perm = false;
      ++row_count;
      ++col_count[j];
    }
    if (row_count != 1) signed_perm = false;
  }
  for (int cc : col_count)
    if (cc != 1) signed_perm = false;
  c.signed_permutation = signed_perm;
  c.permutation = signed_perm && perm;

  if (split) {
    const std::size_t s = *split;
    const std::size_t t = n - s;
    const bool off_zero = q.block(0, s, s, t).is_zero() && q.block(s, 0, t, s).is_zero();
    const bool diag_zero = q.block(0, 0, s, s).is_zero() && q.block(s, s, t, t).is_zero();
    c.block_diagonal = off_zero;
    c.anti_block_diagonal = diag_zero && n > 0;
    if (c.block_diagonal) {
      c.q1 = q.block(0, 0, s, s);
      c.q2 = q.block(s, s, t, t);
    } else if (c.anti_block_diagonal) {
      c.q1 = q.block(0, s, s, t);
      c.q2 = q.block(s, 0, t, s);
    }
  }

  if (c.permutation) c.tag = QShape::Permutation;
  else if (c.signed_permutation) c.tag = QShape::SignedPermutation;
  else if (c.block_diagonal) c.tag = QShape::BlockDiagonal;
  else if (c.anti_block_diagonal) c.tag = QShape::AntiBlockDiagonal;
  else c.tag = QShape::General;
  return c;
}

/// Result of checking the block-structure theorem on a pair of signed
/// bipartite graphs. Preconditions that fail are listed individually; when
/// any fails, `holds` stays false and the checks are diagnostics only.
struct StructureReport {
  std::vector<std::string> precondition_failures;
  std::optional<IntPolynomial> charpoly;
  std::optional<IrreducibilityVerdict> irreducibility;
  std::optional<QRecovery> recovery;
  std::optional<QClassification> classification;
  bool q1_regular_orthogonal = false;
  bool q2_regular_orthogonal = false;
  bool holds = false;

  bool preconditions_met() const { return precondition_failures.empty(); }
};

/// Both graphs are relabelled into part-sorted order (left part first) so that
/// A = [[O, M], [M^T, O]], Q is recovered from walk matrices, and Q must be
/// block diagonal or anti-block diagonal with regular orthogonal blocks.
inline StructureReport verify_structure_theorem(const SignedGraph& g, const SignedGraph& h) {
  StructureReport rep;
  if (g.order() != h.order()) {
    rep.precondition_failures.emplace_back("graphs have different orders");
    return rep;
  }
  std::optional<SignedGraph> gs, hs;
  std::size_t split = 0;
  auto prepare = [&](const SignedGraph& x, const char* name) -> std::optional<SignedGraph> {
    try {
      Bipartition b = bipartition(x);
      if (b.left.size() != b.right.size()) {
        rep.precondition_failures.push_back(std::string(name) + " has unequal parts (" + std::to_string(b.left.size()) +
                                            " vs " + std::to_string(b.right.size()) + ")");
      }
      split = b.left.size();
      return part_sorted(x, b);
    } catch (const NotBipartiteError&) {
      rep.precondition_failures.push_back(std::string(name) + " is not bipartite");
      return std::nullopt;
    }
  };
  gs = prepare(g, "first graph");
  hs = prepare(h, "second graph");
  if (!gs || !hs) return rep;

  const IntMatrix a = adjacency(*gs), b = adjacency(*hs);
  const GeneralizedSpectrum sa = generalized_spectrum(a), sb = generalized_spectrum(b);
  if (sa.adjacency != sb.adjacency) rep.precondition_failures.emplace_back("characteristic polynomials differ");
  if (!(sa == sb)) rep.precondition_failures.emplace_back("graphs are not generalized cospectral");
  rep.charpoly = sa.adjacency;
  if (a.rows() > 0) {
    rep.irreducibility = is_irreducible(sa.adjacency);
    if (!rep.irreducibility->irreducible()) rep.precondition_failures.emplace_back("characteristic polynomial is reducible over Q");
  }

  try {
    rep.recovery = recover_q(a, b);
    rep.classification = classify_q(rep.recovery->q, split);
  } catch (const PreconditionError& e) {
    rep.precondition_failures.emplace_back(e.what());
  }
  if (rep.classification && rep.classification->q1) {
    rep.q1_regular_orthogonal = is_orthogonal(*rep.classification->q1) && is_regular(*rep.classification->q1);
    rep.q2_regular_orthogonal = is_orthogonal(*rep.classification->q2) && is_regular(*rep.classification->q2);
  }
  rep.holds = rep.preconditions_met() && rep.recovery && rep.recovery->valid() &&
              rep.classification->has_theorem_block_form() && rep.q1_regular_orthogonal && rep.q2_regular_orthogonal;
  return rep;
}

}  // namespace sgdgs
