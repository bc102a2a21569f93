#pragma once

#include "bigint.hpp"
#include "errors.hpp"
#include "factor_poly.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"
#include "signed_graph.hpp"

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sgdgs {

/// Q[x]/(phi) for a monic irreducible integer polynomial phi. Instances are
/// immutable and shared by the elements that live in them.
class NumberField : public std::enable_shared_from_this<NumberField> {
 public:
  /// Verifies that phi is monic and irreducible.
  static std::shared_ptr<const NumberField> create(const IntPolynomial& phi) {
    if (phi.degree() < 1) throw PreconditionError("number field: modulus must have degree >= 1");
    if (!phi.is_monic()) throw PreconditionError("number field: modulus must be monic");
    IrreducibilityVerdict v = is_irreducible(phi);
    if (!v.irreducible()) {
      throw PreconditionError("number field: modulus " + phi.to_string() + " is not irreducible over Q" +
                              (v.factor.is_zero() ? std::string() : " (factor " + v.factor.to_string() + ")"));
    }
    return std::shared_ptr<const NumberField>(new NumberField(phi));
  }

  int degree() const { return modulus_.degree(); }
  const IntPolynomial& modulus() const { return modulus_; }

  /// Reduces a polynomial of any degree modulo phi; result has length degree().
  std::vector<Rational> reduce(std::vector<Rational> c) const {
    const auto n = static_cast<std::size_t>(degree());
    for (std::size_t k = c.size(); k-- > n;) {
      if (c[k] == 0) continue;
      const Rational top = c[k];
      // x^k = x^(k-n) * x^n and x^n = -(phi_0 + ... + phi_{n-1} x^{n-1})
      for (std::size_t j = 0; j < n; ++j) {
        if (modulus_.coefficients()[j] != 0) c[k - n + j] -= top * Rational(modulus_.coefficients()[j]);
      }
      c[k] = 0;
    }
    c.resize(n, Rational(0));
    return c;
  }

 private:
  explicit NumberField(IntPolynomial phi) : modulus_(std::move(phi)) {}

  IntPolynomial modulus_;
};

using FieldRef = std::shared_ptr<const NumberField>;

/// c_0 + c_1 a + ... + c_{n-1} a^{n-1} for a root a of the field's modulus.
class NumberFieldElement {
 public:
  NumberFieldElement(FieldRef field, std::vector<Rational> coeffs) : field_(std::move(field)) {
    if (!field_) throw PreconditionError("number field element: null field");
    coeffs_ = field_->reduce(std::move(coeffs));
  }

  static NumberFieldElement from_rational(FieldRef field, const Rational& q) {
    return NumberFieldElement(std::move(field), std::vector<Rational>{q});
  }
  static NumberFieldElement zero(FieldRef field) { return from_rational(std::move(field), 0); }
  static NumberFieldElement one(FieldRef field) { return from_rational(std::move(field), 1); }
  /// The class of x, i.e. the root a.
  static NumberFieldElement generator(FieldRef field) {
    return NumberFieldElement(std::move(field), std::vector<Rational>{0, 1});
  }

  const FieldRef& field() const { return field_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  RatPolynomial as_polynomial() const { return RatPolynomial(coeffs_); }

  friend bool operator==(const NumberFieldElement& a, const NumberFieldElement& b) {
    a.require_same_field(b);
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const NumberFieldElement& a, const NumberFieldElement& b) { return !(a == b); }

  friend NumberFieldElement operator+(const NumberFieldElement& a, const NumberFieldElement& b) {
    a.require_same_field(b);
    std::vector<Rational> c = a.coeffs_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coeffs_[i];
    return NumberFieldElement(a.field_, std::move(c), Reduced{});
  }
  friend NumberFieldElement operator-(const NumberFieldElement& a, const NumberFieldElement& b) {
    a.require_same_field(b);
    std::vector<Rational> c = a.coeffs_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.coeffs_[i];
    return NumberFieldElement(a.field_, std::move(c), Reduced{});
  }
  NumberFieldElement operator-() const {
    std::vector<Rational> c = coeffs_;
    for (auto& x : c) x = -x;
    return NumberFieldElement(field_, std::move(c), Reduced{});
  }
  friend NumberFieldElement operator*(const NumberFieldElement& a, const NumberFieldElement& b) {
    a.require_same_field(b);
    const std::size_t n = a.coeffs_.size();
    std::vector<Rational> c(n == 0 ? 0 : 2 * n - 1, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (b.coeffs_[j] != 0) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return NumberFieldElement(a.field_, std::move(c));
  }
  friend NumberFieldElement operator*(const Rational& s, const NumberFieldElement& a) {
    std::vector<Rational> c = a.coeffs_;
    for (auto& x : c) x *= s;
    return NumberFieldElement(a.field_, std::move(c), Reduced{});
  }

  /// Inverse via the extended gcd with the modulus.
  NumberFieldElement inverse() const {
    if (is_zero()) throw std::domain_error("number field: inverse of zero");
    ExtendedGcd eg = extended_gcd(as_polynomial(), to_rational(field_->modulus()));
    if (eg.gcd.degree() != 0) throw InvariantViolation("number field: element shares a factor with the modulus");
    return NumberFieldElement(field_, eg.s.coefficients());
  }

  friend NumberFieldElement operator/(const NumberFieldElement& a, const NumberFieldElement& b) { return a * b.inverse(); }

  /// Image under x -> -x; a field automorphism when phi(-x) = +-phi(x).
  NumberFieldElement reflected() const {
    std::vector<Rational> c = coeffs_;
    for (std::size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
    return NumberFieldElement(field_, std::move(c), Reduced{});
  }

  std::string to_string() const { return primitive_display(); }

 private:
  struct Reduced {};
  NumberFieldElement(FieldRef field, std::vector<Rational> coeffs, Reduced)
      : field_(std::move(field)), coeffs_(std::move(coeffs)) {}

  void require_same_field(const NumberFieldElement& o) const {
    if (field_ != o.field_ && field_->modulus() != o.field_->modulus()) {
      throw PreconditionError("number field: elements belong to different fields");
    }
  }

  std::string primitive_display() const {
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
      if (coeffs_[k] == 0) continue;
      if (!out.empty()) out += coeffs_[k] < 0 ? " - " : " + ";
      else if (coeffs_[k] < 0) out += "-";
      Rational mag = coeffs_[k] < 0 ? Rational(-coeffs_[k]) : coeffs_[k];
      if (mag != 1 || k == 0) out += sgdgs::to_string(mag) + (k ? "*" : "");
      if (k >= 1) out += "a";
      if (k >= 2) out += "^" + std::to_string(k);
    }
    return out.empty() ? "0" : out;
  }

  FieldRef field_;
  std::vector<Rational> coeffs_;
};

using FieldVector = std::vector<NumberFieldElement>;

inline FieldVector field_apply(const IntMatrix& a, const FieldVector& v) {
  if (a.cols() != v.size() || v.empty()) throw DimensionError("apply: length mismatch");
  FieldVector out;
  out.reserve(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::vector<Rational> acc(v.front().coefficients().size(), Rational(0));
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      const Rational s(a(i, j));
      const auto& c = v[j].coefficients();
      for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += s * c[k];
    }
    out.emplace_back(v.front().field(), std::move(acc));
  }
  return out;
}

inline NumberFieldElement dot(const FieldVector& a, const FieldVector& b) {
  if (a.size() != b.size() || a.empty()) throw DimensionError("dot: length mismatch");
  NumberFieldElement s = NumberFieldElement::zero(a.front().field());
  for (std::size_t i = 0; i < a.size(); ++i) s = s + a[i] * b[i];
  return s;
}

/// Eigenvector of a symmetric integer matrix for the generator a of
/// Q[x]/(charpoly): entry j is phi_j(a) with deg phi_j < n, scaled so the first
/// nonzero entry is 1.
struct SymbolicEigenvector {
  FieldRef field;
  FieldVector entries;

  std::vector<RatPolynomial> polynomials() const {
    std::vector<RatPolynomial> out;
    out.reserve(entries.size());
    for (const auto& e : entries) out.push_back(e.as_polynomial());
    return out;
  }
};

/// True iff A xi = a xi holds exactly in the field, i.e. (xI - A) xi = 0 mod phi.
inline bool satisfies_eigen_equation(const IntMatrix& a, const SymbolicEigenvector& xi) {
  const NumberFieldElement alpha = NumberFieldElement::generator(xi.field);
  const FieldVector ax = field_apply(a, xi.entries);
  for (std::size_t i = 0; i < ax.size(); ++i)
    if (ax[i] != alpha * xi.entries[i]) return false;
  return true;
}

/// Solves (aI - A) xi = 0 over Q(a) by Gaussian elimination, pivoting on the
/// first nonzero entry in row order. `field`, when given, must be
/// Q[x]/(charpoly(A)).
inline SymbolicEigenvector symbolic_eigenvector(const IntMatrix& a, FieldRef field = nullptr) {
  a.require_square("symbolic_eigenvector");
  if (!a.is_symmetric()) throw PreconditionError("symbolic_eigenvector: matrix is not symmetric");
  const std::size_t n = a.rows();
  const IntPolynomial phi = charpoly(a);
  if (!field) field = NumberField::create(phi);  // throws if reducible
  else if (field->modulus() != phi) throw PreconditionError("symbolic_eigenvector: field modulus is not charpoly(A)");

  const NumberFieldElement alpha = NumberFieldElement::generator(field);
  std::vector<FieldVector> m(n);
  for (std::size_t i = 0; i < n; ++i) {
    m[i].reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
      NumberFieldElement e = NumberFieldElement::from_rational(field, Rational(-a(i, j)));
      if (i == j) e = e + alpha;
      m[i].push_back(std::move(e));
    }
  }
  // row echelon form
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  std::optional<std::size_t> free_col;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = row;
    while (p < n && m[p][col].is_zero()) ++p;
    if (p == n) {
      if (!free_col) free_col = col;
      continue;
    }
    std::swap(m[p], m[row]);
    const NumberFieldElement inv = m[row][col].inverse();
    for (std::size_t j = col; j < n; ++j) m[row][j] = m[row][j] * inv;
    for (std::size_t i = row + 1; i < n; ++i) {
      if (m[i][col].is_zero()) continue;
      const NumberFieldElement f = m[i][col];
      for (std::size_t j = col; j < n; ++j) m[i][j] = m[i][j] - f * m[row][j];
    }
    pivot_col.push_back(col);
    ++row;
  }
  if (!free_col || row != n - 1) throw InvariantViolation("symbolic_eigenvector: kernel of (aI - A) is not one-dimensional");

  FieldVector xi(n, NumberFieldElement::zero(field));
  xi[*free_col] = NumberFieldElement::one(field);
  for (std::size_t r = row; r-- > 0;) {
    const std::size_t c = pivot_col[r];
    NumberFieldElement s = NumberFieldElement::zero(field);
    for (std::size_t j = c + 1; j < n; ++j)
      if (!m[r][j].is_zero() && !xi[j].is_zero()) s = s + m[r][j] * xi[j];
    xi[c] = -s;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (xi[i].is_zero()) continue;
    const NumberFieldElement inv = xi[i].inverse();
    for (auto& e : xi) e = e * inv;
    break;
  }
  SymbolicEigenvector out{field, std::move(xi)};
  if (!satisfies_eigen_equation(a, out)) throw InvariantViolation("symbolic_eigenvector: result fails (xI - A) xi = 0");
  return out;
}

/// e^T (lambda I - A)^{-1} e by an exact rational solve; lambda must not be an eigenvalue.
inline Rational resolvent_walk_sum(const IntMatrix& a, const Rational& lambda) {
  a.require_square("resolvent_walk_sum");
  RatMatrix m = -1 * to_rational(a);
  for (std::size_t i = 0; i < a.rows(); ++i) m(i, i) += lambda;
  std::vector<Rational> x = rat_solve(m, std::vector<Rational>(a.rows(), Rational(1)));
  Rational s = 0;
  for (const auto& v : x) s += v;
  return s;
}

/// Symbolic check of the eigen-structure of a signed bipartite graph
/// A = [[O, M], [M^T, O]] with square M.
struct BipartiteEigenReport {
  std::vector<std::string> precondition_failures;
  std::optional<IntMatrix> m;
  std::optional<IntPolynomial> charpoly_a;
  std::optional<IntPolynomial> charpoly_mmt;
  bool charpoly_a_irreducible = false;

  // Route through Q[x]/(charpoly(M M^T)), generator a standing for lambda^2.
  bool mmt_eigenvector = false;        // M M^T u = a u
  bool mmt_length_equality = false;    // (M^T u)^T (M^T u) = a u^T u, i.e. |v| = |u| for v = M^T u / lambda
  bool mmt_mtm_same_charpoly = false;  // charpoly(M M^T) = charpoly(M^T M)
  bool mmt_irreducible = false;
  bool even_structure = false;         // charpoly(A)(x) = charpoly(M^T M)(x^2)

  // Route through Q[x]/(charpoly(A)), generator lambda; only when charpoly(A) is irreducible.
  std::optional<bool> full_eigenvector;      // A (u; v) = lambda (u; v)
  std::optional<bool> full_length_equality;  // u^T u = v^T v
  std::optional<bool> squares_eigenvectors;  // M M^T u = lambda^2 u, M^T M v = lambda^2 v
  std::optional<bool> reflected_eigenvector; // A (u; -v) = -lambda (u; -v), proportional to xi(-lambda)

  std::optional<SymbolicEigenvector> u_mmt;
  std::optional<SymbolicEigenvector> xi_a;

  bool items_hold() const {
    bool ok = mmt_eigenvector && mmt_length_equality && mmt_mtm_same_charpoly && mmt_irreducible && even_structure;
    for (const auto& f : {full_eigenvector, full_length_equality, squares_eigenvectors, reflected_eigenvector})
      if (f) ok = ok && *f;
    return ok;
  }
  bool passed() const { return precondition_failures.empty() && items_hold(); }
};

inline BipartiteEigenReport verify_bipartite_eigen_properties(const SignedGraph& g) {
  BipartiteEigenReport rep;
  Bipartition b;
  try {
    b = bipartition(g);
  } catch (const NotBipartiteError&) {
    rep.precondition_failures.emplace_back("graph is not bipartite");
    return rep;
  }
  const IntMatrix m = bipartite_adjacency(g, b);
  rep.m = m;
  const SignedGraph sorted = part_sorted(g, b);
  const IntMatrix a = adjacency(sorted);
  rep.charpoly_a = charpoly(a);
  if (a.rows() > 0) {
    rep.charpoly_a_irreducible = is_irreducible(*rep.charpoly_a).irreducible();
  }
  if (!rep.charpoly_a_irreducible) rep.precondition_failures.emplace_back("charpoly(A) is reducible over Q");
  if (m.rows() != m.cols() || m.rows() == 0) {
    rep.precondition_failures.emplace_back("bipartite-adjacency matrix is not square");
    return rep;
  }
  const std::size_t half = m.rows();
  const IntMatrix mt = m.transpose();
  const IntMatrix mmt = m * mt, mtm = mt * m;
  rep.charpoly_mmt = charpoly(mmt);
  rep.mmt_mtm_same_charpoly = *rep.charpoly_mmt == charpoly(mtm);
  rep.even_structure = *rep.charpoly_a == charpoly(mtm).in_square();
  rep.mmt_irreducible = is_irreducible(*rep.charpoly_mmt).irreducible();
  if (rep.mmt_irreducible) {
    SymbolicEigenvector u = symbolic_eigenvector(mmt);
    rep.mmt_eigenvector = satisfies_eigen_equation(mmt, u);
    const NumberFieldElement alpha = NumberFieldElement::generator(u.field);
    const FieldVector w = field_apply(mt, u.entries);
    rep.mmt_length_equality = dot(w, w) == alpha * dot(u.entries, u.entries);
    rep.u_mmt = std::move(u);
  }

  if (rep.charpoly_a_irreducible) {
    SymbolicEigenvector xi = symbolic_eigenvector(a);
    const FieldRef& k = xi.field;
    const NumberFieldElement lambda = NumberFieldElement::generator(k);
    FieldVector u(xi.entries.begin(), xi.entries.begin() + static_cast<std::ptrdiff_t>(half));
    FieldVector v(xi.entries.begin() + static_cast<std::ptrdiff_t>(half), xi.entries.end());
    rep.full_eigenvector = satisfies_eigen_equation(a, xi);
    rep.full_length_equality = dot(u, u) == dot(v, v);
    const NumberFieldElement l2 = lambda * lambda;
    bool sq = true;
    const FieldVector mu = field_apply(mmt, u), mv = field_apply(mtm, v);
    for (std::size_t i = 0; i < half; ++i) sq = sq && mu[i] == l2 * u[i] && mv[i] == l2 * v[i];
    rep.squares_eigenvectors = sq;

    FieldVector flipped = u;
    for (const auto& e : v) flipped.push_back(-e);
    const FieldVector af = field_apply(a, flipped);
    bool refl = true;
    for (std::size_t i = 0; i < af.size(); ++i) refl = refl && af[i] == -(lambda * flipped[i]);
    // x -> -x maps xi(lambda) to an eigenvector for -lambda; the eigenspace is a line
    if (refl && charpoly(a).reflected() == charpoly(a)) {
      FieldVector sigma;
      for (const auto& e : xi.entries) sigma.push_back(e.reflected());
      for (std::size_t i = 0; i < sigma.size() && refl; ++i)
        for (std::size_t j = i + 1; j < sigma.size() && refl; ++j) refl = sigma[i] * flipped[j] == sigma[j] * flipped[i];
    }
    rep.reflected_eigenvector = refl;
    rep.xi_a = std::move(xi);
  }
  return rep;
}

}  // namespace sgdgs
