#pragma once

#include "bigint.hpp"
#include "errors.hpp"
#include "factor_integer.hpp"
#include "factor_poly.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"
#include "resultant.hpp"
#include "signed_graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sgdgs {

enum class Verdict { CertifiedDGS, NotCertified };

inline const char* to_string(Verdict v) { return v == Verdict::CertifiedDGS ? "Certified-DGS" : "Not-Certified"; }

/// Delta(A) against 2^n det(M)^2 Delta(M^T M)^2, computed through the
/// bipartite-adjacency block.
struct DiscriminantIdentity {
  BigInt lhs;             // Delta(charpoly(A))
  BigInt rhs;             // 2^n det(M)^2 Delta(charpoly(M^T M))^2
  BigInt det_m;
  BigInt delta_mtm;
  bool holds = false;
};

struct CrossCheck {
  std::optional<DiscriminantIdentity> identity;  // empty when the parts differ in size
  std::string note;
  bool agrees = false;
};

struct DgsCertificate {
  int n = 0;
  IntPolynomial charpoly;
  std::optional<IrreducibilityVerdict> irreducibility;
  std::optional<BigInt> delta;
  std::optional<BigInt> s;  // exact sqrt(Delta / 2^n), when that is an integer
  std::optional<Factorization> s_factorization;
  bool s_odd = false;
  bool s_squarefree = false;
  Verdict verdict = Verdict::NotCertified;
  std::string reason;  // empty iff certified
  std::optional<CrossCheck> cross_check;
  std::vector<std::string> probabilistic_flags;

  bool irreducible() const { return irreducibility && irreducibility->irreducible(); }
  bool certified() const { return verdict == Verdict::CertifiedDGS; }
};

struct CertifyOptions {
  std::uint64_t seed = 0x5eed;
  bool factor_s = true;  // factor s even when the charpoly is reducible
};

/// Sufficient DGS condition on a charpoly of even degree n: irreducible over Q
/// and sqrt(Delta / 2^n) an odd square-free integer.
inline DgsCertificate certify_from_charpoly(const IntPolynomial& phi, const CertifyOptions& opts = {}) {
  if (phi.degree() < 1) throw PreconditionError("certify: charpoly must have degree >= 1");
  if (!phi.is_monic()) throw PreconditionError("certify: charpoly must be monic");
  DgsCertificate c;
  c.n = phi.degree();
  c.charpoly = phi;
  IrreducibilityOptions io;
  io.seed = opts.seed;
  c.irreducibility = is_irreducible(phi, io);
  c.delta = discriminant(phi);
  if (c.n % 2 != 0) {
    c.reason = "structure: odd degree " + std::to_string(c.n);
    return c;
  }
  const BigInt two_n = pow(BigInt(2), static_cast<unsigned>(c.n));
  std::optional<BigInt> s;
  if (*c.delta >= 0 && *c.delta % two_n == 0) {
    const BigInt q = *c.delta / two_n;
    const BigInt r = isqrt(q);
    if (r * r == q) s = r;
  }
  if (!s) {
    c.reason = "structure: Delta / 2^" + std::to_string(c.n) + " = " + to_string(Rational(*c.delta, two_n)) +
               " is not a perfect square";
    return c;
  }
  c.s = s;
  if (*s > 0 && (c.irreducible() || opts.factor_s)) {
    OddSquarefreeResult osf = is_odd_squarefree(*s);
    c.s_factorization = osf.factorization;
    c.s_odd = boost::multiprecision::bit_test(*s, 0);
    c.s_squarefree = true;
    for (const auto& pp : osf.factorization.factors) {
      if (pp.exponent > 1) c.s_squarefree = false;
      if (pp.probable) c.probabilistic_flags.push_back("prime factor " + to_string(pp.prime) + " is a probable prime");
    }
  } else {
    c.s_odd = *s > 0 && boost::multiprecision::bit_test(*s, 0);
  }
  if (!c.irreducible()) {
    c.reason = std::string("charpoly is ") + (c.irreducibility->status == Irreducibility::Unknown ? "of unknown irreducibility" : "reducible over Q");
  } else if (!c.s_odd) {
    c.reason = "s is even";
  } else if (!c.s_squarefree) {
    for (const auto& pp : c.s_factorization->factors) {
      if (pp.exponent > 1) {
        c.reason = "s is not square-free (" + to_string(pp.prime) + "^" + std::to_string(pp.exponent) + " divides s)";
        break;
      }
    }
  } else {
    c.verdict = Verdict::CertifiedDGS;
    if (!c.probabilistic_flags.empty()) c.reason = "square-freeness relies on probable primes";
  }
  return c;
}

/// Requires a bipartition with equal parts.
inline DiscriminantIdentity discriminant_identity_check(const SignedGraph& g) {
  const Bipartition b = bipartition(g);
  if (b.left.size() != b.right.size()) {
    throw PreconditionError("discriminant identity: parts have sizes " + std::to_string(b.left.size()) + " and " +
                            std::to_string(b.right.size()));
  }
  if (g.order() == 0) throw PreconditionError("discriminant identity: empty graph");
  const IntMatrix m = bipartite_adjacency(g, b);
  DiscriminantIdentity d;
  d.lhs = discriminant(charpoly(adjacency(g)));
  d.det_m = det(m);
  d.delta_mtm = discriminant(charpoly(IntMatrix(m.transpose() * m)));
  d.rhs = pow(BigInt(2), static_cast<unsigned>(g.order())) * d.det_m * d.det_m * d.delta_mtm * d.delta_mtm;
  d.holds = d.lhs == d.rhs;
  return d;
}

/// Certificate for a signed tree. Signs do not matter: trees are balanced, so
/// every signing is switching-equivalent and has the same charpoly.
inline DgsCertificate certify_tree(const SignedGraph& t, const CertifyOptions& opts = {}) {
  if (!is_tree(t)) throw PreconditionError("certify_tree: underlying graph is not a tree");
  const IntPolynomial phi = charpoly(adjacency(t));
  if (t.order() % 2 != 0) {
    DgsCertificate c;
    c.n = t.order();
    c.charpoly = phi;
    c.reason = "structure: odd order " + std::to_string(c.n);
    return c;
  }
  DgsCertificate c = certify_from_charpoly(phi, opts);

  CrossCheck cc;
  const Bipartition b = bipartition(t);
  if (b.left.size() == b.right.size()) {
    cc.identity = discriminant_identity_check(t);
    cc.agrees = cc.identity->holds && cc.identity->lhs == abs(*c.delta);
    cc.note = "Delta(A) = 2^n det(M)^2 Delta(M^T M)^2";
  } else {
    // 0 is then an eigenvalue of multiplicity >= 2
    cc.agrees = *c.delta == 0;
    cc.note = "parts of unequal size; Delta(A) must vanish";
  }
  if (!cc.agrees) throw InvariantViolation("certify_tree: discriminant cross-check failed (" + cc.note + ")");
  c.cross_check = cc;
  if (c.irreducible() && abs(phi.coeff(0)) != 1) {
    throw InvariantViolation("certify_tree: irreducible charpoly with |phi(0)| = " + to_string(abs(phi.coeff(0))));
  }
  return c;
}

}  // namespace sgdgs
