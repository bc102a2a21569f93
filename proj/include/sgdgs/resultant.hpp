#pragma once

#include "bigint.hpp"
#include "errors.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"

#include <algorithm>
#include <utility>

namespace sgdgs {

/// The (deg f + deg g) square Sylvester matrix; rows of f's coefficients
/// (descending) shifted deg g times, then g's shifted deg f times.
inline IntMatrix sylvester_matrix(const IntPolynomial& f, const IntPolynomial& g) {
  const int m = f.degree(), n = g.degree();
  if (m < 0 || n < 0) throw std::domain_error("sylvester_matrix: zero polynomial");
  const auto size = static_cast<std::size_t>(m + n);
  IntMatrix s(size, size);
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) s(r, r + k) = f.coeff(m - k);
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) s(n + r, r + k) = g.coeff(n - k);
  return s;
}

inline BigInt resultant_sylvester(const IntPolynomial& f, const IntPolynomial& g) {
  if (f.is_zero() && g.is_zero()) throw std::domain_error("resultant: both polynomials are zero");
  if (f.is_zero() || g.is_zero()) return 0;
  return det(sylvester_matrix(f, g));
}

/// Resultant by the subresultant pseudo-remainder sequence (Collins/Brown).
inline BigInt resultant_subresultant(IntPolynomial a, IntPolynomial b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("resultant: both polynomials are zero");
  if (a.is_zero() || b.is_zero()) return 0;
  if (b.degree() == 0) return pow(b.lead(), static_cast<unsigned>(a.degree()));
  if (a.degree() == 0) return pow(a.lead(), static_cast<unsigned>(b.degree()));

  BigInt ca = content(a), cb = content(b);
  BigInt t = pow(ca, static_cast<unsigned>(b.degree())) * pow(cb, static_cast<unsigned>(a.degree()));
  a = *exact_divide(a, IntPolynomial::constant(ca));
  b = *exact_divide(b, IntPolynomial::constant(cb));
  int s = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if ((a.degree() & 1) && (b.degree() & 1)) s = -1;
  }
  BigInt g = 1, h = 1;
  while (true) {
    const int delta = a.degree() - b.degree();
    if ((a.degree() & 1) && (b.degree() & 1)) s = -s;
    IntPolynomial r = pseudo_remainder(a, b);
    a = std::move(b);
    if (r.is_zero()) return 0;
    BigInt divisor = g * pow(h, static_cast<unsigned>(delta));
    b = *exact_divide(r, IntPolynomial::constant(divisor));
    g = a.lead();
    // h <- g^delta / h^(delta - 1)
    if (delta != 0) h = pow(g, static_cast<unsigned>(delta)) / pow(h, static_cast<unsigned>(delta - 1));
    if (b.degree() <= 0) break;
  }
  // b is a nonzero constant here
  const int da = a.degree();
  BigInt hh = pow(b.lead(), static_cast<unsigned>(da)) / pow(h, static_cast<unsigned>(da - 1));
  return BigInt(s) * t * hh;
}

/// Sylvester determinant for small degrees, subresultant PRS above degree 8.
inline BigInt resultant(const IntPolynomial& f, const IntPolynomial& g) {
  if (std::max(f.degree(), g.degree()) > 8) return resultant_subresultant(f, g);
  return resultant_sylvester(f, g);
}

/// (-1)^(n(n-1)/2) Res(f, f') / lc(f); a degree-1 polynomial has discriminant 1.
inline BigInt discriminant(const IntPolynomial& f) {
  const int n = f.degree();
  if (n < 1) throw std::domain_error("discriminant: degree must be at least 1");
  if (n == 1) return 1;
  BigInt r = resultant(f, f.derivative());
  BigInt q, rem;
  boost::multiprecision::divide_qr(r, f.lead(), q, rem);
  if (rem != 0) throw InvariantViolation("discriminant: Res(f, f') not divisible by lc(f)");
  if ((static_cast<long long>(n) * (n - 1) / 2) % 2 != 0) q = -q;
  return q;
}

/// f / gcd(f, f'), primitive with positive leading coefficient.
inline IntPolynomial squarefree_poly_part(const IntPolynomial& f) {
  if (f.is_zero()) throw std::domain_error("squarefree_poly_part: zero polynomial");
  if (f.degree() == 0) return IntPolynomial::constant(1);
  RatPolynomial fr = to_rational(f);
  RatPolynomial g = gcd(fr, fr.derivative());
  return primitive_part(divmod(fr, g).first);
}

}  // namespace sgdgs
