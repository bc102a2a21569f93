#pragma once

#include "bigint.hpp"
#include "errors.hpp"
#include "polynomial.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <type_traits>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace sgdgs {

/// Dense row-major matrix over an exact ring.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw DimensionError("matrix: entry count does not match shape");
  }
  /// Nested-list construction; all rows must have equal length.
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DimensionError("matrix: ragged initializer");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  static Matrix ones(std::size_t rows, std::size_t cols) {
    return Matrix(rows, cols, std::vector<T>(rows * cols, T(1)));
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const std::vector<T>& data() const { return data_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionError("matrix: block out of range");
    Matrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }

  bool is_zero() const {
    for (const auto& v : data_)
      if (v != 0) return false;
    return true;
  }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  Matrix& operator+=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const T& s, Matrix a) {
    for (auto& v : a.data_) v *= s;
    return a;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix product: inner dimensions differ");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  /// Matrix-vector product.
  std::vector<T> apply(const std::vector<T>& v) const {
    if (v.size() != cols_) throw DimensionError("matrix-vector product: length mismatch");
    std::vector<T> out(rows_, T(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        const T& a = (*this)(i, j);
        if (a != 0) out[i] += a * v[j];
      }
    return out;
  }

  T trace() const {
    require_square("trace");
    T t(0);
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  void require_square(const char* op) const {
    if (!is_square()) {
      throw DimensionError(std::string(op) + ": matrix is " + std::to_string(rows_) + "x" +
                           std::to_string(cols_) + ", square required");
    }
  }

 private:
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix: shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<BigInt>;
using RatMatrix = Matrix<Rational>;

inline RatMatrix to_rational(const IntMatrix& m) {
  std::vector<Rational> v;
  v.reserve(m.data().size());
  for (const auto& x : m.data()) v.emplace_back(x);
  return RatMatrix(m.rows(), m.cols(), std::move(v));
}

/// Exact narrowing; throws when some entry is not an integer.
inline IntMatrix to_integer(const RatMatrix& m) {
  std::vector<BigInt> v;
  v.reserve(m.data().size());
  for (const auto& x : m.data()) {
    if (!is_integral(x)) throw std::domain_error("to_integer: entry " + to_string(x) + " is not an integer");
    v.push_back(numerator(x));
  }
  return IntMatrix(m.rows(), m.cols(), std::move(v));
}

/// J - I - A: the formal complement.
inline IntMatrix complement_matrix(const IntMatrix& a) {
  a.require_square("complement_matrix");
  IntMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = (i == j ? BigInt(0) : BigInt(1)) - a(i, j);
  return c;
}

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
/// Every division in the inner loop is exact.
inline BigInt det(const IntMatrix& m) {
  m.require_square("det");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  std::vector<BigInt> a = m.data();
  auto at = [&](std::size_t r, std::size_t c) -> BigInt& { return a[r * n + c]; };
  BigInt prev = 1;
  int sgn = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t c = k; c < n; ++c) std::swap(at(k, c), at(p, c));
      sgn = -sgn;
    }
    const BigInt pivot = at(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        at(i, j) = (at(i, j) * pivot - at(i, k) * at(k, j)) / prev;
      }
      at(i, k) = 0;
    }
    prev = pivot;
  }
  return sgn < 0 ? BigInt(-at(n - 1, n - 1)) : at(n - 1, n - 1);
}

/// det(xI - A) by Berkowitz's division-free recurrence.
///
/// With A_r the leading r x r block, A_{r+1} = [[A_r, c], [R, a]] gives
/// p_{r+1} = T_r p_r where T_r is the lower-triangular Toeplitz matrix with
/// first column (1, -a, -R c, -R A_r c, ..., -R A_r^{r-1} c). Only ring
/// operations are used, so the template works over any commutative ring.
template <typename T>
Polynomial<T> charpoly(const Matrix<T>& a) {
  a.require_square("charpoly");
  const std::size_t n = a.rows();
  // descending coefficients, leading 1
  std::vector<T> p{T(1)};
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<T> toeplitz;
    toeplitz.reserve(r + 2);
    toeplitz.emplace_back(1);
    toeplitz.push_back(-a(r, r));
    if (r > 0) {
      std::vector<T> v(r);
      for (std::size_t i = 0; i < r; ++i) v[i] = a(i, r);
      for (std::size_t m = 0; m < r; ++m) {
        T dot(0);
        for (std::size_t j = 0; j < r; ++j)
          if (a(r, j) != 0) dot += a(r, j) * v[j];
        toeplitz.push_back(-dot);
        if (m + 1 == r) break;
        std::vector<T> w(r, T(0));
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < r; ++j)
            if (a(i, j) != 0) w[i] += a(i, j) * v[j];
        v = std::move(w);
      }
    }
    std::vector<T> q(r + 2, T(0));
    for (std::size_t k = 0; k < r + 2; ++k)
      for (std::size_t j = 0; j <= std::min(k, r); ++j) q[k] += toeplitz[k - j] * p[j];
    p = std::move(q);
  }
  std::reverse(p.begin(), p.end());
  return Polynomial<T>(std::move(p));
}

/// Exact inverse by Gauss-Jordan elimination over Q.
inline RatMatrix rat_inverse(const RatMatrix& m) {
  m.require_square("rat_inverse");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) throw SingularMatrixError("rat_inverse: matrix is singular (det = 0)");
    if (p != k) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(a(k, c), a(p, c));
        std::swap(inv(k, c), inv(p, c));
      }
    }
    const Rational piv_inv = 1 / a(k, k);
    for (std::size_t c = 0; c < n; ++c) {
      a(k, c) *= piv_inv;
      inv(k, c) *= piv_inv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      const Rational f = a(i, k);
      for (std::size_t c = 0; c < n; ++c) {
        if (a(k, c) != 0) a(i, c) -= f * a(k, c);
        if (inv(k, c) != 0) inv(i, c) -= f * inv(k, c);
      }
    }
  }
  return inv;
}

/// Solves m x = b exactly; m must be nonsingular.
inline std::vector<Rational> rat_solve(const RatMatrix& m, std::vector<Rational> b) {
  m.require_square("rat_solve");
  const std::size_t n = m.rows();
  if (b.size() != n) throw DimensionError("rat_solve: right-hand side length mismatch");
  RatMatrix a = m;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) throw SingularMatrixError("rat_solve: matrix is singular (det = 0)");
    if (p != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(p, c));
      std::swap(b[k], b[p]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      const Rational f = a(i, k) / a(k, k);
      for (std::size_t c = k; c < n; ++c) a(i, c) -= f * a(k, c);
      b[i] -= f * b[k];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational s = b[i];
    for (std::size_t c = i + 1; c < n; ++c) s -= a(i, c) * x[c];
    x[i] = s / a(i, i);
  }
  return x;
}

/// Matrix text format: "rows cols" then rows lines of entries.
/// Integer matrices reject `num/den` entries that are not integral.
template <typename T>
Matrix<T> read_matrix(std::istream& in) {
  std::size_t rows = 0, cols = 0;
  if (!(in >> rows >> cols)) throw ParseError("matrix: missing 'rows cols' header");
  std::vector<T> data;
  data.reserve(rows * cols);
  std::string tok;
  for (std::size_t k = 0; k < rows * cols; ++k) {
    if (!(in >> tok)) throw ParseError("matrix: expected " + std::to_string(rows * cols) + " entries, got " + std::to_string(k));
    Rational q;
    try {
      q = parse_rational(tok);
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("matrix: ") + e.what());
    }
    if constexpr (std::is_same_v<T, BigInt>) {
      if (!is_integral(q)) throw ParseError("matrix: non-integer entry '" + tok + "' in integer matrix");
      data.push_back(numerator(q));
    } else {
      data.push_back(q);
    }
  }
  if (in >> tok) throw ParseError("matrix: trailing data '" + tok + "'");
  return Matrix<T>(rows, cols, std::move(data));
}

template <typename T>
Matrix<T> parse_matrix(const std::string& text) {
  std::istringstream in(text);
  return read_matrix<T>(in);
}

template <typename T>
void write_matrix(std::ostream& out, const Matrix<T>& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << to_string(m(i, j));
    }
    out << '\n';
  }
}

template <typename T>
std::string format_matrix(const Matrix<T>& m) {
  std::ostringstream os;
  write_matrix(os, m);
  return os.str();
}

/// Common denominator of all entries.
inline BigInt common_denominator(const RatMatrix& m) {
  BigInt l = 1;
  for (const auto& x : m.data()) l = boost::multiprecision::lcm(l, denominator(x));
  return l;
}

}  // namespace sgdgs
