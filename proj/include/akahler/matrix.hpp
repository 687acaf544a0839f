#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "akahler/errors.hpp"
#include "akahler/scalar.hpp"

namespace akahler {

/// Dense row-major matrix over an exact field (Rational or GaussianRational).
///
/// As a linear map on column vectors, column j holds the image of the j-th
/// basis vector.
template <class T>
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  static Matrix diagonal(std::span<const T> d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }
  static Matrix from_columns(std::span<const std::vector<T>> cols) {
    if (cols.empty()) return {};
    Matrix m(cols[0].size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != m.rows_) throw DimensionMismatch("ragged columns");
      for (std::size_t i = 0; i < m.rows_; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> column(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }
  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if (!((*this)(i, j) == (*this)(j, i))) return false;
    return true;
  }

  T trace() const {
    T t{};
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }
  Matrix operator-() const {
    Matrix r = *this;
    for (auto& x : r.data_) x = -x;
    return r;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }

  friend std::vector<T> operator*(const Matrix& a, std::span<const T> v) {
    if (a.cols_ != v.size()) throw DimensionMismatch("matrix-vector shape mismatch");
    std::vector<T> r(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j)
        if (!v[j].is_zero()) r[i] += a(i, j) * v[j];
    return r;
  }
  friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& v) {
    return a * std::span<const T>(v);
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    for (std::size_t i = 0; i < m.rows_; ++i) {
      os << '[';
      for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? " " : "") << m(i, j);
      os << "]\n";
    }
    return os;
  }

private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using ComplexMatrix = Matrix<GaussianRational>;
using Vector = std::vector<Rational>;

namespace detail {

/// Reduced row echelon form in place; returns pivot columns.
template <class T>
std::vector<std::size_t> rref(Matrix<T>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    T inv = T(1) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      T f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace detail

template <class T>
std::size_t rank(Matrix<T> m) {
  return detail::rref(m).size();
}

/// Basis of the right kernel {x : m x = 0}.
template <class T>
std::vector<std::vector<T>> nullspace(Matrix<T> m) {
  auto pivots = detail::rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(m.cols());
    v[free] = T(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class T>
T determinant(Matrix<T> m) {
  if (!m.is_square()) throw DimensionMismatch("determinant of non-square matrix");
  const std::size_t n = m.rows();
  T det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return T(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    T inv = T(1) / m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      T f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

/// Exact inverse by Gauss-Jordan elimination. Throws Singular.
template <class T>
Matrix<T> invert(const Matrix<T>& m) {
  if (!m.is_square()) throw DimensionMismatch("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix<T> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = T(1);
  }
  auto pivots = detail::rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw Singular("matrix is singular");
  Matrix<T> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Inertia of a symmetric rational matrix by congruence elimination
/// (Sylvester). Zero diagonals are handled with 2x2 pivot blocks
/// [[0,b],[b,0]], each contributing one positive and one negative sign.
inline Signature signature(const RationalMatrix& m) {
  if (!m.is_symmetric()) throw NotSymmetric("signature requires a symmetric matrix");
  RationalMatrix a = m;
  const std::size_t n = a.rows();
  std::vector<bool> done(n, false);
  Signature sig;
  std::size_t remaining = n;

  auto eliminate_single = [&](std::size_t k) {
    const Rational inv = Rational(1) / a(k, k);
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || i == k || a(i, k).is_zero()) continue;
      const Rational f = a(i, k) * inv;
      for (std::size_t j = 0; j < n; ++j)
        if (!done[j] && j != k) a(i, j) -= f * a(k, j);
    }
    for (std::size_t i = 0; i < n; ++i) a(i, k) = a(k, i) = Rational(0);
  };

  while (remaining > 0) {
    std::optional<std::size_t> diag;
    for (std::size_t k = 0; k < n && !diag; ++k)
      if (!done[k] && !a(k, k).is_zero()) diag = k;
    if (diag) {
      const std::size_t k = *diag;
      (a(k, k).sign() > 0 ? sig.positive : sig.negative)++;
      eliminate_single(k);
      done[k] = true;
      --remaining;
      continue;
    }
    std::optional<std::pair<std::size_t, std::size_t>> off;
    for (std::size_t k = 0; k < n && !off; ++k)
      for (std::size_t l = k + 1; l < n && !off; ++l)
        if (!done[k] && !done[l] && !a(k, l).is_zero()) off = std::pair{k, l};
    if (!off) {
      sig.zero += remaining;
      break;
    }
    // Block [[0,b],[b,0]] with inverse [[0,1/b],[1/b,0]].
    const auto [k, l] = *off;
    const Rational binv = Rational(1) / a(k, l);
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || i == k || i == l) continue;
      const Rational uk = a(i, k), ul = a(i, l);
      if (uk.is_zero() && ul.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (done[j] || j == k || j == l) continue;
        a(i, j) -= (uk * a(l, j) + ul * a(k, j)) * binv;
      }
    }
    for (std::size_t i = 0; i < n; ++i) a(i, k) = a(k, i) = a(i, l) = a(l, i) = Rational(0);
    done[k] = done[l] = true;
    remaining -= 2;
    sig.positive++;
    sig.negative++;
  }
  return sig;
}

inline Vector basis_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v[i] = Rational(1);
  return v;
}

inline bool is_zero(std::span<const Rational> v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

inline Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot product length mismatch");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

/// g(u, v) for a Gram matrix g.
inline Rational inner(const RationalMatrix& g, std::span<const Rational> u, std::span<const Rational> v) {
  return dot(u, g * v);
}

inline Vector operator+(Vector a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}
inline Vector operator-(Vector a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}
inline Vector operator*(const Rational& s, Vector v) {
  for (auto& x : v) x *= s;
  return v;
}

/// Real 2m x 2m matrix of a complex m x m matrix in the basis
/// {e1, i e1, ..., em, i em}.
inline RationalMatrix realify(const ComplexMatrix& c) {
  RationalMatrix r(2 * c.rows(), 2 * c.cols());
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j) {
      const auto& z = c(i, j);
      r(2 * i, 2 * j) = z.re();
      r(2 * i, 2 * j + 1) = -z.im();
      r(2 * i + 1, 2 * j) = z.im();
      r(2 * i + 1, 2 * j + 1) = z.re();
    }
  return r;
}

/// Standard complex structure diag(j, ..., j) with j = [[0,-1],[1,0]].
inline RationalMatrix standard_complex_structure(std::size_t n) {
  RationalMatrix j(n, n);
  for (std::size_t a = 0; 2 * a + 1 < n; ++a) {
    j(2 * a + 1, 2 * a) = Rational(1);
    j(2 * a, 2 * a + 1) = Rational(-1);
  }
  return j;
}

/// diag(1, -1, ..., 1, -1): the Gram matrix of an orthonormal J-basis.
inline RationalMatrix standard_neutral_metric(std::size_t n) {
  RationalMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) g(i, i) = Rational(i % 2 == 0 ? 1 : -1);
  return g;
}

}  // namespace akahler
