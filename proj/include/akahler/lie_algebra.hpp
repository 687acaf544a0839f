#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "akahler/errors.hpp"
#include "akahler/matrix.hpp"
#include "akahler/tensor.hpp"

namespace akahler {

class LieAlgebra;

/// Unvalidated bracket table. Any assignment is representable here, including
/// tables that break antisymmetry or the Jacobi identity; `validate()` is the
/// only way to obtain a LieAlgebra.
class LieAlgebraDraft {
public:
  explicit LieAlgebraDraft(std::size_t dim) : table_(dim) {}

  std::size_t dim() const noexcept { return table_.dim(); }

  /// Sets [e_i, e_j] (0-based) without touching [e_j, e_i].
  void set_raw(std::size_t i, std::size_t j, const Vector& v) {
    check(i, j, v);
    table_.set_fiber(i, j, v);
  }
  /// Sets [e_i, e_j] and [e_j, e_i] = -[e_i, e_j].
  void set_bracket(std::size_t i, std::size_t j, const Vector& v) {
    check(i, j, v);
    table_.set_fiber(i, j, v);
    table_.set_fiber(j, i, Rational(-1) * v);
  }

  Vector bracket_basis(std::size_t i, std::size_t j) const { return table_.fiber(i, j); }
  const Tensor3& table() const noexcept { return table_; }

  Vector bracket(const Vector& x, const Vector& y) const {
    const std::size_t n = dim();
    if (x.size() != n || y.size() != n) throw DimensionMismatch("bracket operand length");
    Vector r(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (y[j].is_zero()) continue;
        const Rational s = x[i] * y[j];
        for (std::size_t k = 0; k < n; ++k)
          if (!table_(i, j, k).is_zero()) r[k] += s * table_(i, j, k);
      }
    }
    return r;
  }

  bool is_antisymmetric() const {
    const std::size_t n = dim();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (!(table_(i, j, k) == -table_(j, i, k))) return false;
    return true;
  }

  /// Largest absolute component of the Jacobiator over basis triples i<j<k.
  Rational jacobi_residual() const {
    const std::size_t n = dim();
    Rational worst;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) {
          const Vector ei = basis_vector(n, i), ej = basis_vector(n, j), ek = basis_vector(n, k);
          const Vector jac = bracket(bracket(ei, ej), ek) + bracket(bracket(ej, ek), ei) +
                             bracket(bracket(ek, ei), ej);
          for (const auto& x : jac)
            if (abs(x) > worst) worst = abs(x);
        }
    return worst;
  }

  inline LieAlgebra validate() const;

private:
  void check(std::size_t i, std::size_t j, const Vector& v) const {
    if (i >= dim() || j >= dim() || v.size() != dim()) throw DimensionMismatch("bracket index or length");
  }

  Tensor3 table_;
};

/// Real Lie algebra given by structure constants c^k_{ij} in a fixed basis
/// e_1..e_n (0-based in the API): [e_i, e_j] = sum_k c^k_{ij} e_k.
/// Only the i<j brackets are stored.
class LieAlgebra {
public:
  static LieAlgebra abelian(std::size_t n) { return LieAlgebra(n); }

  /// Builds and validates from i<j brackets.
  static LieAlgebra from_brackets(std::size_t n, const std::map<std::pair<std::size_t, std::size_t>, Vector>& br) {
    LieAlgebraDraft d(n);
    for (const auto& [ij, v] : br) d.set_bracket(ij.first, ij.second, v);
    return d.validate();
  }

  std::size_t dim() const noexcept { return n_; }

  Vector bracket_basis(std::size_t i, std::size_t j) const {
    if (i == j) return Vector(n_);
    if (i < j) return upper_[pair_index(i, j)];
    return Rational(-1) * upper_[pair_index(j, i)];
  }

  Rational c(std::size_t i, std::size_t j, std::size_t k) const {
    if (i == j) return Rational(0);
    return i < j ? upper_[pair_index(i, j)][k] : -upper_[pair_index(j, i)][k];
  }

  Vector bracket(const Vector& x, const Vector& y) const {
    if (x.size() != n_ || y.size() != n_) throw DimensionMismatch("bracket operand length");
    Vector r(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (j == i || y[j].is_zero()) continue;
        const Rational s = i < j ? x[i] * y[j] : -(x[i] * y[j]);
        const Vector& b = upper_[pair_index(std::min(i, j), std::max(i, j))];
        for (std::size_t k = 0; k < n_; ++k)
          if (!b[k].is_zero()) r[k] += s * b[k];
      }
    }
    return r;
  }

  /// Matrix of ad_x = [x, .].
  RationalMatrix ad(const Vector& x) const {
    RationalMatrix m(n_, n_);
    for (std::size_t j = 0; j < n_; ++j) {
      const Vector col = bracket(x, basis_vector(n_, j));
      for (std::size_t k = 0; k < n_; ++k) m(k, j) = col[k];
    }
    return m;
  }

  bool is_abelian() const {
    for (const auto& v : upper_)
      if (!akahler::is_zero(v)) return false;
    return true;
  }

  /// Same algebra written in the basis f_j = P e_j (columns of P).
  LieAlgebra transport(const RationalMatrix& p) const {
    if (p.rows() != n_ || !p.is_square()) throw DimensionMismatch("transport matrix shape");
    const RationalMatrix pinv = invert(p);
    LieAlgebra out(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        out.upper_[pair_index(i, j)] = pinv * bracket(p.column(i), p.column(j));
    return out;
  }

  LieAlgebraDraft draft() const {
    LieAlgebraDraft d(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j) d.set_bracket(i, j, upper_[pair_index(i, j)]);
    return d;
  }

  friend bool operator==(const LieAlgebra&, const LieAlgebra&) = default;

private:
  friend class LieAlgebraDraft;
  explicit LieAlgebra(std::size_t n) : n_(n), upper_(n * (n ? n - 1 : 0) / 2, Vector(n)) {}

  std::size_t pair_index(std::size_t i, std::size_t j) const { return i * n_ - i * (i + 1) / 2 + (j - i - 1); }

  std::size_t n_ = 0;
  std::vector<Vector> upper_;
};

inline LieAlgebra LieAlgebraDraft::validate() const {
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!(table_(i, j, k) == -table_(j, i, k)))
          throw AntisymmetryViolation("[e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) +
                                      "] is not minus [e" + std::to_string(j + 1) + ",e" + std::to_string(i + 1) + "]");
  const Rational residual = jacobi_residual();
  if (!residual.is_zero()) throw JacobiViolation("Jacobi identity fails (residual " + residual.str() + ")");
  LieAlgebra out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) out.upper_[out.pair_index(i, j)] = table_.fiber(i, j);
  return out;
}

/// Underlying real algebra of a complex Lie algebra with structure constants
/// [u_p, u_q] = sum_r c[p][q][r] u_r (p < q), on the real basis
/// u_1, i u_1, ..., u_m, i u_m. Multiplication by i is then bi-invariant.
inline LieAlgebra realify_complex_algebra(const std::vector<std::vector<std::vector<GaussianRational>>>& c) {
  const std::size_t m = c.size(), n = 2 * m;
  LieAlgebraDraft d(n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) {
      if (p / 2 == q / 2) continue;
      GaussianRational phase(1);
      if (p % 2) phase = phase * GaussianRational::i();
      if (q % 2) phase = phase * GaussianRational::i();
      Vector v(n);
      for (std::size_t r = 0; r < m; ++r) {
        const GaussianRational z = phase * c[p / 2][q / 2][r];
        v[2 * r] = z.re();
        v[2 * r + 1] = z.im();
      }
      d.set_bracket(p, q, v);
    }
  return d.validate();
}

/// Always zero for a validated algebra; kept for symmetry with the draft API.
inline Rational jacobi_residual(const LieAlgebra& l) { return l.draft().jacobi_residual(); }
inline Rational jacobi_residual(const LieAlgebraDraft& d) { return d.jacobi_residual(); }

/// B_ij = tr(ad_{e_i} ad_{e_j}).
inline RationalMatrix killing_form(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  std::vector<RationalMatrix> ads;
  ads.reserve(n);
  for (std::size_t i = 0; i < n; ++i) ads.push_back(l.ad(basis_vector(n, i)));
  RationalMatrix b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) b(i, j) = b(j, i) = (ads[i] * ads[j]).trace();
  return b;
}

inline bool is_unimodular(const LieAlgebra& l) {
  for (std::size_t i = 0; i < l.dim(); ++i)
    if (!l.ad(basis_vector(l.dim(), i)).trace().is_zero()) return false;
  return true;
}

/// dim span{[e_i, e_j]}.
inline std::size_t derived_dim(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) cols.push_back(l.bracket_basis(i, j));
  if (cols.empty()) return 0;
  return rank(RationalMatrix::from_columns(cols));
}

/// dim {x : [x, e_j] = 0 for all j}.
inline std::size_t center_dim(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  // Row block j holds ad_{e_j} applied as x -> [e_j, x] = -[x, e_j]; the
  // kernel of the stacked maps is the center.
  RationalMatrix stacked(n * n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const RationalMatrix a = l.ad(basis_vector(n, j));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) stacked(j * n + r, c) = a(r, c);
  }
  return n - rank(stacked);
}

inline bool is_complex_structure(const RationalMatrix& j) {
  return j.is_square() && j * j == -RationalMatrix::identity(j.rows());
}

inline void require_complex_structure(const LieAlgebra& l, const RationalMatrix& j) {
  if (j.rows() != l.dim() || !j.is_square()) throw DimensionMismatch("complex structure shape");
  if (!is_complex_structure(j)) throw NotComplexStructure("J^2 != -I");
}

/// N(e_i, e_j) = [Je_i, Je_j] - J[Je_i, e_j] - J[e_i, Je_j] - [e_i, e_j].
inline Tensor3 nijenhuis(const LieAlgebra& l, const RationalMatrix& j) {
  require_complex_structure(l, j);
  const std::size_t n = l.dim();
  Tensor3 t(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const Vector x = basis_vector(n, a), y = basis_vector(n, b);
      const Vector jx = j * x, jy = j * y;
      const Vector v = l.bracket(jx, jy) - j * l.bracket(jx, y) - j * l.bracket(x, jy) - l.bracket(x, y);
      t.set_fiber(a, b, v);
      t.set_fiber(b, a, Rational(-1) * v);
    }
  return t;
}

/// [Jx, Jy] = [x, y].
inline bool is_abelian_J(const LieAlgebra& l, const RationalMatrix& j) {
  require_complex_structure(l, j);
  const std::size_t n = l.dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (l.bracket(j.column(a), j.column(b)) != l.bracket_basis(a, b)) return false;
  return true;
}

/// [Jx, y] = J[x, y].
inline bool is_bi_invariant_J(const LieAlgebra& l, const RationalMatrix& j) {
  require_complex_structure(l, j);
  const std::size_t n = l.dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (l.bracket(j.column(a), basis_vector(n, b)) != j * l.bracket_basis(a, b)) return false;
  return true;
}

/// [Jx, Jy] = -[x, y].
inline bool is_anti_abelian_J(const LieAlgebra& l, const RationalMatrix& j) {
  require_complex_structure(l, j);
  const std::size_t n = l.dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (l.bracket(j.column(a), j.column(b)) != Rational(-1) * l.bracket_basis(a, b)) return false;
  return true;
}

}  // namespace akahler
