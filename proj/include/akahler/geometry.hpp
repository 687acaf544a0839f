#pragma once

#include <optional>
#include <vector>

#include "akahler/structure.hpp"
#include "akahler/tensor.hpp"

namespace akahler {

/// Left-invariant affine connection, nabla_{e_i} e_j = sum_k gamma(i, j, k) e_k.
class Connection {
public:
  explicit Connection(Tensor3 gamma) : gamma_(std::move(gamma)) {
    const std::size_t n = gamma_.dim();
    ops_.assign(n, RationalMatrix(n, n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) ops_[i](k, j) = gamma_(i, j, k);
  }

  std::size_t dim() const noexcept { return gamma_.dim(); }
  const Tensor3& christoffel() const noexcept { return gamma_; }

  /// Matrix of y -> nabla_{e_i} y.
  const RationalMatrix& op(std::size_t i) const { return ops_[i]; }

  /// Matrix of y -> nabla_x y.
  RationalMatrix op(const Vector& x) const {
    RationalMatrix m(dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i)
      if (!x[i].is_zero()) m += x[i] * ops_[i];
    return m;
  }

  Vector apply(const Vector& x, const Vector& y) const { return op(x) * y; }

  friend bool operator==(const Connection& a, const Connection& b) { return a.gamma_ == b.gamma_; }

private:
  Tensor3 gamma_;
  std::vector<RationalMatrix> ops_;
};

/// Levi-Civita connection from the Koszul formula
///   g(nabla_x y, z) = 1/2 (g([x,y],z) - g([y,z],x) + g([z,x],y)),
/// solved exactly with g^{-1}.
inline Connection levi_civita(const AntiHermitianStructure& s) {
  const std::size_t n = s.dim();
  const LieAlgebra& l = s.algebra();
  const RationalMatrix& g = s.metric();
  const RationalMatrix ginv = invert(g);

  // lowered(i, j, m) = g([e_i, e_j], e_m)
  Tensor3 lowered(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector gb = g * l.bracket_basis(i, j);
      for (std::size_t m = 0; m < n; ++m) {
        lowered(i, j, m) = gb[m];
        lowered(j, i, m) = -gb[m];
      }
    }

  const Rational half(1, 2);
  Tensor3 gamma(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector koszul(n);
      for (std::size_t m = 0; m < n; ++m)
        koszul[m] = half * (lowered(i, j, m) - lowered(j, m, i) + lowered(m, i, j));
      gamma.set_fiber(i, j, ginv * koszul);
    }
  return Connection(std::move(gamma));
}

/// Matrix of y -> (nabla_x J) y = nabla_x Jy - J nabla_x y.
inline RationalMatrix nabla_J_op(const AntiHermitianStructure& s, const Connection& c, const Vector& x) {
  const RationalMatrix n = c.op(x);
  const RationalMatrix& j = s.complex_structure();
  return n * j - j * n;
}

/// Table (i, j, k): k-th component of (nabla_{e_i} J) e_j.
inline Tensor3 nabla_J(const AntiHermitianStructure& s, const Connection& c) {
  const std::size_t n = s.dim();
  Tensor3 t(n);
  for (std::size_t i = 0; i < n; ++i) {
    const RationalMatrix m = nabla_J_op(s, c, basis_vector(n, i));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) t(i, j, k) = m(k, j);
  }
  return t;
}

inline bool is_anti_kahler(const AntiHermitianStructure& s, const Connection& c) { return nabla_J(s, c).is_zero(); }
inline bool is_anti_kahler(const AntiHermitianStructure& s) { return is_anti_kahler(s, levi_civita(s)); }

/// Riemann tensor with R(x, y) = [nabla_x, nabla_y] - nabla_{[x,y]}, stored
/// as the operators R(e_i, e_j) together with the lowered form
/// R_ijkl = g(R(e_i, e_j) e_k, e_l).
class CurvatureTensor {
public:
  CurvatureTensor(std::size_t n, std::vector<RationalMatrix> ops, const RationalMatrix& g)
      : n_(n), ops_(std::move(ops)), lowered_(n * n * n * n) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const RationalMatrix low = ops_[i * n + j].transpose() * g;
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t l = 0; l < n; ++l) lowered_[index(i, j, k, l)] = low(k, l);
      }
  }

  std::size_t dim() const noexcept { return n_; }

  /// Matrix of z -> R(e_i, e_j) z.
  const RationalMatrix& op(std::size_t i, std::size_t j) const { return ops_[i * n_ + j]; }

  RationalMatrix op(const Vector& x, const Vector& y) const {
    RationalMatrix m(n_, n_);
    for (std::size_t i = 0; i < n_; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < n_; ++j)
        if (!y[j].is_zero()) m += (x[i] * y[j]) * ops_[i * n_ + j];
    }
    return m;
  }

  /// R^l_{ijk}: l-th component of R(e_i, e_j) e_k.
  const Rational& upper(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const { return ops_[i * n_ + j](l, k); }
  const Rational& lowered(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return lowered_[index(i, j, k, l)];
  }

  bool is_zero() const {
    for (const auto& m : ops_)
      if (!m.is_zero()) return false;
    return true;
  }

  friend bool operator==(const CurvatureTensor& a, const CurvatureTensor& b) { return a.ops_ == b.ops_; }

private:
  std::size_t index(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return ((i * n_ + j) * n_ + k) * n_ + l;
  }

  std::size_t n_;
  std::vector<RationalMatrix> ops_;
  std::vector<Rational> lowered_;
};

inline CurvatureTensor curvature(const AntiHermitianStructure& s, const Connection& c) {
  const std::size_t n = s.dim();
  std::vector<RationalMatrix> ops(n * n, RationalMatrix(n, n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      RationalMatrix r = c.op(i) * c.op(j) - c.op(j) * c.op(i) - c.op(s.algebra().bracket_basis(i, j));
      ops[j * n + i] = -r;
      ops[i * n + j] = std::move(r);
    }
  return {n, std::move(ops), s.metric()};
}

struct Ricci {
  RationalMatrix form;      ///< Rc(e_j, e_k) = tr(x -> R(x, e_j) e_k)
  RationalMatrix operator_; ///< Ric with Rc(x, y) = g(Ric x, y)
};

inline Ricci ricci(const AntiHermitianStructure& s, const CurvatureTensor& r) {
  const std::size_t n = s.dim();
  RationalMatrix rc(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) rc(j, k) += r.upper(i, j, k, i);
  RationalMatrix op = invert(s.metric()) * rc.transpose();
  return {std::move(rc), std::move(op)};
}

inline Ricci ricci(const AntiHermitianStructure& s, const Connection& c) { return ricci(s, curvature(s, c)); }

struct EinsteinResult {
  bool einstein = false;
  std::optional<Rational> lambda;
};

/// Rc = lambda g exactly. lambda is read off the first nonzero diagonal entry
/// of g (first nonzero entry if the diagonal vanishes); Rc = 0 gives lambda 0.
inline EinsteinResult einstein(const AntiHermitianStructure& s, const Ricci& ric) {
  const RationalMatrix& g = s.metric();
  if (ric.form.is_zero()) return {true, Rational(0)};
  std::optional<std::pair<std::size_t, std::size_t>> at;
  for (std::size_t i = 0; i < g.rows() && !at; ++i)
    if (!g(i, i).is_zero()) at = std::pair{i, i};
  for (std::size_t i = 0; i < g.rows() && !at; ++i)
    for (std::size_t j = 0; j < g.cols() && !at; ++j)
      if (!g(i, j).is_zero()) at = std::pair{i, j};
  const Rational lambda = ric.form(at->first, at->second) / g(at->first, at->second);
  if (ric.form == lambda * g) return {true, lambda};
  return {false, std::nullopt};
}

inline bool is_flat(const AntiHermitianStructure& s) { return curvature(s, levi_civita(s)).is_zero(); }
inline bool is_ricci_flat(const AntiHermitianStructure& s) { return ricci(s, levi_civita(s)).form.is_zero(); }
inline EinsteinResult is_einstein(const AntiHermitianStructure& s) { return einstein(s, ricci(s, levi_civita(s))); }

/// R(Jx,y,z,w) = R(x,Jy,z,w) = R(x,y,Jz,w) = R(x,y,z,Jw) on the lowered tensor.
inline bool curvature_is_pure(const AntiHermitianStructure& s, const CurvatureTensor& r) {
  const std::size_t n = s.dim();
  const RationalMatrix& j = s.complex_structure();
  auto with_j = [&](std::size_t slot, std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
    Rational sum;
    std::size_t idx[4] = {a, b, c, d};
    const std::size_t fixed = idx[slot];
    for (std::size_t m = 0; m < n; ++m) {
      if (j(m, fixed).is_zero()) continue;
      idx[slot] = m;
      sum += j(m, fixed) * r.lowered(idx[0], idx[1], idx[2], idx[3]);
    }
    return sum;
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
          const Rational first = with_j(0, a, b, c, d);
          for (std::size_t slot = 1; slot < 4; ++slot)
            if (!(with_j(slot, a, b, c, d) == first)) return false;
        }
  return true;
}

inline bool curvature_is_pure(const AntiHermitianStructure& s) { return curvature_is_pure(s, curvature(s, levi_civita(s))); }

/// g([x,y],z) + g(y,[x,z]) = 0.
inline bool is_bi_invariant_metric(const AntiHermitianStructure& s) {
  const std::size_t n = s.dim();
  for (std::size_t x = 0; x < n; ++x) {
    const RationalMatrix a = s.algebra().ad(basis_vector(n, x));
    if (!(a.transpose() * s.metric() + s.metric() * a).is_zero()) return false;
  }
  return true;
}

}  // namespace akahler
