#pragma once

#include <utility>

#include "akahler/errors.hpp"
#include "akahler/lie_algebra.hpp"
#include "akahler/matrix.hpp"

namespace akahler {

/// Left-invariant almost anti-Hermitian structure (g, J) on a Lie algebra:
/// J^2 = -I, g symmetric and nondegenerate, g(Jx, Jy) = -g(x, y).
class AntiHermitianStructure {
public:
  AntiHermitianStructure(LieAlgebra algebra, RationalMatrix g, RationalMatrix j)
      : algebra_(std::move(algebra)), g_(std::move(g)), j_(std::move(j)) {
    validate();
  }

  const LieAlgebra& algebra() const noexcept { return algebra_; }
  const RationalMatrix& metric() const noexcept { return g_; }
  const RationalMatrix& complex_structure() const noexcept { return j_; }
  std::size_t dim() const noexcept { return algebra_.dim(); }

  Rational inner(const Vector& u, const Vector& v) const { return akahler::inner(g_, u, v); }

  /// Same structure in the basis f_j = P e_j.
  AntiHermitianStructure transport(const RationalMatrix& p) const {
    const RationalMatrix pinv = invert(p);
    return {algebra_.transport(p), p.transpose() * g_ * p, pinv * j_ * p};
  }

  friend bool operator==(const AntiHermitianStructure&, const AntiHermitianStructure&) = default;

private:
  void validate() const {
    const std::size_t n = algebra_.dim();
    if (g_.rows() != n || g_.cols() != n || j_.rows() != n || j_.cols() != n)
      throw DimensionMismatch("metric and complex structure must be " + std::to_string(n) + "x" + std::to_string(n));
    if (!is_complex_structure(j_)) throw BadJSquare("J^2 != -I");
    if (!g_.is_symmetric()) throw NotSymmetric("metric is not symmetric");
    if (determinant(g_).is_zero()) throw SingularMetric("metric is degenerate");
    if (!(j_.transpose() * g_ * j_ == -g_)) throw NotAntiIsometry("g(Jx, Jy) != -g(x, y)");
  }

  LieAlgebra algebra_;
  RationalMatrix g_;
  RationalMatrix j_;
};

/// Gram matrix of <v, w>_C = g(v, w) - i g(Jv, w) over the real basis.
/// The form is C-bilinear for the complex structure (a + ib) v = a v + b Jv.
class ComplexifiedForm {
public:
  explicit ComplexifiedForm(const AntiHermitianStructure& s) : j_(s.complex_structure()) {
    const RationalMatrix& g = s.metric();
    const RationalMatrix jg = j_.transpose() * g;  // (i, k) -> g(Je_i, e_k)
    gram_ = ComplexMatrix(g.rows(), g.cols());
    for (std::size_t a = 0; a < g.rows(); ++a)
      for (std::size_t b = 0; b < g.cols(); ++b) gram_(a, b) = GaussianRational(g(a, b), -jg(a, b));
  }

  const ComplexMatrix& gram() const noexcept { return gram_; }

  GaussianRational operator()(const Vector& v, const Vector& w) const {
    GaussianRational s;
    for (std::size_t a = 0; a < v.size(); ++a) {
      if (v[a].is_zero()) continue;
      for (std::size_t b = 0; b < w.size(); ++b)
        if (!w[b].is_zero()) s += GaussianRational(v[a] * w[b]) * gram_(a, b);
    }
    return s;
  }

  /// (a + ib) . v
  Vector scale(const GaussianRational& z, const Vector& v) const { return z.re() * v + z.im() * (j_ * v); }

private:
  RationalMatrix j_;
  ComplexMatrix gram_;
};

inline ComplexifiedForm complexify(const AntiHermitianStructure& s) { return ComplexifiedForm(s); }

/// g~(x, y) = g(Jx, y); again anti-Hermitian for the same J.
inline AntiHermitianStructure twin_metric(const AntiHermitianStructure& s) {
  return {s.algebra(), s.complex_structure().transpose() * s.metric(), s.complex_structure()};
}

/// T^t g T = g and T J = J T.
inline bool preserves_metric_and_J(const AntiHermitianStructure& s, const RationalMatrix& t) {
  const auto& g = s.metric();
  const auto& j = s.complex_structure();
  return t.transpose() * g * t == g && t * j == j * t;
}

/// <Tv, Tw>_C = <v, w>_C for all v, w.
inline bool preserves_complex_form(const AntiHermitianStructure& s, const RationalMatrix& t) {
  const ComplexifiedForm f(s);
  const std::size_t n = s.dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (!(f(t.column(a), t.column(b)) == f.gram()(a, b))) return false;
  return true;
}

}  // namespace akahler
