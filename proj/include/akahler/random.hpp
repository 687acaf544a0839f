#pragma once

// Seeded generators for structures, algebras and linear maps. Every draw goes
// through Rng so identical seeds give identical streams on every platform.

#include <cstdint>
#include <random>

#include "akahler/catalog.hpp"

namespace akahler {

struct GeneratorConfig {
  std::uint64_t master_seed = 1;
  std::size_t samples = 20;
  std::size_t dim = 4;
  long coefficient_bound = 4;
};

/// splitmix64 finalizer over (master, index).
inline std::uint64_t sub_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

class Rng {
public:
  explicit Rng(std::uint64_t seed, long bound = 4) : eng_(seed), bound_(bound < 1 ? 1 : bound) {}

  long bound() const noexcept { return bound_; }

  /// Uniform in [0, n) by rejection; std distributions are not portable.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do x = eng_();
    while (x >= limit);
    return x % n;
  }
  long uniform(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
  bool coin() { return below(2) == 1; }
  std::uint64_t next_seed() { return eng_(); }

  Rational rational() { return {uniform(-bound_, bound_), uniform(1, bound_)}; }
  Rational nonzero_rational() {
    Rational r;
    do r = rational();
    while (r.is_zero());
    return r;
  }
  GaussianRational gaussian() { return {rational(), rational()}; }

private:
  std::mt19937_64 eng_;
  long bound_;
};

namespace random {

inline RationalMatrix matrix(Rng& rng, std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.rational();
  return m;
}

inline RationalMatrix invertible(Rng& rng, std::size_t n) {
  for (;;) {
    RationalMatrix m = matrix(rng, n);
    if (!determinant(m).is_zero()) return m;
  }
}

inline ComplexMatrix complex_matrix(Rng& rng, std::size_t m) {
  ComplexMatrix c(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) c(i, j) = rng.gaussian();
  return c;
}

/// P J0 P^{-1} for random invertible P.
inline RationalMatrix complex_structure(Rng& rng, std::size_t n) {
  const RationalMatrix p = invertible(rng, n);
  return p * standard_complex_structure(n) * invert(p);
}

/// Columns v1, Jv1, v2, Jv2, ... taken greedily from the standard basis, so
/// that P^{-1} J P = J0.
inline RationalMatrix j_adapted_basis(const RationalMatrix& j) {
  const std::size_t n = j.rows();
  std::vector<Vector> cols;
  for (std::size_t k = 0; k < n && cols.size() < n; ++k) {
    std::vector<Vector> trial = cols;
    trial.push_back(basis_vector(n, k));
    trial.push_back(j * basis_vector(n, k));
    if (rank(RationalMatrix::from_columns(trial)) == trial.size()) cols = std::move(trial);
  }
  return RationalMatrix::from_columns(cols);
}

/// Anti-Hermitian metric with Gram form S (complex symmetric, m x m) on the
/// J-complex space spanned by the J-adapted basis P.
inline RationalMatrix metric_from_complex_form(const ComplexMatrix& sform, const RationalMatrix& p) {
  const std::size_t m = sform.rows(), n = 2 * m;
  RationalMatrix g0(n, n);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      const Rational& re = sform(a, b).re();
      const Rational& im = sform(a, b).im();
      g0(2 * a, 2 * b) = re;
      g0(2 * a + 1, 2 * b) = -im;
      g0(2 * a, 2 * b + 1) = -im;
      g0(2 * a + 1, 2 * b + 1) = -re;
    }
  const RationalMatrix pinv = invert(p);
  return pinv.transpose() * g0 * pinv;
}

inline AntiHermitianStructure anti_hermitian_metric(const LieAlgebra& l, const RationalMatrix& j, Rng& rng) {
  require_complex_structure(l, j);
  const std::size_t m = l.dim() / 2;
  const RationalMatrix p = j_adapted_basis(j);
  for (int attempt = 0; attempt < 100; ++attempt) {
    ComplexMatrix s(m, m);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = a; b < m; ++b) s(a, b) = s(b, a) = rng.gaussian();
    if (determinant(s).is_zero()) continue;
    return {l, metric_from_complex_form(s, p), j};
  }
  throw SingularMetric("no nondegenerate complex form found after 100 draws");
}

/// Basis of all symmetric g (as matrices) with g(Jx, Jy) = -g(x, y) and
/// nabla J = 0 for the Levi-Civita connection of g. Both conditions are
/// linear in g; nondegeneracy is not imposed.
inline std::vector<RationalMatrix> anti_kahler_metric_space(const LieAlgebra& l, const RationalMatrix& j) {
  const std::size_t n = l.dim();
  std::vector<RationalMatrix> unknowns;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      RationalMatrix g(n, n);
      g(a, b) = g(b, a) = Rational(1);
      unknowns.push_back(std::move(g));
    }
  // lowered brackets [e_i, e_j] and images under J, reused for every unknown
  std::vector<Vector> jcol(n);
  for (std::size_t i = 0; i < n; ++i) jcol[i] = j.column(i);

  auto constraints = [&](const RationalMatrix& g) {
    std::vector<Rational> out;
    const RationalMatrix iso = j.transpose() * g * j + g;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a; b < n; ++b) out.push_back(iso(a, b));
    // K(x, y, z) = g([x,y],z) - g([y,z],x) + g([z,x],y); parallel J means
    // K(x, Jy, z) = K(x, y, Jz)
    auto koszul = [&](const Vector& x, const Vector& y, const Vector& z) {
      return inner(g, l.bracket(x, y), z) - inner(g, l.bracket(y, z), x) + inner(g, l.bracket(z, x), y);
    };
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) {
          const Vector x = basis_vector(n, a), y = basis_vector(n, b), z = basis_vector(n, c);
          out.push_back(koszul(x, jcol[b], z) - koszul(x, y, jcol[c]));
        }
    return out;
  };

  std::vector<std::vector<Rational>> columns;
  for (const auto& g : unknowns) columns.push_back(constraints(g));
  RationalMatrix system(columns.front().size(), unknowns.size());
  for (std::size_t u = 0; u < unknowns.size(); ++u)
    for (std::size_t r = 0; r < columns[u].size(); ++r) system(r, u) = columns[u][r];

  std::vector<RationalMatrix> basis;
  for (const auto& v : nullspace(system)) {
    RationalMatrix g(n, n);
    for (std::size_t u = 0; u < unknowns.size(); ++u)
      if (!v[u].is_zero()) g += v[u] * unknowns[u];
    basis.push_back(std::move(g));
  }
  return basis;
}

/// Random nondegenerate member of anti_kahler_metric_space; empty when the
/// space has no nondegenerate element within the retry budget.
inline std::optional<AntiHermitianStructure> anti_kahler_metric(const LieAlgebra& l, const RationalMatrix& j,
                                                                Rng& rng) {
  const auto basis = anti_kahler_metric_space(l, j);
  if (basis.empty()) return std::nullopt;
  for (int attempt = 0; attempt < 50; ++attempt) {
    RationalMatrix g(l.dim(), l.dim());
    for (const auto& b : basis) g += rng.rational() * b;
    if (!determinant(g).is_zero()) return AntiHermitianStructure(l, std::move(g), j);
  }
  return std::nullopt;
}

/// R ⋉_D R^{n-1}: [e_1, e_j] = D e_j.
inline LieAlgebra almost_abelian(Rng& rng, std::size_t n) {
  LieAlgebraDraft d(n);
  for (std::size_t j = 1; j < n; ++j) {
    Vector v(n);
    for (std::size_t k = 1; k < n; ++k) v[k] = rng.rational();
    d.set_bracket(0, j, v);
  }
  return d.validate();
}

/// Brackets of the first n-2 vectors land in the center span{e_{n-1}, e_n}.
inline LieAlgebra two_step_nilpotent(Rng& rng, std::size_t n) {
  LieAlgebraDraft d(n);
  for (std::size_t i = 0; i + 2 < n; ++i)
    for (std::size_t j = i + 1; j + 2 < n; ++j) {
      Vector v(n);
      v[n - 2] = rng.rational();
      v[n - 1] = rng.rational();
      d.set_bracket(i, j, v);
    }
  return d.validate();
}

using ComplexConstants = std::vector<std::vector<std::vector<GaussianRational>>>;

inline ComplexConstants zero_constants(std::size_t m) {
  return ComplexConstants(m, std::vector<std::vector<GaussianRational>>(m, std::vector<GaussianRational>(m)));
}

/// A complex Lie algebra of complex dimension n/2, realified. Multiplication
/// by i (standard J) is bi-invariant on the result.
inline LieAlgebra complex_algebra(Rng& rng, std::size_t n) {
  const std::size_t m = n / 2;
  ComplexConstants c = zero_constants(m);
  switch (rng.below(m == 2 ? 3 : 5)) {
    case 0:  // complex almost abelian
      for (std::size_t j = 1; j < m; ++j)
        for (std::size_t k = 1; k < m; ++k) c[0][j][k] = rng.gaussian();
      break;
    case 1:  // m = 2: [u1, u2] = z1 u1 + z2 u2; else complex Heisenberg-type
      if (m == 2) {
        c[0][1][0] = rng.gaussian();
        c[0][1][1] = rng.gaussian();
      } else {
        c[0][1][2] = rng.gaussian();
      }
      break;
    case 2:  // abelian C^m
      break;
    case 3:  // aff(C) + C
      c[0][1][1] = GaussianRational(1);
      break;
    default:  // sl(2, C)
      c[0][1][1] = GaussianRational(2);
      c[0][2][2] = GaussianRational(-2);
      c[1][2][0] = GaussianRational(1);
      break;
  }
  return realify_complex_algebra(c);
}

/// Generic algebra from the real generators above.
inline LieAlgebra real_algebra(Rng& rng, std::size_t n) {
  return rng.coin() ? almost_abelian(rng, n) : two_step_nilpotent(rng, n);
}

/// Complex orthogonal m x m matrix by the Cayley transform (I - K)(I + K)^{-1}
/// of a random complex skew K, optionally composed with a reflection.
inline ComplexMatrix complex_orthogonal(Rng& rng, std::size_t m) {
  for (;;) {
    ComplexMatrix k(m, m);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = a + 1; b < m; ++b) {
        k(a, b) = rng.gaussian();
        k(b, a) = GaussianRational() - k(a, b);
      }
    const ComplexMatrix id = ComplexMatrix::identity(m);
    const ComplexMatrix plus = id + k;
    if (determinant(plus).is_zero()) continue;
    ComplexMatrix q = (id - k) * invert(plus);
    if (rng.coin()) {
      for (std::size_t b = 0; b < m; ++b) q(b, 0) = GaussianRational() - q(b, 0);
    }
    return q;
  }
}

}  // namespace random

/// Public entry point: random anti-Hermitian metric for (L, J) from a seed.
inline AntiHermitianStructure random_anti_hermitian_metric(const LieAlgebra& l, const RationalMatrix& j,
                                                           std::uint64_t seed, long bound = 4) {
  Rng rng(seed, bound);
  return random::anti_hermitian_metric(l, j, rng);
}

}  // namespace akahler
