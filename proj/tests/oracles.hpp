#pragma once

// Independent reference computations on raw mpq_class arrays. They share no
// code with the library beyond reading structure constants and matrices.

#include <gmpxx.h>

#include <vector>

#include "akahler/structure.hpp"

namespace oracle {

using Q = mpq_class;
using Table3 = std::vector<std::vector<std::vector<Q>>>;
using Table4 = std::vector<Table3>;
using Mat = std::vector<std::vector<Q>>;

inline Table3 table3(std::size_t n) { return Table3(n, std::vector<std::vector<Q>>(n, std::vector<Q>(n))); }

inline Mat to_mat(const akahler::RationalMatrix& m) {
  Mat out(m.rows(), std::vector<Q>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).value();
  return out;
}

inline Table3 constants(const akahler::LieAlgebra& l) {
  const std::size_t n = l.dim();
  Table3 c = table3(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) c[i][j][k] = l.c(i, j, k).value();
  return c;
}

/// Gauss-Jordan inverse.
inline Mat inverse(Mat a) {
  const std::size_t n = a.size();
  Mat inv(n, std::vector<Q>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (a[p][col] == 0) ++p;
    std::swap(a[p], a[col]);
    std::swap(inv[p], inv[col]);
    const Q d = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= d;
      inv[col][j] /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Q f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

/// gamma[i][j][k] = component k of nabla_{e_i} e_j, from the Koszul formula
/// with structure constants lowered by g.
inline Table3 christoffel(const akahler::AntiHermitianStructure& s) {
  const std::size_t n = s.dim();
  const Mat g = to_mat(s.metric()), gi = inverse(g);
  const Table3 c = constants(s.algebra());
  auto lowered = [&](std::size_t i, std::size_t j, std::size_t k) {  // g([e_i, e_j], e_k)
    Q v = 0;
    for (std::size_t m = 0; m < n; ++m) v += c[i][j][m] * g[m][k];
    return v;
  };
  Table3 out = table3(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Q> low(n);
      for (std::size_t k = 0; k < n; ++k) low[k] = (lowered(i, j, k) - lowered(j, k, i) + lowered(k, i, j)) / 2;
      for (std::size_t m = 0; m < n; ++m)
        for (std::size_t k = 0; k < n; ++k) out[i][j][m] += gi[m][k] * low[k];
    }
  return out;
}

/// r[i][j][k][l] = component l of R(e_i, e_j) e_k.
inline Table4 riemann(const akahler::AntiHermitianStructure& s) {
  const std::size_t n = s.dim();
  const Table3 gm = christoffel(s), c = constants(s.algebra());
  Table4 r(n, table3(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          Q v = 0;
          for (std::size_t m = 0; m < n; ++m) v += gm[j][k][m] * gm[i][m][l] - gm[i][k][m] * gm[j][m][l];
          for (std::size_t p = 0; p < n; ++p) v -= c[i][j][p] * gm[p][k][l];
          r[i][j][k][l] = v;
        }
  return r;
}

/// Rc(y, z) = trace(x -> R(x, y) z).
inline Mat ricci(const akahler::AntiHermitianStructure& s) {
  const std::size_t n = s.dim();
  const Table4 r = riemann(s);
  Mat rc(n, std::vector<Q>(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) rc[j][k] += r[i][j][k][i];
  return rc;
}

/// B(e_i, e_j) = trace(ad_i ad_j) by direct index sums.
inline Mat killing(const akahler::LieAlgebra& l) {
  const std::size_t n = l.dim();
  const Table3 c = constants(l);
  Mat b(n, std::vector<Q>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t m = 0; m < n; ++m) b[i][j] += c[i][m][k] * c[j][k][m];
  return b;
}

}  // namespace oracle
