#pragma once

#include <optional>

#include "akahler/geometry.hpp"

namespace akahler {

/// Cyclic 3-tensor theta(x, y, z) = F(x, y, z) + F(y, z, x) + F(z, x, y)
/// over a basis.
class ThetaTensor {
public:
  explicit ThetaTensor(Tensor3 t) : t_(std::move(t)) {}

  std::size_t dim() const noexcept { return t_.dim(); }
  const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const { return t_(i, j, k); }
  const Tensor3& table() const noexcept { return t_; }
  bool is_zero() const { return t_.is_zero(); }

  friend bool operator==(const ThetaTensor&, const ThetaTensor&) = default;

private:
  Tensor3 t_;
};

namespace detail {

template <class F>
ThetaTensor cyclic_sum(std::size_t n, F&& f) {
  // f(i, j, k) = F(e_i, e_j, e_k)
  Tensor3 base(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) base(i, j, k) = f(i, j, k);
  Tensor3 t(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) t(i, j, k) = base(i, j, k) + base(j, k, i) + base(k, i, j);
  return ThetaTensor(std::move(t));
}

}  // namespace detail

/// F(x, y, z) = g([Jx, y], z).
inline ThetaTensor theta_bracket_form(const AntiHermitianStructure& s) {
  const std::size_t n = s.dim();
  const auto& j = s.complex_structure();
  std::vector<RationalMatrix> ad_j;
  for (std::size_t i = 0; i < n; ++i) ad_j.push_back(s.metric() * s.algebra().ad(j.column(i)));
  return detail::cyclic_sum(n, [&](std::size_t i, std::size_t a, std::size_t b) { return ad_j[i](b, a); });
}

/// F(x, y, z) = g(nabla_{Jx} y + J nabla_x y, z).
inline ThetaTensor theta_connection_form(const AntiHermitianStructure& s, const Connection& c) {
  const std::size_t n = s.dim();
  const auto& j = s.complex_structure();
  std::vector<RationalMatrix> d;
  for (std::size_t i = 0; i < n; ++i) d.push_back(s.metric() * (c.op(j.column(i)) + j * c.op(i)));
  return detail::cyclic_sum(n, [&](std::size_t i, std::size_t a, std::size_t b) { return d[i](b, a); });
}

/// Fully antisymmetric under every permutation of the three slots.
inline bool theta_is_skew(const ThetaTensor& t) {
  const std::size_t n = t.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!(t(i, j, k) == -t(j, i, k)) || !(t(i, j, k) == -t(i, k, j))) return false;
  return true;
}

/// theta(Jx, y, z) = theta(x, Jy, z) = theta(x, y, Jz).
inline bool theta_is_pure(const ThetaTensor& t, const RationalMatrix& j) {
  const std::size_t n = t.dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        Rational s0, s1, s2;
        for (std::size_t m = 0; m < n; ++m) {
          s0 += j(m, a) * t(m, b, c);
          s1 += j(m, b) * t(a, m, c);
          s2 += j(m, c) * t(a, b, m);
        }
        if (!(s0 == s1) || !(s1 == s2)) return false;
      }
  return true;
}

inline bool anti_kahler_via_theta(const AntiHermitianStructure& s) {
  const ThetaTensor t = theta_bracket_form(s);
  return theta_is_skew(t) && theta_is_pure(t, s.complex_structure());
}

/// Measured constant r with connection form = r * bracket form. Empty when
/// both vanish; proportional = false when no such constant exists.
struct ThetaRatio {
  bool proportional = true;
  std::optional<Rational> ratio;
};

inline ThetaRatio theta_ratio(const ThetaTensor& connection_form, const ThetaTensor& bracket_form) {
  const std::size_t n = bracket_form.dim();
  ThetaRatio out;
  for (std::size_t i = 0; i < n && !out.ratio; ++i)
    for (std::size_t j = 0; j < n && !out.ratio; ++j)
      for (std::size_t k = 0; k < n && !out.ratio; ++k)
        if (!bracket_form(i, j, k).is_zero()) out.ratio = connection_form(i, j, k) / bracket_form(i, j, k);
  if (!out.ratio) {
    out.proportional = connection_form.is_zero();
    return out;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!(connection_form(i, j, k) == *out.ratio * bracket_form(i, j, k))) {
          out.proportional = false;
          return out;
        }
  return out;
}

inline ThetaRatio theta_ratio(const AntiHermitianStructure& s) {
  return theta_ratio(theta_connection_form(s, levi_civita(s)), theta_bracket_form(s));
}

}  // namespace akahler
