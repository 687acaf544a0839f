#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "akahler/errors.hpp"

namespace akahler {

/// Arbitrary precision rational number, always kept in lowest terms with a
/// positive denominator.
///
/// Text form: optional sign, decimal integer, optional "/" and a positive
/// decimal integer, e.g. "-3/2". `str()` prints the canonical form (no "+",
/// denominator omitted when it is 1), so `parse(x.str()) == x` and
/// `parse(s).str() == s` for every canonical `s`.
class Rational {
public:
  Rational() = default;
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design of numeric literals
  Rational(long n, long d) : v_(n, d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  static Rational parse(std::string_view text) {
    auto fail = [&] { return SyntaxError("malformed rational '" + std::string(text) + "'"); };
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      negative = text[pos] == '-';
      ++pos;
    }
    auto digits = [&](std::string_view& out) {
      std::size_t start = pos;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
      out = text.substr(start, pos - start);
      return !out.empty();
    };
    std::string_view num, den;
    if (!digits(num)) throw fail();
    if (pos < text.size()) {
      if (text[pos] != '/') throw fail();
      ++pos;
      if (!digits(den) || pos != text.size()) throw fail();
    }
    mpz_class n(std::string(num), 10);
    mpz_class d(den.empty() ? std::string("1") : std::string(den), 10);
    if (d == 0) throw SyntaxError("zero denominator in '" + std::string(text) + "'");
    if (negative) n = -n;
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(std::move(q));
  }

  std::string str() const { return v_.get_str(10); }

  const mpq_class& value() const noexcept { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const noexcept { return sgn(v_) == 0; }
  int sign() const noexcept { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
  mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

/// Exact square root when `r` is the square of a rational.
inline std::optional<Rational> exact_sqrt(const Rational& r) {
  if (r.sign() < 0) return std::nullopt;
  mpz_class n = r.numerator(), d = r.denominator();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
  return Rational(mpq_class(sn, sd));
}

/// Element re + i*im of the Gaussian rationals Q(i).
class GaussianRational {
public:
  GaussianRational() = default;
  GaussianRational(Rational re, Rational im = Rational(0)) : re_(std::move(re)), im_(std::move(im)) {}  // NOLINT
  GaussianRational(long re) : re_(re) {}  // NOLINT

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const noexcept { return re_; }
  const Rational& im() const noexcept { return im_; }

  bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }
  GaussianRational conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }
  GaussianRational inverse() const {
    if (is_zero()) throw std::domain_error("GaussianRational: division by zero");
    Rational n = norm();
    return {re_ / n, -im_ / n};
  }

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o) { re_ += o.re_; im_ += o.im_; return *this; }
  GaussianRational& operator-=(const GaussianRational& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }
  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) = default;

  /// "a + bi" / "a - bi", e.g. "1 + 0i", "-1/2 - 3i".
  std::string str() const {
    return re_.str() + (im_.sign() < 0 ? " - " : " + ") + abs(im_).str() + "i";
  }
  friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.str(); }

private:
  Rational re_;
  Rational im_;
};

/// Exact square root in Q(i), when one exists. Returns the root with
/// non-negative real part (positive imaginary part if the real part is 0).
inline std::optional<GaussianRational> exact_sqrt(const GaussianRational& z) {
  if (z.is_zero()) return GaussianRational();
  auto modulus = exact_sqrt(z.norm());
  if (!modulus) return std::nullopt;
  auto x = exact_sqrt((*modulus + z.re()) / Rational(2));
  if (!x) return std::nullopt;
  if (!x->is_zero()) return GaussianRational(*x, z.im() / (Rational(2) * *x));
  auto y = exact_sqrt((*modulus - z.re()) / Rational(2));
  if (!y) return std::nullopt;
  return GaussianRational(Rational(0), *y);
}

}  // namespace akahler
