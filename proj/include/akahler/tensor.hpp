#pragma once

#include <cstddef>
#include <vector>

#include "akahler/matrix.hpp"

namespace akahler {

/// Dense n x n x n table of rationals. Vector-valued bilinear tables such as
/// (i, j) -> N(e_i, e_j) store the k-th component at (i, j, k).
class Tensor3 {
public:
  Tensor3() = default;
  explicit Tensor3(std::size_t n) : n_(n), data_(n * n * n) {}

  std::size_t dim() const noexcept { return n_; }
  Rational& operator()(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * n_ + j) * n_ + k]; }
  const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * n_ + j) * n_ + k];
  }

  Vector fiber(std::size_t i, std::size_t j) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>((i * n_ + j) * n_),
                  data_.begin() + static_cast<std::ptrdiff_t>((i * n_ + j + 1) * n_));
  }
  void set_fiber(std::size_t i, std::size_t j, const Vector& v) {
    for (std::size_t k = 0; k < n_; ++k) (*this)(i, j, k) = v[k];
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }

  friend bool operator==(const Tensor3&, const Tensor3&) = default;

private:
  std::size_t n_ = 0;
  std::vector<Rational> data_;
};

}  // namespace akahler
