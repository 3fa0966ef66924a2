// Copyright 2026 The spinchain Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SPINCHAIN_MATRIX_HPP
#define SPINCHAIN_MATRIX_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "spinchain/errors.hpp"

namespace spinchain {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major. Sized for register dimensions
/// (at most 2^10), so products are plain triple loops.
class CMatrix {
 public:
  CMatrix() = default;
  explicit CMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

  static CMatrix identity(std::size_t dim) {
    CMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t dim() const noexcept { return dim_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

  std::span<Complex> entries() noexcept { return data_; }
  std::span<const Complex> entries() const noexcept { return data_; }

  CMatrix adjoint() const {
    CMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
      for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
  }

  Complex trace() const {
    Complex t{};
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
  }

  CMatrix& operator+=(const CMatrix& o) {
    require_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }

  CMatrix& operator-=(const CMatrix& o) {
    require_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }

  CMatrix& operator*=(Complex s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  /// this += s * o
  void add_scaled(const CMatrix& o, Complex s) {
    require_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += s * o.data_[i];
  }

  friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
  friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
  friend CMatrix operator*(CMatrix a, Complex s) { return a *= s; }
  friend CMatrix operator*(Complex s, CMatrix a) { return a *= s; }

  friend CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    a.require_same(b);
    const std::size_t n = a.dim_;
    CMatrix out(n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t k = 0; k < n; ++k) {
        const Complex ark = a(r, k);
        if (ark == Complex{}) continue;
        for (std::size_t c = 0; c < n; ++c) out(r, c) += ark * b(k, c);
      }
    }
    return out;
  }

  friend bool operator==(const CMatrix&, const CMatrix&) = default;

  bool all_finite() const {
    return std::all_of(data_.begin(), data_.end(), [](const Complex& z) {
      return std::isfinite(z.real()) && std::isfinite(z.imag());
    });
  }

 private:
  void require_same(const CMatrix& o) const {
    if (o.dim_ != dim_) {
      throw ArgumentError("matrix dimension mismatch: " + std::to_string(dim_) + " vs " +
                          std::to_string(o.dim_));
    }
  }

  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

/// max_{mn} |a_mn - b_mn|
inline double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  if (a.dim() != b.dim()) throw ArgumentError("matrix dimension mismatch");
  double worst = 0.0;
  auto ea = a.entries();
  auto eb = b.entries();
  for (std::size_t i = 0; i < ea.size(); ++i) worst = std::max(worst, std::abs(ea[i] - eb[i]));
  return worst;
}

/// max_{mn} |a_mn - conj(a_nm)|
inline double hermiticity_error(const CMatrix& a) {
  double worst = 0.0;
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = r; c < a.dim(); ++c)
      worst = std::max(worst, std::abs(a(r, c) - std::conj(a(c, r))));
  return worst;
}

}  // namespace spinchain

#endif  // SPINCHAIN_MATRIX_HPP
