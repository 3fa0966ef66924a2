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

#ifndef SPINCHAIN_DENSITY_MATRIX_HPP
#define SPINCHAIN_DENSITY_MATRIX_HPP

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <sstream>
#include <utility>
#include <vector>

#include "spinchain/errors.hpp"
#include "spinchain/matrix.hpp"
#include "spinchain/spin_register.hpp"

namespace spinchain {

/// Eigenvalues of a Hermitian matrix in ascending order.
///
/// Cyclic Jacobi on the real symmetric embedding [[Re, -Im], [Im, Re]],
/// whose spectrum is that of the input with every eigenvalue doubled.
/// Sweeps until the off-diagonal Frobenius norm drops below 1e-12 (scaled by
/// the matrix norm when that exceeds one).
inline std::vector<double> hermitian_eigenvalues(const CMatrix& h) {
  const std::size_t n = h.dim();
  const std::size_t m = 2 * n;
  std::vector<double> a(m * m);
  auto at = [&](std::size_t r, std::size_t c) -> double& { return a[r * m + c]; };
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      // Symmetrised so that tiny anti-Hermitian noise does not stall the sweep.
      const Complex z = 0.5 * (h(r, c) + std::conj(h(c, r)));
      at(r, c) = z.real();
      at(r + n, c + n) = z.real();
      at(r, c + n) = -z.imag();
      at(r + n, c) = z.imag();
    }
  }

  double frob = 0.0;
  for (double x : a) frob += x * x;
  const double tol = 1e-12 * std::max(1.0, std::sqrt(frob));

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = r + 1; c < m; ++c) s += 2.0 * at(r, c) * at(r, c);
    return std::sqrt(s);
  };

  for (int sweep = 0; sweep < 100 && off_norm() > tol; ++sweep) {
    for (std::size_t p = 0; p + 1 < m; ++p) {
      for (std::size_t q = p + 1; q < m; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < m; ++k) {
          const double akp = at(k, p);
          const double akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < m; ++k) {
          const double apk = at(p, k);
          const double aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
    }
  }

  std::vector<double> doubled(m);
  for (std::size_t i = 0; i < m; ++i) doubled[i] = at(i, i);
  std::sort(doubled.begin(), doubled.end());
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = 0.5 * (doubled[2 * i] + doubled[2 * i + 1]);
  return out;
}

struct Diagnostics {
  double trace_error = 0.0;
  double hermiticity_error = 0.0;
  double min_eigenvalue = 0.0;
};

inline Diagnostics diagnostics(const CMatrix& rho) {
  Diagnostics d;
  d.trace_error = std::abs(rho.trace() - Complex{1.0, 0.0});
  d.hermiticity_error = hermiticity_error(rho);
  d.min_eigenvalue = rho.dim() == 0 ? 0.0 : hermitian_eigenvalues(rho).front();
  return d;
}

/// Validated 2^N x 2^N density matrix (Hermitian, unit trace, positive
/// semidefinite to 1e-12). Evolved states are carried as raw CMatrix so that
/// integrator drift stays measurable.
class DensityMatrix {
 public:
  static constexpr double kTolerance = 1e-12;

  explicit DensityMatrix(CMatrix rho) : rho_(std::move(rho)) {
    const std::size_t d = rho_.dim();
    if (d < 2 || !std::has_single_bit(d)) {
      throw ArgumentError("density matrix dimension must be a power of two >= 2, got " +
                          std::to_string(d));
    }
    if (!rho_.all_finite()) throw ArgumentError("density matrix has non-finite entries");
    const Diagnostics diag = diagnostics(rho_);
    if (diag.hermiticity_error > kTolerance || diag.trace_error > kTolerance ||
        diag.min_eigenvalue < -kTolerance) {
      std::ostringstream msg;
      msg << "not a density matrix: trace error " << diag.trace_error
          << ", hermiticity error " << diag.hermiticity_error << ", min eigenvalue "
          << diag.min_eigenvalue;
      throw ArgumentError(msg.str());
    }
  }

  const CMatrix& matrix() const noexcept { return rho_; }
  std::size_t dim() const noexcept { return rho_.dim(); }
  int n_qubits() const noexcept { return std::countr_zero(rho_.dim()); }

  const Complex& operator()(std::size_t r, std::size_t c) const { return rho_(r, c); }

 private:
  CMatrix rho_;
};

/// (|i> + |j>)/sqrt(2) as a density matrix on n_qubits qubits.
inline DensityMatrix initial_bell_density(StateIndex i, StateIndex j, int n_qubits = 3) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) throw ArgumentError("n_qubits out of range");
  detail::check_state(i, n_qubits);
  detail::check_state(j, n_qubits);
  if (i == j) throw ArgumentError("Bell pair needs two distinct states");
  CMatrix rho(std::size_t{1} << n_qubits);
  for (auto a : {i.offset(), j.offset()})
    for (auto b : {i.offset(), j.offset()}) rho(a, b) = 0.5;
  return DensityMatrix(std::move(rho));
}

inline DensityMatrix maximally_mixed(int n_qubits) {
  const std::size_t d = std::size_t{1} << n_qubits;
  CMatrix rho(d);
  for (std::size_t i = 0; i < d; ++i) rho(i, i) = 1.0 / static_cast<double>(d);
  return DensityMatrix(std::move(rho));
}

}  // namespace spinchain

#endif  // SPINCHAIN_DENSITY_MATRIX_HPP
