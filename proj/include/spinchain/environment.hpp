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

#ifndef SPINCHAIN_ENVIRONMENT_HPP
#define SPINCHAIN_ENVIRONMENT_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "spinchain/errors.hpp"
#include "spinchain/matrix.hpp"
#include "spinchain/density_matrix.hpp"

namespace spinchain {

enum class Model { IndependentDissipation, CorrelatedDissipation, Dephasing, CorrelatedDephasing };

inline constexpr std::array<Model, 4> kAllModels{Model::IndependentDissipation,
                                                 Model::CorrelatedDissipation, Model::Dephasing,
                                                 Model::CorrelatedDephasing};

constexpr bool is_dissipation(Model m) {
  return m == Model::IndependentDissipation || m == Model::CorrelatedDissipation;
}
constexpr bool is_dephasing(Model m) { return !is_dissipation(m); }
constexpr bool is_correlated(Model m) {
  return m == Model::CorrelatedDissipation || m == Model::CorrelatedDephasing;
}

/// Config/CSV token for a model.
constexpr std::string_view model_name(Model m) {
  switch (m) {
    case Model::IndependentDissipation: return "independent";
    case Model::CorrelatedDissipation: return "correlated";
    case Model::Dephasing: return "dephasing";
    case Model::CorrelatedDephasing: return "correlated_dephasing";
  }
  return "?";
}

inline std::optional<Model> parse_model(std::string_view s) {
  for (Model m : kAllModels)
    if (model_name(m) == s) return m;
  return std::nullopt;
}

/// Symmetric N x N matrix of real rates.
class RateMatrix {
 public:
  RateMatrix() = default;
  explicit RateMatrix(int n) : n_(n), v_(static_cast<std::size_t>(n * n), 0.0) {}

  /// Diagonal rates equal to `rate`, off-diagonal zero.
  static RateMatrix uniform_diagonal(int n, double rate) {
    RateMatrix r(n);
    for (int k = 1; k <= n; ++k) r.set(k, k, rate);
    return r;
  }

  int size() const noexcept { return n_; }

  /// 1-based access.
  double operator()(int j, int k) const { return v_[idx(j, k)]; }

  /// Writes both (j,k) and (k,j).
  void set(int j, int k, double value) {
    v_[idx(j, k)] = value;
    v_[idx(k, j)] = value;
  }

  RateMatrix diagonal_part() const {
    RateMatrix d(n_);
    for (int k = 1; k <= n_; ++k) d.set(k, k, (*this)(k, k));
    return d;
  }

  /// Smallest eigenvalue (via the Hermitian diagonaliser).
  double min_eigenvalue() const {
    if (n_ == 0) return 0.0;
    CMatrix m(static_cast<std::size_t>(n_));
    for (int j = 1; j <= n_; ++j)
      for (int k = 1; k <= n_; ++k)
        m(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(k - 1)) = (*this)(j, k);
    return hermitian_eigenvalues(m).front();
  }

  friend bool operator==(const RateMatrix&, const RateMatrix&) = default;

 private:
  std::size_t idx(int j, int k) const {
    if (j < 1 || j > n_ || k < 1 || k > n_) {
      throw ArgumentError("rate index (" + std::to_string(j) + "," + std::to_string(k) +
                          ") outside 1.." + std::to_string(n_));
    }
    return static_cast<std::size_t>((j - 1) * n_ + (k - 1));
  }

  int n_ = 0;
  std::vector<double> v_;
};

/// Environment model plus its rate matrices (2*pi*MHz).
///
/// For the uncorrelated models the off-diagonal entries are zeroed at
/// construction, so every engine can treat all four models through the same
/// pairwise sums.
class EnvironmentSpec {
 public:
  EnvironmentSpec(Model model, RateMatrix gamma, RateMatrix gamma_dephase)
      : model_(model), gamma_(std::move(gamma)), gamma_dephase_(std::move(gamma_dephase)) {
    if (gamma_.size() != gamma_dephase_.size()) {
      throw ArgumentError("dissipation and dephasing rate matrices differ in size");
    }
    check(gamma_, "gamma");
    check(gamma_dephase_, "Gamma");
    if (!is_correlated(model_)) {
      gamma_ = gamma_.diagonal_part();
      gamma_dephase_ = gamma_dephase_.diagonal_part();
    }
  }

  Model model() const noexcept { return model_; }
  int n_qubits() const noexcept { return gamma_.size(); }
  const RateMatrix& gamma() const noexcept { return gamma_; }
  const RateMatrix& gamma_dephase() const noexcept { return gamma_dephase_; }

  /// Rate matrix the selected model actually uses.
  const RateMatrix& active_rates() const noexcept {
    return is_dissipation(model_) ? gamma_ : gamma_dephase_;
  }

  /// Same rates under a different model (off-diagonals dropped when the new
  /// model is uncorrelated).
  EnvironmentSpec with_model(Model m) const { return EnvironmentSpec(m, gamma_, gamma_dephase_); }

  /// True when the active rate matrix is positive semidefinite to `tol`.
  /// Not enforced: the reference parameter set for the correlated models is
  /// slightly indefinite.
  bool active_rates_psd(double tol = 1e-12) const { return active_rates().min_eigenvalue() >= -tol; }

 private:
  // Symmetry holds by construction of RateMatrix. Enforced here: finite
  // entries, nonnegative diagonal, and the pairwise bound |g_jk| <= sqrt(g_jj g_kk)
  // that every positive semidefinite matrix satisfies.
  static void check(const RateMatrix& r, const char* name) {
    const int n = r.size();
    for (int j = 1; j <= n; ++j) {
      for (int k = 1; k <= n; ++k) {
        if (!std::isfinite(r(j, k))) {
          throw ArgumentError(std::string(name) + " has a non-finite entry");
        }
      }
      if (r(j, j) < 0.0) {
        throw ArgumentError(std::string(name) + "_" + std::to_string(j) + " is negative");
      }
    }
    for (int j = 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) {
        const double bound = std::sqrt(r(j, j) * r(k, k));
        if (std::abs(r(j, k)) > bound * (1.0 + 1e-12) + 1e-15) {
          std::ostringstream msg;
          msg << name << "_" << j << k << " = " << r(j, k)
              << " violates positive semidefiniteness (|" << name << "_jk| must not exceed sqrt("
              << name << "_j " << name << "_k) = " << bound << ")";
          throw ArgumentError(msg.str());
        }
      }
    }
  }

  Model model_;
  RateMatrix gamma_;
  RateMatrix gamma_dephase_;
};

}  // namespace spinchain

#endif  // SPINCHAIN_ENVIRONMENT_HPP
