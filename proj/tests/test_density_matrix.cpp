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

#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <random>

#include "spinchain/density_matrix.hpp"
#include "test_support.hpp"

namespace spinchain {
namespace {

Eigen::MatrixXcd to_eigen(const CMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.dim());
  Eigen::MatrixXcd out(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c)
      out(r, c) = m(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
  return out;
}

TEST(HermitianEigenvalues, AgreeWithEigenSolver) {
  std::mt19937_64 rng(20261016);
  for (std::size_t dim : {1u, 2u, 3u, 4u, 8u, 16u}) {
    for (int trial = 0; trial < 20; ++trial) {
      const CMatrix h = testing::random_hermitian(dim, rng);
      const auto ours = hermitian_eigenvalues(h);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(to_eigen(h), Eigen::EigenvaluesOnly);
      ASSERT_EQ(ours.size(), dim);
      for (std::size_t i = 0; i < dim; ++i)
        EXPECT_NEAR(ours[i], es.eigenvalues()(static_cast<Eigen::Index>(i)), 1e-10);
    }
  }
}

TEST(HermitianEigenvalues, DiagonalInput) {
  CMatrix d(3);
  d(0, 0) = 3.0;
  d(1, 1) = -1.0;
  d(2, 2) = 2.0;
  const auto ev = hermitian_eigenvalues(d);
  EXPECT_DOUBLE_EQ(ev[0], -1.0);
  EXPECT_DOUBLE_EQ(ev[1], 2.0);
  EXPECT_DOUBLE_EQ(ev[2], 3.0);
}

TEST(InitialBell, Entries) {
  const DensityMatrix rho = initial_bell_density(StateIndex{1}, StateIndex{8});
  EXPECT_EQ(rho(0, 0), Complex(0.5));
  EXPECT_EQ(rho(7, 7), Complex(0.5));
  EXPECT_EQ(rho(0, 7), Complex(0.5));
  EXPECT_EQ(rho(7, 0), Complex(0.5));
  double others = 0.0;
  for (std::size_t r = 0; r < 8; ++r)
    for (std::size_t c = 0; c < 8; ++c)
      if ((r != 0 && r != 7) || (c != 0 && c != 7)) others += std::abs(rho(r, c));
  EXPECT_EQ(others, 0.0);
}

TEST(InitialBell, PureRankOneProjector) {
  const DensityMatrix rho = initial_bell_density(StateIndex{3}, StateIndex{6});
  EXPECT_NEAR(rho.matrix().trace().real(), 1.0, 0.0);
  const auto ev = hermitian_eigenvalues(rho.matrix());
  EXPECT_NEAR(ev.front(), 0.0, 1e-14);
  EXPECT_NEAR(ev.back(), 1.0, 1e-14);
}

TEST(InitialBell, RejectsEqualOrOutOfRangeStates) {
  EXPECT_THROW(initial_bell_density(StateIndex{2}, StateIndex{2}), ArgumentError);
  EXPECT_THROW(initial_bell_density(StateIndex{0}, StateIndex{2}), ArgumentError);
  EXPECT_THROW(initial_bell_density(StateIndex{1}, StateIndex{9}), ArgumentError);
  EXPECT_NO_THROW(initial_bell_density(StateIndex{1}, StateIndex{2}, 1));
}

TEST(Diagnostics, BellState) {
  const auto d = diagnostics(initial_bell_density(StateIndex{1}, StateIndex{8}).matrix());
  EXPECT_EQ(d.trace_error, 0.0);
  EXPECT_EQ(d.hermiticity_error, 0.0);
  EXPECT_NEAR(d.min_eigenvalue, 0.0, 1e-15);
}

TEST(Diagnostics, MaximallyMixed) {
  const auto d = diagnostics(maximally_mixed(3).matrix());
  EXPECT_EQ(d.trace_error, 0.0);
  EXPECT_EQ(d.hermiticity_error, 0.0);
  EXPECT_NEAR(d.min_eigenvalue, 0.125, 1e-15);
}

TEST(Diagnostics, RankTwoMixture) {
  CMatrix rho(8);
  rho(0, 0) = 0.5;
  rho(7, 7) = 0.5;
  EXPECT_EQ(diagnostics(rho).min_eigenvalue, 0.0);
}

TEST(Diagnostics, ReportsDefects) {
  CMatrix rho(2);
  rho(0, 0) = 0.7;
  rho(1, 1) = 0.4;
  rho(0, 1) = Complex(0.0, 0.1);
  rho(1, 0) = Complex(0.0, 0.1);  // should be -0.1i
  const auto d = diagnostics(rho);
  EXPECT_NEAR(d.trace_error, 0.1, 1e-15);
  EXPECT_NEAR(d.hermiticity_error, 0.2, 1e-15);
}

TEST(DensityMatrix, ValidatesInvariants) {
  CMatrix bad_trace(2);
  bad_trace(0, 0) = 0.6;
  bad_trace(1, 1) = 0.6;
  EXPECT_THROW(DensityMatrix{bad_trace}, ArgumentError);

  CMatrix negative(2);
  negative(0, 0) = 1.2;
  negative(1, 1) = -0.2;
  EXPECT_THROW(DensityMatrix{negative}, ArgumentError);

  CMatrix odd(3);
  odd(0, 0) = 1.0;
  EXPECT_THROW(DensityMatrix{odd}, ArgumentError);

  std::mt19937_64 rng(7);
  EXPECT_NO_THROW(DensityMatrix{testing::random_density(8, rng)});
}

}  // namespace
}  // namespace spinchain
