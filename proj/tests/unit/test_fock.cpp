// Copyright 2026 The polconv Authors
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

#include <cmath>

#include <gtest/gtest.h>

#include "polconv/fock.hpp"
#include "polconv/metrics.hpp"
#include "polconv/optics.hpp"
#include "polconv/states.hpp"
#include "support/oracles.hpp"

namespace polconv {
namespace {

CVector basis(int dim, int n) {
  CVector v = CVector::Zero(dim);
  v(n) = 1.0;
  return v;
}

TEST(FockCutoff, RejectsTinyDimensions) {
  EXPECT_THROW(FockCutoff(1), std::invalid_argument);
  EXPECT_THROW(FockCutoff(0), std::invalid_argument);
  EXPECT_EQ(FockCutoff(2).dim(), 2);
}

TEST(FockCutoff, DisplacementPolicyKeepsTailsSmall) {
  for (double m : {0.0, 0.5, 1.0, 2.0, 3.0, 5.0}) {
    const FockCutoff fc = FockCutoff::for_displacement(m);
    EXPECT_LT(coherent({m, 0.0}, fc).tail_mass(), 1e-10) << m;
    EXPECT_LT(displaced_fock({0.0, m}, 1, fc).tail_mass(), 1e-10) << m;
  }
}

TEST(MakeOperator, AnnihilationMatrixElements) {
  const CMatrix a = make_operator(OperatorKind::annihilation, FockCutoff(3)).matrix;
  CMatrix expected = CMatrix::Zero(3, 3);
  expected(0, 1) = 1.0;
  expected(1, 2) = std::sqrt(2.0);
  EXPECT_LT((a - expected).norm(), 1e-15);
}

TEST(MakeOperator, DisplacementOfZeroIsIdentity) {
  const CMatrix d =
      make_operator(OperatorKind::displacement, FockCutoff(12), Complex(0, 0)).matrix;
  EXPECT_LT((d - CMatrix::Identity(12, 12)).norm(), 1e-14);
}

TEST(MakeOperator, DisplacedVacuumMatchesFactorialExpansion) {
  const Complex alpha(0.5, 0.0);
  const CMatrix d = make_operator(OperatorKind::displacement, FockCutoff(40), alpha).matrix;
  const CVector col = d.col(0);
  const CVector ref = oracle::coherent(alpha, 40);
  EXPECT_LT((col - ref).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(MakeOperator, AlphaOnlyForDisplacement) {
  EXPECT_THROW(make_operator(OperatorKind::displacement, FockCutoff(4)),
               std::invalid_argument);
  EXPECT_THROW(make_operator(OperatorKind::number, FockCutoff(4), Complex(1, 0)),
               std::invalid_argument);
  EXPECT_THROW(make_operator(OperatorKind::custom, FockCutoff(4)), std::invalid_argument);
  EXPECT_THROW(custom_operator(CMatrix::Zero(2, 3)), std::invalid_argument);
}

TEST(MakeOperator, CommutatorExactBelowTopBand) {
  const int dim = 20;
  const CMatrix a = make_operator(OperatorKind::annihilation, FockCutoff(dim)).matrix;
  const CMatrix comm = a * a.adjoint() - a.adjoint() * a;
  const int k = dim - 2;
  EXPECT_LT((comm.topLeftCorner(k, k) - CMatrix::Identity(k, k)).norm(), 1e-12);
}

TEST(MakeOperator, DisplacementGroupAndCommutators) {
  const Complex alpha(0.7, -0.4);
  const int dim = FockCutoff::for_displacement(std::abs(alpha)).dim() + 10;
  const FockCutoff fc(dim);
  const CMatrix d = make_operator(OperatorKind::displacement, fc, alpha).matrix;
  const CMatrix dm = make_operator(OperatorKind::displacement, fc, -alpha).matrix;
  const int safe = dim - static_cast<int>(std::ceil(4.0 * std::abs(alpha))) - 10;
  EXPECT_LT(((d * dm).topLeftCorner(safe, safe) - CMatrix::Identity(safe, safe)).norm(),
            1e-8);

  const CMatrix a = make_operator(OperatorKind::annihilation, fc).matrix;
  const CMatrix ca = a * d - d * a;
  const CMatrix cad = a.adjoint() * d - d * a.adjoint();
  EXPECT_LT((ca - alpha * d).topLeftCorner(safe, safe).norm(), 1e-8);
  EXPECT_LT((cad - std::conj(alpha) * d).topLeftCorner(safe, safe).norm(), 1e-8);

  // unitary on the safe block
  EXPECT_LT(((d.adjoint() * d).topLeftCorner(safe, safe) -
             CMatrix::Identity(safe, safe))
                .norm(),
            1e-8);
}

TEST(Tensor, IdentityAndLowering) {
  const FockCutoff fc(4);
  const ModeOperator id = custom_operator(CMatrix::Identity(4, 4));
  EXPECT_LT((tensor(id, id) - CMatrix::Identity(16, 16)).norm(), 1e-15);

  const ModeOperator a = make_operator(OperatorKind::annihilation, fc);
  const CVector one_zero = basis(16, 1 * 4 + 0);
  const CVector out = tensor(a, id) * one_zero;
  EXPECT_LT((out - basis(16, 0)).norm(), 1e-15);
}

TEST(Tensor, SumOfLoweringIsEigenOnProductCoherent) {
  const int dim = 40;
  const Complex alpha(0.8, 0.3);
  const Complex beta(-0.5, 0.6);
  const FockCutoff fc(dim);
  const ModeOperator a = make_operator(OperatorKind::annihilation, fc);
  const ModeOperator id = custom_operator(CMatrix::Identity(dim, dim));
  const CMatrix op = tensor(a, id) + tensor(id, a);
  const CVector psi = Eigen::kroneckerProduct(oracle::coherent(alpha, dim),
                                              oracle::coherent(beta, dim))
                          .eval();
  const CVector lhs = op * psi;
  const CVector rhs = (alpha + beta) * psi;
  EXPECT_LT((lhs - rhs).norm(), 1e-7);
}

TEST(Tensor, UnequalCutoffsGiveProductShape) {
  const CMatrix t = tensor(CMatrix::Identity(2, 2), CMatrix::Identity(3, 3));
  EXPECT_EQ(t.rows(), 6);
  EXPECT_EQ(t.cols(), 6);
}

TEST(TruncatedState, FactoriesValidate) {
  EXPECT_THROW(TruncatedState::two_mode(3, 3, CVector::Zero(8)), std::invalid_argument);
  EXPECT_THROW(TruncatedState::single_mode(CVector::Zero(1)), std::invalid_argument);
  const TruncatedState s = TruncatedState::two_mode(2, 3, basis(6, 4));
  EXPECT_EQ(s.amplitude(1, 1), Complex(1.0, 0.0));
  EXPECT_THROW(s.amplitude(2, 0), std::out_of_range);
  EXPECT_THROW(TruncatedState::single_mode(CVector::Zero(3)).normalized(),
               DegenerateInputError);
}

TEST(TruncatedState, TailMassAndFlagging) {
  CVector c = CVector::Zero(6);
  c(0) = 1.0;
  c(5) = 1e-3;
  const TruncatedState s = TruncatedState::single_mode(c);
  EXPECT_NEAR(s.tail_mass(), 1e-6 / (1.0 + 1e-6), 1e-18);
  EXPECT_FALSE(s.truncation_safe());
  EXPECT_THROW(s.require_truncation_safe("test"), TruncationError);
  try {
    s.require_truncation_safe("ctx");
  } catch (const TruncationError& e) {
    EXPECT_NEAR(e.tail_mass(), s.tail_mass(), 1e-18);
  }
  EXPECT_TRUE(s.padded(12).truncation_safe());
}

TEST(TruncatedState, NormalizedHasUnitNorm) {
  const TruncatedState s = TruncatedState::single_mode(oracle::coherent({1.0, 1.0}, 30) * 3.0);
  EXPECT_NEAR(s.normalized().norm(), 1.0, 1e-14);
}

TEST(DensityMatrix, Validation) {
  CMatrix m = CMatrix::Identity(2, 2) * 0.5;
  EXPECT_NO_THROW(DensityMatrix{m});
  m(0, 1) = Complex(0.0, 1e-6);
  EXPECT_THROW(DensityMatrix{m}, std::invalid_argument);
  EXPECT_THROW(DensityMatrix{CMatrix::Identity(2, 2)}, std::invalid_argument);
  EXPECT_THROW(TwoModeDensityMatrix(2, 3, CMatrix::Identity(4, 4) * 0.25),
               std::invalid_argument);
}

TEST(PartialTrace, ProductStateReduces) {
  const CVector u = oracle::coherent({0.3, 0.2}, 10).normalized();
  const CVector v = oracle::coherent({-0.4, 0.1}, 8).normalized();
  const TruncatedState psi =
      TruncatedState::two_mode(10, 8, Eigen::kroneckerProduct(u, v).eval());
  const DensityMatrix rho = partial_trace_y(TwoModeDensityMatrix::from_pure(psi));
  EXPECT_LT((rho.matrix() - u * u.adjoint()).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_LT((reduced_x(psi).matrix() - rho.matrix()).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(PartialTrace, MixedProductState) {
  CMatrix rx = CMatrix::Zero(3, 3);
  rx(0, 0) = 0.7;
  rx(2, 2) = 0.3;
  rx(0, 2) = Complex(0.1, 0.2);
  rx(2, 0) = std::conj(rx(0, 2));
  CMatrix ry = CMatrix::Zero(2, 2);
  ry(0, 0) = 0.4;
  ry(1, 1) = 0.6;
  const TwoModeDensityMatrix rho(3, 2, tensor(rx, ry));
  EXPECT_LT((partial_trace_y(rho).matrix() - rx).norm(), 1e-15);
}

TEST(PartialTrace, MaximallyMixedQubitEmbedding) {
  const int d = 3;
  CMatrix m = CMatrix::Zero(d * d, d * d);
  for (int nx : {0, 1}) {
    for (int ny : {0, 1}) m(nx * d + ny, nx * d + ny) = 0.25;
  }
  const DensityMatrix r = partial_trace_y(TwoModeDensityMatrix(d, d, m));
  CMatrix expected = CMatrix::Zero(d, d);
  expected(0, 0) = expected(1, 1) = 0.5;
  EXPECT_LT((r.matrix() - expected).norm(), 1e-15);
}

TEST(PartialTrace, BellLimitPsi3) {
  const PipelineInput in{{0.0, 1.0}, {0.0, 0.0}};
  const PipelineResult res = run_pipeline(in);
  const ClosedFormPsi3& cf = res.closed_form;
  const int dim = res.psi3.dim_x();
  const CVector one = displaced_single_photon_expansion(cf.mu_x, dim);
  const CVector coh = coherent_expansion(cf.mu_x, dim);
  const CMatrix expected = 0.5 * (one * one.adjoint() + coh * coh.adjoint());
  const DensityMatrix r = partial_trace_y(TwoModeDensityMatrix::from_pure(res.psi3));
  EXPECT_LT((r.matrix() - expected).norm(), 1e-8);
}

TEST(PartialTranspose, InvolutionTraceHermiticity) {
  const PipelineResult res = run_pipeline({{0.3, 0.4}, {-0.2, 0.1}}, FockCutoff(16));
  const TwoModeDensityMatrix rho = TwoModeDensityMatrix::from_pure(res.psi3);
  const CMatrix pt = partial_transpose_x(rho);
  EXPECT_LT((partial_transpose_x(pt, 16, 16) - rho.matrix()).norm(), 1e-15);
  EXPECT_NEAR(pt.trace().real(), 1.0, 1e-12);
  EXPECT_LT((pt - pt.adjoint()).norm(), 1e-14);
}

TEST(PartialTranspose, ProductStateStaysPositive) {
  const CVector u = oracle::coherent({0.5, -0.5}, 12).normalized();
  const CVector v = oracle::coherent({0.1, 0.9}, 12).normalized();
  const TruncatedState psi =
      TruncatedState::two_mode(12, 12, Eigen::kroneckerProduct(u, v).eval());
  const RVector eig =
      hermitian_eigenvalues(partial_transpose_x(TwoModeDensityMatrix::from_pure(psi)));
  EXPECT_GT(eig.minCoeff(), -1e-12);
}

TEST(PartialTranspose, DiagonalUnchanged) {
  CMatrix m = CMatrix::Zero(9, 9);
  for (int k = 0; k < 9; ++k) m(k, k) = (k + 1) / 45.0;
  const TwoModeDensityMatrix rho(3, 3, m);
  EXPECT_EQ(partial_transpose_x(rho), m);
}

TEST(PartialTranspose, BellLimitUniqueNegativeEigenvalue) {
  const PipelineResult res = run_pipeline({{0.0, 1.0}, {0.0, 0.0}}, FockCutoff(20));
  const RVector eig =
      hermitian_eigenvalues(partial_transpose_x(TwoModeDensityMatrix::from_pure(res.psi3)));
  EXPECT_NEAR(eig(0), -0.5, 1e-8);
  EXPECT_GT(eig(1), -1e-8);
}

TEST(HermitianEigenvalues, DiagonalAndTrace) {
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 0) = 3.0;
  m(1, 1) = 1.0;
  const RVector e = hermitian_eigenvalues(m);
  EXPECT_DOUBLE_EQ(e(0), 1.0);
  EXPECT_DOUBLE_EQ(e(1), 3.0);

  CMatrix r = CMatrix::Random(7, 7);
  r = (r + r.adjoint()).eval();
  EXPECT_NEAR(hermitian_eigenvalues(r).sum(), r.trace().real(), 1e-10);
}

TEST(HermitianEigenvalues, FourByFourMatrixAtUnitXi) {
  const CMatrix m = negativity_4x4_matrix(1.0).cast<Complex>();
  const RVector e = hermitian_eigenvalues(m);
  const double root = std::sqrt(1.0 - 1.0 / 25.0);
  EXPECT_NEAR(e(0), -0.1, 1e-12);
  EXPECT_NEAR(e(1), 0.5 - 0.5 * root, 1e-12);
  EXPECT_NEAR(e(2), 0.1, 1e-12);
  EXPECT_NEAR(e(3), 0.5 + 0.5 * root, 1e-12);
}

TEST(HermitianEigenvalues, RejectsNonHermitian) {
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 1) = 1.0;
  EXPECT_THROW(hermitian_eigenvalues(m), std::invalid_argument);
}

TEST(InnerProduct, FidelityIsPhaseInsensitive) {
  const TruncatedState a = TruncatedState::single_mode(oracle::coherent({0.4, 0.0}, 20));
  const TruncatedState b =
      TruncatedState::single_mode(oracle::coherent({0.4, 0.0}, 20) * std::polar(2.0, 1.1));
  EXPECT_NEAR(fidelity(a, b), 1.0, 1e-14);
  EXPECT_THROW(inner_product(a, a.padded(21)), std::invalid_argument);
}

}  // namespace
}  // namespace polconv
