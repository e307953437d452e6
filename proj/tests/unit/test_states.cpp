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

#include "polconv/states.hpp"
#include "support/oracles.hpp"

namespace polconv {
namespace {

double mean_photons(const TruncatedState& s) {
  const CMatrix n = make_operator(OperatorKind::number, s.cutoff()).matrix;
  const TruncatedState u = s.normalized();
  return u.coeffs().dot(n * u.coeffs()).real();
}

TEST(CoherentLabel, Components) {
  const CoherentLabel l{{1.5, -2.0}};
  EXPECT_NEAR(l.re() * l.re() + l.im() * l.im(), l.magnitude() * l.magnitude(), 1e-12);
  EXPECT_DOUBLE_EQ(l.phase(), std::atan2(-2.0, 1.5));
}

TEST(Coherent, VacuumAtZero) {
  const TruncatedState s = coherent({0.0, 0.0}, FockCutoff(5));
  EXPECT_NEAR(std::abs(s.amplitude(0)), 1.0, 1e-15);
  EXPECT_NEAR(s.coeffs().tail(4).norm(), 0.0, 1e-15);
}

TEST(Coherent, MatchesFactorialExpansion) {
  const Complex alpha(1.2, -0.7);
  const TruncatedState s = coherent(alpha, FockCutoff(40));
  const CVector ref = oracle::coherent(alpha, 40);
  EXPECT_LT((s.coeffs() - ref.normalized()).cwiseAbs().maxCoeff(), 1e-13);
}

TEST(Coherent, MeanPhotonNumber) {
  EXPECT_NEAR(mean_photons(coherent({1.0, 0.0}, FockCutoff(30))), 1.0, 1e-8);
}

TEST(Coherent, AnnihilationEigenstate) {
  const Complex alpha(0.0, 2.0);
  const FockCutoff fc = FockCutoff::for_displacement(2.0);
  const TruncatedState s = coherent(alpha, fc);
  const CMatrix a = make_operator(OperatorKind::annihilation, fc).matrix;
  EXPECT_LT((a * s.coeffs() - alpha * s.coeffs()).norm(), 1e-7);
}

TEST(Coherent, UnsafeCutoffThrows) {
  EXPECT_THROW(coherent({3.0, 0.0}, FockCutoff(8)), TruncationError);
}

TEST(DisplacedFock, ZeroDisplacementIsNumberState) {
  const TruncatedState s = displaced_fock({0.0, 0.0}, 1, FockCutoff(6));
  EXPECT_NEAR(std::abs(s.amplitude(1)), 1.0, 1e-14);
  EXPECT_NEAR(s.norm(), 1.0, 1e-14);
}

TEST(DisplacedFock, OrthogonalToCoherent) {
  for (Complex alpha : {Complex(0.3, 0.1), Complex(-1.0, 1.5), Complex(0.0, 2.0)}) {
    const FockCutoff fc = FockCutoff::for_displacement(std::abs(alpha));
    const Complex ov = inner_product(coherent(alpha, fc), displaced_fock(alpha, 1, fc));
    EXPECT_LT(std::abs(ov), 1e-9) << alpha;
  }
}

TEST(DisplacedFock, MeanPhotonNumberShifts) {
  const FockCutoff fc = FockCutoff::for_displacement(1.0);
  EXPECT_NEAR(mean_photons(displaced_fock({0.0, 1.0}, 1, fc)), 2.0, 1e-7);
}

TEST(DisplacedFock, MatchesAnalyticExpansionAndDoubleSum) {
  const Complex alpha(0.6, -0.9);
  const int dim = FockCutoff::for_displacement(std::abs(alpha)).dim();
  const TruncatedState s = displaced_fock(alpha, 1, FockCutoff(dim));
  const CVector analytic = displaced_single_photon_expansion(alpha, dim);
  EXPECT_LT((s.coeffs() - analytic).head(dim - 4).cwiseAbs().maxCoeff(), 1e-10);
  EXPECT_LT((s.coeffs() - analytic).cwiseAbs().maxCoeff(), 1e-8);
  for (int m = 0; m < 10; ++m) {
    EXPECT_NEAR(std::abs(s.amplitude(m) - oracle::displacement_element(m, 1, alpha)), 0.0,
                1e-10);
  }
}

TEST(DisplacedFock, OutOfRange) {
  EXPECT_THROW(displaced_fock({0.1, 0.0}, 7, FockCutoff(6)), std::out_of_range);
  EXPECT_THROW(displaced_fock({0.1, 0.0}, -1, FockCutoff(6)), std::out_of_range);
}

TEST(QuadSuperposition, ImaginaryAlphaKeepsOnlyDfs) {
  const Complex alpha(0.0, 1.0);
  const FockCutoff fc = FockCutoff::for_displacement(1.0);
  const QuadSuperpositionState q = quad_superposition(alpha, fc);
  EXPECT_NEAR(fidelity(q.state, displaced_fock(alpha, 1, fc)), 1.0, 1e-12);
  EXPECT_DOUBLE_EQ(q.record.coeff_coherent, 0.0);
  EXPECT_DOUBLE_EQ(q.record.norm_sq, 1.0);
}

TEST(QuadSuperposition, OverlapWithCoherentAtUnitAlpha) {
  const FockCutoff fc(40);
  const QuadSuperpositionState q = quad_superposition({1.0, 0.0}, fc);
  EXPECT_DOUBLE_EQ(q.record.norm_sq, 5.0);
  const Complex ov = inner_product(coherent({1.0, 0.0}, fc), q.state);
  EXPECT_NEAR(std::abs(ov), 2.0 / std::sqrt(5.0), 1e-12);
}

TEST(QuadSuperposition, ZeroAlphaIsSinglePhoton) {
  const QuadSuperpositionState q = quad_superposition({0.0, 0.0}, FockCutoff(6));
  EXPECT_NEAR(std::abs(q.state.amplitude(1)), 1.0, 1e-14);
}

TEST(QuadSuperposition, QuadratureOperatorOnCoherentGrid) {
  for (double re = -2.0; re <= 2.0; re += 1.0) {
    for (double im = -2.0; im <= 2.0; im += 1.0) {
      const Complex alpha(re, im);
      const FockCutoff fc = FockCutoff::for_displacement(std::abs(alpha));
      const CMatrix q = make_operator(OperatorKind::quadrature, fc).matrix;
      const CVector raw = q * coherent(alpha, fc).coeffs();
      const QuadSuperpositionState qs = quad_superposition(alpha, fc);
      EXPECT_GT(fidelity(TruncatedState::single_mode(raw), qs.state), 1.0 - 1e-8) << alpha;
      EXPECT_NEAR(raw.squaredNorm(), 1.0 + 4.0 * re * re, 1e-8) << alpha;
      EXPECT_NEAR(qs.record.norm_sq, 1.0 + 4.0 * re * re, 0.0);
    }
  }
}

TEST(QuadSuperposition, TermsAreOrthogonal) {
  const Complex alpha(1.3, 0.4);
  const FockCutoff fc = FockCutoff::for_displacement(std::abs(alpha));
  const CVector c = coherent_expansion(alpha, fc.dim());
  const CVector d = displaced_single_photon_expansion(alpha, fc.dim());
  EXPECT_LT(std::abs(c.dot(d)), 1e-8);
}

}  // namespace
}  // namespace polconv
