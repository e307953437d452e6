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
#include <stdexcept>

#include "polconv/metrics.hpp"
#include "polconv/states.hpp"

namespace polconv {

namespace {

constexpr double kMinMeanPhotons = 1e-12;

double q_from_moments(double mean, double second) {
  if (mean <= kMinMeanPhotons) {
    throw DegenerateInputError("mandel_q: mean photon number is zero");
  }
  return (second - mean * mean) / mean;
}

}  // namespace

double mandel_q(const TruncatedState& single_mode_state) {
  if (single_mode_state.modes() != 1) {
    throw std::invalid_argument("mandel_q: need a single-mode state");
  }
  const TruncatedState s = single_mode_state.normalized();
  const CMatrix n = make_operator(OperatorKind::number, s.cutoff()).matrix;
  const CVector n_psi = n * s.coeffs();
  const double mean = s.coeffs().dot(n_psi).real();
  const double second = n_psi.squaredNorm();
  return q_from_moments(mean, second);
}

double mandel_q_quad_superposition(Complex alpha, int dim) {
  const QuadSuperposition rec = QuadSuperposition::of(alpha);
  const CVector c = rec.coeff_coherent * coherent_expansion(alpha, dim) +
                    rec.coeff_dfs * displaced_single_photon_expansion(alpha, dim);
  const double total = c.squaredNorm();
  double mean = 0.0;
  double second = 0.0;
  for (int k = 0; k < dim; ++k) {
    const double p = std::norm(c(k)) / total;
    mean += k * p;
    second += static_cast<double>(k) * k * p;
  }
  return q_from_moments(mean, second);
}

double mandel_q_quad_superposition_closed(Complex alpha) {
  // a^k (alpha + a^dag)|alpha> = alpha^{k-1} [(alpha^2 + k) + alpha a^dag]|alpha>
  const double a2 = std::norm(alpha);
  const double norm = 1.0 + 4.0 * alpha.real() * alpha.real();
  auto factorial_moment = [&](int k) {
    const Complex c = alpha * alpha + static_cast<double>(k);
    const double inner = std::norm(c) + 2.0 * a2 * c.real() + a2 * (a2 + 1.0);
    return std::pow(a2, k - 1) * inner / norm;
  };
  const double f1 = factorial_moment(1);
  const double f2 = factorial_moment(2);
  return q_from_moments(f1, f2 + f1);
}

}  // namespace polconv
