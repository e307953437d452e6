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
#include <numbers>
#include <stdexcept>

#include <Eigen/SVD>

#include "polconv/metrics.hpp"

namespace polconv {

double negativity_closed_form(double xi_r) {
  return 1.0 / (2.0 + 8.0 * xi_r * xi_r);
}

double negativity_numeric(const TwoModeDensityMatrix& rho) {
  const RVector eig = hermitian_eigenvalues(partial_transpose_x(rho));
  double sum = 0.0;
  for (Eigen::Index i = 0; i < eig.size(); ++i) {
    if (eig(i) <= -kNegativityNoiseFloor) sum += eig(i);
  }
  return std::abs(sum);
}

double negativity_pure(const TruncatedState& state) {
  if (state.modes() != 2) {
    throw std::invalid_argument("negativity_pure: need a two-mode state");
  }
  const TruncatedState s = state.normalized();
  // Row nx, column ny.
  const CMatrix coeffs = CMatrix::Map(s.coeffs().data(), s.dim_y(), s.dim_x()).transpose();
  const RVector sv = Eigen::JacobiSVD<CMatrix>(coeffs).singularValues();
  // sum_{i<j} s_i s_j = ((sum s)^2 - sum s^2) / 2, with sum s^2 = 1. Pairs
  // whose product sits below the noise floor are dropped to mirror the
  // eigenvalue route.
  double sum = 0.0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    for (Eigen::Index j = i + 1; j < sv.size(); ++j) {
      const double p = sv(i) * sv(j);
      if (p >= kNegativityNoiseFloor) sum += p;
    }
  }
  return sum;
}

Eigen::Matrix4d negativity_4x4_matrix(double xi_r) {
  const double c = 2.0 * std::numbers::sqrt2 * xi_r;
  const double n = 1.0 + 4.0 * xi_r * xi_r;
  Eigen::Matrix4d m;
  // clang-format off
  m <<  0.0, 0.0,  0.0, -1.0,
        0.0, 1.0,  0.0,    c,
        0.0, 0.0,  1.0,   -c,
       -1.0,   c,   -c, c * c;
  // clang-format on
  return m / (2.0 * n);
}

std::array<double, 4> negativity_4x4(double xi_r) {
  const RVector eig = hermitian_eigenvalues(negativity_4x4_matrix(xi_r).cast<Complex>());
  return {eig(0), eig(1), eig(2), eig(3)};
}

}  // namespace polconv
