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

#pragma once

// Balanced homodyne detection of the quadrature
//   x_theta = (a e^{-i theta} + a^dag e^{i theta}) / 2,
// whose vacuum variance is 1/4 (the same scale as W(z) on z = X1 + i X2).

#include <cstdint>
#include <vector>

#include "polconv/fock.hpp"

namespace polconv {

struct QuadratureGrid {
  double x_min;
  double x_max;
  int points;

  double x(int i) const { return x_min + i * step(); }
  double step() const { return (x_max - x_min) / (points - 1); }

  /// Symmetric grid covering +-(|<a>| + 5) with the given number of points.
  static QuadratureGrid covering(const DensityMatrix& rho, int points = 4001);
};

struct QuadratureMarginal {
  double lo_phase;
  QuadratureGrid grid;
  std::vector<double> density;
  /// |trapezoidal integral - 1|
  double normalization_defect;

  double mean() const;
};

/// p(x|theta) = <x_theta| rho |x_theta> from Hermite-function wavefunctions.
/// Throws TruncationError for a tail-unsafe rho and std::invalid_argument if
/// the grid does not cover +-(|<a>| + 5).
QuadratureMarginal quadrature_marginal(const DensityMatrix& rho, double lo_phase,
                                       const QuadratureGrid& grid,
                                       double tail_threshold = kDefaultTailThreshold);

struct SampleBatch {
  std::uint64_t seed;
  double lo_phase;
  std::vector<double> samples;

  std::size_t count() const { return samples.size(); }
};

/// Inverse-CDF sampling with linear interpolation of the tabulated CDF.
/// Deterministic in (marginal, seed, count).
SampleBatch sample(const QuadratureMarginal& marginal, std::uint64_t seed,
                   std::size_t count);

struct MomentReport {
  double sample_mean;
  double sample_variance;
  double analytic_mean;
  double analytic_variance;
  double z_mean;
  double z_variance;
  bool pass;
};

/// <x_theta> and Var(x_theta) from operator matrices.
std::pair<double, double> quadrature_moments(const DensityMatrix& rho,
                                             double lo_phase);

/// Compares sample moments with the analytic ones; `pass` is false when either
/// |z-score| exceeds z_limit.
MomentReport validate_moments(const SampleBatch& batch, const DensityMatrix& rho,
                              double z_limit = 4.0);

}  // namespace polconv
