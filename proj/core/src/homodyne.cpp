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

#include "polconv/homodyne.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

namespace polconv {

namespace {

constexpr double kCoverageMargin = 5.0;
constexpr double kNegativeDensityNoise = 1e-12;

double trapezoid(const std::vector<double>& f, double h) {
  if (f.size() < 2) return 0.0;
  double s = 0.5 * (f.front() + f.back());
  for (std::size_t i = 1; i + 1 < f.size(); ++i) s += f[i];
  return s * h;
}

double mean_amplitude(const DensityMatrix& rho) {
  const CMatrix a =
      make_operator(OperatorKind::annihilation, FockCutoff(rho.dim())).matrix;
  return std::abs((rho.matrix() * a).trace());
}

// <n|x> for n < dim on the x = (a + a^dag)/2 scale: 2^{1/4} psi_n(sqrt2 x),
// psi_n the Hermite functions of X = (a + a^dag)/sqrt2.
void quadrature_wavefunctions(double x, RVector& out) {
  const int dim = static_cast<int>(out.size());
  const double u = std::numbers::sqrt2 * x;
  out(0) = std::pow(2.0 / std::numbers::pi, 0.25) * std::exp(-0.5 * u * u);
  if (dim > 1) out(1) = std::numbers::sqrt2 * u * out(0);
  for (int n = 2; n < dim; ++n) {
    out(n) = std::sqrt(2.0 / n) * u * out(n - 1) -
             std::sqrt((n - 1.0) / n) * out(n - 2);
  }
}

}  // namespace

QuadratureGrid QuadratureGrid::covering(const DensityMatrix& rho, int points) {
  const double half = mean_amplitude(rho) + kCoverageMargin;
  return {-half, half, points};
}

double QuadratureMarginal::mean() const {
  std::vector<double> xf(density.size());
  for (std::size_t i = 0; i < density.size(); ++i) {
    xf[i] = grid.x(static_cast<int>(i)) * density[i];
  }
  return trapezoid(xf, grid.step());
}

QuadratureMarginal quadrature_marginal(const DensityMatrix& rho, double lo_phase,
                                       const QuadratureGrid& grid,
                                       double tail_threshold) {
  const double tail = rho.tail_mass();
  if (!(tail < tail_threshold)) {
    throw TruncationError("quadrature_marginal: density matrix tail mass " +
                              std::to_string(tail) + " exceeds threshold",
                          tail);
  }
  if (grid.points < 2) {
    throw std::invalid_argument("quadrature_marginal: grid needs >= 2 points");
  }
  const double need = mean_amplitude(rho) + kCoverageMargin;
  if (grid.x_min > -need || grid.x_max < need) {
    throw std::invalid_argument(
        "quadrature_marginal: grid must cover +-(|<a>| + 5)");
  }

  const int dim = rho.dim();
  CVector phases(dim);
  for (int n = 0; n < dim; ++n) phases(n) = std::polar(1.0, n * lo_phase);

  QuadratureMarginal out{lo_phase, grid, std::vector<double>(grid.points), 0.0};
  RVector psi(dim);
  for (int i = 0; i < grid.points; ++i) {
    quadrature_wavefunctions(grid.x(i), psi);
    // v_n = <n|x_theta> = e^{i n theta} <n|x>
    const CVector v = phases.cwiseProduct(psi.cast<Complex>());
    double p = v.dot(rho.matrix() * v).real();
    if (p < 0.0 && p > -kNegativeDensityNoise) p = 0.0;
    out.density[i] = p;
  }
  out.normalization_defect = std::abs(trapezoid(out.density, grid.step()) - 1.0);
  return out;
}

SampleBatch sample(const QuadratureMarginal& marginal, std::uint64_t seed,
                   std::size_t count) {
  if (count == 0) throw std::invalid_argument("sample: count must be positive");
  const auto& p = marginal.density;
  const double h = marginal.grid.step();
  std::vector<double> cdf(p.size(), 0.0);
  for (std::size_t i = 1; i < p.size(); ++i) {
    cdf[i] = cdf[i - 1] + 0.5 * h * (std::max(p[i - 1], 0.0) + std::max(p[i], 0.0));
  }
  const double total = cdf.back();
  if (!(total > 0.0)) throw std::invalid_argument("sample: marginal has no mass");
  for (double& c : cdf) c /= total;

  std::mt19937_64 rng(seed);
  SampleBatch batch{seed, marginal.lo_phase, {}};
  batch.samples.reserve(count);
  for (std::size_t s = 0; s < count; ++s) {
    // 53-bit uniform in [0, 1); independent of the standard library's
    // distribution implementations.
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    std::size_t hi = static_cast<std::size_t>(it - cdf.begin());
    hi = std::clamp<std::size_t>(hi, 1, cdf.size() - 1);
    const std::size_t lo = hi - 1;
    const double span = cdf[hi] - cdf[lo];
    const double frac = span > 0.0 ? (u - cdf[lo]) / span : 0.5;
    batch.samples.push_back(marginal.grid.x(static_cast<int>(lo)) + frac * h);
  }
  return batch;
}

std::pair<double, double> quadrature_moments(const DensityMatrix& rho,
                                             double lo_phase) {
  // Two spare levels make x and x^2 exact on the support of rho.
  const int dim = rho.dim() + 2;
  const DensityMatrix padded = rho.padded(dim);
  const CMatrix a = make_operator(OperatorKind::annihilation, FockCutoff(dim)).matrix;
  const Complex ph = std::polar(1.0, lo_phase);
  const CMatrix x = 0.5 * (a * std::conj(ph) + a.adjoint() * ph);
  const double mean = (padded.matrix() * x).trace().real();
  const double second = (padded.matrix() * x * x).trace().real();
  return {mean, second - mean * mean};
}

MomentReport validate_moments(const SampleBatch& batch, const DensityMatrix& rho,
                              double z_limit) {
  const auto n = static_cast<double>(batch.count());
  if (batch.count() < 2) {
    throw std::invalid_argument("validate_moments: need at least two samples");
  }
  double mean = 0.0;
  for (double s : batch.samples) mean += s;
  mean /= n;
  double m2 = 0.0, m4 = 0.0;
  for (double s : batch.samples) {
    const double d = s - mean;
    m2 += d * d;
    m4 += d * d * d * d;
  }
  const double var = m2 / (n - 1.0);
  m4 /= n;

  const auto [amean, avar] = quadrature_moments(rho, batch.lo_phase);
  MomentReport rep{};
  rep.sample_mean = mean;
  rep.sample_variance = var;
  rep.analytic_mean = amean;
  rep.analytic_variance = avar;
  rep.z_mean = (mean - amean) / std::sqrt(avar / n);
  const double var_se = std::sqrt(std::max(m4 - var * var, 0.0) / n);
  rep.z_variance = var_se > 0.0 ? (var - avar) / var_se : 0.0;
  rep.pass = std::abs(rep.z_mean) <= z_limit && std::abs(rep.z_variance) <= z_limit;
  return rep;
}

}  // namespace polconv
