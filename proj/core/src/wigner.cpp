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
#include <string>

#include "polconv/metrics.hpp"
#include "polconv/parallel.hpp"

namespace polconv {

namespace {

// <n| D(beta) |m> for the untruncated displacement operator.
Complex displacement_element(int n, int m, Complex beta) {
  const double x = std::norm(beta);
  if (x == 0.0) return n == m ? 1.0 : 0.0;
  const int lo = std::min(n, m);
  const int k = std::abs(n - m);
  const double log_mag = 0.5 * (std::lgamma(lo + 1.0) - std::lgamma(lo + k + 1.0)) +
                         0.5 * k * std::log(x) - 0.5 * x;
  const double lag = std::assoc_laguerre(static_cast<unsigned>(lo),
                                         static_cast<unsigned>(k), x);
  // beta^k for n >= m, (-beta^*)^k otherwise.
  const double phase = n >= m ? k * std::arg(beta) : k * std::arg(-std::conj(beta));
  return std::polar(std::exp(log_mag) * lag, phase);
}

}  // namespace

GridSpec GridSpec::centered(Complex center, double half_width, int points) {
  return {center.real() - half_width, center.real() + half_width, points,
          center.imag() - half_width, center.imag() + half_width, points};
}

double GridSpec::x1(int i) const {
  return x1_min + i * (x1_max - x1_min) / (x1_points - 1);
}

double GridSpec::x2(int j) const {
  return x2_min + j * (x2_max - x2_min) / (x2_points - 1);
}

double GridSpec::cell_area() const {
  return (x1_max - x1_min) / (x1_points - 1) * (x2_max - x2_min) / (x2_points - 1);
}

double WignerGrid::integral() const { return values.sum() * grid.cell_area(); }

double wigner_point(const DensityMatrix& rho, Complex z) {
  const int d = rho.dim();
  const CMatrix& m = rho.matrix();
  const Complex beta = 2.0 * z;
  Complex acc = 0.0;
  // Tr[rho D(2z) P] = sum_{row,col} rho_{row,col} <col|D(2z)|row> (-1)^row
  for (int row = 0; row < d; ++row) {
    const double parity = (row % 2 == 0) ? 1.0 : -1.0;
    for (int col = 0; col < d; ++col) {
      acc += parity * m(row, col) * displacement_element(col, row, beta);
    }
  }
  return 2.0 / std::numbers::pi * acc.real();
}

WignerGrid wigner_numeric(const DensityMatrix& rho, const GridSpec& grid,
                          double tail_threshold) {
  if (grid.x1_points < 2 || grid.x2_points < 2 || !(grid.x1_max > grid.x1_min) ||
      !(grid.x2_max > grid.x2_min)) {
    throw std::invalid_argument("wigner_numeric: degenerate grid");
  }
  const double tail = rho.tail_mass();
  if (!(tail < tail_threshold)) {
    throw TruncationError("wigner_numeric: density matrix tail mass " +
                              std::to_string(tail) + " exceeds threshold",
                          tail);
  }
  WignerGrid out{grid, Eigen::MatrixXd(grid.x2_points, grid.x1_points)};
  parallel_for(static_cast<std::size_t>(grid.x2_points), [&](std::size_t j) {
    for (int i = 0; i < grid.x1_points; ++i) {
      out.values(static_cast<Eigen::Index>(j), i) =
          wigner_point(rho, grid.point(i, static_cast<int>(j)));
    }
  });
  return out;
}

double wigner_closed_eq3(Complex alpha, Complex z) {
  const double n = 1.0 + 4.0 * alpha.real() * alpha.real();
  const Complex shift(0.0, alpha.imag());
  return 2.0 / (std::numbers::pi * n) * (4.0 * std::norm(z - shift) - 1.0) *
         std::exp(-2.0 * std::norm(z - alpha));
}

double wigner_closed_eq8(const ClosedFormPsi3& cf, Complex z) {
  const double s = std::numbers::sqrt2 * cf.xi_r;
  return 4.0 * std::norm(z - cf.mu_x + s) /
         ((1.0 + 4.0 * cf.xi_r * cf.xi_r) * std::numbers::pi) *
         std::exp(-2.0 * std::norm(z - cf.mu_x));
}

}  // namespace polconv
