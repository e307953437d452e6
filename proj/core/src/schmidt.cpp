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

#include <Eigen/Eigenvalues>

#include "polconv/metrics.hpp"

namespace polconv {

namespace {

constexpr double kMinIntensity = 1e-12;

Eigen::Matrix2d coefficient_matrix(const ClosedFormPsi3& cf) {
  Eigen::Matrix2d c;
  c << cf.mu_x.real() + cf.r, cf.mu_x.imag(),
       cf.mu_y.real() - cf.r, cf.mu_y.imag();
  return c;
}

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace

SchmidtReport schmidt_number(const ClosedFormPsi3& cf) {
  SchmidtReport rep{};
  rep.coefficients = coefficient_matrix(cf);
  rep.intensity = rep.coefficients.squaredNorm();
  if (rep.intensity < kMinIntensity) {
    throw DegenerateInputError(
        "schmidt_number: zero-intensity field has no polarization");
  }
  const Eigen::Matrix2d& c = rep.coefficients;
  rep.theta = std::atan2(c.row(1).norm(), c.row(0).norm());
  rep.phi_x = std::atan2(c(0, 1), c(0, 0));
  rep.phi_y = std::atan2(c(1, 1), c(1, 0));
  rep.delta_phi = rep.phi_y - rep.phi_x;

  const double s_dphi = std::sin(rep.delta_phi);
  const double s_2theta = std::sin(2.0 * rep.theta);
  rep.k_closed = 1.0 / (1.0 - 0.5 * s_dphi * s_dphi * s_2theta * s_2theta);

  rep.polarization = c.transpose() * c / rep.intensity;
  const Eigen::Vector2d lambda =
      Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d>(rep.polarization,
                                                     Eigen::EigenvaluesOnly)
          .eigenvalues();
  rep.k_eigen = 1.0 / lambda.squaredNorm();
  return rep;
}

FieldAmplitudes field_amplitudes(const ClosedFormPsi3& cf) {
  return {std::abs(cf.mu_x), std::arg(cf.mu_x), std::abs(cf.mu_y),
          std::arg(cf.mu_y), cf.r};
}

std::array<double, 2> field_expectation(const ClosedFormPsi3& cf,
                                        double carrier_phase) {
  const FieldAmplitudes f = field_amplitudes(cf);
  const double carrier = std::cos(carrier_phase);
  return {2.0 * (f.magnitude_x * std::cos(carrier_phase - f.phase_x) + f.r * carrier),
          2.0 * (f.magnitude_y * std::cos(carrier_phase - f.phase_y) - f.r * carrier)};
}

std::string_view to_string(Table1Cell cell) {
  switch (cell) {
    case Table1Cell::negativity_max_schmidt_max: return "negativity-max/schmidt-max";
    case Table1Cell::negativity_max_schmidt_min: return "negativity-max/schmidt-min";
    case Table1Cell::negativity_min_schmidt_max: return "negativity-min/schmidt-max";
    case Table1Cell::negativity_min_schmidt_min: return "negativity-min/schmidt-min";
  }
  return "?";
}

std::string_view to_string(Table1Condition condition) {
  switch (condition) {
    case Table1Condition::xi_r_eta_i_zero_xi_i_plus_eta_r:
      return "xi_R=eta_I=0, xi_I=+eta_R";
    case Table1Condition::xi_r_eta_i_zero_xi_i_minus_eta_r:
      return "xi_R=eta_I=0, xi_I=-eta_R";
    case Table1Condition::xi_r_eta_r_zero_proportional:
      return "xi_R=eta_R=0, xi_I=k eta_I";
    case Table1Condition::large_xi_r_eta_plus_i_xi:
      return "xi_R->inf, eta=+i xi";
    case Table1Condition::large_xi_r_eta_minus_i_xi:
      return "xi_R->inf, eta=-i xi";
    case Table1Condition::large_xi_r_eta_proportional:
      return "xi_R->inf, eta=k xi";
  }
  return "?";
}

Table1Cell cell_of(Table1Condition condition) {
  switch (condition) {
    case Table1Condition::xi_r_eta_i_zero_xi_i_plus_eta_r:
    case Table1Condition::xi_r_eta_i_zero_xi_i_minus_eta_r:
      return Table1Cell::negativity_max_schmidt_max;
    case Table1Condition::xi_r_eta_r_zero_proportional:
      return Table1Cell::negativity_max_schmidt_min;
    case Table1Condition::large_xi_r_eta_plus_i_xi:
    case Table1Condition::large_xi_r_eta_minus_i_xi:
      return Table1Cell::negativity_min_schmidt_max;
    case Table1Condition::large_xi_r_eta_proportional:
      return Table1Cell::negativity_min_schmidt_min;
  }
  return Table1Cell::negativity_min_schmidt_min;
}

Table1Check table1_extrema_check(const PipelineInput& input,
                                 const Table1Tolerances& tol) {
  Table1Check out{};
  out.input = input;
  const Complex xi = input.xi;
  const Complex eta = input.eta;
  const ClosedFormPsi3 cf = ClosedFormPsi3::from_input(input);

  out.negativity = negativity_closed_form(cf.xi_r);
  try {
    out.schmidt = schmidt_number(cf).k_closed;
  } catch (const DegenerateInputError&) {
    out.schmidt.reset();
  }

  const bool large = std::abs(xi.real()) >= tol.large_xi_r;
  out.negativity_max = near(out.negativity, 0.5, tol.exact);
  out.negativity_min = out.negativity < tol.negativity_floor;
  if (out.schmidt) {
    const double k = *out.schmidt;
    const double slack = large ? tol.schmidt_asymptotic : tol.exact;
    out.schmidt_max = near(k, 2.0, slack);
    out.schmidt_min = near(k, 1.0, slack);
  }

  const double ct = tol.condition;
  const bool nonzero = std::abs(xi) + std::abs(eta) > ct;
  if (nonzero && near(xi.real(), 0.0, ct) && near(eta.imag(), 0.0, ct)) {
    if (near(xi.imag(), eta.real(), ct)) {
      out.conditions.push_back(Table1Condition::xi_r_eta_i_zero_xi_i_plus_eta_r);
    }
    if (near(xi.imag(), -eta.real(), ct)) {
      out.conditions.push_back(Table1Condition::xi_r_eta_i_zero_xi_i_minus_eta_r);
    }
  }
  if (nonzero && near(xi.real(), 0.0, ct) && near(eta.real(), 0.0, ct)) {
    out.conditions.push_back(Table1Condition::xi_r_eta_r_zero_proportional);
  }
  if (large) {
    const double scale = std::max(1.0, std::abs(xi));
    if (std::abs(eta - Complex(0, 1) * xi) <= ct * scale) {
      out.conditions.push_back(Table1Condition::large_xi_r_eta_plus_i_xi);
    }
    if (std::abs(eta + Complex(0, 1) * xi) <= ct * scale) {
      out.conditions.push_back(Table1Condition::large_xi_r_eta_minus_i_xi);
    }
    // eta = k xi with k real  <=>  Im(eta conj(xi)) = 0
    if (std::abs((eta * std::conj(xi)).imag()) <= ct * scale * scale) {
      out.conditions.push_back(Table1Condition::large_xi_r_eta_proportional);
    }
  }

  if (out.negativity_max && out.schmidt_max) {
    out.cells.push_back(Table1Cell::negativity_max_schmidt_max);
  }
  if (out.negativity_max && out.schmidt_min) {
    out.cells.push_back(Table1Cell::negativity_max_schmidt_min);
  }
  if (out.negativity_min && out.schmidt_max) {
    out.cells.push_back(Table1Cell::negativity_min_schmidt_max);
  }
  if (out.negativity_min && out.schmidt_min) {
    out.cells.push_back(Table1Cell::negativity_min_schmidt_min);
  }
  return out;
}

}  // namespace polconv
