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

// Nonclassicality quantifiers: negativity, Schmidt number of the mean field,
// Mandel Q, Wigner functions and the field expectation.

#include <array>
#include <optional>
#include <vector>

#include "polconv/fock.hpp"
#include "polconv/optics.hpp"

namespace polconv {

// Eigenvalues in (-kNegativityNoiseFloor, 0) count as zero.
inline constexpr double kNegativityNoiseFloor = 1e-10;

// ---------------------------------------------------------------------------
// Negativity

/// 1 / (2 + 8 xi_R^2).
double negativity_closed_form(double xi_r);

/// Sum of |negative eigenvalues| of the x-partial transpose (full spectrum).
double negativity_numeric(const TwoModeDensityMatrix& rho);

/// Same quantity for a pure two-mode state via its Schmidt coefficients s_i:
/// the partial transpose has spectrum {s_i^2} U {+-s_i s_j}, so the negativity
/// is sum_{i<j} s_i s_j. O(d^3) instead of O(d^6).
double negativity_pure(const TruncatedState& state);

/// The 4x4 partially transposed density matrix in the basis
/// {|1*,1>, |1*,mu_y>, |mu_x*,1>, |mu_x*,mu_y>}, already scaled by 1/(2N).
Eigen::Matrix4d negativity_4x4_matrix(double xi_r);
/// Ascending eigenvalues of negativity_4x4_matrix.
std::array<double, 4> negativity_4x4(double xi_r);

// ---------------------------------------------------------------------------
// Schmidt number of the mean field

struct SchmidtReport {
  double theta;      // polarization angle
  double phi_x;      // carrier phase of the x component
  double phi_y;
  double delta_phi;  // phi_y - phi_x
  /// [1 - sin^2(dphi) sin^2(2 theta)/2]^{-1}
  double k_closed;
  /// 1 / sum(lambda^2) over the eigenvalues of the polarization matrix
  double k_eigen;
  Eigen::Matrix2d coefficients;  // rows x, y; columns cos, sin carriers
  Eigen::Matrix2d polarization;  // C^T C / I
  double intensity;              // sum of squared entries of C
};

/// Throws DegenerateInputError when the intensity is below 1e-12.
SchmidtReport schmidt_number(const ClosedFormPsi3& cf);

/// Per-direction carrier amplitudes of the mean field (field unit = 1).
struct FieldAmplitudes {
  double magnitude_x;
  double phase_x;
  double magnitude_y;
  double phase_y;
  double r;
};

FieldAmplitudes field_amplitudes(const ClosedFormPsi3& cf);

/// E_m = 2 [ |mu_m| cos(psi - phi_m) +- r cos psi ], + for x, - for y.
std::array<double, 2> field_expectation(const ClosedFormPsi3& cf,
                                        double carrier_phase);

// ---------------------------------------------------------------------------
// Mandel Q (variance over mean; 1 for coherent light)

/// Throws DegenerateInputError for <n> <= 1e-12.
double mandel_q(const TruncatedState& single_mode_state);

/// Q of q|alpha>/sqrt(N) from the analytic number-basis coefficients.
double mandel_q_quad_superposition(Complex alpha, int dim);
/// Same quantity from the factorial moments <a^dag^k a^k>, k = 1, 2, with no
/// truncation.
double mandel_q_quad_superposition_closed(Complex alpha);

// ---------------------------------------------------------------------------
// Wigner functions on z = X1 + i X2, normalized to unit integral

struct GridSpec {
  double x1_min;
  double x1_max;
  int x1_points;
  double x2_min;
  double x2_max;
  int x2_points;

  /// Square window center +- half_width with `points` samples per axis.
  static GridSpec centered(Complex center, double half_width, int points);

  double x1(int i) const;
  double x2(int j) const;
  Complex point(int i, int j) const { return {x1(i), x2(j)}; }
  double cell_area() const;
};

struct WignerGrid {
  GridSpec grid;
  /// values(j, i) = W(x1(i) + i x2(j)).
  Eigen::MatrixXd values;

  /// Riemann sum over the grid cells.
  double integral() const;
  double min() const { return values.minCoeff(); }
  double max() const { return values.maxCoeff(); }
};

/// (2/pi) Tr[rho D(z) P D(z)^dag] with P the parity, evaluated as
/// (2/pi) Tr[rho D(2z) P] from exact displacement matrix elements.
double wigner_point(const DensityMatrix& rho, Complex z);

/// Throws TruncationError if rho's top-two-level population exceeds
/// tail_threshold.
WignerGrid wigner_numeric(const DensityMatrix& rho, const GridSpec& grid,
                          double tail_threshold = kDefaultTailThreshold);

/// W of q|alpha>/sqrt(N):
/// (2/(pi N)) (4|z - i Im(alpha)|^2 - 1) exp(-2|z - alpha|^2).
double wigner_closed_eq3(Complex alpha, Complex z);

/// W of the reduced x-polarization state of psi3:
/// 4|z - mu_x + sqrt2 xi_R|^2 / ((1 + 4 xi_R^2) pi) * exp(-2|z - mu_x|^2).
double wigner_closed_eq8(const ClosedFormPsi3& cf, Complex z);

// ---------------------------------------------------------------------------
// Extremum classification of negativity and Schmidt number

enum class Table1Cell {
  negativity_max_schmidt_max,
  negativity_max_schmidt_min,
  negativity_min_schmidt_max,
  negativity_min_schmidt_min,
};

/// Input condition sets; the +- variants of the first and third cells are
/// listed separately, the real proportionality constant k absorbs the others.
enum class Table1Condition {
  xi_r_eta_i_zero_xi_i_plus_eta_r,   // xi_R = eta_I = 0, xi_I = +eta_R
  xi_r_eta_i_zero_xi_i_minus_eta_r,  // xi_R = eta_I = 0, xi_I = -eta_R
  xi_r_eta_r_zero_proportional,      // xi_R = eta_R = 0, xi_I = k eta_I
  large_xi_r_eta_plus_i_xi,          // xi_R -> inf, eta = +i xi
  large_xi_r_eta_minus_i_xi,         // xi_R -> inf, eta = -i xi
  large_xi_r_eta_proportional,       // xi_R -> inf, eta = k xi
};

std::string_view to_string(Table1Cell cell);
std::string_view to_string(Table1Condition condition);
Table1Cell cell_of(Table1Condition condition);

struct Table1Tolerances {
  double exact = 1e-9;             // for N = 1/2, K = 2 and K = 1
  double condition = 1e-12;        // equality tests on the input components
  double large_xi_r = 10.0;        // xi_R counted as "-> infinity" from here
  double negativity_floor = 5e-3;  // N below this is the asymptotic minimum
  double schmidt_asymptotic = 1e-3;
};

struct Table1Check {
  PipelineInput input;
  double negativity;
  std::optional<double> schmidt;  // empty for zero intensity
  bool negativity_max;
  bool negativity_min;
  bool schmidt_max;
  bool schmidt_min;
  std::vector<Table1Condition> conditions;  // input conditions that hold
  std::vector<Table1Cell> cells;            // cells confirmed by the metrics
};

Table1Check table1_extrema_check(const PipelineInput& input,
                                 const Table1Tolerances& tol = {});

}  // namespace polconv
