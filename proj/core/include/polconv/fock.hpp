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

// Truncated Fock-space linear algebra.
//
// Two-mode vectors and matrices use the mode-x major flat index
//   |n_x, n_y>  <->  n_x * dim_y + n_y
// everywhere in the library.

#include <array>
#include <complex>
#include <optional>
#include <string_view>

#include <Eigen/Dense>

#include "polconv/errors.hpp"

namespace polconv {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;

inline constexpr double kDefaultTailThreshold = 1e-10;

/// Number of retained basis states |0>..|dim-1> of one mode.
class FockCutoff {
 public:
  explicit FockCutoff(int dim);

  int dim() const noexcept { return dim_; }

  /// Cutoff large enough that coherent and singly-excited displaced states of
  /// magnitude up to `magnitude` keep their top-two-level weight below 1e-10.
  static FockCutoff for_displacement(double magnitude);

  friend bool operator==(FockCutoff, FockCutoff) = default;

 private:
  int dim_;
};

enum class ModeLabel { x, y, path1, path2, t, r, signal, idler };

std::string_view to_string(ModeLabel label);

/// Pure state of one or two bosonic modes on a truncated number basis.
class TruncatedState {
 public:
  static TruncatedState single_mode(CVector coeffs,
                                    ModeLabel label = ModeLabel::x);
  static TruncatedState two_mode(int dim_x, int dim_y, CVector coeffs,
                                 std::array<ModeLabel, 2> labels = {
                                     ModeLabel::x, ModeLabel::y});

  int modes() const noexcept { return modes_; }
  int dim_x() const noexcept { return dim_x_; }
  /// 1 for single-mode states.
  int dim_y() const noexcept { return dim_y_; }
  FockCutoff cutoff(int mode = 0) const;
  const std::array<ModeLabel, 2>& labels() const noexcept { return labels_; }

  const CVector& coeffs() const noexcept { return coeffs_; }
  Complex amplitude(int n_x, int n_y = 0) const;

  double norm() const { return coeffs_.norm(); }
  /// Throws DegenerateInputError for the zero vector.
  TruncatedState normalized() const;

  /// Weight on the top two levels of any mode (levels n >= dim - 2).
  double tail_mass() const;
  bool truncation_safe(double threshold = kDefaultTailThreshold) const {
    return tail_mass() < threshold;
  }
  /// Throws TruncationError naming `context` if the tail is above threshold.
  void require_truncation_safe(std::string_view context,
                               double threshold = kDefaultTailThreshold) const;

  TruncatedState with_labels(std::array<ModeLabel, 2> labels) const;
  /// Same state embedded in a larger single-mode or two-mode cutoff.
  TruncatedState padded(int dim_x, int dim_y = 1) const;

 private:
  TruncatedState(int modes, int dim_x, int dim_y, CVector coeffs,
                 std::array<ModeLabel, 2> labels);

  int modes_;
  int dim_x_;
  int dim_y_;
  CVector coeffs_;
  std::array<ModeLabel, 2> labels_;
};

/// <a|b>, conjugate-linear in the first argument.
Complex inner_product(const TruncatedState& a, const TruncatedState& b);
/// |<a|b>|^2 of the normalized states; phase-insensitive.
double fidelity(const TruncatedState& a, const TruncatedState& b);

enum class OperatorKind {
  annihilation,
  creation,
  number,
  displacement,
  quadrature,
  custom
};

struct ModeOperator {
  OperatorKind kind;
  CMatrix matrix;
  /// Set for displacement operators only.
  std::optional<Complex> alpha;

  int dim() const { return static_cast<int>(matrix.rows()); }
};

/// Truncated single-mode operator. `quadrature` is q = a + a^dagger and
/// `displacement` is exp(alpha a^dagger - alpha^* a) evaluated by
/// scaling-and-squaring on the truncated space.
ModeOperator make_operator(OperatorKind kind, FockCutoff cutoff,
                           std::optional<Complex> alpha = std::nullopt);
ModeOperator custom_operator(CMatrix matrix);

CMatrix matrix_exponential(const CMatrix& generator);

/// Kronecker product in the mode-x major convention.
CMatrix tensor(const CMatrix& op_x, const CMatrix& op_y);
CMatrix tensor(const ModeOperator& op_x, const ModeOperator& op_y);

/// Single-mode density matrix.
class DensityMatrix {
 public:
  /// Validates Hermiticity (1e-12 elementwise) and unit trace (1e-10).
  explicit DensityMatrix(CMatrix matrix);
  static DensityMatrix from_pure(const TruncatedState& state);

  int dim() const { return static_cast<int>(matrix_.rows()); }
  const CMatrix& matrix() const noexcept { return matrix_; }
  /// Population of the top two levels.
  double tail_mass() const;
  DensityMatrix padded(int dim) const;

 private:
  CMatrix matrix_;
};

class TwoModeDensityMatrix {
 public:
  /// Validates shape, Hermiticity (1e-12 elementwise) and unit trace (1e-10).
  TwoModeDensityMatrix(int dim_x, int dim_y, CMatrix matrix);
  static TwoModeDensityMatrix from_pure(const TruncatedState& state);

  int dim_x() const noexcept { return dim_x_; }
  int dim_y() const noexcept { return dim_y_; }
  const CMatrix& matrix() const noexcept { return matrix_; }

 private:
  int dim_x_;
  int dim_y_;
  CMatrix matrix_;
};

DensityMatrix partial_trace_y(const TwoModeDensityMatrix& rho);
/// Reduced x-mode state of a pure two-mode state without forming the full
/// two-mode density matrix (C C^dagger with C the dim_x x dim_y coefficients).
DensityMatrix reduced_x(const TruncatedState& state);

/// Transpose on the x-mode indices: <m,j| rho^Tx |n,k> = <n,j| rho |m,k>.
CMatrix partial_transpose_x(const TwoModeDensityMatrix& rho);
CMatrix partial_transpose_x(const CMatrix& matrix, int dim_x, int dim_y);

/// Ascending eigenvalues of a Hermitian matrix. Throws std::invalid_argument
/// when the Hermiticity defect exceeds 1e-8.
RVector hermitian_eigenvalues(const CMatrix& matrix);

}  // namespace polconv
