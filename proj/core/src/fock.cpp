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

#include "polconv/fock.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

namespace polconv {

namespace {

constexpr double kHermitianTolerance = 1e-12;
constexpr double kTraceTolerance = 1e-10;
constexpr double kEigenHermitianTolerance = 1e-8;

double hermiticity_defect(const CMatrix& m) {
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

void validate_density(const CMatrix& m, const char* what) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument(std::string(what) + ": matrix is not square");
  }
  if (hermiticity_defect(m) > kHermitianTolerance) {
    throw std::invalid_argument(std::string(what) + ": matrix is not Hermitian");
  }
  if (std::abs(m.trace() - Complex(1.0)) > kTraceTolerance) {
    throw std::invalid_argument(std::string(what) + ": trace differs from 1");
  }
}

}  // namespace

FockCutoff::FockCutoff(int dim) : dim_(dim) {
  if (dim < 2) {
    throw std::invalid_argument("FockCutoff: dim must be at least 2, got " +
                                std::to_string(dim));
  }
}

FockCutoff FockCutoff::for_displacement(double magnitude) {
  const double m = std::abs(magnitude);
  return FockCutoff(static_cast<int>(std::ceil(m * m + 8.0 * m + 12.0)));
}

std::string_view to_string(ModeLabel label) {
  switch (label) {
    case ModeLabel::x: return "x";
    case ModeLabel::y: return "y";
    case ModeLabel::path1: return "path1";
    case ModeLabel::path2: return "path2";
    case ModeLabel::t: return "t";
    case ModeLabel::r: return "r";
    case ModeLabel::signal: return "signal";
    case ModeLabel::idler: return "idler";
  }
  return "?";
}

TruncatedState::TruncatedState(int modes, int dim_x, int dim_y, CVector coeffs,
                               std::array<ModeLabel, 2> labels)
    : modes_(modes),
      dim_x_(dim_x),
      dim_y_(dim_y),
      coeffs_(std::move(coeffs)),
      labels_(labels) {}

TruncatedState TruncatedState::single_mode(CVector coeffs, ModeLabel label) {
  const int dim = static_cast<int>(coeffs.size());
  FockCutoff{dim};
  return TruncatedState(1, dim, 1, std::move(coeffs), {label, label});
}

TruncatedState TruncatedState::two_mode(int dim_x, int dim_y, CVector coeffs,
                                        std::array<ModeLabel, 2> labels) {
  FockCutoff{dim_x};
  FockCutoff{dim_y};
  if (coeffs.size() != static_cast<Eigen::Index>(dim_x) * dim_y) {
    throw std::invalid_argument(
        "TruncatedState::two_mode: coefficient count does not match dim_x*dim_y");
  }
  return TruncatedState(2, dim_x, dim_y, std::move(coeffs), labels);
}

FockCutoff TruncatedState::cutoff(int mode) const {
  if (mode == 0) return FockCutoff(dim_x_);
  if (mode == 1 && modes_ == 2) return FockCutoff(dim_y_);
  throw std::out_of_range("TruncatedState::cutoff: no such mode");
}

Complex TruncatedState::amplitude(int n_x, int n_y) const {
  if (n_x < 0 || n_x >= dim_x_ || n_y < 0 || n_y >= dim_y_) {
    throw std::out_of_range("TruncatedState::amplitude: index outside cutoff");
  }
  return coeffs_(static_cast<Eigen::Index>(n_x) * dim_y_ + n_y);
}

TruncatedState TruncatedState::normalized() const {
  const double n = norm();
  if (n == 0.0) {
    throw DegenerateInputError("cannot normalize the zero vector");
  }
  TruncatedState out = *this;
  out.coeffs_ /= n;
  return out;
}

double TruncatedState::tail_mass() const {
  double tail = 0.0;
  for (int nx = 0; nx < dim_x_; ++nx) {
    for (int ny = 0; ny < dim_y_; ++ny) {
      const bool top_x = nx >= dim_x_ - 2;
      const bool top_y = modes_ == 2 && ny >= dim_y_ - 2;
      if (top_x || top_y) {
        tail += std::norm(coeffs_(static_cast<Eigen::Index>(nx) * dim_y_ + ny));
      }
    }
  }
  const double total = coeffs_.squaredNorm();
  return total > 0.0 ? tail / total : 0.0;
}

void TruncatedState::require_truncation_safe(std::string_view context,
                                             double threshold) const {
  const double tail = tail_mass();
  if (!(tail < threshold)) {
    throw TruncationError(std::string(context) + ": tail mass " +
                              std::to_string(tail) +
                              " exceeds threshold; increase the cutoff",
                          tail);
  }
}

TruncatedState TruncatedState::with_labels(
    std::array<ModeLabel, 2> labels) const {
  TruncatedState out = *this;
  out.labels_ = labels;
  return out;
}

TruncatedState TruncatedState::padded(int dim_x, int dim_y) const {
  if (modes_ == 1) {
    if (dim_x < dim_x_) {
      throw std::invalid_argument("TruncatedState::padded: cannot shrink");
    }
    CVector c = CVector::Zero(dim_x);
    c.head(dim_x_) = coeffs_;
    return TruncatedState(1, dim_x, 1, std::move(c), labels_);
  }
  if (dim_x < dim_x_ || dim_y < dim_y_) {
    throw std::invalid_argument("TruncatedState::padded: cannot shrink");
  }
  CVector c = CVector::Zero(static_cast<Eigen::Index>(dim_x) * dim_y);
  for (int nx = 0; nx < dim_x_; ++nx) {
    for (int ny = 0; ny < dim_y_; ++ny) {
      c(static_cast<Eigen::Index>(nx) * dim_y + ny) =
          coeffs_(static_cast<Eigen::Index>(nx) * dim_y_ + ny);
    }
  }
  return TruncatedState(2, dim_x, dim_y, std::move(c), labels_);
}

Complex inner_product(const TruncatedState& a, const TruncatedState& b) {
  if (a.modes() != b.modes() || a.dim_x() != b.dim_x() ||
      a.dim_y() != b.dim_y()) {
    throw std::invalid_argument("inner_product: incompatible cutoffs");
  }
  return a.coeffs().dot(b.coeffs());
}

double fidelity(const TruncatedState& a, const TruncatedState& b) {
  const double na = a.norm();
  const double nb = b.norm();
  if (na == 0.0 || nb == 0.0) {
    throw DegenerateInputError("fidelity: zero vector");
  }
  return std::norm(inner_product(a, b)) / (na * na * nb * nb);
}

ModeOperator make_operator(OperatorKind kind, FockCutoff cutoff,
                           std::optional<Complex> alpha) {
  const int dim = cutoff.dim();
  if (kind == OperatorKind::displacement && !alpha) {
    throw std::invalid_argument("make_operator: displacement requires alpha");
  }
  if (kind != OperatorKind::displacement && alpha) {
    throw std::invalid_argument(
        "make_operator: alpha is only meaningful for displacement");
  }

  CMatrix a = CMatrix::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));

  switch (kind) {
    case OperatorKind::annihilation:
      return {kind, a, std::nullopt};
    case OperatorKind::creation:
      return {kind, a.adjoint(), std::nullopt};
    case OperatorKind::number: {
      CMatrix n = CMatrix::Zero(dim, dim);
      for (int k = 0; k < dim; ++k) n(k, k) = static_cast<double>(k);
      return {kind, n, std::nullopt};
    }
    case OperatorKind::quadrature:
      return {kind, a + a.adjoint(), std::nullopt};
    case OperatorKind::displacement: {
      const Complex al = *alpha;
      CMatrix generator = al * a.adjoint() - std::conj(al) * a;
      return {kind, matrix_exponential(generator), alpha};
    }
    case OperatorKind::custom:
      throw std::invalid_argument(
          "make_operator: use custom_operator for custom matrices");
  }
  throw std::invalid_argument("make_operator: unknown operator kind");
}

ModeOperator custom_operator(CMatrix matrix) {
  if (matrix.rows() != matrix.cols()) {
    throw std::invalid_argument("custom_operator: matrix must be square");
  }
  FockCutoff{static_cast<int>(matrix.rows())};
  return {OperatorKind::custom, std::move(matrix), std::nullopt};
}

CMatrix matrix_exponential(const CMatrix& generator) {
  if (generator.rows() != generator.cols()) {
    throw std::invalid_argument("matrix_exponential: matrix must be square");
  }
  return generator.exp();
}

CMatrix tensor(const CMatrix& op_x, const CMatrix& op_y) {
  const Eigen::Index rx = op_x.rows(), cx = op_x.cols();
  const Eigen::Index ry = op_y.rows(), cy = op_y.cols();
  CMatrix out(rx * ry, cx * cy);
  for (Eigen::Index i = 0; i < rx; ++i) {
    for (Eigen::Index j = 0; j < cx; ++j) {
      out.block(i * ry, j * cy, ry, cy) = op_x(i, j) * op_y;
    }
  }
  return out;
}

CMatrix tensor(const ModeOperator& op_x, const ModeOperator& op_y) {
  return tensor(op_x.matrix, op_y.matrix);
}

DensityMatrix::DensityMatrix(CMatrix matrix) : matrix_(std::move(matrix)) {
  validate_density(matrix_, "DensityMatrix");
  FockCutoff{dim()};
}

DensityMatrix DensityMatrix::from_pure(const TruncatedState& state) {
  if (state.modes() != 1) {
    throw std::invalid_argument("DensityMatrix::from_pure: need a single mode");
  }
  const TruncatedState s = state.normalized();
  CMatrix m = s.coeffs() * s.coeffs().adjoint();
  m = (0.5 * (m + m.adjoint())).eval();
  return DensityMatrix(std::move(m));
}

double DensityMatrix::tail_mass() const {
  const int d = dim();
  return matrix_(d - 1, d - 1).real() + matrix_(d - 2, d - 2).real();
}

DensityMatrix DensityMatrix::padded(int new_dim) const {
  if (new_dim < dim()) {
    throw std::invalid_argument("DensityMatrix::padded: cannot shrink");
  }
  CMatrix m = CMatrix::Zero(new_dim, new_dim);
  m.topLeftCorner(dim(), dim()) = matrix_;
  return DensityMatrix(std::move(m));
}

TwoModeDensityMatrix::TwoModeDensityMatrix(int dim_x, int dim_y, CMatrix matrix)
    : dim_x_(dim_x), dim_y_(dim_y), matrix_(std::move(matrix)) {
  FockCutoff{dim_x};
  FockCutoff{dim_y};
  const Eigen::Index n = static_cast<Eigen::Index>(dim_x) * dim_y;
  if (matrix_.rows() != n || matrix_.cols() != n) {
    throw std::invalid_argument(
        "TwoModeDensityMatrix: matrix size does not match dim_x*dim_y");
  }
  validate_density(matrix_, "TwoModeDensityMatrix");
}

TwoModeDensityMatrix TwoModeDensityMatrix::from_pure(
    const TruncatedState& state) {
  if (state.modes() != 2) {
    throw std::invalid_argument(
        "TwoModeDensityMatrix::from_pure: need a two-mode state");
  }
  const TruncatedState s = state.normalized();
  CMatrix m = s.coeffs() * s.coeffs().adjoint();
  m = (0.5 * (m + m.adjoint())).eval();
  return TwoModeDensityMatrix(s.dim_x(), s.dim_y(), std::move(m));
}

DensityMatrix partial_trace_y(const TwoModeDensityMatrix& rho) {
  const int dx = rho.dim_x();
  const int dy = rho.dim_y();
  const CMatrix& m = rho.matrix();
  CMatrix out = CMatrix::Zero(dx, dx);
  for (int i = 0; i < dx; ++i) {
    for (int j = 0; j < dx; ++j) {
      Complex acc = 0.0;
      for (int k = 0; k < dy; ++k) {
        acc += m(static_cast<Eigen::Index>(i) * dy + k,
                 static_cast<Eigen::Index>(j) * dy + k);
      }
      out(i, j) = acc;
    }
  }
  out = (0.5 * (out + out.adjoint())).eval();
  return DensityMatrix(std::move(out));
}

DensityMatrix reduced_x(const TruncatedState& state) {
  if (state.modes() != 2) {
    throw std::invalid_argument("reduced_x: need a two-mode state");
  }
  const TruncatedState s = state.normalized();
  const CMatrix c =
      CMatrix::Map(s.coeffs().data(), s.dim_y(), s.dim_x()).transpose();
  CMatrix out = c * c.adjoint();
  out = (0.5 * (out + out.adjoint())).eval();
  return DensityMatrix(std::move(out));
}

CMatrix partial_transpose_x(const CMatrix& matrix, int dim_x, int dim_y) {
  const Eigen::Index n = static_cast<Eigen::Index>(dim_x) * dim_y;
  if (matrix.rows() != n || matrix.cols() != n) {
    throw std::invalid_argument("partial_transpose_x: size mismatch");
  }
  CMatrix out(n, n);
  for (int m = 0; m < dim_x; ++m) {
    for (int k = 0; k < dim_x; ++k) {
      out.block(static_cast<Eigen::Index>(m) * dim_y,
                static_cast<Eigen::Index>(k) * dim_y, dim_y, dim_y) =
          matrix.block(static_cast<Eigen::Index>(k) * dim_y,
                       static_cast<Eigen::Index>(m) * dim_y, dim_y, dim_y);
    }
  }
  return out;
}

CMatrix partial_transpose_x(const TwoModeDensityMatrix& rho) {
  return partial_transpose_x(rho.matrix(), rho.dim_x(), rho.dim_y());
}

RVector hermitian_eigenvalues(const CMatrix& matrix) {
  if (matrix.rows() != matrix.cols()) {
    throw std::invalid_argument("hermitian_eigenvalues: matrix is not square");
  }
  if (hermiticity_defect(matrix) > kEigenHermitianTolerance) {
    throw std::invalid_argument("hermitian_eigenvalues: matrix is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(matrix, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_eigenvalues: eigensolver failed");
  }
  return solver.eigenvalues();
}

}  // namespace polconv
