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

#include "polconv/optics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "polconv/states.hpp"

namespace polconv {

namespace {

constexpr int kIdlerDim = 3;
constexpr double kHeraldNormFloor = 1e-14;

Eigen::Index flat(int nx, int ny, int dim_y) {
  return static_cast<Eigen::Index>(nx) * dim_y + ny;
}

// Full first-order PDC output on signal (x) idler, signal cutoff d+1.
CVector pdc_output(const TruncatedState& signal, const PdcConfig& config) {
  config.validate();
  if (signal.modes() != 1) {
    throw std::invalid_argument("pdc_herald: signal must be a single mode");
  }
  signal.require_truncation_safe("pdc_herald");
  const int ds = signal.dim_x() + 1;
  const FockCutoff sc(ds);
  const FockCutoff ic(kIdlerDim);

  CVector idler = CVector::Zero(kIdlerDim);
  idler(0) = 1.0;
  idler(1) = config.idler_amplitude;
  const CVector s = signal.normalized().padded(ds).coeffs();

  CVector input(static_cast<Eigen::Index>(ds) * kIdlerDim);
  for (int n = 0; n < ds; ++n) {
    for (int k = 0; k < kIdlerDim; ++k) input(flat(n, k, kIdlerDim)) = s(n) * idler(k);
  }

  const CMatrix a = make_operator(OperatorKind::annihilation, sc).matrix;
  const CMatrix ai = make_operator(OperatorKind::annihilation, ic).matrix;
  const Eigen::Index total = input.size();
  const CMatrix mixing = CMatrix::Identity(total, total) +
                         config.gain * tensor(a.adjoint(), ai.adjoint()) +
                         std::conj(config.gain) * tensor(a, ai);
  return mixing * input;
}

}  // namespace

void PdcConfig::validate() const {
  if (!(std::abs(gain) < kMaxGain)) {
    throw std::invalid_argument(
        "PdcConfig: |gain| must be below 0.2 for the first-order model");
  }
  if (herald_count < 0 || herald_count >= kIdlerDim) {
    throw std::invalid_argument("PdcConfig: herald_count must be 0, 1 or 2");
  }
}

ClosedFormPsi3 ClosedFormPsi3::from_input(const PipelineInput& input) {
  const double s = std::numbers::sqrt2;
  const double xr = input.xi.real();
  const double n = 1.0 + 4.0 * xr * xr;
  return {(input.eta + input.xi) / s, (input.eta - input.xi) / s, xr, n,
          s * xr / n};
}

double ClosedFormPsi3::coherent_term_coefficient() const {
  return 2.0 * std::numbers::sqrt2 * xi_r / std::sqrt(2.0 * norm);
}

TruncatedState beam_splitter_5050(const TruncatedState& state,
                                  double tail_threshold) {
  if (state.modes() != 2) {
    throw std::invalid_argument("beam_splitter_5050: need a two-mode state");
  }
  state.require_truncation_safe("beam_splitter_5050 input", tail_threshold);
  const int d1 = state.dim_x();
  const int d2 = state.dim_y();
  const double angle = std::numbers::pi / 4.0;
  const CVector& in = state.coeffs();
  CVector out = CVector::Zero(in.size());

  for (int total = 0; total <= d1 + d2 - 2; ++total) {
    const int lo = std::max(0, total - (d2 - 1));
    const int hi = std::min(total, d1 - 1);
    const int size = hi - lo + 1;
    // Block basis: |n1, total - n1>, n1 = lo..hi.
    CMatrix generator = CMatrix::Zero(size, size);
    for (int i = 0; i < size; ++i) {
      const int n1 = lo + i;
      const int n2 = total - n1;
      // a1^dag a2 |n1,n2> = sqrt((n1+1) n2) |n1+1, n2-1>
      if (i + 1 < size) {
        generator(i + 1, i) += angle * std::sqrt(static_cast<double>((n1 + 1) * n2));
      }
      // -a1 a2^dag |n1,n2> = -sqrt(n1 (n2+1)) |n1-1, n2+1>
      if (i > 0) {
        generator(i - 1, i) -= angle * std::sqrt(static_cast<double>(n1 * (n2 + 1)));
      }
    }
    CVector block(size);
    for (int i = 0; i < size; ++i) block(i) = in(flat(lo + i, total - lo - i, d2));
    const CVector rotated = matrix_exponential(generator) * block;
    for (int i = 0; i < size; ++i) out(flat(lo + i, total - lo - i, d2)) = rotated(i);
  }

  return TruncatedState::two_mode(d1, d2, std::move(out),
                                  {ModeLabel::t, ModeLabel::r});
}

HeraldResult pdc_herald(const TruncatedState& signal, const PdcConfig& config) {
  const CVector out = pdc_output(signal, config);
  const int ds = signal.dim_x() + 1;
  CVector conditioned(ds);
  for (int n = 0; n < ds; ++n) {
    conditioned(n) = out(flat(n, config.herald_count, kIdlerDim));
  }
  const double prob = conditioned.squaredNorm();
  if (std::sqrt(prob) < kHeraldNormFloor) {
    throw DegenerateInputError(
        "pdc_herald: conditioned signal vanishes at first order");
  }
  auto state = TruncatedState::single_mode(conditioned / std::sqrt(prob),
                                           signal.labels()[0]);
  return {std::move(state), prob};
}

double pdc_output_norm_sq(const TruncatedState& signal, const PdcConfig& config) {
  return pdc_output(signal, config).squaredNorm();
}

TruncatedState relabel_polarization(const TruncatedState& state,
                                    const LabelMapping& mapping) {
  auto labels = state.labels();
  for (auto& label : labels) {
    if (auto it = mapping.find(label); it != mapping.end()) label = it->second;
  }
  return state.with_labels(labels);
}

LabelMapping swap_mapping(ModeLabel a, ModeLabel b) { return {{a, b}, {b, a}}; }

FockCutoff pipeline_cutoff(const PipelineInput& input) {
  const ClosedFormPsi3 cf = ClosedFormPsi3::from_input(input);
  const double m = std::max({std::abs(input.xi), std::abs(input.eta),
                             std::abs(cf.mu_x), std::abs(cf.mu_y)});
  return FockCutoff::for_displacement(m);
}

TruncatedState psi3_closed_form_state(const ClosedFormPsi3& cf,
                                      FockCutoff cutoff) {
  const int d = cutoff.dim();
  const CVector cx = coherent_expansion(cf.mu_x, d);
  const CVector cy = coherent_expansion(cf.mu_y, d);
  const CVector fx = displaced_single_photon_expansion(cf.mu_x, d);
  const CVector fy = displaced_single_photon_expansion(cf.mu_y, d);
  const double c = 2.0 * std::numbers::sqrt2 * cf.xi_r;
  const double scale = 1.0 / std::sqrt(2.0 * cf.norm);

  CVector psi(static_cast<Eigen::Index>(d) * d);
  for (int nx = 0; nx < d; ++nx) {
    for (int ny = 0; ny < d; ++ny) {
      psi(flat(nx, ny, d)) =
          scale * (fx(nx) * cy(ny) - cx(nx) * fy(ny) + c * cx(nx) * cy(ny));
    }
  }
  return TruncatedState::two_mode(d, d, std::move(psi));
}

PipelineResult run_pipeline(const PipelineInput& input,
                            std::optional<FockCutoff> cutoff,
                            double tail_threshold) {
  const FockCutoff fc = cutoff.value_or(pipeline_cutoff(input));
  const int d = fc.dim();
  const ClosedFormPsi3 cf = ClosedFormPsi3::from_input(input);

  // PBS1 + HWP1: |xi>_x|eta>_y becomes |xi>_1|eta>_2 on two x-polarized paths;
  // the heralded quadrature operation acts on path 1.
  const TruncatedState xi = coherent(input.xi, fc, tail_threshold);
  const TruncatedState eta = coherent(input.eta, fc, tail_threshold);
  const CMatrix q = make_operator(OperatorKind::quadrature, fc).matrix;
  const CVector path1 = q * xi.coeffs();
  CVector product(static_cast<Eigen::Index>(d) * d);
  for (int n1 = 0; n1 < d; ++n1) {
    for (int n2 = 0; n2 < d; ++n2) product(flat(n1, n2, d)) = path1(n1) * eta.coeffs()(n2);
  }
  TruncatedState psi1 =
      TruncatedState::two_mode(d, d, std::move(product),
                               {ModeLabel::path1, ModeLabel::path2})
          .normalized();
  psi1.require_truncation_safe("pipeline psi1", tail_threshold);

  TruncatedState psi2 = beam_splitter_5050(psi1, tail_threshold);
  psi2.require_truncation_safe("pipeline psi2", tail_threshold);

  // HWP2 rotates r by pi/2 and PBS2 recombines: pure relabelings.
  TruncatedState psi3 = relabel_polarization(
      psi2, {{ModeLabel::t, ModeLabel::x}, {ModeLabel::r, ModeLabel::y}});

  const double f = fidelity(psi3, psi3_closed_form_state(cf, fc));
  return {cf, std::move(psi1), std::move(psi2), std::move(psi3), f};
}

}  // namespace polconv
