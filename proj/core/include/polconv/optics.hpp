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

// Optical elements and the staged polarization-conversion pipeline
//   |psi0> = |xi>_x |eta>_y
//   |psi1> = q_1 |xi>_1 |eta>_2 / sqrt(N)        (PBS1, HWP1, heralded q)
//   |psi2> = B |psi1>                             (50-50 beam splitter)
//   |psi3> = psi2 with t -> x, r -> y             (HWP2, PBS2)

#include <map>
#include <optional>

#include "polconv/fock.hpp"

namespace polconv {

struct PipelineInput {
  Complex xi;   // x-polarization displacement
  Complex eta;  // y-polarization displacement
};

/// First-order parametric down-conversion followed by idler photon counting.
struct PdcConfig {
  static constexpr double kMaxGain = 0.2;

  Complex gain;
  Complex idler_amplitude;
  int herald_count = 1;

  /// Throws std::invalid_argument for |gain| >= kMaxGain or a herald count
  /// outside {0, 1, 2}.
  void validate() const;
};

/// Closed-form parameters of
///   |psi3> = [ |1^(mu_x)>|mu_y> - |mu_x>|1^(mu_y)> + 2 sqrt2 xi_R |mu_x>|mu_y> ]
///            / sqrt(2N).
struct ClosedFormPsi3 {
  Complex mu_x;
  Complex mu_y;
  double xi_r;
  double norm;  // N = 1 + 4 xi_R^2
  double r;     // sqrt2 xi_R / N

  static ClosedFormPsi3 from_input(const PipelineInput& input);
  /// Coefficient of the |mu_x, mu_y> term, 2 sqrt2 xi_R / sqrt(2N).
  double coherent_term_coefficient() const;
};

/// Applies exp{(a1^dag a2 - a1 a2^dag) pi/4}; port 1 maps to (a_t - a_r)/sqrt2.
/// The generator conserves total photon number, so the exponential is taken
/// block by block on the fixed-photon-number subspaces.
TruncatedState beam_splitter_5050(const TruncatedState& state,
                                  double tail_threshold = kDefaultTailThreshold);

struct HeraldResult {
  TruncatedState signal;
  /// Squared norm of the conditioned (unnormalized) signal vector.
  double probability;
};

/// Applies (1 + g a^dag a_i^dag + g^* a a_i) to signal (x) (|0> + alpha_i|1>)_i,
/// projects the idler onto |herald_count> and renormalizes the signal. The
/// output cutoff is one larger than the input so a^dag acts without loss.
HeraldResult pdc_herald(const TruncatedState& signal, const PdcConfig& config);

/// Squared norm of the full first-order output vector, summed over all
/// idler occupations.
double pdc_output_norm_sq(const TruncatedState& signal, const PdcConfig& config);

using LabelMapping = std::map<ModeLabel, ModeLabel>;

/// Renames mode labels; coefficients are untouched. Labels absent from the
/// mapping are kept.
TruncatedState relabel_polarization(const TruncatedState& state,
                                    const LabelMapping& mapping);
LabelMapping swap_mapping(ModeLabel a, ModeLabel b);

/// Default cutoff for a pipeline run: large enough for every displacement in
/// play (xi, eta, mu_x, mu_y).
FockCutoff pipeline_cutoff(const PipelineInput& input);

/// Number-basis expansion of the closed-form |psi3>, built from the analytic
/// coherent and displaced-Fock coefficients (no matrix exponentials).
TruncatedState psi3_closed_form_state(const ClosedFormPsi3& cf, FockCutoff cutoff);

struct PipelineResult {
  ClosedFormPsi3 closed_form;
  TruncatedState psi1;
  TruncatedState psi2;
  TruncatedState psi3;
  /// |<psi3 numeric | psi3 closed form>|^2.
  double fidelity;
};

PipelineResult run_pipeline(const PipelineInput& input,
                            std::optional<FockCutoff> cutoff = std::nullopt,
                            double tail_threshold = kDefaultTailThreshold);

}  // namespace polconv
