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

#include "polconv/states.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace polconv {

QuadSuperposition QuadSuperposition::of(Complex alpha) {
  const double re = alpha.real();
  return {CoherentLabel{alpha}, 2.0 * re, 1.0, 1.0 + 4.0 * re * re};
}

CVector coherent_expansion(Complex alpha, int dim) {
  FockCutoff{dim};
  CVector c(dim);
  c(0) = std::exp(-0.5 * std::norm(alpha));
  for (int n = 1; n < dim; ++n) {
    c(n) = c(n - 1) * alpha / std::sqrt(static_cast<double>(n));
  }
  return c;
}

CVector displaced_single_photon_expansion(Complex alpha, int dim) {
  const CVector c = coherent_expansion(alpha, dim);
  CVector out(dim);
  out(0) = -std::conj(alpha) * c(0);
  for (int n = 1; n < dim; ++n) {
    out(n) = std::sqrt(static_cast<double>(n)) * c(n - 1) -
             std::conj(alpha) * c(n);
  }
  return out;
}

TruncatedState coherent(Complex alpha, FockCutoff cutoff,
                        double tail_threshold) {
  auto state = TruncatedState::single_mode(coherent_expansion(alpha, cutoff.dim()))
                   .normalized();
  state.require_truncation_safe("coherent", tail_threshold);
  return state;
}

TruncatedState displaced_fock(Complex alpha, int n, FockCutoff cutoff,
                              double tail_threshold) {
  if (n < 0 || n >= cutoff.dim()) {
    throw std::out_of_range("displaced_fock: n=" + std::to_string(n) +
                            " outside the cutoff");
  }
  const ModeOperator d = make_operator(OperatorKind::displacement, cutoff, alpha);
  auto state = TruncatedState::single_mode(d.matrix.col(n)).normalized();
  state.require_truncation_safe("displaced_fock", tail_threshold);
  return state;
}

QuadSuperpositionState quad_superposition(Complex alpha, FockCutoff cutoff,
                                          double tail_threshold) {
  const QuadSuperposition record = QuadSuperposition::of(alpha);
  const TruncatedState coh = coherent(alpha, cutoff, tail_threshold);
  const TruncatedState dfs = displaced_fock(alpha, 1, cutoff, tail_threshold);
  CVector c = record.coeff_coherent * coh.coeffs() + record.coeff_dfs * dfs.coeffs();
  auto state = TruncatedState::single_mode(std::move(c)).normalized();
  state.require_truncation_safe("quad_superposition", tail_threshold);
  return {std::move(state), record};
}

}  // namespace polconv
