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

// Coherent states, displaced Fock states and the quadrature-operated
// superposition q|alpha> = 2 Re(alpha) |alpha> + D(alpha)|1>.

#include "polconv/fock.hpp"

namespace polconv {

struct CoherentLabel {
  Complex alpha;

  double re() const { return alpha.real(); }
  double im() const { return alpha.imag(); }
  double magnitude() const { return std::abs(alpha); }
  double phase() const { return std::arg(alpha); }
};

/// Closed-form description of q|alpha>: coefficients of the orthogonal pair
/// {|alpha>, D(alpha)|1>} and the squared norm N = 1 + 4 Re(alpha)^2.
struct QuadSuperposition {
  CoherentLabel label;
  double coeff_coherent;
  double coeff_dfs;
  double norm_sq;

  static QuadSuperposition of(Complex alpha);
};

struct QuadSuperpositionState {
  TruncatedState state;
  QuadSuperposition record;
};

/// Analytic number-basis coefficients e^{-|a|^2/2} a^n / sqrt(n!), unnormalized.
CVector coherent_expansion(Complex alpha, int dim);
/// Analytic coefficients of D(alpha)|1> = (a^dagger - alpha^*)|alpha>.
CVector displaced_single_photon_expansion(Complex alpha, int dim);

/// Normalized coherent state. Throws TruncationError when the cutoff is too
/// small for |alpha|.
TruncatedState coherent(Complex alpha, FockCutoff cutoff,
                        double tail_threshold = kDefaultTailThreshold);

/// D(alpha)|n>, using the truncated matrix exponential.
TruncatedState displaced_fock(Complex alpha, int n, FockCutoff cutoff,
                              double tail_threshold = kDefaultTailThreshold);

/// (2 Re(alpha) |alpha> + D(alpha)|1>) / sqrt(N) together with its record.
QuadSuperpositionState quad_superposition(
    Complex alpha, FockCutoff cutoff,
    double tail_threshold = kDefaultTailThreshold);

}  // namespace polconv
