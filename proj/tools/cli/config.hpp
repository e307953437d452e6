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

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "polconv/fock.hpp"

namespace polconv::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitTruncation = 3;
inline constexpr int kExitValidation = 4;

/// Bad command line, unparsable value or invalid configuration (exit 2).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses "a+bi" style complex literals: "1.5", "-2i", "i", "1-i", "0.5+2e-3i".
/// The decimal point is always '.', independent of the locale.
Complex parse_complex(std::string_view text);
std::string format_complex(Complex z);

struct Range {
  double min = 0.0;
  double max = 0.0;
  int steps = 1;

  double at(int k) const;
  void validate(std::string_view symbol) const;
};

/// "v" (single point) or "min:max:steps".
Range parse_range(std::string_view text);

enum class Mode { pipeline, sweep, wigner, qparam, homodyne };

std::string_view to_string(Mode mode);
Mode parse_mode(std::string_view text);

/// Symbols a mode may sweep or fix, in canonical (row-major) order.
const std::vector<std::string>& mode_symbols(Mode mode);

enum class StateKind { coherent, quad_superposition, psi3_reduced_x, fock };

struct StateSelector {
  StateKind kind = StateKind::coherent;
  Complex alpha{0.0, 0.0};
  Complex xi{0.0, 0.0};
  Complex eta{0.0, 0.0};
  int photons = 1;
};

StateKind parse_state_kind(std::string_view text);
std::string_view to_string(StateKind kind);

struct Tolerances {
  double negativity = 1e-6;
  double schmidt = 1e-9;
  double mandel = 1e-8;
  double fidelity = 1e-8;
};

enum class Format { csv, json };

struct SweepConfig {
  Mode mode = Mode::pipeline;
  /// Swept symbols; iteration order follows mode_symbols(mode).
  std::map<std::string, Range> axes;
  std::map<std::string, double> fixed;
  std::optional<int> cutoff;
  Tolerances tolerances;
  std::uint64_t seed = 20240601;
  std::optional<std::string> output_path;
  std::optional<Format> format;

  StateSelector state;
  double half_width = 3.0;
  int resolution = 41;
  double lo_phase = 0.0;
  std::uint64_t count = 100000;

  /// Value of an unswept symbol (0 when neither swept nor fixed).
  double fixed_value(const std::string& symbol) const;
  /// Swept symbols in canonical order.
  std::vector<std::string> swept_symbols() const;
  /// Throws UsageError on steps < 1, min > max or foreign symbols.
  void validate() const;
};

SweepConfig config_from_json(const nlohmann::json& j);
SweepConfig load_config(const std::string& path);

}  // namespace polconv::cli
