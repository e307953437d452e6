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

#include <iosfwd>
#include <string>
#include <vector>

#include "cli/config.hpp"
#include "cli/format.hpp"
#include "polconv/metrics.hpp"

namespace polconv::cli {

/// Output of one command before it is written anywhere.
struct CommandResult {
  std::string output;
  /// Lines for stderr (summaries and warnings).
  std::vector<std::string> messages;
  int exit_code = kExitOk;
};

/// Report for a single (xi, eta) point.
Json pipeline_report(const PipelineInput& input, std::optional<int> cutoff,
                     const Tolerances& tol, bool& over_tolerance);

/// Row-major table over the swept axes; per-row failures land in `error`.
Table sweep_table(const SweepConfig& config, bool& over_tolerance);

/// Single-mode state named by the selector, as a density matrix.
DensityMatrix select_density(const StateSelector& selector,
                             std::optional<int> cutoff);
/// Window center used for Wigner grids of the selected state.
Complex selector_center(const StateSelector& selector);

struct WignerOutput {
  WignerGrid grid;
  /// Largest pointwise |numeric - closed form| when a closed form exists.
  std::optional<double> closed_form_deviation;
};
WignerOutput wigner_output(const SweepConfig& config);
std::string wigner_csv(const WignerGrid& grid);
/// Binary greyscale PGM heatmap of the grid.
std::string wigner_pgm(const WignerGrid& grid);

Table qparam_table(const SweepConfig& config, bool& over_tolerance);

Json homodyne_report(const SweepConfig& config, bool& pass);

/// Runs the configured mode and renders it in the requested format.
CommandResult run_command(const SweepConfig& config, bool strict,
                          const std::optional<std::string>& image_path = {});

/// Full command-line entry point; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace polconv::cli
