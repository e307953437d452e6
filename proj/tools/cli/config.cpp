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

#include "cli/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>

#include <fmt/format.h>

namespace polconv::cli {

namespace {

double parse_real(std::string_view text, std::string_view whole) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw UsageError(fmt::format("cannot parse number '{}' in '{}'", text, whole));
  }
  return value;
}

// Position of the sign that separates real and imaginary parts, skipping a
// leading sign and exponent signs.
std::size_t split_position(std::string_view s) {
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      return i;
    }
  }
  return std::string_view::npos;
}

double parse_imag(std::string_view text, std::string_view whole) {
  // text ends with 'i'
  const std::string_view coeff = text.substr(0, text.size() - 1);
  if (coeff.empty() || coeff == "+") return 1.0;
  if (coeff == "-") return -1.0;
  return parse_real(coeff, whole);
}

}  // namespace

Complex parse_complex(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (c != ' ' && c != '\t') s.push_back(c);
  }
  if (s.empty()) throw UsageError("empty complex literal");
  const std::string_view v(s);
  if (v.back() != 'i') return {parse_real(v, text), 0.0};
  const std::size_t split = split_position(v);
  if (split == std::string_view::npos) return {0.0, parse_imag(v, text)};
  return {parse_real(v.substr(0, split), text), parse_imag(v.substr(split), text)};
}

std::string format_complex(Complex z) {
  const double im = z.imag();
  return fmt::format("{:.12g}{}{:.12g}i", z.real(), std::signbit(im) ? "-" : "+",
                     std::abs(im));
}

double Range::at(int k) const {
  if (steps <= 1) return min;
  return min + k * (max - min) / (steps - 1);
}

void Range::validate(std::string_view symbol) const {
  if (steps < 1) throw UsageError(fmt::format("{}: steps must be >= 1", symbol));
  if (min > max) throw UsageError(fmt::format("{}: min must not exceed max", symbol));
}

Range parse_range(std::string_view text) {
  const auto c1 = text.find(':');
  if (c1 == std::string_view::npos) {
    const double v = parse_real(text, text);
    return {v, v, 1};
  }
  const auto c2 = text.find(':', c1 + 1);
  if (c2 == std::string_view::npos) {
    throw UsageError(fmt::format("range '{}' must be min:max:steps", text));
  }
  Range r{parse_real(text.substr(0, c1), text),
          parse_real(text.substr(c1 + 1, c2 - c1 - 1), text), 0};
  const double steps = parse_real(text.substr(c2 + 1), text);
  if (steps != std::floor(steps)) {
    throw UsageError(fmt::format("range '{}': steps must be an integer", text));
  }
  r.steps = static_cast<int>(steps);
  return r;
}

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::pipeline: return "pipeline";
    case Mode::sweep: return "sweep-negativity-schmidt";
    case Mode::wigner: return "wigner";
    case Mode::qparam: return "qparam";
    case Mode::homodyne: return "homodyne";
  }
  return "?";
}

Mode parse_mode(std::string_view text) {
  for (Mode m : {Mode::pipeline, Mode::sweep, Mode::wigner, Mode::qparam,
                 Mode::homodyne}) {
    if (text == to_string(m)) return m;
  }
  if (text == "sweep") return Mode::sweep;
  throw UsageError(fmt::format("unknown mode '{}'", text));
}

const std::vector<std::string>& mode_symbols(Mode mode) {
  static const std::vector<std::string> beam = {"xi_r", "xi_i", "eta_r", "eta_i"};
  static const std::vector<std::string> q = {"alpha_abs", "phi"};
  static const std::vector<std::string> none;
  switch (mode) {
    case Mode::pipeline:
    case Mode::sweep: return beam;
    case Mode::qparam: return q;
    case Mode::wigner:
    case Mode::homodyne: return none;
  }
  return none;
}

StateKind parse_state_kind(std::string_view text) {
  if (text == "coherent") return StateKind::coherent;
  if (text == "quad" || text == "quad-superposition") return StateKind::quad_superposition;
  if (text == "psi3-x" || text == "psi3-reduced-x") return StateKind::psi3_reduced_x;
  if (text == "fock") return StateKind::fock;
  throw UsageError(fmt::format("unknown state selector '{}'", text));
}

std::string_view to_string(StateKind kind) {
  switch (kind) {
    case StateKind::coherent: return "coherent";
    case StateKind::quad_superposition: return "quad-superposition";
    case StateKind::psi3_reduced_x: return "psi3-reduced-x";
    case StateKind::fock: return "fock";
  }
  return "?";
}

double SweepConfig::fixed_value(const std::string& symbol) const {
  if (auto it = fixed.find(symbol); it != fixed.end()) return it->second;
  return 0.0;
}

std::vector<std::string> SweepConfig::swept_symbols() const {
  std::vector<std::string> out;
  for (const auto& s : mode_symbols(mode)) {
    if (axes.count(s)) out.push_back(s);
  }
  return out;
}

void SweepConfig::validate() const {
  const auto& allowed = mode_symbols(mode);
  auto check = [&](const std::string& s) {
    if (std::find(allowed.begin(), allowed.end(), s) == allowed.end()) {
      throw UsageError(
          fmt::format("symbol '{}' does not belong to mode '{}'", s, to_string(mode)));
    }
  };
  for (const auto& [s, r] : axes) {
    check(s);
    r.validate(s);
  }
  for (const auto& [s, v] : fixed) {
    check(s);
    if (axes.count(s)) {
      throw UsageError(fmt::format("symbol '{}' is both swept and fixed", s));
    }
  }
  if (cutoff && *cutoff < 2) throw UsageError("cutoff must be >= 2");
  if (resolution < 2) throw UsageError("resolution must be >= 2");
  if (!(half_width > 0.0)) throw UsageError("half_width must be positive");
  if (mode == Mode::homodyne && count == 0) throw UsageError("count must be positive");
}

SweepConfig config_from_json(const nlohmann::json& j) {
  SweepConfig c;
  try {
    c.mode = parse_mode(j.at("mode").get<std::string>());
    if (j.contains("axes")) {
      for (const auto& [s, r] : j.at("axes").items()) {
        c.axes[s] = Range{r.at("min").get<double>(), r.at("max").get<double>(),
                          r.at("steps").get<int>()};
      }
    }
    if (j.contains("fixed")) {
      for (const auto& [s, v] : j.at("fixed").items()) c.fixed[s] = v.get<double>();
    }
    if (j.contains("cutoff") && !j.at("cutoff").is_null()) {
      c.cutoff = j.at("cutoff").get<int>();
    }
    if (j.contains("tolerances")) {
      const auto& t = j.at("tolerances");
      c.tolerances.negativity = t.value("negativity", c.tolerances.negativity);
      c.tolerances.schmidt = t.value("schmidt", c.tolerances.schmidt);
      c.tolerances.mandel = t.value("mandel", c.tolerances.mandel);
      c.tolerances.fidelity = t.value("fidelity", c.tolerances.fidelity);
    }
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("output")) {
      const auto& o = j.at("output");
      if (o.contains("path")) c.output_path = o.at("path").get<std::string>();
      if (o.contains("format")) {
        const auto f = o.at("format").get<std::string>();
        if (f == "csv") c.format = Format::csv;
        else if (f == "json") c.format = Format::json;
        else throw UsageError(fmt::format("unknown format '{}'", f));
      }
    }
    if (j.contains("state")) {
      const auto& s = j.at("state");
      c.state.kind = parse_state_kind(s.at("kind").get<std::string>());
      if (s.contains("alpha")) c.state.alpha = parse_complex(s.at("alpha").get<std::string>());
      if (s.contains("xi")) c.state.xi = parse_complex(s.at("xi").get<std::string>());
      if (s.contains("eta")) c.state.eta = parse_complex(s.at("eta").get<std::string>());
      if (s.contains("n")) c.state.photons = s.at("n").get<int>();
    }
    if (j.contains("window")) {
      const auto& w = j.at("window");
      c.half_width = w.value("half_width", c.half_width);
      c.resolution = w.value("resolution", c.resolution);
    }
    c.lo_phase = j.value("lo_phase", c.lo_phase);
    c.count = j.value("count", c.count);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(fmt::format("invalid config: {}", e.what()));
  }
  c.validate();
  return c;
}

SweepConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError(fmt::format("cannot open config '{}'", path));
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(fmt::format("config '{}' is not valid JSON: {}", path, e.what()));
  }
  return config_from_json(j);
}

}  // namespace polconv::cli
