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

#include "cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "polconv/homodyne.hpp"
#include "polconv/optics.hpp"
#include "polconv/parallel.hpp"
#include "polconv/states.hpp"

namespace polconv::cli {

namespace {

// Above this per-mode cutoff the negativity comes from the Schmidt spectrum.
constexpr int kFullSpectrumMaxDim = 16;
constexpr double kWignerTolerance = 1e-6;
constexpr const char* kZeroIntensity = "zero intensity: Schmidt number undefined";

struct PointMetrics {
  ClosedFormPsi3 closed_form{};
  int cutoff = 0;
  double fidelity = 0.0;
  double negativity_closed = 0.0;
  double negativity_numeric = 0.0;
  std::string negativity_route;
  std::optional<SchmidtReport> schmidt;
  double mandel_numeric = 0.0;
  double mandel_closed = 0.0;
};

PointMetrics compute_point(const PipelineInput& input, std::optional<int> cutoff) {
  const FockCutoff fc = cutoff ? FockCutoff(*cutoff) : pipeline_cutoff(input);
  const PipelineResult res = run_pipeline(input, fc);
  PointMetrics m{};
  m.closed_form = res.closed_form;
  m.cutoff = fc.dim();
  m.fidelity = res.fidelity;
  m.negativity_closed = negativity_closed_form(res.closed_form.xi_r);
  if (fc.dim() <= kFullSpectrumMaxDim) {
    m.negativity_numeric =
        negativity_numeric(TwoModeDensityMatrix::from_pure(res.psi3));
    m.negativity_route = "partial-transpose";
  } else {
    m.negativity_numeric = negativity_pure(res.psi3);
    m.negativity_route = "schmidt-coefficients";
  }
  try {
    m.schmidt = schmidt_number(res.closed_form);
  } catch (const DegenerateInputError&) {
    m.schmidt.reset();
  }
  m.mandel_numeric = mandel_q(quad_superposition(input.xi, fc).state);
  m.mandel_closed = mandel_q_quad_superposition_closed(input.xi);
  return m;
}

Json complex_json(Complex z) {
  Json j = Json::object();
  j["re"] = json_number(z.real());
  j["im"] = json_number(z.imag());
  return j;
}

std::size_t grid_size(const std::vector<Range>& ranges) {
  std::size_t n = 1;
  for (const auto& r : ranges) n *= static_cast<std::size_t>(r.steps);
  return n;
}

// Row-major decomposition: the last axis varies fastest.
std::vector<double> grid_point(const std::vector<Range>& ranges, std::size_t index) {
  std::vector<double> v(ranges.size());
  for (std::size_t a = ranges.size(); a-- > 0;) {
    const auto steps = static_cast<std::size_t>(ranges[a].steps);
    v[a] = ranges[a].at(static_cast<int>(index % steps));
    index /= steps;
  }
  return v;
}

std::map<std::string, double> symbol_values(const SweepConfig& config,
                                            const std::vector<std::string>& swept,
                                            const std::vector<double>& point) {
  std::map<std::string, double> values;
  for (const auto& s : mode_symbols(config.mode)) values[s] = config.fixed_value(s);
  for (std::size_t k = 0; k < swept.size(); ++k) values[swept[k]] = point[k];
  return values;
}

std::vector<Range> swept_ranges(const SweepConfig& config,
                                const std::vector<std::string>& swept) {
  std::vector<Range> ranges;
  for (const auto& s : swept) ranges.push_back(config.axes.at(s));
  return ranges;
}

std::optional<double> closed_form_wigner(const StateSelector& sel, Complex z) {
  switch (sel.kind) {
    case StateKind::coherent:
      return 2.0 / std::numbers::pi * std::exp(-2.0 * std::norm(z - sel.alpha));
    case StateKind::quad_superposition:
      return wigner_closed_eq3(sel.alpha, z);
    case StateKind::psi3_reduced_x:
      return wigner_closed_eq8(ClosedFormPsi3::from_input({sel.xi, sel.eta}), z);
    case StateKind::fock:
      return std::nullopt;
  }
  return std::nullopt;
}

Json selector_json(const StateSelector& sel) {
  Json j = Json::object();
  j["kind"] = std::string(to_string(sel.kind));
  switch (sel.kind) {
    case StateKind::coherent:
    case StateKind::quad_superposition:
      j["alpha"] = format_complex(sel.alpha);
      break;
    case StateKind::psi3_reduced_x:
      j["xi"] = format_complex(sel.xi);
      j["eta"] = format_complex(sel.eta);
      break;
    case StateKind::fock:
      j["n"] = sel.photons;
      break;
  }
  return j;
}

std::string render(const Table& table, Format format) {
  return format == Format::json ? table.to_json().dump(2) + "\n" : table.to_csv();
}

}  // namespace

Json pipeline_report(const PipelineInput& input, std::optional<int> cutoff,
                     const Tolerances& tol, bool& over_tolerance) {
  const PointMetrics m = compute_point(input, cutoff);
  const ClosedFormPsi3& cf = m.closed_form;
  Json warnings = Json::array();

  Json j = Json::object();
  j["input"] = {{"xi", format_complex(input.xi)}, {"eta", format_complex(input.eta)}};
  j["cutoff"] = m.cutoff;
  j["closed_form"] = {{"mu_x", complex_json(cf.mu_x)},
                      {"mu_y", complex_json(cf.mu_y)},
                      {"xi_r", json_number(cf.xi_r)},
                      {"norm", json_number(cf.norm)},
                      {"r", json_number(cf.r)}};

  const double fid_delta = std::abs(1.0 - m.fidelity);
  j["pipeline_fidelity"] = {{"value", json_number(m.fidelity)},
                            {"delta", json_delta(fid_delta)}};

  const double neg_delta = std::abs(m.negativity_numeric - m.negativity_closed);
  j["negativity"] = {{"closed", json_number(m.negativity_closed)},
                     {"numeric", json_number(m.negativity_numeric)},
                     {"route", m.negativity_route},
                     {"delta", json_delta(neg_delta)}};

  double schmidt_delta = 0.0;
  if (m.schmidt) {
    const SchmidtReport& s = *m.schmidt;
    schmidt_delta = std::abs(s.k_closed - s.k_eigen);
    Json pol = Json::array();
    for (int r = 0; r < 2; ++r) {
      pol.push_back({json_number(s.polarization(r, 0)), json_number(s.polarization(r, 1))});
    }
    j["schmidt"] = {{"theta", json_number(s.theta)},
                    {"phi_x", json_number(s.phi_x)},
                    {"phi_y", json_number(s.phi_y)},
                    {"delta_phi", json_number(s.delta_phi)},
                    {"k_closed", json_number(s.k_closed)},
                    {"k_eigen", json_number(s.k_eigen)},
                    {"delta", json_delta(schmidt_delta)},
                    {"intensity", json_number(s.intensity)},
                    {"polarization", pol}};
  } else {
    j["schmidt"] = nullptr;
    warnings.push_back(kZeroIntensity);
  }

  const double mandel_delta = std::abs(m.mandel_numeric - m.mandel_closed);
  j["mandel_q"] = {{"numeric", json_number(m.mandel_numeric)},
                   {"closed", json_number(m.mandel_closed)},
                   {"delta", json_delta(mandel_delta)}};

  const FieldAmplitudes f = field_amplitudes(cf);
  j["field"] = {{"magnitude_x", json_number(f.magnitude_x)},
                {"phase_x", json_number(f.phase_x)},
                {"magnitude_y", json_number(f.magnitude_y)},
                {"phase_y", json_number(f.phase_y)},
                {"r", json_number(f.r)}};
  j["warnings"] = warnings;

  over_tolerance = fid_delta > tol.fidelity || neg_delta > tol.negativity ||
                   schmidt_delta > tol.schmidt || mandel_delta > tol.mandel;
  return j;
}

Table sweep_table(const SweepConfig& config, bool& over_tolerance) {
  const std::vector<std::string> swept = config.swept_symbols();
  const std::vector<Range> ranges = swept_ranges(config, swept);
  const std::size_t rows = grid_size(ranges);

  Table t;
  t.columns = swept;
  for (const char* c : {"negativity_closed", "negativity_numeric", "schmidt_k",
                        "mandel_q", "negativity_delta", "schmidt_delta",
                        "mandel_delta", "error"}) {
    t.columns.emplace_back(c);
  }
  t.rows.resize(rows);
  std::vector<char> over(rows, 0);

  parallel_for(rows, [&](std::size_t k) {
    const std::vector<double> point = grid_point(ranges, k);
    const auto v = symbol_values(config, swept, point);
    std::vector<Cell> row(point.begin(), point.end());
    const PipelineInput input{{v.at("xi_r"), v.at("xi_i")}, {v.at("eta_r"), v.at("eta_i")}};
    try {
      const PointMetrics m = compute_point(input, config.cutoff);
      const double nd = std::abs(m.negativity_numeric - m.negativity_closed);
      const double md = std::abs(m.mandel_numeric - m.mandel_closed);
      const double sd =
          m.schmidt ? std::abs(m.schmidt->k_closed - m.schmidt->k_eigen) : 0.0;
      const Cell k_cell = m.schmidt ? Cell{m.schmidt->k_closed} : Cell{};
      const Cell sd_cell = m.schmidt ? Cell{sd} : Cell{};
      const Cell error = m.schmidt ? Cell{} : Cell{std::string(kZeroIntensity)};
      row.insert(row.end(), {Cell{m.negativity_closed}, Cell{m.negativity_numeric},
                             k_cell, Cell{m.mandel_numeric}, Cell{nd}, sd_cell,
                             Cell{md}, error});
      over[k] = nd > config.tolerances.negativity || sd > config.tolerances.schmidt ||
                md > config.tolerances.mandel;
    } catch (const TruncationError& e) {
      row.resize(t.columns.size() - 1);
      row.emplace_back(std::string("truncation: ") + e.what());
    } catch (const std::exception& e) {
      row.resize(t.columns.size() - 1);
      row.emplace_back(std::string(e.what()));
    }
    t.rows[k] = std::move(row);
  });

  over_tolerance = std::any_of(over.begin(), over.end(), [](char c) { return c != 0; });
  return t;
}

DensityMatrix select_density(const StateSelector& sel, std::optional<int> cutoff) {
  switch (sel.kind) {
    case StateKind::coherent: {
      const FockCutoff fc = cutoff ? FockCutoff(*cutoff)
                                   : FockCutoff::for_displacement(std::abs(sel.alpha));
      return DensityMatrix::from_pure(coherent(sel.alpha, fc));
    }
    case StateKind::quad_superposition: {
      const FockCutoff fc = cutoff ? FockCutoff(*cutoff)
                                   : FockCutoff::for_displacement(std::abs(sel.alpha));
      return DensityMatrix::from_pure(quad_superposition(sel.alpha, fc).state);
    }
    case StateKind::psi3_reduced_x: {
      std::optional<FockCutoff> fc;
      if (cutoff) fc = FockCutoff(*cutoff);
      return reduced_x(run_pipeline({sel.xi, sel.eta}, fc).psi3);
    }
    case StateKind::fock: {
      if (sel.photons < 0) throw UsageError("fock: n must be non-negative");
      const int dim = cutoff ? *cutoff : sel.photons + 3;
      if (sel.photons >= dim) throw UsageError("fock: n lies outside the cutoff");
      CVector c = CVector::Zero(dim);
      c(sel.photons) = 1.0;
      return DensityMatrix::from_pure(TruncatedState::single_mode(std::move(c)));
    }
  }
  throw UsageError("unknown state selector");
}

Complex selector_center(const StateSelector& sel) {
  switch (sel.kind) {
    case StateKind::coherent:
    case StateKind::quad_superposition:
      return sel.alpha;
    case StateKind::psi3_reduced_x:
      return ClosedFormPsi3::from_input({sel.xi, sel.eta}).mu_x;
    case StateKind::fock:
      return {0.0, 0.0};
  }
  return {0.0, 0.0};
}

WignerOutput wigner_output(const SweepConfig& config) {
  const DensityMatrix rho = select_density(config.state, config.cutoff);
  const GridSpec spec =
      GridSpec::centered(selector_center(config.state), config.half_width, config.resolution);
  WignerOutput out{wigner_numeric(rho, spec), std::nullopt};
  if (closed_form_wigner(config.state, spec.point(0, 0))) {
    double dev = 0.0;
    for (int j = 0; j < spec.x2_points; ++j) {
      for (int i = 0; i < spec.x1_points; ++i) {
        const double w = *closed_form_wigner(config.state, spec.point(i, j));
        dev = std::max(dev, std::abs(out.grid.values(j, i) - w));
      }
    }
    out.closed_form_deviation = dev;
  }
  return out;
}

std::string wigner_csv(const WignerGrid& g) {
  std::string out = "x2\\x1";
  for (int i = 0; i < g.grid.x1_points; ++i) out += "," + format_number(g.grid.x1(i));
  out += '\n';
  for (int j = 0; j < g.grid.x2_points; ++j) {
    out += format_number(g.grid.x2(j));
    for (int i = 0; i < g.grid.x1_points; ++i) out += "," + format_number(g.values(j, i));
    out += '\n';
  }
  return out;
}

std::string wigner_pgm(const WignerGrid& g) {
  const int w = g.grid.x1_points;
  const int h = g.grid.x2_points;
  std::string out = fmt::format("P5\n{} {}\n255\n", w, h);
  const double lo = g.min();
  const double span = std::max(g.max() - lo, 1e-300);
  for (int j = h; j-- > 0;) {
    for (int i = 0; i < w; ++i) {
      out.push_back(static_cast<char>(
          static_cast<unsigned char>(std::lround(255.0 * (g.values(j, i) - lo) / span))));
    }
  }
  return out;
}

Table qparam_table(const SweepConfig& config, bool& over_tolerance) {
  const std::vector<std::string> swept = config.swept_symbols();
  const std::vector<Range> ranges = swept_ranges(config, swept);
  const std::size_t rows = grid_size(ranges);

  Table t;
  t.columns = {"abs_alpha", "phi", "mandel_q", "mandel_q_closed", "delta", "error"};
  t.rows.resize(rows);
  std::vector<char> over(rows, 0);

  parallel_for(rows, [&](std::size_t k) {
    const auto v = symbol_values(config, swept, grid_point(ranges, k));
    const double mag = v.at("alpha_abs");
    const double phi = v.at("phi");
    std::vector<Cell> row{mag, phi};
    try {
      const Complex alpha = std::polar(mag, phi);
      const FockCutoff fc =
          config.cutoff ? FockCutoff(*config.cutoff) : FockCutoff::for_displacement(mag);
      const double q = mandel_q(quad_superposition(alpha, fc).state);
      const double qc = mandel_q_quad_superposition_closed(alpha);
      const double d = std::abs(q - qc);
      row.insert(row.end(), {Cell{q}, Cell{qc}, Cell{d}, Cell{}});
      over[k] = d > config.tolerances.mandel;
    } catch (const std::exception& e) {
      row.insert(row.end(), {Cell{}, Cell{}, Cell{}, Cell{std::string(e.what())}});
    }
    t.rows[k] = std::move(row);
  });

  over_tolerance = std::any_of(over.begin(), over.end(), [](char c) { return c != 0; });
  return t;
}

Json homodyne_report(const SweepConfig& config, bool& pass) {
  if (config.count == 0) throw UsageError("count must be positive");
  const DensityMatrix rho = select_density(config.state, config.cutoff);
  const QuadratureMarginal marginal =
      quadrature_marginal(rho, config.lo_phase, QuadratureGrid::covering(rho));
  const SampleBatch batch = sample(marginal, config.seed, config.count);
  const MomentReport rep = validate_moments(batch, rho);
  pass = rep.pass;

  Json j = Json::object();
  j["state"] = selector_json(config.state);
  j["cutoff"] = rho.dim();
  j["lo_phase"] = json_number(config.lo_phase);
  j["seed"] = config.seed;
  j["count"] = config.count;
  j["marginal"] = {{"x_min", json_number(marginal.grid.x_min)},
                   {"x_max", json_number(marginal.grid.x_max)},
                   {"points", marginal.grid.points},
                   {"mean", json_number(marginal.mean())},
                   {"normalization_defect", json_delta(marginal.normalization_defect)}};
  j["moments"] = {{"sample_mean", json_number(rep.sample_mean)},
                  {"analytic_mean", json_number(rep.analytic_mean)},
                  {"mean_delta", json_delta(std::abs(rep.sample_mean - rep.analytic_mean))},
                  {"z_mean", json_number(rep.z_mean)},
                  {"sample_variance", json_number(rep.sample_variance)},
                  {"analytic_variance", json_number(rep.analytic_variance)},
                  {"variance_delta",
                   json_delta(std::abs(rep.sample_variance - rep.analytic_variance))},
                  {"z_variance", json_number(rep.z_variance)}};
  j["pass"] = rep.pass;
  return j;
}

CommandResult run_command(const SweepConfig& config, bool strict,
                          const std::optional<std::string>& image_path) {
  config.validate();
  CommandResult res;
  bool over = false;
  switch (config.mode) {
    case Mode::pipeline: {
      const PipelineInput input{{config.fixed_value("xi_r"), config.fixed_value("xi_i")},
                                {config.fixed_value("eta_r"), config.fixed_value("eta_i")}};
      const Json j = pipeline_report(input, config.cutoff, config.tolerances, over);
      for (const auto& w : j.at("warnings")) res.messages.push_back(w.get<std::string>());
      res.output = config.format.value_or(Format::json) == Format::csv
                       ? flatten(j).to_csv()
                       : j.dump(2) + "\n";
      break;
    }
    case Mode::sweep: {
      const Table t = sweep_table(config, over);
      const bool truncated = std::any_of(t.rows.begin(), t.rows.end(), [](const auto& r) {
        const auto* e = std::get_if<std::string>(&r.back());
        return e && e->rfind("truncation: ", 0) == 0;
      });
      if (truncated) {
        res.messages.emplace_back("some grid points are truncation-unsafe");
        res.exit_code = kExitTruncation;
      }
      res.output = render(t, config.format.value_or(Format::csv));
      break;
    }
    case Mode::wigner: {
      const WignerOutput w = wigner_output(config);
      res.messages.push_back(fmt::format("min={} max={} integral={}",
                                         format_number(w.grid.min()),
                                         format_number(w.grid.max()),
                                         format_number(w.grid.integral())));
      if (w.closed_form_deviation) over = *w.closed_form_deviation > kWignerTolerance;
      if (config.format.value_or(Format::csv) == Format::json) {
        const GridSpec& g = w.grid.grid;
        Json x1 = Json::array();
        Json x2 = Json::array();
        for (int i = 0; i < g.x1_points; ++i) x1.push_back(json_number(g.x1(i)));
        for (int k = 0; k < g.x2_points; ++k) x2.push_back(json_number(g.x2(k)));
        Json values = Json::array();
        for (int k = 0; k < g.x2_points; ++k) {
          Json row = Json::array();
          for (int i = 0; i < g.x1_points; ++i) row.push_back(json_number(w.grid.values(k, i)));
          values.push_back(std::move(row));
        }
        Json j = Json::object();
        j["state"] = selector_json(config.state);
        j["summary"] = {{"min", json_number(w.grid.min())},
                        {"max", json_number(w.grid.max())},
                        {"integral", json_number(w.grid.integral())},
                        {"closed_form_delta", w.closed_form_deviation
                                                  ? json_delta(*w.closed_form_deviation)
                                                  : Json(nullptr)}};
        j["x1"] = x1;
        j["x2"] = x2;
        j["values"] = values;
        res.output = j.dump(2) + "\n";
      } else {
        res.output = wigner_csv(w.grid);
      }
      if (image_path) {
        std::ofstream img(*image_path, std::ios::binary);
        if (!img) throw UsageError(fmt::format("cannot write image '{}'", *image_path));
        img << wigner_pgm(w.grid);
      }
      break;
    }
    case Mode::qparam: {
      const Table t = qparam_table(config, over);
      res.output = render(t, config.format.value_or(Format::csv));
      break;
    }
    case Mode::homodyne: {
      bool pass = false;
      const Json j = homodyne_report(config, pass);
      res.output = config.format.value_or(Format::json) == Format::csv
                       ? flatten(j).to_csv()
                       : j.dump(2) + "\n";
      if (!pass) {
        res.messages.emplace_back("moment validation failed");
        res.exit_code = kExitValidation;
      }
      break;
    }
  }
  if (strict && over && res.exit_code == kExitOk) {
    res.messages.emplace_back("a delta exceeds its tolerance");
    res.exit_code = kExitValidation;
  }
  return res;
}

namespace {

struct Flags {
  std::optional<std::string> config;
  std::optional<std::string> out;
  std::optional<std::string> format;
  std::optional<int> cutoff;
  std::optional<std::uint64_t> seed;
  bool strict = false;

  std::optional<std::string> xi, eta, xi_r, xi_i, eta_r, eta_i;
  std::optional<std::string> abs, phi;
  std::optional<std::string> state, alpha;
  std::optional<int> n;
  std::optional<double> half_width;
  std::optional<int> resolution;
  std::optional<double> theta;
  std::optional<std::int64_t> count;
  std::optional<std::string> image;
};

void set_symbol(SweepConfig& c, const std::string& symbol, const std::string& text) {
  const Range r = parse_range(text);
  c.axes.erase(symbol);
  c.fixed.erase(symbol);
  if (text.find(':') == std::string::npos) c.fixed[symbol] = r.min;
  else c.axes[symbol] = r;
}

void set_complex(SweepConfig& c, const std::string& re, const std::string& im,
                 const std::string& text) {
  const Complex z = parse_complex(text);
  for (const auto& s : {re, im}) c.axes.erase(s);
  c.fixed[re] = z.real();
  c.fixed[im] = z.imag();
}

SweepConfig build_config(Mode mode, const Flags& f) {
  SweepConfig c;
  if (f.config) {
    c = load_config(*f.config);
    if (c.mode != mode) {
      throw UsageError(fmt::format("config mode '{}' does not match subcommand '{}'",
                                   to_string(c.mode), to_string(mode)));
    }
  } else {
    c.mode = mode;
    if (mode == Mode::qparam) {
      c.axes["alpha_abs"] = Range{0.0, 5.0, 11};
      c.axes["phi"] = Range{0.0, std::numbers::pi, 5};
    }
  }
  if (f.out) c.output_path = *f.out;
  if (f.format) {
    if (*f.format == "csv") c.format = Format::csv;
    else if (*f.format == "json") c.format = Format::json;
    else throw UsageError(fmt::format("unknown format '{}'", *f.format));
  }
  if (f.cutoff) c.cutoff = *f.cutoff;
  if (f.seed) c.seed = *f.seed;

  if (f.xi) set_complex(c, "xi_r", "xi_i", *f.xi);
  if (f.eta) set_complex(c, "eta_r", "eta_i", *f.eta);
  if (f.xi_r) set_symbol(c, "xi_r", *f.xi_r);
  if (f.xi_i) set_symbol(c, "xi_i", *f.xi_i);
  if (f.eta_r) set_symbol(c, "eta_r", *f.eta_r);
  if (f.eta_i) set_symbol(c, "eta_i", *f.eta_i);
  if (f.abs) set_symbol(c, "alpha_abs", *f.abs);
  if (f.phi) set_symbol(c, "phi", *f.phi);

  if (f.state) c.state.kind = parse_state_kind(*f.state);
  if (f.alpha) c.state.alpha = parse_complex(*f.alpha);
  if (mode == Mode::wigner || mode == Mode::homodyne) {
    if (f.xi) c.state.xi = parse_complex(*f.xi);
    if (f.eta) c.state.eta = parse_complex(*f.eta);
    c.fixed.clear();
  }
  if (f.n) c.state.photons = *f.n;
  if (f.half_width) c.half_width = *f.half_width;
  if (f.resolution) c.resolution = *f.resolution;
  if (f.theta) c.lo_phase = *f.theta;
  if (f.count) {
    if (*f.count <= 0) throw UsageError("count must be positive");
    c.count = static_cast<std::uint64_t>(*f.count);
  }
  c.validate();
  return c;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polarization-conversion simulator", "polconv"};
  app.require_subcommand(1);
  Flags f;
  app.add_option("--config", f.config, "JSON configuration file");
  app.add_option("--out", f.out, "Output file (default stdout)");
  app.add_option("--format", f.format, "csv or json");
  app.add_option("--cutoff", f.cutoff, "Fock cutoff per mode");
  app.add_option("--seed", f.seed, "Random seed");
  app.add_flag("--strict", f.strict, "Exit 4 when a delta exceeds its tolerance");

  struct Sub {
    Mode mode;
    CLI::App* app;
  };
  std::vector<Sub> subs;
  auto add = [&](const char* name, Mode mode, const char* help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->fallthrough();
    subs.push_back({mode, s});
    return s;
  };

  CLI::App* pipe = add("pipeline", Mode::pipeline, "Run one (xi, eta) point end to end");
  pipe->add_option("--xi", f.xi, "x displacement, a+bi");
  pipe->add_option("--eta", f.eta, "y displacement, a+bi");

  CLI::App* sweep = add("sweep", Mode::sweep, "Negativity and Schmidt-number sweep");
  sweep->add_option("--xi", f.xi, "Fixed x displacement, a+bi");
  sweep->add_option("--eta", f.eta, "Fixed y displacement, a+bi");
  sweep->add_option("--xi-r", f.xi_r, "Value or min:max:steps");
  sweep->add_option("--xi-i", f.xi_i, "Value or min:max:steps");
  sweep->add_option("--eta-r", f.eta_r, "Value or min:max:steps");
  sweep->add_option("--eta-i", f.eta_i, "Value or min:max:steps");

  CLI::App* wig = add("wigner", Mode::wigner, "Wigner function on a square window");
  CLI::App* q = add("qparam", Mode::qparam, "Mandel Q of the quadrature superposition");
  q->add_option("--abs", f.abs, "|alpha| value or min:max:steps");
  q->add_option("--phi", f.phi, "phase value or min:max:steps");
  CLI::App* hom = add("homodyne", Mode::homodyne, "Simulated homodyne detection");

  for (CLI::App* s : {wig, hom}) {
    s->add_option("--state", f.state, "coherent | quad | psi3-x | fock");
    s->add_option("--alpha", f.alpha, "Displacement for coherent and quad, a+bi");
    s->add_option("--xi", f.xi, "psi3-x: x displacement, a+bi");
    s->add_option("--eta", f.eta, "psi3-x: y displacement, a+bi");
    s->add_option("--n", f.n, "fock: photon number");
  }
  wig->add_option("--half-width", f.half_width, "Half width of the window");
  wig->add_option("--resolution", f.resolution, "Points per axis");
  wig->add_option("--image", f.image, "Also write a PGM heatmap");
  hom->add_option("--theta", f.theta, "Local-oscillator phase");
  hom->add_option("--count", f.count, "Number of samples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    const auto it = std::find_if(subs.begin(), subs.end(),
                                 [](const Sub& s) { return s.app->parsed(); });
    const SweepConfig config = build_config(it->mode, f);
    const CommandResult res = run_command(config, f.strict, f.image);
    if (config.output_path) {
      std::ofstream file(*config.output_path, std::ios::binary);
      if (!file) {
        err << "error: cannot write '" << *config.output_path << "'\n";
        return kExitUsage;
      }
      file << res.output;
    } else {
      out << res.output;
    }
    for (const auto& m : res.messages) err << m << "\n";
    return res.exit_code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const TruncationError& e) {
    err << "truncation error: " << e.what() << "\n";
    return kExitTruncation;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace polconv::cli
