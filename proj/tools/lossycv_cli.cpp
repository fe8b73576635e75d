// Copyright 2026 The lossycv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// lossycv: run, sweep and verify the lossy-channel entanglement models.
//
//   lossycv run asymmetric --epsilon 0.3 --r 2 --t 1
//   lossycv sweep --scheme symmetric --envelope
//   lossycv verify --only riccati

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "lossycv/acceptance.hpp"
#include "lossycv/adjudication.hpp"
#include "lossycv/asymmetric.hpp"
#include "lossycv/csv.hpp"
#include "lossycv/epr.hpp"
#include "lossycv/polygamy.hpp"
#include "lossycv/sweep.hpp"
#include "lossycv/symmetric.hpp"
#include "lossycv/teleport.hpp"

namespace {

using namespace lossycv;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Flags {
  double epsilon = 0.0;
  double r = 1.0;
  double kappa2 = 1.0;
  double tau = kDefaultKappa2Tau;
  double t = 1.0;
  std::string out = "-";
  std::string scheme;
  std::string grid_eps = "0.01:0.99:50";
  std::string grid_r = "0.1:10:50";
  int m_sites = 2;
  long samples = 100;
  unsigned jobs = 0;
  std::string basis = "flipped-vacuum";
  std::string order = "strang";
  double asymptotic_time = 0.0;
  bool envelope = false;
  bool richardson = false;
  std::string only;
  bool adjudicate = false;

  CLI::Option* t_opt = nullptr;
  CLI::Option* asymptotic_opt = nullptr;
};

Scheme resolve_scheme(const std::string& positional, const std::string& flag,
                      std::optional<Scheme> fallback) {
  if (!positional.empty() && !flag.empty() && positional != flag) {
    throw UsageError("scheme given twice: '" + positional + "' and --scheme '" +
                     flag + "'");
  }
  const std::string name = positional.empty() ? flag : positional;
  if (name.empty()) {
    if (fallback) return *fallback;
    throw UsageError("a scheme is required (asymmetric, symmetric, epr, "
                     "polygamy)");
  }
  const auto scheme = parse_scheme(name);
  if (!scheme) throw UsageError("--scheme: unknown scheme '" + name + "'");
  return *scheme;
}

LightBasis resolve_basis(const std::string& name) {
  if (name == "flipped-vacuum") return LightBasis::kFlippedVacuumPort;
  if (name == "direct") return LightBasis::kDirect;
  throw UsageError("--basis must be flipped-vacuum or direct, got '" + name +
                   "'");
}

ChannelParams channel_params(const Flags& f) {
  if (!(f.epsilon >= 0.0 && f.epsilon < 1.0)) {
    throw UsageError("--epsilon must lie in [0, 1)");
  }
  if (!(f.r > 0.0)) throw UsageError("--r must be positive");
  if (!(f.kappa2 > 0.0)) throw UsageError("--kappa2 must be positive");
  if (!(f.tau > 0.0)) throw UsageError("--tau must be positive");
  if (!(f.t >= 0.0)) throw UsageError("--t must be non-negative");
  if (f.samples < 1) throw UsageError("--samples must be at least 1");
  // tau is given in units of 1 / kappa2.
  return {f.epsilon, f.r, f.kappa2, f.tau / f.kappa2, f.t};
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-" || path == "stdout") {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("--out: cannot open '" + path + "'");
  file << text;
}

std::vector<double> summary_values(double t, const TwoModeSummary& s) {
  return {t, s.v_x1, s.v_p1, s.v_x2, s.v_p2, s.c_x, s.c_p, s.n,
          s.log_negativity, s.epr.delta, s.epr.x_half, s.epr.p_half};
}

const std::vector<std::string> kSummaryHeader{
    "t", "v_x1", "v_p1", "v_x2", "v_p2", "c_x", "c_p", "N",
    "log_negativity", "delta", "delta_x", "delta_p"};

std::string run_asymmetric_csv(const Flags& f) {
  const ChannelParams p = channel_params(f);
  RunOptions options;
  options.samples = f.samples;
  options.basis = resolve_basis(f.basis);
  auto header = kSummaryHeader;
  header.insert(header.end(), {"N_closed_form", "F_bk_opt"});
  CsvTable table(header);
  for (const auto& pt : run_asymmetric(p, options)) {
    auto row = summary_values(pt.t, pt.summary);
    row.push_back(
        analytic_asymmetric_covariance(p, pt.t, options.basis).n);
    row.push_back(fidelity_report(pt.summary.gamma12).f_opt);
    table.add_row(row);
  }
  return table.str();
}

std::string run_symmetric_csv(const Flags& f) {
  const ChannelParams p = channel_params(f);
  SymmetricOptions options;
  options.samples = f.samples;
  options.basis = resolve_basis(f.basis);
  if (f.order == "strang") {
    options.order = SubstepOrder::kStrang;
  } else if (f.order == "sequential") {
    options.order = SubstepOrder::kSequential;
  } else {
    throw UsageError("--order must be strang or sequential, got '" + f.order +
                     "'");
  }
  const Trajectory run = run_symmetric(p, options);
  std::vector<DeltaSample> extrapolated;
  if (f.richardson) extrapolated = run_symmetric_richardson(p, options);
  std::vector<std::string> header{"t", "delta", "delta_closed_form",
                                  "delta_x", "delta_p", "N", "log_negativity",
                                  "F_symmetric"};
  if (f.richardson) header.push_back("delta_richardson");
  CsvTable table(header);
  const RiccatiCoeffs c = riccati_coeffs(p.epsilon, p.r, p.kappa2);
  for (std::size_t i = 0; i < run.size(); ++i) {
    const auto& s = run[i].summary;
    std::vector<double> row{run[i].t, s.epr.delta,
                            delta_closed_form(c, run[i].t), s.epr.x_half,
                            s.epr.p_half, s.n, s.log_negativity,
                            fidelity_symmetric(s.epr.delta)};
    if (f.richardson) row.push_back(extrapolated[i].delta);
    table.add_row(row);
  }
  return table.str();
}

std::string run_epr_csv(const Flags& f) {
  const ChannelParams p = channel_params(f);
  const EprSourceDelta d = epr_source_delta(p.epsilon, p.r);
  const TwoModeSummary s = summarize(two_mode_block(
      lossy_epr_state(p.epsilon, p.r), ModeLabel::atom1(), ModeLabel::atom2()));
  CsvTable table({"epsilon", "r", "delta", "infinite_squeezing_bound",
                  "delta_state", "N", "log_negativity", "F_symmetric"});
  table.add_row({p.epsilon, p.r, d.delta, d.infinite_squeezing_bound,
                 s.epr.delta, s.n, s.log_negativity,
                 fidelity_symmetric(d.delta)});
  return table.str();
}

std::string run_polygamy_csv(const Flags& f) {
  if (f.m_sites < 2) throw UsageError("--m-sites must be at least 2");
  const ChannelParams p = channel_params(f);
  PolygamyOptions options;
  options.samples = f.samples;
  options.basis = resolve_basis(f.basis);
  const PolygamyResult res = run_polygamy(f.m_sites, p, options);
  std::vector<std::string> header{"receiver", "epsilon_eff"};
  header.insert(header.end(), kSummaryHeader.begin(), kSummaryHeader.end());
  header.insert(header.end(), {"F_bk_opt", "clone_bound"});
  CsvTable table(header);
  for (const auto& pair : res.pairs) {
    for (const auto& pt : pair.trajectory) {
      std::vector<double> row{static_cast<double>(pair.receiver),
                              res.effective_epsilon};
      const auto values = summary_values(pt.t, pt.summary);
      row.insert(row.end(), values.begin(), values.end());
      row.push_back(fidelity_report(pt.summary.gamma12).f_opt);
      row.push_back(clone_bound(f.m_sites));
      table.add_row(row);
    }
  }
  return table.str();
}

int cmd_run(const Flags& f, const std::string& positional) {
  const Scheme scheme = resolve_scheme(positional, f.scheme, std::nullopt);
  std::string csv;
  switch (scheme) {
    case Scheme::kAsymmetric: csv = run_asymmetric_csv(f); break;
    case Scheme::kSymmetric: csv = run_symmetric_csv(f); break;
    case Scheme::kEpr: csv = run_epr_csv(f); break;
    case Scheme::kPolygamy: csv = run_polygamy_csv(f); break;
  }
  write_output(f.out, csv);
  return 0;
}

int cmd_sweep(const Flags& f, const std::string& positional) {
  SweepConfig config;
  config.scheme = resolve_scheme(positional, f.scheme, Scheme::kAsymmetric);
  try {
    config.epsilon = parse_grid_axis(f.grid_eps, false);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--grid-eps: ") + e.what());
  }
  try {
    config.r = parse_grid_axis(f.grid_r, true);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--grid-r: ") + e.what());
  }
  if (config.epsilon.lo < 0.0 || config.epsilon.hi >= 1.0) {
    throw UsageError("--grid-eps must lie in [0, 1)");
  }
  if (!(f.kappa2 > 0.0)) throw UsageError("--kappa2 must be positive");
  if (f.m_sites < 2) throw UsageError("--m-sites must be at least 2");
  config.kappa2 = f.kappa2;
  if (f.t_opt->count() > 0) {
    if (!(f.t >= 0.0)) throw UsageError("--t must be non-negative");
    config.t = f.t;
  }
  if (f.asymptotic_opt->count() > 0) {
    if (!(f.asymptotic_time > 0.0)) {
      throw UsageError("--asymptotic-time must be positive");
    }
    config.asymptotic_time = f.asymptotic_time;
  }
  config.envelope = f.envelope;
  config.m_sites = f.m_sites;
  config.jobs = f.jobs;
  write_output(f.out, emit_records(run_sweep(config)));
  return 0;
}

int cmd_verify(const Flags& f) {
  bool any = false;
  bool all_passed = true;
  for (const auto& criterion : acceptance_criteria()) {
    if (!criterion_selected(criterion, f.only)) continue;
    any = true;
    const CriterionResult result = run_criterion(criterion);
    std::cout << summary_line(result) << "\n" << format_rows(result) << "\n";
    all_passed = all_passed && result.passed();
  }
  if (!any) throw UsageError("--only '" + f.only + "' selects no criteria");
  if (f.adjudicate) std::cout << format_report(adjudicate());
  std::cout << (all_passed ? "all selected checks passed\n"
                           : "some checks FAILED\n");
  return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement of remote atomic gases over a lossy channel",
               "lossycv"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "File of 'key = value' lines (flags win)");

  Flags f;
  app.add_option("--epsilon", f.epsilon, "Channel intensity loss in [0, 1)")
      ->capture_default_str();
  app.add_option("--r", f.r, "Probe squeezing, covariance diag(1/r, r)")
      ->capture_default_str();
  app.add_option("--kappa2", f.kappa2, "Coupling rate")->capture_default_str();
  app.add_option("--tau", f.tau, "Segment length in units of 1/kappa2")
      ->capture_default_str();
  f.t_opt = app.add_option("--t", f.t, "Final time (run) or evaluation "
                                       "time (sweep)")
                ->capture_default_str();
  app.add_option("--out", f.out, "Output path or - for stdout")
      ->capture_default_str();
  app.add_option("--scheme", f.scheme,
                 "asymmetric, symmetric, epr or polygamy");
  app.add_option("--grid-eps", f.grid_eps, "Loss grid lo:hi:n")
      ->capture_default_str();
  app.add_option("--grid-r", f.grid_r, "Log-spaced squeezing grid lo:hi:n")
      ->capture_default_str();
  app.add_option("--m-sites", f.m_sites, "Receivers in the polygamy scheme")
      ->capture_default_str();
  app.add_option("--samples", f.samples, "Sampling intervals per run")
      ->capture_default_str();
  app.add_option("--jobs", f.jobs, "Sweep worker threads (0 = all cores)")
      ->capture_default_str();
  app.add_option("--basis", f.basis, "Probe basis: flipped-vacuum or direct")
      ->capture_default_str();
  app.add_option("--order", f.order,
                 "Two-way segment order: strang or sequential")
      ->capture_default_str();
  f.asymptotic_opt = app.add_option(
      "--asymptotic-time", f.asymptotic_time,
      "Sweep: evaluate limits at this kappa2 t instead of closed forms");
  app.add_flag("--envelope", f.envelope, "Sweep: optimal N over r per epsilon");
  app.add_flag("--richardson", f.richardson,
               "Run symmetric: add an extrapolated Delta column");

  std::string run_scheme;
  auto* run = app.add_subcommand("run", "Stepped simulation time series");
  run->add_option("scheme", run_scheme, "Scheme to simulate");

  std::string sweep_scheme;
  auto* sweep = app.add_subcommand("sweep", "Analytic grid over (eps, r)");
  sweep->add_option("scheme", sweep_scheme, "Scheme to sweep");

  auto* verify = app.add_subcommand("verify", "Run the acceptance checks");
  verify->add_option("--only", f.only, "Comma list of criterion numbers, "
                                       "ids or tags");
  verify->add_flag("--adjudicate", f.adjudicate,
                   "Print the teleportation formula verdict tables");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (run->parsed()) return cmd_run(f, run_scheme);
    if (sweep->parsed()) return cmd_sweep(f, sweep_scheme);
    return cmd_verify(f);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
