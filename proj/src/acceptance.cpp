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

#include "lossycv/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>

#include "lossycv/adjudication.hpp"
#include "lossycv/asymmetric.hpp"
#include "lossycv/csv.hpp"
#include "lossycv/entanglement.hpp"
#include "lossycv/epr.hpp"
#include "lossycv/polygamy.hpp"
#include "lossycv/sweep.hpp"
#include "lossycv/symmetric.hpp"
#include "lossycv/teleport.hpp"

namespace lossycv {
namespace {

const std::vector<double> kGridEps{0.0, 0.3, 0.7};
const std::vector<double> kGridR{0.5, 1.0, 2.0, 10.0};

std::string num(double v, const char* spec = "%.6g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::string point(double eps, double r) {
  return "eps=" + num(eps) + " r=" + num(r);
}

double rel_err(double got, double want) {
  return want == 0.0 ? std::abs(got) : std::abs(got - want) / std::abs(want);
}

CheckRow within(std::string check, double expected, double got, double tol,
                bool relative) {
  const double err =
      relative ? rel_err(got, expected) : std::abs(got - expected);
  return {std::move(check), num(expected, "%.10g"), num(got, "%.10g"),
          (relative ? "rel " : "abs ") + num(tol, "%.0e"), err <= tol};
}

CheckRow at_most(std::string check, double bound, double got,
                 const std::string& tol_text) {
  return {std::move(check), "<= " + num(bound, "%.10g"), num(got, "%.10g"),
          tol_text, got <= bound};
}

const TrajectoryPoint& nearest(const Trajectory& run, double t) {
  return *std::min_element(run.begin(), run.end(), [&](const auto& a,
                                                       const auto& b) {
    return std::abs(a.t - t) < std::abs(b.t - t);
  });
}

double max_entry_rel_err(const Eigen::Matrix4d& got,
                         const Eigen::Matrix4d& want) {
  double worst = 0.0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (want(i, j) == 0.0 && std::abs(got(i, j)) < 1e-12) continue;
      worst = std::max(worst, rel_err(got(i, j), want(i, j)));
    }
  }
  return worst;
}

// Criterion 1
std::vector<CheckRow> asymmetric_oracle() {
  std::vector<CheckRow> rows;
  for (double eps : kGridEps) {
    for (double r : kGridR) {
      RunOptions options;
      options.samples = 10;
      const Trajectory run = run_asymmetric({eps, r, 1.0, 1e-4, 5.0}, options);
      double worst = 0.0;
      for (double t : {0.5, 1.0, 5.0}) {
        const auto& p = nearest(run, t);
        worst = std::max(worst,
                         max_entry_rel_err(p.summary.gamma12,
                                           analytic_asymmetric_gamma(
                                               eps, r, 1.0, p.t)));
      }
      rows.push_back(at_most(point(eps, r) +
                                 " max entrywise rel err, kappa2 t in "
                                 "{0.5,1,5}",
                             1e-3, worst, "rel 1e-3"));
    }
  }
  return rows;
}

// Criterion 2
std::vector<CheckRow> symmetric_oracle() {
  std::vector<CheckRow> rows;
  for (double eps : kGridEps) {
    for (double r : kGridR) {
      SymmetricOptions options;
      options.samples = 50;
      const Trajectory run = run_symmetric({eps, r, 1.0, 1e-4, 5.0}, options);
      const RiccatiCoeffs c = riccati_coeffs(eps, r, 1.0);
      double worst = 0.0;
      for (const auto& p : run) {
        worst = std::max(worst, rel_err(p.summary.epr.delta,
                                         delta_closed_form(c, p.t)));
      }
      rows.push_back(at_most(point(eps, r) +
                                 " Delta(t) max rel err over kappa2 t in [0,5]",
                             1e-3, worst, "rel 1e-3"));
    }
  }
  for (double eps : kGridEps) {
    for (double r : kGridR) {
      const RiccatiCoeffs c = riccati_coeffs(eps, r, 1.0);
      const double ss = delta_steady_state(eps, r);
      const double root = std::sqrt(c.a * c.b);
      // Long enough for the closed form to sit within 1e-5 of its limit.
      const double t_end = ss > 0.0 ? std::max(5.0, std::log(1e6) / root)
                                    : (1.0 / 5e-4 - 1.0) / c.b;
      SymmetricOptions options;
      options.samples = 1;
      const Trajectory run =
          run_symmetric({eps, r, 1.0, 1e-3, std::ceil(t_end)}, options);
      const double got = run.back().summary.epr.delta;
      rows.push_back(
          ss > 0.0
              ? within(point(eps, r) + " stepped Delta at kappa2 t=" +
                           num(std::ceil(t_end)) + " vs sqrt(a/b)",
                       ss, got, 1e-3, true)
              : within(point(eps, r) + " stepped Delta at kappa2 t=" +
                           num(std::ceil(t_end)) +
                           " vs sqrt(a/b) = 0 (reached only as 1/t)",
                       ss, got, 1e-3, false));
      rows.push_back(within(point(eps, r) + " sqrt(a/b) vs steady-state form",
                            ss, std::sqrt(c.a / c.b), 1e-12, false));
    }
  }
  return rows;
}

// Criterion 3
std::vector<CheckRow> optimal_squeezing() {
  std::vector<CheckRow> rows;
  for (double eps : {0.1, 0.3, 0.5, 0.8}) {
    const ScalarMinimum m = minimize_steady_state_delta(eps, 1e-3, 1e3);
    rows.push_back(within("eps=" + num(eps) + " argmin_r Delta_ss",
                          (1.0 - eps) / eps, m.argument, 1e-6, true));
    rows.push_back(
        within("eps=" + num(eps) + " min_r Delta_ss", eps, m.value, 1e-6, true));
    if (eps != 0.5) {
      const bool anti = m.argument < 1.0;
      rows.push_back({"eps=" + num(eps) + " antisqueezed optimum (r_opt < 1)",
                      eps > 0.5 ? "yes" : "no", anti ? "yes" : "no", "exact",
                      anti == (eps > 0.5)});
    }
  }
  return rows;
}

// Criterion 4
std::vector<CheckRow> negativity_plateau() {
  std::vector<CheckRow> rows;
  for (double r : {0.1, 1.0, 10.0}) {
    rows.push_back(within("eps=1/3 r=" + num(r) + " asymptotic N", 1.0 / 3.0,
                          asymptotic_asymmetric_negativity(1.0 / 3.0, r), 1e-6,
                          false));
  }
  rows.push_back(within("eps=0.2 r=1e4 asymptotic N vs eps/(2-3eps)",
                        0.2 / (2.0 - 0.6),
                        asymptotic_asymmetric_negativity(0.2, 1e4), 1e-3,
                        false));
  for (double eps : {0.5, 0.9, 0.99}) {
    rows.push_back(within("eps=" + num(eps) + " r=1e-3 asymptotic N",
                          1.0 / 3.0,
                          asymptotic_asymmetric_negativity(eps, 1e-3), 1e-2,
                          false));
  }
  // The limit itself against the finite-time covariances.
  for (double eps : {1.0 / 3.0, 0.2, 0.5, 0.99}) {
    const double r = eps == 0.2 ? 1e4 : (eps == 1.0 / 3.0 ? 1.0 : 1e-3);
    const double late =
        negativity(analytic_asymmetric_gamma(eps, r, 1.0, 1e6)).n;
    rows.push_back(within(point(eps, r) + " limit vs N at kappa2 t=1e6",
                          asymptotic_asymmetric_negativity(eps, r), late, 1e-3,
                          false));
  }
  return rows;
}

// Criterion 5
std::vector<CheckRow> coherent_threshold() {
  std::vector<CheckRow> rows;
  for (double eps : {0.79, 0.81}) {
    const double ss = delta_steady_state(eps, 1.0);
    const bool entangled = ss < 1.0;
    const bool want = eps < 0.8;
    rows.push_back({"eps=" + num(eps) + " r=1 Delta_ss < 1",
                    want ? "yes" : "no",
                    (entangled ? "yes (" : "no (") + num(ss) + ")", "exact",
                    entangled == want});
    SymmetricOptions options;
    options.samples = 1;
    const double stepped =
        run_symmetric({eps, 1.0, 1.0, 1e-3, 20.0}, options).back().summary.epr.delta;
    rows.push_back({"eps=" + num(eps) + " r=1 stepped Delta at kappa2 t=20 < 1",
                    want ? "yes" : "no",
                    (stepped < 1.0 ? "yes (" : "no (") + num(stepped) + ")",
                    "exact", (stepped < 1.0) == want});
  }
  return rows;
}

// Criterion 6
std::vector<CheckRow> epr_reference() {
  std::vector<CheckRow> rows;
  rows.push_back(within("eps=0.36 r=10 Delta", 0.28,
                        epr_source_delta(0.36, 10.0).delta, 1e-12, false));
  double worst = 0.0;
  double worst_state = 0.0;
  double margin = 1e300;
  for (double eps : {0.0, 0.1, 0.36, 0.7, 0.99}) {
    for (double r : {0.5, 1.0, 2.0, 10.0, 100.0, 1e6}) {
      const EprSourceDelta d = epr_source_delta(eps, r);
      const double formula = 1.0 + std::sqrt(1.0 - eps) * (1.0 / r - 1.0);
      worst = std::max(worst, std::abs(d.delta - formula));
      const TwoModeSummary s = summarize(two_mode_block(
          lossy_epr_state(eps, r), ModeLabel::atom1(), ModeLabel::atom2()));
      // The state's entries grow like (r + 1/r) / 2, and so does rounding.
      const double scale = 0.5 * (r + 1.0 / r);
      worst_state = std::max(worst_state, std::abs(s.epr.delta - formula) / scale);
      margin = std::min(margin, d.delta - d.infinite_squeezing_bound);
    }
  }
  rows.push_back(at_most("closed form, 30 points", 1e-15, worst, "abs 1e-15"));
  rows.push_back(at_most("lossy two-mode squeezed state / ((r+1/r)/2)", 1e-14,
                         worst_state, "rel 1e-14"));
  rows.push_back({"min Delta - (1 - sqrt(1-eps)) over finite r", "> 0",
                  num(margin), "strict", margin > 0.0});
  return rows;
}

// Criterion 7
std::vector<CheckRow> fidelities() {
  std::vector<CheckRow> rows;
  for (double eps : {0.1, 0.3, 0.5, 0.8}) {
    rows.push_back(within("F_symmetric(Delta=" + num(eps) + ")",
                          1.0 / (1.0 + eps), fidelity_symmetric(eps), 1e-15,
                          false));
  }
  rows.push_back(within("F_symmetric(Delta=1)", 0.5, fidelity_symmetric(1.0),
                        1e-15, false));
  rows.push_back(within("F_bk(1/2, 1/2)", 0.5, fidelity_bk(0.5, 0.5), 1e-15,
                        false));
  for (double eps : {0.0, 0.1, 0.3, 0.5, 0.7, 0.9}) {
    std::vector<double> rs = kGridR;
    if (eps > 0.0) rs.push_back((1.0 - eps) / eps);
    double worst = -1.0;
    for (double r : rs) {
      RunOptions options;
      options.samples = 10;
      for (const auto& p :
           run_asymmetric({eps, r, 1.0, 1e-4, 5.0}, options)) {
        const ChannelVariances v = channel_variances(p.summary.gamma12);
        worst = std::max(
            worst, optimize_local_squeezing(v.var_p_plus, v.var_x_minus).f_opt);
      }
      worst = std::max(
          worst, evaluate_point(Scheme::kAsymmetric, eps, r, 1.0, std::nullopt)
                     .f_bk_opt);
    }
    rows.push_back(at_most("eps=" + num(eps) +
                               " max optimized F_bk (stepped t<=5 and limit)",
                           1.0 / (1.0 + eps) + 1e-6, worst, "abs 1e-6"));
  }
  return rows;
}

// Criterion 8
std::vector<CheckRow> polygamy() {
  std::vector<CheckRow> rows;
  for (int m : {2, 3, 5}) {
    double worst = 0.0;
    double f_max = 0.0;
    for (double r : {0.5, 2.0, 10.0}) {
      PolygamyOptions options;
      options.samples = 10;
      const PolygamyResult res = run_polygamy(m, {0.0, r, 1.0, 1e-3, 1.0},
                                              options);
      RunOptions ref_options;
      ref_options.samples = 10;
      const Trajectory ref = run_asymmetric(
          {res.effective_epsilon, r, 1.0, 1e-3, 1.0}, ref_options);
      for (const auto& pair : res.pairs) {
        for (std::size_t k = 0; k < ref.size(); ++k) {
          const auto& s = pair.trajectory[k].summary;
          worst = std::max(worst, (s.gamma12 - ref[k].summary.gamma12)
                                      .cwiseAbs()
                                      .maxCoeff());
          const ChannelVariances v = channel_variances(s.gamma12);
          f_max = std::max(
              f_max,
              optimize_local_squeezing(v.var_p_plus, v.var_x_minus).f_opt);
        }
      }
      f_max = std::max(
          f_max, evaluate_point(Scheme::kPolygamy, res.effective_epsilon, r,
                                1.0, std::nullopt)
                     .f_bk_opt);
    }
    rows.push_back(at_most("M=" + std::to_string(m) +
                               " pairwise gamma vs one-way eps=1-1/M",
                           1e-6, worst, "abs 1e-6"));
    rows.push_back(at_most("M=" + std::to_string(m) +
                               " max pairwise optimized F vs M/(2M-1)",
                           clone_bound(m) + 1e-6, f_max, "abs 1e-6"));
  }
  return rows;
}

// Criterion 9
std::vector<CheckRow> properties() {
  std::vector<CheckRow> rows;
  const auto a1 = ModeLabel::atom1();
  const auto a2 = ModeLabel::atom2();

  double defect = 0.0;
  for (double eps : {0.0, 0.3, 0.7, 0.99}) {
    defect = std::max(defect, symplectic_defect(beam_splitter_map(
                                  eps, ModeLabel::signal(),
                                  ModeLabel::vacuum()).matrix));
    for (double r : kGridR) {
      defect = std::max(defect, symplectic_defect(
                                    asymmetric_step_map({eps, r, 1.0, 1e-2, 1.0})
                                        .matrix));
      defect = std::max(
          defect, symplectic_defect(single_mode_squeezer(r, a1).matrix));
    }
  }
  for (int m : {2, 3, 5}) {
    defect = std::max(defect, symplectic_defect(equal_splitter(m).matrix));
  }
  // Any unit-determinant 2x2 map on one mode is a local symplectic map.
  Eigen::Matrix2d m1;
  m1 << 0.8, 0.9, -0.6, 0.575;
  Eigen::Matrix2d m2;
  m2 << 2.0, 0.0, 0.7, 0.5;
  const SymplecticMap local1{{a1}, m1};
  const SymplecticMap local2{{a2}, m2};
  defect = std::max({defect, symplectic_defect(local1.matrix),
                     symplectic_defect(local2.matrix)});
  rows.push_back(at_most("symplectic defect of splitters, squeezers, steps",
                         1e-12, defect, "abs 1e-12"));

  double min_nu = 1e300;
  for (double eps : kGridEps) {
    for (double r : kGridR) {
      RunOptions ro;
      ro.samples = 20;
      for (const auto& p : run_asymmetric({eps, r, 1.0, 1e-3, 2.0}, ro)) {
        min_nu = std::min(min_nu, symplectic_eigenvalues(p.summary.gamma12)(0));
      }
      SymmetricOptions so;
      so.samples = 20;
      for (const auto& p : run_symmetric({eps, r, 1.0, 1e-3, 2.0}, so)) {
        min_nu = std::min(min_nu, symplectic_eigenvalues(p.summary.gamma12)(0));
      }
    }
  }
  rows.push_back({"min symplectic eigenvalue along stepped runs", ">= 1 - 1e-9",
                  num(min_nu, "%.12g"), "abs 1e-9",
                  min_nu >= 1.0 - kUncertaintyTolerance});

  double n_shift = 0.0;
  for (double eps : kGridEps) {
    for (double r : kGridR) {
      const Eigen::Matrix4d g = analytic_asymmetric_gamma(eps, r, 1.0, 2.0);
      const GaussianState s({a1, a2}, g);
      const double before = negativity(g).n;
      const double after = negativity(
          apply_symplectic(apply_symplectic(s, local1), local2).gamma()).n;
      n_shift = std::max(n_shift, std::abs(after - before));
    }
  }
  rows.push_back(at_most("|N change| under local symplectic maps", 1e-9,
                         n_shift, "abs 1e-9"));

  double loss_gap = 0.0;
  for (double eps : {0.0, 0.37, 0.9}) {
    const GaussianState s = two_mode_squeezed_state(3.0);
    const GaussianState via_channel = loss_channel(s, a1, eps);
    GaussianState via_splitter = attach(s, vacuum_state({ModeLabel::vacuum()}));
    via_splitter = apply_symplectic(
        via_splitter, beam_splitter_map(eps, a1, ModeLabel::vacuum()));
    via_splitter = discard(via_splitter, ModeLabel::vacuum());
    loss_gap = std::max(loss_gap, (via_channel.gamma() - via_splitter.gamma())
                                      .cwiseAbs()
                                      .maxCoeff());
  }
  rows.push_back(at_most("loss_channel vs beam splitter + discard", 1e-12,
                         loss_gap, "abs 1e-12"));

  const double exact = delta_closed_form(riccati_coeffs(0.3, 2.0, 1.0), 1.0);
  std::string errs;
  bool monotone = true;
  double previous = 1e300;
  for (double tau : {4e-3, 2e-3, 1e-3, 5e-4}) {
    SymmetricOptions so;
    so.samples = 1;
    const double err = std::abs(
        run_symmetric({0.3, 2.0, 1.0, tau, 1.0}, so).back().summary.epr.delta -
        exact);
    errs += (errs.empty() ? "" : " > ") + num(err, "%.2e");
    monotone = monotone && err < previous;
    previous = err;
  }
  rows.push_back({"symmetric Delta error as tau halves (eps=0.3 r=2 t=1)",
                  "strictly decreasing", errs, "-", monotone});

  SweepConfig config;
  config.jobs = 1;
  const std::string first = emit_records(run_sweep(config));
  config.jobs = 4;
  const std::string second = emit_records(run_sweep(config));
  rows.push_back({"sweep CSV with 1 and 4 workers", "byte-identical",
                  first == second ? "byte-identical" : "differs", "exact",
                  first == second});
  const std::string again = emit_records(parse_records(first));
  rows.push_back({"emit(parse(emit(records)))", "byte-identical",
                  again == first ? "byte-identical" : "differs", "exact",
                  again == first});
  return rows;
}

// Criterion 10
std::vector<CheckRow> adjudication() {
  const AdjudicationReport report = adjudicate();
  return {
      {"alpha verdict across tau {1e-3,1e-4} and the grid", "stable",
       report.alpha_verdict, "exact", report.alpha_stable},
      {"fidelity prefactor verdict across tau and the grid", "stable",
       report.prefactor_verdict, "exact", report.prefactor_stable},
  };
}

}  // namespace

bool CriterionResult::passed() const {
  if (!error.empty() || rows.empty()) return false;
  return std::all_of(rows.begin(), rows.end(),
                     [](const CheckRow& r) { return r.passed; });
}

const std::vector<Criterion>& acceptance_criteria() {
  static const std::vector<Criterion> criteria{
      {1, "asymmetric-oracle", {"asymmetric", "oracle"},
       "one-way stepped simulation vs closed-form covariances",
       asymmetric_oracle},
      {2, "symmetric-oracle", {"symmetric", "riccati", "oracle"},
       "two-way stepped Delta vs Riccati solution and steady state",
       symmetric_oracle},
      {3, "optimal-squeezing", {"symmetric", "riccati"},
       "optimal probe squeezing and minimal Delta", optimal_squeezing},
      {4, "negativity-plateau", {"asymmetric", "plateau"},
       "asymptotic one-way negativity plateau", negativity_plateau},
      {5, "coherent-threshold", {"symmetric", "riccati"},
       "coherent-light two-way entanglement threshold", coherent_threshold},
      {6, "epr-reference", {"epr"}, "lossy two-mode squeezed source",
       epr_reference},
      {7, "fidelities", {"teleport"}, "teleportation fidelities and bound",
       fidelities},
      {8, "polygamy", {"polygamy", "teleport"},
       "splitter equivalence and cloning bound", polygamy},
      {9, "properties", {"properties"}, "property suites", properties},
      {10, "adjudication", {"adjudication", "teleport"},
       "stability of the alpha and prefactor verdicts", adjudication},
  };
  return criteria;
}

bool criterion_selected(const Criterion& criterion, std::string_view only) {
  if (only.empty()) return true;
  std::size_t start = 0;
  while (start <= only.size()) {
    const auto end = std::min(only.find(',', start), only.size());
    const std::string_view key = only.substr(start, end - start);
    if (key == std::to_string(criterion.number) || key == criterion.id) {
      return true;
    }
    for (const auto& tag : criterion.tags) {
      if (key == tag) return true;
    }
    start = end + 1;
  }
  return false;
}

CriterionResult run_criterion(const Criterion& criterion) {
  CriterionResult result;
  result.number = criterion.number;
  result.id = criterion.id;
  result.title = criterion.title;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    result.rows = criterion.run();
  } catch (const std::exception& e) {
    result.error = e.what();
  }
  result.seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  return result;
}

std::string summary_line(const CriterionResult& result) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%s %2d %-20s %s (%.2f s)",
                result.passed() ? "PASS" : "FAIL", result.number,
                result.id.c_str(), result.title.c_str(), result.seconds);
  std::string line = buf;
  if (!result.error.empty()) line += "  error: " + result.error;
  return line;
}

std::string format_rows(const CriterionResult& result) {
  std::size_t w_check = 5, w_exp = 8, w_got = 3, w_tol = 9;
  for (const auto& r : result.rows) {
    w_check = std::max(w_check, r.check.size());
    w_exp = std::max(w_exp, r.expected.size());
    w_got = std::max(w_got, r.got.size());
    w_tol = std::max(w_tol, r.tolerance.size());
  }
  auto pad = [](const std::string& s, std::size_t w) {
    return s + std::string(w - std::min(w, s.size()), ' ');
  };
  std::string out = "  " + pad("check", w_check) + "  " +
                    pad("expected", w_exp) + "  " + pad("got", w_got) + "  " +
                    pad("tolerance", w_tol) + "  result\n";
  for (const auto& r : result.rows) {
    out += "  " + pad(r.check, w_check) + "  " + pad(r.expected, w_exp) +
           "  " + pad(r.got, w_got) + "  " + pad(r.tolerance, w_tol) + "  " +
           (r.passed ? "ok" : "FAIL") + "\n";
  }
  return out;
}

}  // namespace lossycv
