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

#include "lossycv/adjudication.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "lossycv/asymmetric.hpp"
#include "lossycv/teleport.hpp"

namespace lossycv {
namespace {

bool close(double got, double want, double tol) {
  return std::abs(got - want) <= tol * std::max(1.0, std::abs(want));
}

template <typename Row>
std::string common_verdict(const std::vector<Row>& rows, bool& stable) {
  stable = !rows.empty();
  for (const auto& row : rows) {
    if (row.verdict != rows.front().verdict) stable = false;
  }
  return stable ? rows.front().verdict : std::string("unstable");
}

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

}  // namespace

double quoted_alpha(double epsilon, double r, double kappa2) {
  return kappa2 * epsilon * (1.0 + r * epsilon - epsilon) / 2.0;
}

double quoted_beta(double epsilon, double r, double kappa2) {
  return 2.0 * (1.0 - epsilon) * r * kappa2 / (1.0 + r * epsilon - epsilon);
}

double alpha_from_quoted_closed_forms(double epsilon, double r,
                                      double kappa2) {
  const double e = epsilon;
  const double v_x1 = r + 4.0 * e * (1.0 - r) + 4.0 * e * e * (r - 1.0);
  const double v_x2 = (1.0 - e) * (1.0 + (1.0 - r) * (1.0 - e));
  const double c_x = (1.0 - e) * (r + 2.0 * e * (1.0 - r));
  return kappa2 * (v_x1 + v_x2 - 2.0 * c_x) / 2.0;
}

double fidelity_candidate(double prefactor, double alpha, double beta,
                          double t) {
  return 1.0 /
         (1.0 + prefactor * std::sqrt((1.0 + alpha * t) / (1.0 + beta * t)));
}

AdjudicationReport adjudicate(const AdjudicationGrid& grid) {
  if (!(grid.t > 0.0)) {
    throw std::invalid_argument("adjudicate: t must be positive");
  }
  AdjudicationReport report;
  const double tol = grid.tolerance;
  for (double tau : grid.taus) {
    for (double eps : grid.epsilons) {
      std::vector<std::pair<double, bool>> rs;
      for (double r : grid.rs) rs.emplace_back(r, false);
      if (grid.include_optimal_r && eps > 0.0 && eps < 1.0) {
        rs.emplace_back((1.0 - eps) / eps, true);
      }
      for (const auto& [r, at_opt] : rs) {
        const ChannelParams params{eps, r, grid.kappa2, tau, grid.t};
        RunOptions options;
        options.samples = 2;
        const Trajectory run = run_asymmetric(params, options);
        const auto& mid = run[run.size() - 2];
        const auto& last = run.back();
        const double x_mid = mid.summary.epr.x_half;
        const double x_end = last.summary.epr.x_half;
        const double alpha_sim = (x_end - x_mid) / (last.t - mid.t);
        const double beta_sim = (1.0 / last.summary.epr.p_half - 1.0) / last.t;
        const double alpha_q = quoted_alpha(eps, r, grid.kappa2);
        const double beta_q = quoted_beta(eps, r, grid.kappa2);

        if (!at_opt) {
          AlphaRow row;
          row.epsilon = eps;
          row.r = r;
          row.tau = tau;
          row.alpha_simulated = alpha_sim;
          row.alpha_quoted = alpha_q;
          row.alpha_closed_forms =
              alpha_from_quoted_closed_forms(eps, r, grid.kappa2);
          row.beta_simulated = beta_sim;
          row.beta_quoted = beta_q;
          row.quoted_alpha_matches = close(alpha_sim, alpha_q, tol);
          row.quoted_beta_matches = close(beta_sim, beta_q, tol);
          row.closed_forms_match = close(alpha_sim, row.alpha_closed_forms, tol);
          if (row.quoted_alpha_matches) {
            row.verdict = "quoted alpha holds";
          } else if (row.closed_forms_match) {
            row.verdict = "closed-form alpha holds";
          } else {
            row.verdict = "neither alpha holds";
          }
          report.alpha.push_back(row);
        }

        if (eps <= 0.0) continue;  // alpha = 0: both candidates are 1
        PrefactorRow row;
        row.epsilon = eps;
        row.r = r;
        row.tau = tau;
        row.t = last.t;
        const ChannelVariances v = channel_variances(last.summary.gamma12);
        row.f_simulated =
            optimize_local_squeezing(v.var_p_plus, v.var_x_minus).f_opt;
        row.f_unit = fidelity_candidate(1.0, alpha_q, beta_q, last.t);
        row.f_quoted = fidelity_candidate(2.0, alpha_q, beta_q, last.t);
        row.f_asymptotic = 1.0 / (1.0 + std::sqrt(alpha_sim / beta_sim));
        row.at_optimal_r = at_opt;
        row.bound = 1.0 / (1.0 + eps);
        row.bound_alt = 1.0 / (1.0 + 2.0 * eps);
        const bool unit = close(row.f_simulated, row.f_unit, tol);
        const bool quoted = close(row.f_simulated, row.f_quoted, tol);
        if (unit && !quoted) {
          row.verdict = "unit prefactor";
        } else if (quoted && !unit) {
          row.verdict = "quoted prefactor";
        } else if (unit && quoted) {
          row.verdict = "ambiguous";
        } else {
          row.verdict = "neither prefactor";
        }
        if (at_opt) {
          const bool hits = close(row.f_asymptotic, row.bound, tol);
          const bool hits_alt = close(row.f_asymptotic, row.bound_alt, tol);
          if (!hits || hits_alt) row.verdict += "; optimum off 1/(1+eps)";
        }
        report.prefactor.push_back(row);
      }
    }
  }
  report.alpha_verdict = common_verdict(report.alpha, report.alpha_stable);
  report.prefactor_verdict =
      common_verdict(report.prefactor, report.prefactor_stable);
  return report;
}

std::string format_report(const AdjudicationReport& report) {
  std::string out;
  out += "alpha: 2 Var(x-) = 1 + alpha t\n";
  out += "   eps       r     tau   alpha_sim alpha_quoted alpha_forms"
         "    beta_sim beta_quoted  verdict\n";
  for (const auto& row : report.alpha) {
    out += fmt("%6.3f", row.epsilon) + fmt("%8.4f", row.r) +
           fmt("%8.0e", row.tau) + fmt("%12.8f", row.alpha_simulated) +
           fmt("%13.8f", row.alpha_quoted) +
           fmt("%12.8f", row.alpha_closed_forms) +
           fmt("%12.8f", row.beta_simulated) +
           fmt("%12.8f", row.beta_quoted) + "  " + row.verdict + "\n";
  }
  out += "alpha verdict: " + report.alpha_verdict +
         (report.alpha_stable ? " (stable)\n" : " (UNSTABLE)\n");
  out += "\noptimized fidelity: 1 / (1 + c sqrt((1 + alpha t)/(1 + beta t)))\n";
  out += "   eps       r     tau     t       F_sim   F_unit(c=1) "
         "F_quoted(c=2)  F_inf_sim  1/(1+eps)  verdict\n";
  for (const auto& row : report.prefactor) {
    out += fmt("%6.3f", row.epsilon) + fmt("%8.4f", row.r) +
           fmt("%8.0e", row.tau) + fmt("%6.2f", row.t) +
           fmt("%12.8f", row.f_simulated) + fmt("%14.8f", row.f_unit) +
           fmt("%14.8f", row.f_quoted) + fmt("%11.8f", row.f_asymptotic) +
           fmt("%11.8f", row.bound) + "  " + row.verdict +
           (row.at_optimal_r ? " [r_opt]" : "") + "\n";
  }
  out += "prefactor verdict: " + report.prefactor_verdict +
         (report.prefactor_stable ? " (stable)\n" : " (UNSTABLE)\n");
  return out;
}

}  // namespace lossycv
