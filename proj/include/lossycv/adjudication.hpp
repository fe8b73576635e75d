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

#ifndef LOSSYCV_ADJUDICATION_HPP
#define LOSSYCV_ADJUDICATION_HPP

#include <string>
#include <vector>

namespace lossycv {

// Cross-checks of the one-way teleportation formulas against the stepped
// one-way simulation. The channel obeys
//   2 Var(x-) = 1 + alpha t,   2 Var(p+) = 1 / (1 + beta t)
// and the candidates below are compared with what the simulation produces.

/// kappa2 eps (1 + r eps - eps) / 2.
double quoted_alpha(double epsilon, double r, double kappa2);
/// 2 (1 - eps) r kappa2 / (1 + r eps - eps).
double quoted_beta(double epsilon, double r, double kappa2);

/// Slope of 2 Var(x-) implied by the quoted receiver x variance
/// 1 + kappa2 t (1 - eps)(1 + (1 - r)(1 - eps)) together with the other
/// closed-form entries.
double alpha_from_quoted_closed_forms(double epsilon, double r,
                                      double kappa2);

/// Optimized fidelity candidates 1 / (1 + c sqrt((1 + alpha t)/(1 + beta t)))
/// with prefactor c = 1 (unit) and c = 2 (quoted).
double fidelity_candidate(double prefactor, double alpha, double beta,
                          double t);

struct AlphaRow {
  double epsilon = 0.0;
  double r = 1.0;
  double tau = 0.0;
  double alpha_simulated = 0.0;
  double alpha_quoted = 0.0;
  double alpha_closed_forms = 0.0;
  double beta_simulated = 0.0;
  double beta_quoted = 0.0;
  bool quoted_alpha_matches = false;
  bool quoted_beta_matches = false;
  bool closed_forms_match = false;
  std::string verdict;
};

struct PrefactorRow {
  double epsilon = 0.0;
  double r = 1.0;
  double tau = 0.0;
  double t = 1.0;
  double f_simulated = 0.0;     // optimized fidelity of the stepped channel
  double f_unit = 0.0;
  double f_quoted = 0.0;
  double f_asymptotic = 0.0;    // 1 / (1 + sqrt(alpha/beta)), simulated rates
  bool at_optimal_r = false;
  double bound = 0.0;           // 1 / (1 + eps)
  double bound_alt = 0.0;       // 1 / (1 + 2 eps)
  std::string verdict;
};

struct AdjudicationReport {
  std::vector<AlphaRow> alpha;
  std::vector<PrefactorRow> prefactor;
  std::string alpha_verdict;      // common verdict, or "unstable"
  std::string prefactor_verdict;  // common verdict, or "unstable"
  bool alpha_stable = false;
  bool prefactor_stable = false;
};

struct AdjudicationGrid {
  std::vector<double> taus{1e-3, 1e-4};
  std::vector<double> epsilons{0.3, 0.7};
  std::vector<double> rs{0.5, 1.0, 2.0, 10.0};
  /// Adds r = (1 - eps) / eps for every eps to the prefactor table.
  bool include_optimal_r = true;
  double kappa2 = 1.0;
  double t = 1.0;
  double tolerance = 1e-6;
};

AdjudicationReport adjudicate(const AdjudicationGrid& grid = {});

std::string format_report(const AdjudicationReport& report);

}  // namespace lossycv

#endif  // LOSSYCV_ADJUDICATION_HPP
