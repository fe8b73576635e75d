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

#include "lossycv/teleport.hpp"

#include <cmath>
#include <stdexcept>

namespace lossycv {
namespace {

void require_variances(double var_p_plus, double var_x_minus,
                       const char* who) {
  if (!(var_p_plus > 0.0) || !(var_x_minus > 0.0)) {
    throw std::domain_error(std::string(who) + ": variances must be positive");
  }
}

}  // namespace

double fidelity_symmetric(double delta) {
  if (!(delta > 0.0)) {
    throw std::domain_error("fidelity_symmetric: delta must be positive");
  }
  return 1.0 / (1.0 + delta);
}

double fidelity_bk(double var_p_plus, double var_x_minus) {
  require_variances(var_p_plus, var_x_minus, "fidelity_bk");
  const double f =
      1.0 / std::sqrt((1.0 + 2.0 * var_p_plus) * (1.0 + 2.0 * var_x_minus));
  if (!(f <= 1.0)) throw std::logic_error("fidelity_bk: F > 1");
  return f;
}

LocalSqueezing optimize_local_squeezing(double var_p_plus,
                                        double var_x_minus) {
  require_variances(var_p_plus, var_x_minus, "optimize_local_squeezing");
  const double s = std::sqrt(var_x_minus / var_p_plus);
  return {s, fidelity_bk(s * var_p_plus, var_x_minus / s)};
}

double clone_bound(int m_sites) {
  if (m_sites < 1) {
    throw std::domain_error("clone_bound: M must be at least 1");
  }
  const double m = m_sites;
  return m / (2.0 * m - 1.0);
}

ChannelVariances channel_variances(const Eigen::Matrix4d& g) {
  return {(g(1, 1) + g(3, 3) + 2.0 * g(1, 3)) / 4.0,
          (g(0, 0) + g(2, 2) - 2.0 * g(0, 2)) / 4.0};
}

FidelityReport fidelity_report(const Eigen::Matrix4d& gamma12,
                               std::optional<double> epsilon) {
  const ChannelVariances v = channel_variances(gamma12);
  const LocalSqueezing opt =
      optimize_local_squeezing(v.var_p_plus, v.var_x_minus);
  FidelityReport report;
  report.f = fidelity_bk(v.var_p_plus, v.var_x_minus);
  report.var_p_plus = v.var_p_plus;
  report.var_x_minus = v.var_x_minus;
  report.s_opt = opt.s_opt;
  report.f_opt = opt.f_opt;
  if (epsilon && *epsilon < 1.0) {
    const double m = 1.0 / (1.0 - *epsilon);
    if (std::abs(m - std::round(m)) < 1e-9) {
      report.bound_clone = clone_bound(static_cast<int>(std::lround(m)));
    }
  }
  return report;
}

}  // namespace lossycv
