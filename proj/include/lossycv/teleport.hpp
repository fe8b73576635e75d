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

#ifndef LOSSYCV_TELEPORT_HPP
#define LOSSYCV_TELEPORT_HPP

#include <optional>

#include <Eigen/Dense>

namespace lossycv {

// Coherent-state teleportation fidelities. Variances are vacuum-normalized
// (Var_vac = 1/2), so they are a quarter of the gamma combinations.

/// 1 / (1 + delta); throws std::domain_error for delta <= 0.
double fidelity_symmetric(double delta);

/// 1 / sqrt((1 + 2 Var(p+)) (1 + 2 Var(x-))).
double fidelity_bk(double var_p_plus, double var_x_minus);

struct LocalSqueezing {
  double s_opt = 1.0;  // sqrt(Var(x-) / Var(p+))
  double f_opt = 0.5;  // 1 / (1 + 2 sqrt(Var(p+) Var(x-)))
};

/// Best local squeezing Var(p+) -> s Var(p+), Var(x-) -> Var(x-) / s.
LocalSqueezing optimize_local_squeezing(double var_p_plus, double var_x_minus);

/// M / (2M - 1); throws std::domain_error for M < 1.
double clone_bound(int m_sites);

struct ChannelVariances {
  double var_p_plus = 0.5;   // (v_p1 + v_p2 + 2 c_p) / 4
  double var_x_minus = 0.5;  // (v_x1 + v_x2 - 2 c_x) / 4
};

ChannelVariances channel_variances(const Eigen::Matrix4d& gamma12);

struct FidelityReport {
  double f = 0.5;  // fidelity_bk of the raw variances
  double var_p_plus = 0.5;
  double var_x_minus = 0.5;
  double s_opt = 1.0;
  double f_opt = 0.5;
  std::optional<double> bound_clone;
};

/// Fidelities of the channel gamma12. The clone bound is filled in when
/// 1 / (1 - eps) is an integer M (to 1e-9).
FidelityReport fidelity_report(const Eigen::Matrix4d& gamma12,
                               std::optional<double> epsilon = std::nullopt);

}  // namespace lossycv

#endif  // LOSSYCV_TELEPORT_HPP
