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

#include "lossycv/entanglement.hpp"

#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "lossycv/linalg.hpp"

namespace lossycv {

Eigen::Matrix4d partial_transpose(const Eigen::Matrix4d& gamma12) {
  const Eigen::Vector4d lambda(1.0, -1.0, 1.0, 1.0);
  return lambda.asDiagonal() * gamma12 * lambda.asDiagonal();
}

Negativity negativity(const Eigen::Matrix4d& gamma12) {
  if (!is_physical(gamma12)) {
    throw std::domain_error("negativity: covariance violates the uncertainty "
                            "principle");
  }
  const Eigen::MatrixXd sigma_inv = -commutator_matrix(2);
  const Eigen::VectorXd moduli =
      eigenvalue_moduli(sigma_inv * partial_transpose(gamma12));
  for (int pair = 0; pair < 2; ++pair) {
    const double lo = moduli(2 * pair);
    const double hi = moduli(2 * pair + 1);
    if (std::abs(hi - lo) > kPairingTolerance * std::max(1.0, hi)) {
      std::ostringstream msg;
      msg << "negativity: unpaired partial-transpose moduli " << lo << ", "
          << hi;
      throw std::domain_error(msg.str());
    }
  }
  Negativity out;
  out.n = std::min(1.0, 0.5 * (moduli(0) + moduli(1)));
  out.log_negativity = out.n < 1.0 ? -std::log2(out.n) : 0.0;
  return out;
}

EprUncertainty epr_uncertainty(const Eigen::Matrix4d& g) {
  EprUncertainty e;
  e.x_half = 0.5 * (g(0, 0) + g(2, 2) - 2.0 * g(0, 2));
  e.p_half = 0.5 * (g(1, 1) + g(3, 3) + 2.0 * g(1, 3));
  e.delta = 0.5 * (e.x_half + e.p_half);
  return e;
}

bool has_symmetric_form(const Eigen::Matrix4d& g, double tol) {
  const double n = g(0, 0);
  const double k = g(0, 2);
  const Eigen::Matrix4d expected = symmetric_covariance(n, k);
  return (g - expected).cwiseAbs().maxCoeff() <= tol * std::max(1.0, std::abs(n));
}

TwoModeSummary summarize(const Eigen::Matrix4d& gamma12) {
  TwoModeSummary s;
  s.gamma12 = gamma12;
  s.v_x1 = gamma12(0, 0);
  s.v_p1 = gamma12(1, 1);
  s.v_x2 = gamma12(2, 2);
  s.v_p2 = gamma12(3, 3);
  s.c_x = gamma12(0, 2);
  s.c_p = gamma12(1, 3);
  const Negativity neg = negativity(gamma12);
  s.n = neg.n;
  s.log_negativity = neg.log_negativity;
  s.epr = epr_uncertainty(gamma12);
  if (has_symmetric_form(gamma12)) {
    s.delta = gamma12(0, 0) - gamma12(0, 2);
  }
  return s;
}

Eigen::Matrix4d two_mode_covariance(double v_x1, double v_p1, double v_x2,
                                    double v_p2, double c_x, double c_p) {
  Eigen::Matrix4d g = Eigen::Matrix4d::Zero();
  g(0, 0) = v_x1;
  g(1, 1) = v_p1;
  g(2, 2) = v_x2;
  g(3, 3) = v_p2;
  g(0, 2) = g(2, 0) = c_x;
  g(1, 3) = g(3, 1) = c_p;
  return g;
}

Eigen::Matrix4d symmetric_covariance(double n, double k) {
  return two_mode_covariance(n, n, n, n, k, -k);
}

Eigen::Matrix4d two_mode_block(const GaussianState& state, const ModeLabel& a,
                               const ModeLabel& b) {
  const std::array<ModeLabel, 2> pair{a, b};
  return state.submatrix(pair);
}

}  // namespace lossycv
