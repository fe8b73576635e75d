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

#ifndef LOSSYCV_ENTANGLEMENT_HPP
#define LOSSYCV_ENTANGLEMENT_HPP

#include <optional>

#include <Eigen/Dense>

#include "lossycv/gaussian_state.hpp"

namespace lossycv {

/// Relative tolerance on the pairing of partial-transpose eigenvalue moduli.
inline constexpr double kPairingTolerance = 1e-9;
/// Tolerance for recognizing the symmetric (n, k) two-mode form.
inline constexpr double kSymmetricFormTolerance = 1e-9;

/// Negates every coupling between p1 and the other quadratures of a
/// two-mode covariance in (x1, p1, x2, p2) order.
Eigen::Matrix4d partial_transpose(const Eigen::Matrix4d& gamma12);

struct Negativity {
  double n = 1.0;               // smaller paired modulus, capped at 1
  double log_negativity = 0.0;  // -log2(n)
};

/// Throws std::domain_error if `gamma12` violates the uncertainty principle
/// or if the moduli of i sigma^-1 gamma^T1 do not come in degenerate pairs.
Negativity negativity(const Eigen::Matrix4d& gamma12);

/// EPR uncertainty in the vacuum-normalized convention. The x half is
/// (v_x1 + v_x2 - 2 c_x) / 2, the p half (v_p1 + v_p2 + 2 c_p) / 2 and
/// `delta` is their mean; for the symmetric form both halves equal n - k.
struct EprUncertainty {
  double delta = 1.0;
  double x_half = 1.0;
  double p_half = 1.0;
};

EprUncertainty epr_uncertainty(const Eigen::Matrix4d& gamma12);

/// A two-party covariance with its derived entanglement measures.
struct TwoModeSummary {
  Eigen::Matrix4d gamma12 = Eigen::Matrix4d::Identity();
  double v_x1 = 1.0, v_p1 = 1.0, v_x2 = 1.0, v_p2 = 1.0;
  double c_x = 0.0, c_p = 0.0;
  double n = 1.0;
  double log_negativity = 0.0;
  EprUncertainty epr;
  /// n - k when gamma12 has the symmetric (n, k) form.
  std::optional<double> delta;
};

bool has_symmetric_form(const Eigen::Matrix4d& gamma12,
                        double tol = kSymmetricFormTolerance);

TwoModeSummary summarize(const Eigen::Matrix4d& gamma12);

/// Builds the two-mode covariance from the six entries of the standard
/// block-diagonal layout.
Eigen::Matrix4d two_mode_covariance(double v_x1, double v_p1, double v_x2,
                                    double v_p2, double c_x, double c_p);

/// Symmetric form with diagonal n and correlations (k, -k).
Eigen::Matrix4d symmetric_covariance(double n, double k);

/// Covariance of `a` and `b` extracted from a larger register.
Eigen::Matrix4d two_mode_block(const GaussianState& state, const ModeLabel& a,
                               const ModeLabel& b);

}  // namespace lossycv

#endif  // LOSSYCV_ENTANGLEMENT_HPP
