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

#ifndef LOSSYCV_SYMMETRIC_HPP
#define LOSSYCV_SYMMETRIC_HPP

#include <vector>

#include "lossycv/asymmetric.hpp"
#include "lossycv/channel.hpp"

namespace lossycv {

/// Coefficients of dDelta/dt = a - b Delta^2.
struct RiccatiCoeffs {
  double a = 0.0;  // noise growth
  double b = 0.0;  // entanglement drive
};

RiccatiCoeffs riccati_coeffs(double epsilon, double r, double kappa2);

/// Solution of the Riccati equation with Delta(0) = 1, written with
/// tanh(x)/x so it stays finite for a = 0 and for large times.
double delta_closed_form(const RiccatiCoeffs& c, double t);

/// ((1 - eps + r eps) / 2) sqrt(eps / (r (1 - eps))), equal to sqrt(a/b).
/// Zero at eps = 0; throws std::domain_error outside [0, 1).
double delta_steady_state(double epsilon, double r);

/// (1 - eps) / eps; throws std::domain_error unless 0 < eps < 1.
double optimal_r(double epsilon);
/// eps; same domain as optimal_r.
double min_delta(double epsilon);

struct ScalarMinimum {
  double argument = 0.0;
  double value = 0.0;
};

/// Golden-section minimization of delta_steady_state over log r on
/// [r_lo, r_hi].
ScalarMinimum minimize_steady_state_delta(double epsilon, double r_lo,
                                          double r_hi, double tol = 1e-12);

/// Arrangement of the four interactions inside one segment.
///
/// kSequential applies them once each in the order p-coupling (gas 1 noise),
/// p-coupling (gas 2 noise), x-coupling (gas 1 noise), x-coupling (gas 2
/// noise). Its splitting error is first order in tau for the individual
/// entries of gamma12 (the symmetric form is broken by O(kappa2 tau)).
///
/// kStrang runs the two p-couplings at half strength before and after the
/// x-couplings. Interactions of the same kind commute exactly, so this is a
/// second-order splitting of the same dynamics.
enum class SubstepOrder { kStrang, kSequential };

struct SymmetricOptions {
  long samples = 100;
  SubstepOrder order = SubstepOrder::kStrang;
  LightBasis basis = LightBasis::kFlippedVacuumPort;
  /// Sign of the vacuum-noise term of the fourth (x2-noise) interaction.
  double h4_noise_sign = 1.0;
};

/// Two-way probing: every segment applies four interactions, each with a
/// fresh light segment. Two couple p1 + p2 to p' (light diag(1/r, r), x'
/// measured) with undetected-port noise on gas 1 and gas 2 respectively;
/// two couple x1 - x2 to x' (light diag(r, 1/r), p' measured), again with
/// noise on gas 1 and gas 2. Samples are taken after full cycles.
Trajectory run_symmetric(const ChannelParams& params,
                         const SymmetricOptions& options = {});

struct DeltaSample {
  double t = 0.0;
  double delta = 1.0;
};

/// Richardson extrapolation (4 Delta(tau/2) - Delta(tau)) / 3 of the stepped
/// EPR uncertainty. Delta carries a second-order step error under both
/// orderings.
std::vector<DeltaSample> run_symmetric_richardson(
    const ChannelParams& params, const SymmetricOptions& options = {});

}  // namespace lossycv

#endif  // LOSSYCV_SYMMETRIC_HPP
