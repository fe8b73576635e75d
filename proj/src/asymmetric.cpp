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

#include "lossycv/asymmetric.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lossycv/hamiltonian.hpp"
#include "lossycv/stepper.hpp"

namespace lossycv {

std::vector<long> sample_steps(long steps, long samples) {
  if (samples < 1) {
    throw std::invalid_argument("samples must be >= 1");
  }
  std::vector<long> out{0};
  const long n = std::min(samples, std::max(steps, 1L));
  for (long k = 1; k <= n; ++k) {
    const long s = (steps * k + n / 2) / n;
    if (s > out.back()) out.push_back(s);
  }
  return out;
}

SymplecticMap asymmetric_step_map(const ChannelParams& params) {
  params.validate();
  const double k = params.kappa_tau();
  const double t = std::sqrt(1.0 - params.epsilon);
  const double s = std::sqrt(params.epsilon);
  const auto a1 = ModeLabel::atom1();
  const auto a2 = ModeLabel::atom2();
  const auto vac = ModeLabel::vacuum();
  const auto sig = ModeLabel::signal();
  using Q = Quadrature;
  return bilinear_evolution(
      {a1, a2, vac, sig},
      {{k * t, a1, Q::kP, sig, Q::kP},
       {k * t, a2, Q::kP, sig, Q::kP},
       {-k * s, a1, Q::kP, vac, Q::kP}});
}

GaussianState probe_light(double epsilon, double r, LightBasis basis,
                          ModeLabel signal, ModeLabel vacuum) {
  GaussianState light =
      attach(squeezed_light_state(r, signal), vacuum_state({vacuum}));
  light = apply_symplectic(light, beam_splitter_map(epsilon, signal, vacuum));
  if (basis == LightBasis::kFlippedVacuumPort) {
    light = apply_symplectic(light, phase_flip(vacuum));
  }
  return light;
}

Trajectory run_asymmetric(const ChannelParams& params,
                          const RunOptions& options) {
  params.validate();
  const auto a1 = ModeLabel::atom1();
  const auto a2 = ModeLabel::atom2();
  const HomodyneStep step({a1, a2}, asymmetric_step_map(params),
                          probe_light(params.epsilon, params.r, options.basis),
                          ModeLabel::signal(), Quadrature::kX);

  Eigen::MatrixXd atoms = Eigen::MatrixXd::Identity(4, 4);
  const long steps = params.steps();
  const std::vector<long> samples = sample_steps(steps, options.samples);

  Trajectory out;
  out.reserve(samples.size());
  std::size_t next = 0;
  for (long n = 0; n <= steps; ++n) {
    if (next < samples.size() && samples[next] == n) {
      out.push_back({static_cast<double>(n) * params.tau,
                     summarize(atoms)});
      ++next;
    }
    if (n == steps) break;
    step.apply(atoms);
  }
  return out;
}

Eigen::Matrix4d analytic_asymmetric_gamma(double epsilon, double r,
                                          double kappa2, double t,
                                          LightBasis basis) {
  const double e = epsilon;
  const double kt = kappa2 * t;
  double v_x1 = 1.0 + kt * (r + 4.0 * e * (1.0 - r) + 4.0 * e * e * (r - 1.0));
  double c_x = kt * (1.0 - e) * (r + 2.0 * e * (1.0 - r));
  if (basis == LightBasis::kDirect) {
    v_x1 = 1.0 + kt * r;
    c_x = kt * (1.0 - e) * r;
  }
  const double v_x2 = 1.0 + kt * (1.0 - e) * (1.0 + (r - 1.0) * (1.0 - e));
  const double base = (1.0 - r) * (1.0 - e) + r;
  const double drive = kt * r * (1.0 - e);
  const double denom = 2.0 * drive + base;
  const double v_p = (drive + base) / denom;
  const double c_p = -drive / denom;
  return two_mode_covariance(v_x1, v_p, v_x2, v_p, c_x, c_p);
}

TwoModeSummary analytic_asymmetric_covariance(const ChannelParams& params,
                                              double t, LightBasis basis) {
  params.validate();
  if (!(t >= 0.0)) {
    throw std::invalid_argument("analytic_asymmetric_covariance: t < 0");
  }
  return summarize(
      analytic_asymmetric_gamma(params.epsilon, params.r, params.kappa2, t,
                                basis));
}

double asymptotic_asymmetric_negativity(double epsilon, double r) {
  if (!(epsilon >= 0.0 && epsilon < 1.0) || !(r > 0.0)) {
    throw std::domain_error(
        "asymptotic_asymmetric_negativity: need 0 <= eps < 1 and r > 0");
  }
  const double e = epsilon;
  const double num = e * (1.0 - e + r * e);
  const double den = r * (2.0 - 3.0 * e) * (2.0 - 3.0 * e) + 9.0 * e * (1.0 - e);
  return std::min(1.0, std::sqrt(num / den));
}

}  // namespace lossycv
