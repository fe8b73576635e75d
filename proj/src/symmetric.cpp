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

#include "lossycv/symmetric.hpp"

#include <cmath>
#include <stdexcept>

#include "lossycv/hamiltonian.hpp"
#include "lossycv/stepper.hpp"

namespace lossycv {
namespace {

void require_loss_domain(double epsilon, const char* who) {
  if (!(epsilon >= 0.0 && epsilon < 1.0)) {
    throw std::domain_error(std::string(who) +
                            ": epsilon must lie in [0, 1), got " +
                            std::to_string(epsilon));
  }
}

double tanhc(double x) {
  return std::abs(x) < 1e-8 ? 1.0 - x * x / 3.0 : std::tanh(x) / x;
}

std::vector<HomodyneStep> symmetric_substeps(const ChannelParams& p,
                                        const SymmetricOptions& options) {
  const double k = p.kappa_tau();
  // Half-strength segments carry half the photons: kappa_tau^2 / 2.
  const double kh = k / std::sqrt(2.0);
  const double t = std::sqrt(1.0 - p.epsilon);
  const double s = std::sqrt(p.epsilon);
  const auto a1 = ModeLabel::atom1();
  const auto a2 = ModeLabel::atom2();
  const auto vac = ModeLabel::vacuum();
  const auto sig = ModeLabel::signal();
  const std::vector<ModeLabel> modes{a1, a2, vac, sig};
  using Q = Quadrature;

  const GaussianState p_light = probe_light(p.epsilon, p.r, options.basis);
  const GaussianState x_light =
      probe_light(p.epsilon, 1.0 / p.r, options.basis);

  auto p_coupling = [&](double c, const ModeLabel& noisy) {
    return HomodyneStep(
        {a1, a2},
        bilinear_evolution(modes, {{c * t, a1, Q::kP, sig, Q::kP},
                                   {c * t, a2, Q::kP, sig, Q::kP},
                                   {-c * s, noisy, Q::kP, vac, Q::kP}}),
        p_light, sig, Q::kX);
  };
  auto x_coupling = [&](double c, const ModeLabel& noisy, double sign) {
    return HomodyneStep(
        {a1, a2},
        bilinear_evolution(modes, {{c * t, a1, Q::kX, sig, Q::kX},
                                   {-c * t, a2, Q::kX, sig, Q::kX},
                                   {sign * c * s, noisy, Q::kX, vac, Q::kX}}),
        x_light, sig, Q::kP);
  };
  const double h4 = options.h4_noise_sign;
  if (options.order == SubstepOrder::kSequential) {
    return {p_coupling(k, a1), p_coupling(k, a2), x_coupling(k, a1, -1.0),
            x_coupling(k, a2, h4)};
  }
  return {p_coupling(kh, a1), p_coupling(kh, a2), x_coupling(k, a1, -1.0),
          x_coupling(k, a2, h4), p_coupling(kh, a2), p_coupling(kh, a1)};
}


}  // namespace

RiccatiCoeffs riccati_coeffs(double epsilon, double r, double kappa2) {
  require_loss_domain(epsilon, "riccati_coeffs");
  const double e = epsilon;
  const double mix = 1.0 - e + r * e;
  return {kappa2 * e * mix, 4.0 * kappa2 * r * (1.0 - e) / mix};
}

double delta_closed_form(const RiccatiCoeffs& c, double t) {
  const double rate = std::sqrt(c.a * c.b);
  const double w = t * tanhc(rate * t);
  return (1.0 + c.a * w) / (1.0 + c.b * w);
}

double delta_steady_state(double epsilon, double r) {
  require_loss_domain(epsilon, "delta_steady_state");
  if (!(r > 0.0)) {
    throw std::domain_error("delta_steady_state: r must be positive");
  }
  const double e = epsilon;
  return 0.5 * (1.0 - e + r * e) * std::sqrt(e / (r * (1.0 - e)));
}

double optimal_r(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::domain_error("optimal_r: epsilon must lie in (0, 1)");
  }
  return (1.0 - epsilon) / epsilon;
}

double min_delta(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::domain_error("min_delta: epsilon must lie in (0, 1)");
  }
  return epsilon;
}

ScalarMinimum minimize_steady_state_delta(double epsilon, double r_lo,
                                          double r_hi, double tol) {
  if (!(r_lo > 0.0 && r_hi > r_lo)) {
    throw std::invalid_argument(
        "minimize_steady_state_delta: need 0 < r_lo < r_hi");
  }
  const double golden = 0.5 * (std::sqrt(5.0) - 1.0);
  double lo = std::log(r_lo);
  double hi = std::log(r_hi);
  auto f = [&](double u) { return delta_steady_state(epsilon, std::exp(u)); };
  double c = hi - golden * (hi - lo);
  double d = lo + golden * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  while (hi - lo > tol) {
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - golden * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + golden * (hi - lo);
      fd = f(d);
    }
  }
  const double u = 0.5 * (lo + hi);
  return {std::exp(u), f(u)};
}

Trajectory run_symmetric(const ChannelParams& params,
                         const SymmetricOptions& options) {
  params.validate();
  const auto cycle = symmetric_substeps(params, options);
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
    for (const auto& sub : cycle) sub.apply(atoms);
  }
  return out;
}

std::vector<DeltaSample> run_symmetric_richardson(
    const ChannelParams& params, const SymmetricOptions& options) {
  ChannelParams fine = params;
  fine.tau = 0.5 * params.tau;
  const Trajectory coarse_run = run_symmetric(params, options);
  const Trajectory fine_run = run_symmetric(fine, options);
  if (coarse_run.size() != fine_run.size()) {
    throw std::logic_error("run_symmetric_richardson: sample grids differ");
  }
  std::vector<DeltaSample> out;
  out.reserve(coarse_run.size());
  for (std::size_t i = 0; i < coarse_run.size(); ++i) {
    if (std::abs(coarse_run[i].t - fine_run[i].t) > 1e-9 * (1.0 + params.t_final)) {
      throw std::invalid_argument(
          "run_symmetric_richardson: steps are not commensurate with samples");
    }
    out.push_back({coarse_run[i].t, (4.0 * fine_run[i].summary.epr.delta -
                                     coarse_run[i].summary.epr.delta) /
                                        3.0});
  }
  return out;
}

}  // namespace lossycv
