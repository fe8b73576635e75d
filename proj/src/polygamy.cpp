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

#include "lossycv/polygamy.hpp"

#include <cmath>
#include <stdexcept>

#include "lossycv/hamiltonian.hpp"
#include "lossycv/stepper.hpp"

namespace lossycv {
namespace {

void require_sites(int m_sites) {
  if (m_sites < 2) {
    throw std::invalid_argument("polygamy needs at least 2 sites, got " +
                                std::to_string(m_sites));
  }
}

std::vector<ModeLabel> light_modes(int m_sites) {
  std::vector<ModeLabel> out;
  for (int j = 0; j < m_sites; ++j) out.push_back(ModeLabel::signal(j));
  return out;
}

}  // namespace

SymplecticMap equal_splitter(int m_sites) {
  require_sites(m_sites);
  const Eigen::Index n = 2 * m_sites;
  Eigen::MatrixXd u = Eigen::MatrixXd::Identity(n, n);
  for (int k = 0; k + 1 < m_sites; ++k) {
    const double eps = 1.0 - 1.0 / static_cast<double>(m_sites - k);
    const SymplecticMap bs = beam_splitter_map(
        eps, ModeLabel::signal(k), ModeLabel::signal(k + 1));
    Eigen::MatrixXd step = Eigen::MatrixXd::Identity(n, n);
    step.block(2 * k, 2 * k, 4, 4) = bs.matrix;
    u = step * u;
  }
  for (int j = 0; j < m_sites; ++j) {
    if (u(2 * j, 0) < 0.0) u.middleRows(2 * j, 2) *= -1.0;
  }
  return {light_modes(m_sites), u};
}

PolygamyResult run_polygamy(int m_sites, const ChannelParams& params,
                            const PolygamyOptions& options) {
  require_sites(m_sites);
  ChannelParams p = params;
  p.epsilon = 0.0;
  p.validate();

  const auto lights = light_modes(m_sites);
  GaussianState light = squeezed_light_state(p.r, lights[0]);
  light = attach(light, vacuum_state(std::vector<ModeLabel>(
                            lights.begin() + 1, lights.end())));
  light = apply_symplectic(light, equal_splitter(m_sites));

  std::vector<ModeLabel> kept{ModeLabel::atom1()};
  for (int j = 0; j < m_sites; ++j) kept.push_back(ModeLabel::aux(j));
  std::vector<ModeLabel> all = kept;
  all.insert(all.end(), lights.begin(), lights.end());

  const double k = p.kappa_tau();
  const double u = 1.0 / std::sqrt(static_cast<double>(m_sites));
  const long steps = p.steps();
  const std::vector<long> samples = sample_steps(steps, options.samples);
  using Q = Quadrature;

  PolygamyResult result;
  result.m_sites = m_sites;
  result.effective_epsilon = 1.0 - 1.0 / static_cast<double>(m_sites);
  for (int i = 0; i < m_sites; ++i) {
    std::vector<BilinearTerm> terms;
    for (int j = 0; j < m_sites; ++j) {
      const double sign =
          (j == i || options.basis == LightBasis::kDirect) ? 1.0 : -1.0;
      terms.push_back({sign * k * u, ModeLabel::atom1(), Q::kP, lights[j], Q::kP});
      terms.push_back({k * u, ModeLabel::aux(j), Q::kP, lights[j], Q::kP});
    }
    const HomodyneStep step(kept, bilinear_evolution(all, terms), light,
                            lights[static_cast<std::size_t>(i)], Q::kX);

    Eigen::MatrixXd gamma = Eigen::MatrixXd::Identity(2 * (m_sites + 1),
                                                      2 * (m_sites + 1));
    const std::vector<Eigen::Index> pair{0, 1, 2 + 2 * i, 3 + 2 * i};
    PolygamyPair out{i, {}};
    std::size_t next = 0;
    for (long n = 0; n <= steps; ++n) {
      if (next < samples.size() && samples[next] == n) {
        const Eigen::Matrix4d block = gamma(pair, pair);
        out.trajectory.push_back({static_cast<double>(n) * p.tau,
                                  summarize(block)});
        ++next;
      }
      if (n == steps) break;
      step.apply(gamma);
    }
    result.pairs.push_back(std::move(out));
  }
  return result;
}

}  // namespace lossycv
