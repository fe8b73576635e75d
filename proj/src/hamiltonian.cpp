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

#include "lossycv/hamiltonian.hpp"

#include <algorithm>
#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

namespace lossycv {
namespace {

Eigen::Index position(const std::vector<ModeLabel>& modes,
                      const ModeLabel& m) {
  auto it = std::find(modes.begin(), modes.end(), m);
  if (it == modes.end()) {
    throw std::invalid_argument("bilinear_evolution: unknown mode " +
                                to_string(m));
  }
  return static_cast<Eigen::Index>(it - modes.begin());
}

}  // namespace

SymplecticMap bilinear_evolution(const std::vector<ModeLabel>& modes,
                                 const std::vector<BilinearTerm>& terms) {
  const auto n = static_cast<Eigen::Index>(modes.size());
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  for (const auto& term : terms) {
    if (term.mode_a == term.mode_b) {
      throw std::invalid_argument(
          "bilinear_evolution: terms must couple distinct modes");
    }
    const Eigen::Index i =
        2 * position(modes, term.mode_a) + quadrature_offset(term.quad_a);
    const Eigen::Index j =
        2 * position(modes, term.mode_b) + quadrature_offset(term.quad_b);
    // H = 1/2 y^T h y, so each product q_a q_b appears in two entries.
    h(i, j) += term.coupling;
    h(j, i) += term.coupling;
  }
  const Eigen::MatrixXd generator = commutator_matrix(n) * h;
  // Terms whose quadratures all commute give a nilpotent generator, for
  // which the exponential is exactly I + generator.
  Eigen::MatrixXd s;
  if ((generator * generator).cwiseAbs().maxCoeff() == 0.0) {
    s = Eigen::MatrixXd::Identity(2 * n, 2 * n) + generator;
  } else {
    s = generator.exp();
  }
  return {modes, std::move(s)};
}

}  // namespace lossycv
