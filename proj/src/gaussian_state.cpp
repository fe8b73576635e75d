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

#include "lossycv/gaussian_state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "lossycv/linalg.hpp"

namespace lossycv {

std::string to_string(const ModeLabel& mode) {
  switch (mode.kind) {
    case ModeKind::kAtom1:
      return "atom1";
    case ModeKind::kAtom2:
      return "atom2";
    case ModeKind::kLightSignal:
      return "signal" + std::to_string(mode.index);
    case ModeKind::kLightVacuum:
      return "vacuum" + std::to_string(mode.index);
    case ModeKind::kAtomAux:
      return "aux" + std::to_string(mode.index);
  }
  return "unknown";
}

Eigen::MatrixXd commutator_matrix(Eigen::Index n_modes) {
  Eigen::MatrixXd sigma = Eigen::MatrixXd::Zero(2 * n_modes, 2 * n_modes);
  for (Eigen::Index k = 0; k < n_modes; ++k) {
    sigma(2 * k, 2 * k + 1) = 1.0;
    sigma(2 * k + 1, 2 * k) = -1.0;
  }
  return sigma;
}

GaussianState::GaussianState(std::vector<ModeLabel> modes,
                             Eigen::MatrixXd gamma)
    : modes_(std::move(modes)), gamma_(std::move(gamma)) {
  const auto dim = 2 * static_cast<Eigen::Index>(modes_.size());
  if (gamma_.rows() != dim || gamma_.cols() != dim) {
    throw std::invalid_argument(
        "GaussianState: covariance is " + std::to_string(gamma_.rows()) + "x" +
        std::to_string(gamma_.cols()) + ", expected " + std::to_string(dim) +
        "x" + std::to_string(dim));
  }
  for (std::size_t i = 0; i < modes_.size(); ++i) {
    for (std::size_t j = i + 1; j < modes_.size(); ++j) {
      if (modes_[i] == modes_[j]) {
        throw std::invalid_argument("GaussianState: duplicate mode " +
                                    to_string(modes_[i]));
      }
    }
  }
  for (Eigen::Index i = 0; i < dim; ++i) {
    if (!(gamma_(i, i) > 0.0)) {
      throw std::invalid_argument(
          "GaussianState: non-positive diagonal entry at " + std::to_string(i));
    }
  }
  symmetrize(gamma_);
}

bool GaussianState::contains(const ModeLabel& mode) const {
  return std::find(modes_.begin(), modes_.end(), mode) != modes_.end();
}

Eigen::Index GaussianState::index_of(const ModeLabel& mode) const {
  auto it = std::find(modes_.begin(), modes_.end(), mode);
  if (it == modes_.end()) {
    throw std::invalid_argument("unknown mode " + to_string(mode));
  }
  return static_cast<Eigen::Index>(it - modes_.begin());
}

Eigen::MatrixXd GaussianState::submatrix(
    std::span<const ModeLabel> selection) const {
  std::vector<Eigen::Index> positions;
  positions.reserve(selection.size());
  for (const auto& m : selection) positions.push_back(index_of(m));
  const auto idx = quadrature_indices(positions);
  return gamma_(idx, idx);
}

double symplectic_defect(const Eigen::MatrixXd& s) {
  if (s.rows() != s.cols() || s.rows() % 2 != 0) {
    throw std::invalid_argument("symplectic_defect: matrix must be 2n x 2n");
  }
  const Eigen::MatrixXd sigma = commutator_matrix(s.rows() / 2);
  return (s * sigma * s.transpose() - sigma).cwiseAbs().maxCoeff();
}

Eigen::VectorXd symplectic_eigenvalues(const Eigen::MatrixXd& gamma) {
  const Eigen::Index n = gamma.rows() / 2;
  // sigma^-1 = -sigma; eigenvalues of sigma^-1 gamma are +-i nu_k.
  const Eigen::MatrixXd m = -commutator_matrix(n) * gamma;
  const Eigen::VectorXd moduli = eigenvalue_moduli(m);
  Eigen::VectorXd nu(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    nu(k) = 0.5 * (moduli(2 * k) + moduli(2 * k + 1));
  }
  return nu;
}

bool is_physical(const Eigen::MatrixXd& gamma, double tol) {
  if (gamma.rows() == 0) return true;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gamma,
                                                    Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() <= 0.0) return false;
  // Rounding in the symplectic spectrum grows with the entries of gamma.
  const double scale = std::max(1.0, gamma.cwiseAbs().maxCoeff());
  return symplectic_eigenvalues(gamma).minCoeff() >= 1.0 - tol * scale;
}

GaussianState vacuum_state(std::vector<ModeLabel> modes) {
  const auto dim = 2 * static_cast<Eigen::Index>(modes.size());
  return GaussianState(std::move(modes), Eigen::MatrixXd::Identity(dim, dim));
}

GaussianState vacuum_state(Eigen::Index n_modes) {
  if (n_modes < 1) {
    throw std::invalid_argument("vacuum_state: n_modes must be >= 1");
  }
  std::vector<ModeLabel> modes;
  for (Eigen::Index k = 0; k < n_modes; ++k) {
    modes.push_back(ModeLabel::aux(static_cast<int>(k)));
  }
  return vacuum_state(std::move(modes));
}

GaussianState squeezed_light_state(double r, ModeLabel mode) {
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw std::domain_error("squeezed_light_state: r must be positive, got " +
                            std::to_string(r));
  }
  Eigen::MatrixXd gamma(2, 2);
  gamma << 1.0 / r, 0.0, 0.0, r;
  return GaussianState({mode}, std::move(gamma));
}

SymplecticMap single_mode_squeezer(double r, ModeLabel mode) {
  if (!(r > 0.0)) {
    throw std::domain_error("single_mode_squeezer: r must be positive");
  }
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(2, 2);
  s(0, 0) = 1.0 / std::sqrt(r);
  s(1, 1) = std::sqrt(r);
  return {{mode}, std::move(s)};
}

SymplecticMap phase_flip(ModeLabel mode) {
  return {{mode}, -Eigen::MatrixXd::Identity(2, 2)};
}

SymplecticMap beam_splitter_map(double epsilon, ModeLabel signal,
                                ModeLabel vacuum) {
  if (!(epsilon >= 0.0 && epsilon < 1.0)) {
    throw std::domain_error("beam_splitter_map: epsilon must lie in [0, 1), got " +
                            std::to_string(epsilon));
  }
  const double t = std::sqrt(1.0 - epsilon);
  const double s = std::sqrt(epsilon);
  // Ordering (x_s, p_s, x_v, p_v); the same rotation acts on x and on p.
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(4, 4);
  for (int q = 0; q < 2; ++q) {
    m(q, q) = t;
    m(q, 2 + q) = s;
    m(2 + q, q) = -s;
    m(2 + q, 2 + q) = t;
  }
  return {{signal, vacuum}, std::move(m)};
}

GaussianState apply_symplectic(const GaussianState& state,
                               const SymplecticMap& map) {
  const auto dim = 2 * static_cast<Eigen::Index>(map.modes.size());
  if (map.matrix.rows() != dim || map.matrix.cols() != dim) {
    throw std::invalid_argument(
        "apply_symplectic: map matrix does not match its mode list");
  }
  std::vector<Eigen::Index> positions;
  positions.reserve(map.modes.size());
  for (const auto& m : map.modes) positions.push_back(state.index_of(m));
  const auto idx = quadrature_indices(positions);

  Eigen::MatrixXd gamma = state.gamma();
  const Eigen::MatrixXd rows = map.matrix * gamma(idx, Eigen::all);
  gamma(idx, Eigen::all) = rows;
  const Eigen::MatrixXd cols = gamma(Eigen::all, idx) * map.matrix.transpose();
  gamma(Eigen::all, idx) = cols;
  return GaussianState({state.modes().begin(), state.modes().end()},
                       std::move(gamma));
}

GaussianState loss_channel(const GaussianState& state, const ModeLabel& mode,
                           double epsilon) {
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
    throw std::domain_error("loss_channel: epsilon must lie in [0, 1], got " +
                            std::to_string(epsilon));
  }
  const Eigen::Index k = state.index_of(mode);
  const double amp = std::sqrt(1.0 - epsilon);
  Eigen::MatrixXd gamma = state.gamma();
  gamma.middleRows(2 * k, 2) *= amp;
  gamma.middleCols(2 * k, 2) *= amp;
  gamma.block(2 * k, 2 * k, 2, 2) += epsilon * Eigen::Matrix2d::Identity();
  return GaussianState({state.modes().begin(), state.modes().end()},
                       std::move(gamma));
}

GaussianState attach(const GaussianState& state, const GaussianState& other) {
  std::vector<ModeLabel> modes(state.modes().begin(), state.modes().end());
  modes.insert(modes.end(), other.modes().begin(), other.modes().end());
  const Eigen::Index n = state.gamma().rows();
  const Eigen::Index m = other.gamma().rows();
  Eigen::MatrixXd gamma = Eigen::MatrixXd::Zero(n + m, n + m);
  gamma.topLeftCorner(n, n) = state.gamma();
  gamma.bottomRightCorner(m, m) = other.gamma();
  return GaussianState(std::move(modes), std::move(gamma));
}

GaussianState discard(const GaussianState& state,
                      std::span<const ModeLabel> modes) {
  for (const auto& m : modes) state.index_of(m);  // throws on unknown modes
  std::vector<ModeLabel> kept;
  for (const auto& m : state.modes()) {
    if (std::find(modes.begin(), modes.end(), m) == modes.end()) {
      kept.push_back(m);
    }
  }
  Eigen::MatrixXd gamma = state.submatrix(kept);
  return GaussianState(std::move(kept), std::move(gamma));
}

GaussianState discard(const GaussianState& state, const ModeLabel& mode) {
  return discard(state, std::span<const ModeLabel>(&mode, 1));
}

GaussianState homodyne_update(const GaussianState& state,
                              const ModeLabel& measured_mode,
                              Quadrature quadrature) {
  const Eigen::Index k = state.index_of(measured_mode);
  std::vector<ModeLabel> rest;
  std::vector<Eigen::Index> rest_pos;
  for (Eigen::Index i = 0; i < state.num_modes(); ++i) {
    if (i != k) {
      rest.push_back(state.modes()[static_cast<std::size_t>(i)]);
      rest_pos.push_back(i);
    }
  }
  const auto rest_idx = quadrature_indices(rest_pos);
  const std::vector<Eigen::Index> meas_idx{2 * k, 2 * k + 1};

  const Eigen::MatrixXd& g = state.gamma();
  Eigen::MatrixXd a = g(rest_idx, rest_idx);
  const Eigen::MatrixXd b = g(meas_idx, meas_idx);
  const Eigen::MatrixXd c = g(rest_idx, meas_idx);

  Eigen::MatrixXd pi = Eigen::MatrixXd::Zero(2, 2);
  const int q = quadrature_offset(quadrature);
  pi(q, q) = 1.0;
  a -= c * pseudo_inverse(pi * b * pi) * c.transpose();
  return GaussianState(std::move(rest), std::move(a));
}

}  // namespace lossycv
