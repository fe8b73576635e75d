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

#ifndef LOSSYCV_GAUSSIAN_STATE_HPP
#define LOSSYCV_GAUSSIAN_STATE_HPP

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "lossycv/modes.hpp"

namespace lossycv {

/// Slack on the uncertainty principle for physicality assertions.
inline constexpr double kUncertaintyTolerance = 1e-9;

/// Block-diagonal commutator matrix with per-mode block [[0, 1], [-1, 0]].
Eigen::MatrixXd commutator_matrix(Eigen::Index n_modes);

/// Mean-free multimode Gaussian state.
///
/// The covariance matrix uses the vacuum-normalized convention
/// gamma_ij = 2 Re<dy_i dy_j>, so the vacuum is the identity and every
/// diagonal entry is twice a variance. First moments are not tracked: every
/// operation in this library acts on gamma alone, and homodyne conditioning
/// does not depend on the measured value.
class GaussianState {
 public:
  /// Throws std::invalid_argument if `gamma` is not 2n x 2n for n modes,
  /// has a non-positive diagonal entry, or repeats a mode label.
  GaussianState(std::vector<ModeLabel> modes, Eigen::MatrixXd gamma);

  const Eigen::MatrixXd& gamma() const { return gamma_; }
  std::span<const ModeLabel> modes() const { return modes_; }
  Eigen::Index num_modes() const {
    return static_cast<Eigen::Index>(modes_.size());
  }

  bool contains(const ModeLabel& mode) const;
  /// Position of `mode` in the register; throws std::invalid_argument if
  /// absent.
  Eigen::Index index_of(const ModeLabel& mode) const;

  /// Covariance restricted to `selection`, in the order given.
  Eigen::MatrixXd submatrix(std::span<const ModeLabel> selection) const;

 private:
  std::vector<ModeLabel> modes_;
  Eigen::MatrixXd gamma_;
};

/// Linear quadrature map y -> S y acting on the listed modes of a register.
/// Modes not listed are left untouched, so a two-mode map can be applied to
/// any register that contains both modes.
struct SymplecticMap {
  std::vector<ModeLabel> modes;
  Eigen::MatrixXd matrix;
};

/// Largest entry of |S sigma S^T - sigma|.
double symplectic_defect(const Eigen::MatrixXd& s);

/// Sorted symplectic eigenvalues (moduli of the eigenvalues of
/// i sigma^-1 gamma, one per degenerate pair).
Eigen::VectorXd symplectic_eigenvalues(const Eigen::MatrixXd& gamma);

bool is_physical(const Eigen::MatrixXd& gamma,
                 double tol = kUncertaintyTolerance);

GaussianState vacuum_state(std::vector<ModeLabel> modes);
/// Vacuum on `n_modes` auxiliary modes labelled aux(0) .. aux(n-1).
GaussianState vacuum_state(Eigen::Index n_modes);

/// Single light mode with covariance diag(1/r, r). r > 1 squeezes x.
GaussianState squeezed_light_state(double r,
                                   ModeLabel mode = ModeLabel::signal());

/// Single-mode squeezer x -> x / sqrt(r), p -> p sqrt(r).
SymplecticMap single_mode_squeezer(double r, ModeLabel mode);

/// Phase rotation by pi: (x, p) -> (-x, -p).
SymplecticMap phase_flip(ModeLabel mode);

/// Loss beam splitter with intensity transmission 1 - epsilon, expressing
/// the output quadratures in terms of the inputs:
///   q_signal' =  sqrt(1-eps) q_signal + sqrt(eps) q_vacuum
///   q_vacuum' = -sqrt(eps) q_signal + sqrt(1-eps) q_vacuum
/// for q in {x, p}. Requires 0 <= epsilon < 1.
SymplecticMap beam_splitter_map(double epsilon, ModeLabel signal,
                                ModeLabel vacuum);

/// gamma -> S gamma S^T on the map's modes, then re-symmetrized.
GaussianState apply_symplectic(const GaussianState& state,
                               const SymplecticMap& map);

/// Mixes `mode` with fresh vacuum: x -> sqrt(1-eps) x + sqrt(eps) x_noise.
GaussianState loss_channel(const GaussianState& state, const ModeLabel& mode,
                           double epsilon);

/// Block-diagonal direct sum. Throws if the registers share a label.
GaussianState attach(const GaussianState& state, const GaussianState& other);

/// Traces out `modes`.
GaussianState discard(const GaussianState& state,
                      std::span<const ModeLabel> modes);
GaussianState discard(const GaussianState& state, const ModeLabel& mode);

/// Conditions on a homodyne measurement of one quadrature of
/// `measured_mode` and removes that mode:
///   A -> A - C (pi B pi)^- C^T
/// with pi the projector onto the measured quadrature.
GaussianState homodyne_update(const GaussianState& state,
                              const ModeLabel& measured_mode,
                              Quadrature quadrature);

}  // namespace lossycv

#endif  // LOSSYCV_GAUSSIAN_STATE_HPP
