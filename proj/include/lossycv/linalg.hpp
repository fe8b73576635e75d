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

#ifndef LOSSYCV_LINALG_HPP
#define LOSSYCV_LINALG_HPP

#include <vector>

#include <Eigen/Dense>

namespace lossycv {

/// Singular values below this fraction of the largest are treated as zero.
inline constexpr double kPseudoInverseRelTol = 1e-12;

/// Moore-Penrose pseudo-inverse via SVD.
Eigen::MatrixXd pseudo_inverse(const Eigen::MatrixXd& m,
                               double rel_tol = kPseudoInverseRelTol);

/// gamma <- (gamma + gamma^T) / 2.
void symmetrize(Eigen::MatrixXd& m);

/// Quadrature indices (2k, 2k+1) for every mode position k in `positions`.
std::vector<Eigen::Index> quadrature_indices(
    const std::vector<Eigen::Index>& positions);

/// Sorted moduli of the eigenvalues of a real square matrix.
Eigen::VectorXd eigenvalue_moduli(const Eigen::MatrixXd& m);

}  // namespace lossycv

#endif  // LOSSYCV_LINALG_HPP
