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

#include "lossycv/linalg.hpp"

#include <algorithm>

namespace lossycv {

Eigen::MatrixXd pseudo_inverse(const Eigen::MatrixXd& m, double rel_tol) {
  if (m.size() == 0) {
    return Eigen::MatrixXd(m.cols(), m.rows());
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m,
                                        Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& s = svd.singularValues();
  const double cutoff = rel_tol * (s.size() > 0 ? s(0) : 0.0);
  Eigen::VectorXd s_inv = Eigen::VectorXd::Zero(s.size());
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > cutoff && s(i) > 0.0) {
      s_inv(i) = 1.0 / s(i);
    }
  }
  return svd.matrixV() * s_inv.asDiagonal() * svd.matrixU().transpose();
}

void symmetrize(Eigen::MatrixXd& m) {
  m = 0.5 * (m + m.transpose()).eval();
}

std::vector<Eigen::Index> quadrature_indices(
    const std::vector<Eigen::Index>& positions) {
  std::vector<Eigen::Index> idx;
  idx.reserve(2 * positions.size());
  for (Eigen::Index k : positions) {
    idx.push_back(2 * k);
    idx.push_back(2 * k + 1);
  }
  return idx;
}

Eigen::VectorXd eigenvalue_moduli(const Eigen::MatrixXd& m) {
  Eigen::EigenSolver<Eigen::MatrixXd> solver(m, /*computeEigenvectors=*/false);
  Eigen::VectorXd moduli = solver.eigenvalues().cwiseAbs();
  std::sort(moduli.begin(), moduli.end());
  return moduli;
}

}  // namespace lossycv
