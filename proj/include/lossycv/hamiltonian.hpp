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

#ifndef LOSSYCV_HAMILTONIAN_HPP
#define LOSSYCV_HAMILTONIAN_HPP

#include <vector>

#include "lossycv/gaussian_state.hpp"

namespace lossycv {

/// One term coupling * q_a * q_b of a bilinear Hamiltonian (a != b).
struct BilinearTerm {
  double coupling;
  ModeLabel mode_a;
  Quadrature quad_a;
  ModeLabel mode_b;
  Quadrature quad_b;
};

/// Exact propagator S = exp(sigma H) for H = sum of `terms` applied over one
/// light segment (couplings already carry the segment's kappa_tau), from the
/// Heisenberg equations dy/dt = sigma H y. The result acts on `modes`.
SymplecticMap bilinear_evolution(const std::vector<ModeLabel>& modes,
                                 const std::vector<BilinearTerm>& terms);

}  // namespace lossycv

#endif  // LOSSYCV_HAMILTONIAN_HPP
