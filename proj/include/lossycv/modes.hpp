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

#ifndef LOSSYCV_MODES_HPP
#define LOSSYCV_MODES_HPP

#include <string>

namespace lossycv {

enum class ModeKind { kAtom1, kAtom2, kLightSignal, kLightVacuum, kAtomAux };

/// Names one bosonic mode of a register. Each mode owns an (x, p) pair and
/// registers concatenate modes in order, so mode k occupies quadratures
/// 2k and 2k+1.
///
/// `index` distinguishes several modes of the same kind: receiver gases in
/// the polygamy construction (kAtomAux) and the light ports of a multi-way
/// splitter (kLightSignal / kLightVacuum).
struct ModeLabel {
  ModeKind kind = ModeKind::kAtomAux;
  int index = 0;

  friend bool operator==(const ModeLabel&, const ModeLabel&) = default;

  static constexpr ModeLabel atom1() { return {ModeKind::kAtom1, 0}; }
  static constexpr ModeLabel atom2() { return {ModeKind::kAtom2, 0}; }
  static constexpr ModeLabel signal(int i = 0) {
    return {ModeKind::kLightSignal, i};
  }
  static constexpr ModeLabel vacuum(int i = 0) {
    return {ModeKind::kLightVacuum, i};
  }
  static constexpr ModeLabel aux(int i) { return {ModeKind::kAtomAux, i}; }
};

enum class Quadrature { kX, kP };

/// Offset of `q` inside a mode's (x, p) pair.
constexpr int quadrature_offset(Quadrature q) {
  return q == Quadrature::kX ? 0 : 1;
}

std::string to_string(const ModeLabel& mode);

}  // namespace lossycv

#endif  // LOSSYCV_MODES_HPP
