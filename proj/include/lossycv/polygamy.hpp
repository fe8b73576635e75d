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

#ifndef LOSSYCV_POLYGAMY_HPP
#define LOSSYCV_POLYGAMY_HPP

#include <vector>

#include "lossycv/asymmetric.hpp"
#include "lossycv/channel.hpp"

namespace lossycv {

/// Lossless 1 -> M splitter on light modes signal(0) .. signal(M-1), built
/// as a chain of beam_splitter_map's followed by phase flips so that every
/// output carries amplitude +1/sqrt(M) of the signal(0) input.
SymplecticMap equal_splitter(int m_sites);

struct PolygamyOptions {
  long samples = 100;
  LightBasis basis = LightBasis::kFlippedVacuumPort;
};

struct PolygamyPair {
  int receiver = 0;
  Trajectory trajectory;
};

struct PolygamyResult {
  int m_sites = 0;
  /// 1 - 1/M: the loss seen by each receiver.
  double effective_epsilon = 0.0;
  std::vector<PolygamyPair> pairs;
};

/// One sender gas distributes entanglement to M receiver gases, one per
/// splitter output. For each receiver i the sender couples to the full
/// input pulse, every receiver j couples to output j, output i is
/// measured in x and the remaining outputs are discarded. The sender and
/// receiver i then form a two-mode state (atom1, aux(i)).
///
/// params.epsilon is ignored. Throws std::invalid_argument for M < 2.
PolygamyResult run_polygamy(int m_sites, const ChannelParams& params,
                            const PolygamyOptions& options = {});

}  // namespace lossycv

#endif  // LOSSYCV_POLYGAMY_HPP
