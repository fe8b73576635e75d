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

#ifndef LOSSYCV_SWEEP_HPP
#define LOSSYCV_SWEEP_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lossycv {

enum class Scheme { kAsymmetric, kSymmetric, kEpr, kPolygamy };

const char* to_string(Scheme scheme);
/// Accepts "asymmetric", "symmetric", "epr" and "polygamy".
std::optional<Scheme> parse_scheme(std::string_view name);

struct SweepRecord {
  Scheme scheme = Scheme::kAsymmetric;
  double epsilon = 0.0;
  double r = 1.0;
  std::optional<double> t;  // empty: asymptotic
  double n = 1.0;
  double log_negativity = 0.0;
  double delta = 1.0;
  double f_symmetric = 0.5;
  double f_bk_opt = 0.5;

  bool operator==(const SweepRecord&) const = default;
};

struct GridAxis {
  double lo = 0.0;
  double hi = 1.0;
  int n = 1;
  bool log_spaced = false;

  /// n points from lo to hi inclusive; a single point sits at lo.
  std::vector<double> values() const;
};

/// Parses "lo:hi:n". Throws std::invalid_argument on malformed input,
/// n < 1, lo > hi, or (for log spacing) lo <= 0.
GridAxis parse_grid_axis(std::string_view spec, bool log_spaced);

struct SweepConfig {
  Scheme scheme = Scheme::kAsymmetric;
  GridAxis epsilon{0.01, 0.99, 50, false};
  GridAxis r{0.1, 10.0, 50, true};
  double kappa2 = 1.0;
  /// Evaluation time. Empty: closed-form long-time limits.
  std::optional<double> t;
  /// Replaces the closed-form limits by the finite-time formulas at
  /// kappa2 t = asymptotic_time.
  std::optional<double> asymptotic_time;
  /// One record per epsilon at the r in [r.lo, r.hi] minimizing N.
  bool envelope = false;
  /// Polygamy: the epsilon axis is replaced by 1 - 1/M.
  int m_sites = 2;
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned jobs = 0;
};

/// Evaluates one grid point with the analytic results of each scheme.
SweepRecord evaluate_point(Scheme scheme, double epsilon, double r,
                           double kappa2, std::optional<double> t);

/// Row-major (epsilon outer, r inner) records, computed in parallel and
/// returned in grid order.
std::vector<SweepRecord> run_sweep(const SweepConfig& config);

}  // namespace lossycv

#endif  // LOSSYCV_SWEEP_HPP
