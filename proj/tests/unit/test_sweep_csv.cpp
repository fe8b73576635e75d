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

#include <gtest/gtest.h>

#include <cmath>

#include "lossycv/csv.hpp"
#include "lossycv/sweep.hpp"

namespace lossycv {
namespace {

TEST(Grid, ParsesAndSpaces) {
  const GridAxis lin = parse_grid_axis("0:1:5", false);
  EXPECT_EQ(lin.values(), (std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0}));
  const auto logv = parse_grid_axis("0.1:10:3", true).values();
  EXPECT_NEAR(logv[1], 1.0, 1e-15);
  EXPECT_DOUBLE_EQ(logv[2], 10.0);
  EXPECT_EQ(parse_grid_axis("0.3:0.3:1", false).values().size(), 1u);
  for (const char* bad : {"0:1", "0:1:0", "1:0:3", "a:1:3", "0:1:2.5", "0:1:3:4"}) {
    EXPECT_THROW(parse_grid_axis(bad, false), std::invalid_argument) << bad;
  }
  EXPECT_THROW(parse_grid_axis("0:10:3", true), std::invalid_argument);
}

TEST(Csv, NumberFormat) {
  EXPECT_EQ(format_number(0.1), "0.1");
  EXPECT_EQ(format_number(1.0 / 3.0), "0.333333333333");
  EXPECT_EQ(format_number(NAN), "nan");
  EXPECT_EQ(format_number(-INFINITY), "-inf");
  EXPECT_EQ(csv_line({"a", "b"}), "a,b\n");
}

TEST(Csv, RoundTrip) {
  SweepConfig config;
  config.scheme = Scheme::kAsymmetric;
  config.epsilon = parse_grid_axis("0:0.9:4", false);
  config.r = parse_grid_axis("0.1:10:3", true);
  std::vector<SweepRecord> records = run_sweep(config);
  config.scheme = Scheme::kSymmetric;
  config.t = 2.0;
  for (const auto& r : run_sweep(config)) records.push_back(r);
  const std::string text = emit_records(records);
  const auto parsed = parse_records(text);
  ASSERT_EQ(parsed.size(), records.size());
  EXPECT_EQ(emit_records(parsed), text);
  for (std::size_t i = 0; i < records.size(); ++i) {
    EXPECT_EQ(parsed[i].scheme, records[i].scheme);
    EXPECT_EQ(parsed[i].t.has_value(), records[i].t.has_value());
    EXPECT_NEAR(parsed[i].n, records[i].n, 1e-11 * std::abs(records[i].n));
  }
  EXPECT_THROW(parse_records("bad header\n"), std::invalid_argument);
  EXPECT_THROW(parse_records(std::string(kSweepHeader) + "\nepr,1,2\n"),
               std::invalid_argument);
}

TEST(Sweep, PlateauAcrossR) {
  SweepConfig config;
  config.epsilon = parse_grid_axis("0.333333333333333333:0.333333333333333333:1",
                                   false);
  for (const auto& rec : run_sweep(config)) {
    EXPECT_NEAR(rec.n, 1.0 / 3.0, 1e-6);
    EXPECT_FALSE(rec.t.has_value());
  }
  EXPECT_EQ(run_sweep(config).size(), 50u);
}

TEST(Sweep, SymmetricEnvelopeIsEpsilon) {
  SweepConfig config;
  config.scheme = Scheme::kSymmetric;
  config.envelope = true;
  config.epsilon = parse_grid_axis("0.1:0.9:9", false);
  const auto recs = run_sweep(config);
  ASSERT_EQ(recs.size(), 9u);
  for (const auto& rec : recs) {
    EXPECT_NEAR(rec.n, rec.epsilon, 1e-9);
    EXPECT_NEAR(rec.r, (1.0 - rec.epsilon) / rec.epsilon, 1e-5);
  }
}

TEST(Sweep, EprEnvelopeAtLargestR) {
  SweepConfig config;
  config.scheme = Scheme::kEpr;
  config.envelope = true;
  config.epsilon = parse_grid_axis("0:0.9:4", false);
  for (const auto& rec : run_sweep(config)) {
    EXPECT_DOUBLE_EQ(rec.r, 10.0);
    EXPECT_NEAR(rec.n, 1.0 + std::sqrt(1.0 - rec.epsilon) * (0.1 - 1.0), 1e-12);
  }
}

TEST(Sweep, PolygamyUsesSplitterLoss) {
  SweepConfig config;
  config.scheme = Scheme::kPolygamy;
  config.m_sites = 4;
  const auto recs = run_sweep(config);
  ASSERT_EQ(recs.size(), 50u);
  EXPECT_DOUBLE_EQ(recs.front().epsilon, 0.75);
  for (const auto& rec : recs) EXPECT_LE(rec.f_bk_opt, 4.0 / 7.0 + 1e-6);
}

TEST(Sweep, DeterministicAcrossWorkers) {
  SweepConfig config;
  config.scheme = Scheme::kAsymmetric;
  config.t = 3.0;
  config.jobs = 1;
  const std::string a = emit_records(run_sweep(config));
  config.jobs = 7;
  EXPECT_EQ(emit_records(run_sweep(config)), a);
}

TEST(Sweep, FiniteTimeMatchesLimitLate) {
  const SweepRecord late =
      evaluate_point(Scheme::kAsymmetric, 0.4, 2.0, 1.0, 1e7);
  const SweepRecord lim =
      evaluate_point(Scheme::kAsymmetric, 0.4, 2.0, 1.0, std::nullopt);
  EXPECT_NEAR(late.n, lim.n, 1e-4);
  EXPECT_NEAR(late.f_bk_opt, lim.f_bk_opt, 1e-3);
  EXPECT_TRUE(std::isnan(lim.f_symmetric));
  EXPECT_THROW(evaluate_point(Scheme::kEpr, 1.0, 2.0, 1.0, std::nullopt),
               std::domain_error);
}

}  // namespace
}  // namespace lossycv
