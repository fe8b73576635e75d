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

#include "lossycv/adjudication.hpp"

namespace lossycv {
namespace {

TEST(Adjudication, QuotedRates) {
  EXPECT_DOUBLE_EQ(quoted_alpha(0.5, 1.0, 2.0), 0.5);
  EXPECT_DOUBLE_EQ(quoted_beta(0.5, 1.0, 2.0), 2.0);
  // The closed forms agree with the quoted alpha only at r = 1.
  EXPECT_NEAR(alpha_from_quoted_closed_forms(0.3, 1.0, 1.0),
              quoted_alpha(0.3, 1.0, 1.0), 1e-15);
  EXPECT_GT(std::abs(alpha_from_quoted_closed_forms(0.3, 2.0, 1.0) -
                     quoted_alpha(0.3, 2.0, 1.0)),
            1e-3);
  EXPECT_DOUBLE_EQ(fidelity_candidate(1.0, 0.0, 0.0, 1.0), 0.5);
}

TEST(Adjudication, VerdictsAreStable) {
  AdjudicationGrid grid;
  grid.taus = {1e-2, 1e-3};
  const AdjudicationReport report = adjudicate(grid);
  EXPECT_TRUE(report.alpha_stable);
  EXPECT_TRUE(report.prefactor_stable);
  EXPECT_EQ(report.alpha_verdict, "quoted alpha holds");
  EXPECT_EQ(report.prefactor_verdict, "unit prefactor");
  for (const auto& row : report.prefactor) {
    if (row.at_optimal_r) EXPECT_NEAR(row.f_asymptotic, row.bound, 1e-9);
  }
  EXPECT_NE(format_report(report).find("prefactor verdict"), std::string::npos);
}

}  // namespace
}  // namespace lossycv
