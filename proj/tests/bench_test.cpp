// Copyright 2026 The bridges Authors
// SPDX-License-Identifier: Apache-2.0

#include "bridges/bench.hpp"

#include <gtest/gtest.h>

#include <sstream>

namespace bridges {
namespace {

TEST(Quantile, MatchesLinearInterpolation) {
  const std::vector<double> xs = {5, 1, 3, 2, 4};
  EXPECT_DOUBLE_EQ(quantile(xs, 0.5), 3.0);
  EXPECT_DOUBLE_EQ(quantile(xs, 0.0), 1.0);
  EXPECT_DOUBLE_EQ(quantile(xs, 1.0), 5.0);
  EXPECT_DOUBLE_EQ(quantile(xs, 0.1), 1.4);
  EXPECT_DOUBLE_EQ(quantile({1, 2, 3, 4}, 0.5), 2.5);
  EXPECT_THROW(quantile({}, 0.5), InvalidArgument);
}

TEST(FitLinear, PerfectLineHasUnitR2) {
  const auto f = fit_linear({4, 8, 16, 32}, {9, 17, 33, 65});
  EXPECT_NEAR(f.slope, 2.0, 1e-12);
  EXPECT_NEAR(f.intercept, 1.0, 1e-12);
  EXPECT_NEAR(f.r2, 1.0, 1e-12);
}

TEST(FitLinear, ConstantDataHasZeroSlope) {
  const auto f = fit_linear({4, 8, 16, 32}, {3, 3, 3, 3});
  EXPECT_NEAR(f.slope, 0.0, 1e-12);
  EXPECT_EQ(f.r2, 1.0);
}

TEST(FitLinear, InsufficientDataRejected) {
  EXPECT_THROW(fit_linear({1, 2}, {1, 2}), InvalidArgument);
  EXPECT_THROW(fit_linear({1, 1, 2, 2}, {1, 1, 2, 2}), InvalidArgument);
  EXPECT_THROW(fit_linear({1, 2, 3}, {1, 2}), InvalidArgument);
}

TEST(BenchCsv, RoundTrip) {
  const std::vector<BenchRow> rows = {{"gm-syy", 4, 8, 512, {1.5, 1.25, 2.0}},
                                      {"gm-syy", 8, 8, 512, {3.0, 2.5, 3.5}}};
  std::stringstream ss;
  write_bench_csv(ss, rows);
  const auto back = read_bench_csv(ss);
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[1].param_n, 8u);
  EXPECT_DOUBLE_EQ(back[0].t.p10_ms, 1.25);
  std::stringstream bad("nope\n");
  EXPECT_THROW(read_bench_csv(bad), InvalidArgument);
  std::stringstream short_row(std::string(kBenchCsvHeader) + "\ngm-syy,4,8\n");
  EXPECT_THROW(read_bench_csv(short_row), InvalidArgument);
}

TEST(BenchGmSyy, ProducesOneRowPerSize) {
  Rng rng(1);
  const auto rows = bench_gm_syy_compare({2, 4, 6}, 3, 4, 64, rng);
  ASSERT_EQ(rows.size(), 3u);
  for (const auto& r : rows) {
    EXPECT_LE(r.t.p10_ms, r.t.median_ms);
    EXPECT_LE(r.t.median_ms, r.t.p90_ms);
  }
  EXPECT_NO_THROW(bench_trend(rows));
}

}  // namespace
}  // namespace bridges
