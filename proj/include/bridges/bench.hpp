// Copyright 2026 The bridges Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bridges/error.hpp"
#include "bridges/gf2.hpp"
#include "bridges/gm_syy.hpp"
#include "bridges/rng.hpp"

namespace bridges {

struct TimingStats {
  double median_ms = 0.0;
  double p10_ms = 0.0;
  double p90_ms = 0.0;
};

/// Linear-interpolated quantile of an unsorted sample, q ∈ [0, 1].
inline double quantile(std::vector<double> xs, double q) {
  if (xs.empty()) throw InvalidArgument("quantile: empty sample");
  std::sort(xs.begin(), xs.end());
  const double pos = q * static_cast<double>(xs.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = static_cast<std::size_t>(std::ceil(pos));
  return xs[lo] + (xs[hi] - xs[lo]) * (pos - static_cast<double>(lo));
}

inline TimingStats timing_stats(const std::vector<double>& ms) {
  return {quantile(ms, 0.5), quantile(ms, 0.1), quantile(ms, 0.9)};
}

template <typename F>
double time_ms(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
  std::size_t points = 0;
};

/// Ordinary least squares y ≈ slope·x + intercept. A constant y is fit
/// exactly by a horizontal line, reported as R² = 1.
inline LinearFit fit_linear(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw InvalidArgument("fit_linear: size mismatch");
  if (std::set<double>(x.begin(), x.end()).size() < 3) {
    throw InvalidArgument("fit_linear: insufficient data, need at least 3 distinct sizes");
  }
  const double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  LinearFit f;
  f.points = x.size();
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  double ss_res = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double e = y[i] - (f.slope * x[i] + f.intercept);
    ss_res += e * e;
  }
  f.r2 = syy > 0 ? 1.0 - ss_res / syy : 1.0;
  return f;
}

/// One CSV row: bridge,param_n,ell,bits,median_ms,p10_ms,p90_ms
struct BenchRow {
  std::string bridge;
  std::size_t param_n = 0;
  std::size_t ell = 0;
  std::size_t bits = 0;
  TimingStats t;
};

inline constexpr const char* kBenchCsvHeader = "bridge,param_n,ell,bits,median_ms,p10_ms,p90_ms";

inline void write_bench_csv(std::ostream& os, const std::vector<BenchRow>& rows) {
  os << kBenchCsvHeader << "\n";
  for (const auto& r : rows) {
    os << r.bridge << ',' << r.param_n << ',' << r.ell << ',' << r.bits << ',' << r.t.median_ms
       << ',' << r.t.p10_ms << ',' << r.t.p90_ms << "\n";
  }
}

inline std::vector<BenchRow> read_bench_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != kBenchCsvHeader) {
    throw InvalidArgument(std::string("bench csv: expected header '") + kBenchCsvHeader + "'");
  }
  std::vector<BenchRow> rows;
  std::size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    if (f.size() != 7) {
      throw InvalidArgument("bench csv: line " + std::to_string(lineno) + " needs 7 fields");
    }
    try {
      rows.push_back({f[0], std::stoul(f[1]), std::stoul(f[2]), std::stoul(f[3]),
                      {std::stod(f[4]), std::stod(f[5]), std::stod(f[6])}});
    } catch (const std::logic_error&) {
      throw InvalidArgument("bench csv: line " + std::to_string(lineno) + " is not numeric");
    }
  }
  return rows;
}

/// Median time against param_n.
inline LinearFit bench_trend(const std::vector<BenchRow>& rows) {
  std::vector<double> x, y;
  for (const auto& r : rows) {
    x.push_back(static_cast<double>(r.param_n));
    y.push_back(r.t.median_ms);
  }
  return fit_linear(x, y);
}

/// Times compare_eval alone (GM encryption of the inputs excluded) for
/// each vector length, with one untimed warm-up run per length.
inline std::vector<BenchRow> bench_gm_syy_compare(const std::vector<std::size_t>& ns,
                                                  std::size_t reps, std::size_t ell,
                                                  std::size_t bits, Rng& rng) {
  if (reps == 0) throw InvalidArgument("bench: reps must be >= 1");
  const GmSyyBridge bridge(GmScheme(bits), ell);
  const auto mat = bridge_keygen(bridge, rng);
  std::vector<BenchRow> rows;
  for (std::size_t n : ns) {
    if (n == 0) throw InvalidArgument("bench: n must be >= 1");
    std::vector<double> samples;
    for (std::size_t r = 0; r <= reps; ++r) {
      std::vector<GmCiphertext> cs, ds;
      for (Bit b : random_bits_vector(n, rng)) cs.push_back(gm_enc(mat.pk1, b, rng));
      for (Bit b : random_bits_vector(n, rng)) ds.push_back(gm_enc(mat.pk1, b, rng));
      const double ms = time_ms([&] { (void)compare_eval(bridge, mat.pk1, mat.pk2, cs, ds, rng); });
      if (r > 0) samples.push_back(ms);
    }
    rows.push_back({"gm-syy", n, ell, bits, timing_stats(samples)});
  }
  return rows;
}

}  // namespace bridges
