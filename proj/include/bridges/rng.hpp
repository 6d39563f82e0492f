// Copyright 2026 The bridges Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <random>
#include <vector>

#include "bridges/error.hpp"

namespace bridges {

using BigInt = mpz_class;

namespace detail {

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace detail

/// Seeded random source threaded explicitly through every randomized
/// operation. Not thread-safe; derive one stream per worker instead of
/// sharing.
///
/// Satisfies UniformRandomBitGenerator, so it can drive <random>
/// distributions and std::shuffle directly.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed = 0) : engine_(detail::splitmix64(seed)) {}

  /// Independent stream keyed by (seed, path...). Identical arguments give
  /// identical streams, which is what shared-seed game comparisons rely on.
  static Rng derive(std::uint64_t seed,
                    std::initializer_list<std::uint64_t> path) {
    std::uint64_t h = detail::splitmix64(seed ^ 0x5bd1e9955bd1e995ULL);
    for (std::uint64_t p : path) h = detail::splitmix64(h ^ detail::splitmix64(p));
    return Rng(h);
  }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }
  result_type operator()() { return engine_(); }

  std::uint64_t next_u64() { return engine_(); }

  // Splits off a child stream; the parent advances by one draw.
  Rng fork() { return Rng(next_u64()); }

  bool coin() { return (engine_() >> 63) != 0; }

  /// Uniform on [0, bound). bound must be positive.
  std::uint64_t uniform_below(std::uint64_t bound) {
    if (bound == 0) throw InvalidArgument("uniform_below: empty range");
    const std::uint64_t limit = max() - (max() % bound + 1) % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x > limit);
    return x % bound;
  }

  /// Uniform integer with exactly `bits` random low bits (value < 2^bits).
  BigInt random_bits(std::size_t bits) {
    BigInt out = 0;
    if (bits == 0) return out;
    const std::size_t words = (bits + 63) / 64;
    std::vector<std::uint64_t> buf(words);
    for (auto& w : buf) w = engine_();
    mpz_import(out.get_mpz_t(), words, -1, sizeof(std::uint64_t), 0, 0,
               buf.data());
    mpz_fdiv_r_2exp(out.get_mpz_t(), out.get_mpz_t(), bits);
    return out;
  }

  /// Uniform on [0, bound) by rejection. bound must be positive.
  BigInt uniform_below(const BigInt& bound) {
    if (sgn(bound) <= 0) throw InvalidArgument("uniform_below: empty range");
    const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
    BigInt x;
    do {
      x = random_bits(bits);
    } while (x >= bound);
    return x;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace bridges
