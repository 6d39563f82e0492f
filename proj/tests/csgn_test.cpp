// Copyright 2026 The bridges Authors
// SPDX-License-Identifier: Apache-2.0

#include "bridges/csgn.hpp"

#include <gtest/gtest.h>

#include <set>

namespace bridges {
namespace {

Bit product_over_subset(const CsgnKey& k, const BitVector& v) {
  Bit out = 1;
  for (auto i : k.indices()) out = out && v[i];
  return out;
}

TEST(CsgnKeygen, SubsetHasRequestedSize) {
  Rng rng(1);
  for (int i = 0; i < 100; ++i) {
    const auto k = csgn_keygen({8, 2, 3, std::nullopt}, rng);
    EXPECT_EQ(k.s(), 3u);
    EXPECT_EQ(k.subset.size(), 8u);
  }
}

TEST(CsgnKeygen, DistinctSubsetsAcrossSeeds) {
  std::set<BitVector> seen;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    seen.insert(csgn_keygen({32, 4, 8, std::nullopt}, rng).subset);
  }
  EXPECT_GE(seen.size(), 99u);
}

TEST(CsgnKeygen, DefaultXIsUniformOnOneToD) {
  Rng rng(2);
  const auto k = csgn_keygen({64, 6, 10, std::nullopt}, rng);
  EXPECT_EQ(k.x, FiniteDistribution<std::size_t>::uniform({1, 2, 3, 4, 5, 6}));
}

TEST(CsgnKeygen, ParameterViolations) {
  Rng rng(3);
  EXPECT_THROW(csgn_keygen({8, 4, 5, std::nullopt}, rng), InvalidArgument);
  EXPECT_THROW(csgn_keygen({8, 0, 3, std::nullopt}, rng), InvalidArgument);
  const auto bad_x = FiniteDistribution<std::size_t>::uniform({1, 5});
  EXPECT_THROW(csgn_keygen({16, 3, 4, bad_x}, rng), InvalidArgument);
}

TEST(CsgnEnc, CorrectAndExactZeroCount) {
  Rng rng(4);
  const CsgnScheme s(csgn_toy_preset());
  for (int k = 0; k < 10; ++k) {
    const auto kp = s.keygen(rng);
    for (int i = 0; i < 100; ++i) {
      const Bit m = rng.coin();
      const auto c = s.encrypt(kp.pk, m, rng);
      ASSERT_EQ(c.zeros(), 16u);
      ASSERT_EQ(s.decrypt(kp.sk, c), m);
    }
  }
}

TEST(CsgnEnc, InjectedXControlsZerosInsideS) {
  Rng rng(5);
  const auto x = FiniteDistribution<std::size_t>::point(3);
  const auto k = csgn_keygen({40, 5, 8, x}, rng);
  for (int i = 0; i < 100; ++i) {
    const auto c = csgn_enc(k, 0, rng);
    std::size_t inside = 0;
    for (auto j : k.indices()) inside += c.bits[j] == 0;
    EXPECT_EQ(inside, 3u);
    EXPECT_EQ(c.zeros(), 5u);
  }
}

TEST(CsgnDec, MatchesDirectProduct) {
  Rng rng(6);
  const auto k = csgn_keygen({24, 4, 6, std::nullopt}, rng);
  EXPECT_EQ(csgn_dec(k, {BitVector(24, 1)}), 1);
  for (int i = 0; i < 1000; ++i) {
    BitVector v(24);
    for (auto& b : v) b = rng.uniform_below(8) != 0;
    EXPECT_EQ(csgn_dec(k, {v}), product_over_subset(k, v));
  }
  EXPECT_THROW(csgn_dec(k, {BitVector(23, 1)}), InvalidArgument);
}

TEST(CsgnMul, ExhaustiveHomomorphismAtSmallN) {
  Rng rng(7);
  const auto k = csgn_keygen({5, 1, 2, std::nullopt}, rng);
  for (int a = 0; a < 32; ++a) {
    for (int b = 0; b < 32; ++b) {
      CsgnCiphertext ca{BitVector(5)}, cb{BitVector(5)};
      for (int i = 0; i < 5; ++i) {
        ca.bits[i] = (a >> i) & 1;
        cb.bits[i] = (b >> i) & 1;
      }
      EXPECT_EQ(csgn_dec(k, csgn_mul(ca, cb)), csgn_dec(k, ca) & csgn_dec(k, cb));
    }
  }
}

TEST(CsgnMul, DeepChainOfOnesAndMixedProducts) {
  Rng rng(8);
  const auto k = csgn_keygen(csgn_toy_preset(), rng);
  auto acc = csgn_enc(k, 1, rng);
  EXPECT_EQ(csgn_mul(acc, CsgnCiphertext{BitVector(256, 1)}), acc);
  for (int i = 0; i < 63; ++i) acc = csgn_mul(acc, csgn_enc(k, 1, rng));
  EXPECT_EQ(csgn_dec(k, acc), 1);
  EXPECT_EQ(csgn_dec(k, csgn_mul(csgn_enc(k, 0, rng), csgn_enc(k, 1, rng))), 0);
  EXPECT_THROW(csgn_mul(acc, CsgnCiphertext{BitVector(3, 1)}), InvalidArgument);
}

TEST(CsgnScheme, IsSymmetric) {
  static_assert(is_symmetric_v<CsgnScheme>);
  static_assert(EncryptionScheme<CsgnScheme>);
  static_assert(BitDecomposable<CsgnScheme>);
}

}  // namespace
}  // namespace bridges
