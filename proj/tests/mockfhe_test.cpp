// Copyright 2026 The bridges Authors
// SPDX-License-Identifier: Apache-2.0

#include "bridges/mockfhe.hpp"

#include <gtest/gtest.h>

namespace bridges {
namespace {

Circuit random_ring_circuit(std::size_t inputs, std::size_t gates, Rng& rng) {
  Circuit c(inputs);
  Circuit::Wire last = 0;
  for (std::size_t g = 0; g < gates; ++g) {
    const auto a = rng.uniform_below(c.size());
    const auto b = rng.uniform_below(c.size());
    switch (rng.uniform_below(5)) {
      case 0: last = c.add(a, b); break;
      case 1: last = c.sub(a, b); break;
      case 2: last = c.mul(a, b); break;
      case 3: last = c.pow(a, 1 + rng.uniform_below(6)); break;
      default: last = c.add(a, c.constant(rng.uniform_below(10))); break;
    }
  }
  c.mark_output(last);
  return c;
}

TEST(MockFhe, RejectsCompositeModulus) {
  EXPECT_THROW(MockFhe(4), InvalidArgument);
  EXPECT_THROW(MockFhe(1), InvalidArgument);
  EXPECT_NO_THROW(MockFhe(7));
}

TEST(MockFhe, IdentityCircuitRoundTrip) {
  Rng rng(1);
  const MockFhe h(5);
  const auto kp = h.keygen(rng);
  Circuit id(1);
  id.mark_output(0);
  for (std::uint64_t m = 0; m < 5; ++m) {
    const std::vector<MockCiphertext> in = {h.encrypt(kp.pk, m, rng)};
    EXPECT_EQ(h.decrypt(kp.sk, h.eval(kp.pk, id, in, rng)[0]), m);
  }
}

TEST(MockFhe, CapacityExceededAtDecryption) {
  Rng rng(2);
  const MockFhe h(2, 3);
  const auto kp = h.keygen(rng);
  auto c = h.encrypt(kp.pk, 1, rng);
  for (int i = 0; i < 3; ++i) c = h.mul(kp.pk, c, h.encrypt(kp.pk, 1, rng));
  EXPECT_EQ(h.decrypt(kp.sk, c), 1u);
  c = h.mul(kp.pk, c, h.encrypt(kp.pk, 1, rng));
  EXPECT_EQ(c.depth, 4u);
  EXPECT_THROW(h.decrypt(kp.sk, c), DepthExceeded);
}

TEST(MockFhe, RingRewriteOfXorOverF7) {
  Rng rng(3);
  const MockFhe h(7);
  const auto kp = h.keygen(rng);
  Circuit f(2);
  const auto s = f.add(0, 1);
  f.mark_output(f.sub(f.mul(f.constant(2), s), f.mul(s, s)));
  const std::vector<MockCiphertext> in = {h.encrypt(kp.pk, 1, rng), h.encrypt(kp.pk, 0, rng)};
  EXPECT_EQ(h.decrypt(kp.sk, h.eval(kp.pk, f, in, rng)[0]), 1u);
}

TEST(MockFhe, EvalMatchesPlainEvaluator) {
  Rng rng(4);
  for (std::uint64_t p : {2u, 5u, 7u}) {
    const MockFhe h(p);
    const auto kp = h.keygen(rng);
    for (int t = 0; t < 1000; ++t) {
      const Circuit f = p == 2 && rng.coin() ? random_boolean_circuit(3, 12, rng)
                                             : random_ring_circuit(3, 12, rng);
      std::vector<std::uint64_t> plain(3);
      std::vector<MockCiphertext> enc;
      for (auto& m : plain) {
        m = rng.uniform_below(p);
        enc.push_back(h.encrypt(kp.pk, m, rng));
      }
      const auto out = h.eval(kp.pk, f, enc, rng);
      ASSERT_EQ(h.decrypt(kp.sk, out[0]), eval_circuit_plain(f, PrimeField{p}, plain)[0]);
      ASSERT_EQ(out[0].depth, multiplicative_depth(f));
    }
  }
}

TEST(MockFhe, ArithmeticMatchesIntegersModFive) {
  Rng rng(5);
  const MockFhe h(5);
  const auto kp = h.keygen(rng);
  for (std::uint64_t a = 0; a < 5; ++a) {
    for (std::uint64_t b = 0; b < 5; ++b) {
      const auto ca = h.encrypt(kp.pk, a, rng);
      const auto cb = h.encrypt(kp.pk, b, rng);
      EXPECT_EQ(h.decrypt(kp.sk, h.add(kp.pk, ca, cb)), (a + b) % 5);
      EXPECT_EQ(h.decrypt(kp.sk, h.sub(kp.pk, ca, cb)), (a + 5 - b) % 5);
      EXPECT_EQ(h.decrypt(kp.sk, h.mul(kp.pk, ca, cb)), (a * b) % 5);
    }
  }
}

TEST(MockFhe, PowDepthFollowsSquareAndMultiply) {
  Rng rng(6);
  const MockFhe h(7);
  const auto kp = h.keygen(rng);
  const auto c = h.encrypt(kp.pk, 3, rng);
  for (std::uint64_t e = 0; e < 20; ++e) {
    const auto r = h.pow(kp.pk, c, e);
    std::uint64_t want = 1;
    for (std::uint64_t i = 0; i < e; ++i) want = want * 3 % 7;
    EXPECT_EQ(h.decrypt(kp.sk, r), want);
    EXPECT_EQ(r.depth, pow_depth(0, e));
  }
}

TEST(MockFhe, RingAndKeyMismatch) {
  Rng rng(7);
  const MockFhe h2(2), h5(5);
  const auto k2 = h2.keygen(rng);
  const auto k5 = h5.keygen(rng);
  const auto a = h2.encrypt(k2.pk, 1, rng);
  const auto b = h5.encrypt(k5.pk, 1, rng);
  EXPECT_THROW(h2.add(k2.pk, a, b), CryptoError);
  EXPECT_THROW(h5.decrypt(k5.sk, a), CryptoError);
  Circuit f(2);
  f.mark_output(f.xor_(0, 1));
  const std::vector<MockCiphertext> in = {b, b};
  EXPECT_THROW(h5.eval(k5.pk, f, in, rng), InvalidArgument);
}

TEST(MockFhe, EvalIsDeterministic) {
  Rng rng(8);
  const MockFhe h(5);
  const auto kp = h.keygen(rng);
  const Circuit f = random_ring_circuit(2, 10, rng);
  const std::vector<MockCiphertext> in = {h.encrypt(kp.pk, 2, rng), h.encrypt(kp.pk, 4, rng)};
  Rng r1(1), r2(2);
  EXPECT_EQ(h.eval(kp.pk, f, in, r1), h.eval(kp.pk, f, in, r2));
}

TEST(MockFhe, MarkedInsecure) {
  EXPECT_TRUE(MockFhe(2).info().insecure);
  static_assert(RingTarget<MockFhe>);
  static_assert(HomomorphicScheme<MockFhe>);
}

}  // namespace
}  // namespace bridges
