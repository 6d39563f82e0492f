// Copyright 2026 The bridges Authors
// SPDX-License-Identifier: Apache-2.0

#include "bridges/bridge.hpp"

#include <gtest/gtest.h>

#include "bridges/gm.hpp"

namespace bridges {
namespace {

using GmIdentity = IdentityBridge<GmScheme>;
static_assert(Bridge<GmIdentity>);
static_assert(EncryptionScheme<GraphScheme<GmIdentity>>);

TEST(BitEmbedding, InverseOnImageExhaustive) {
  const auto e = bit_embedding<std::uint64_t>();
  for (Bit m : {Bit{0}, Bit{1}}) {
    ASSERT_EQ(e.from(e.to(m)), m);
  }
  for (std::uint64_t v = 2; v < 20; ++v) EXPECT_FALSE(e.from(v).has_value());
  const auto id = identity_embedding<int>();
  for (int v = -5; v < 5; ++v) EXPECT_EQ(id.from(id.to(v)), v);
}

TEST(IdentityBridge, ExactlyCorrect) {
  Rng rng(1);
  const GmIdentity b(GmScheme(48));
  const auto r = check_bridge_correctness(b, 400, rng, 50);
  EXPECT_EQ(r.failures, 0u);
  EXPECT_EQ(r.trials, 400u);
  EXPECT_TRUE(r.within_bound());
}

TEST(IdentityBridge, SecondKeySharesSecretButNotGamma) {
  Rng rng(2);
  const GmIdentity b(GmScheme(48));
  int distinct = 0;
  for (int i = 0; i < 20; ++i) {
    const auto mat = bridge_keygen(b, rng);
    EXPECT_EQ(mat.sk1, mat.sk2);
    EXPECT_EQ(mat.pk1.n, mat.pk2.n);
    distinct += mat.pk1.gamma != mat.pk2.gamma;
  }
  EXPECT_GE(distinct, 18);
}

TEST(GraphScheme, BothComponentsDecryptToMessage) {
  Rng rng(3);
  const GraphScheme<GmIdentity> g{GmIdentity(GmScheme(48))};
  const auto kp = g.keygen(rng);
  for (int i = 0; i < 300; ++i) {
    const Bit m = rng.coin();
    const auto c = g.encrypt(kp.pk, m, rng);
    ASSERT_EQ(g.decrypt(kp.sk, c), m);
    ASSERT_EQ(g.decrypt_second(kp.sk, c), m);
  }
  EXPECT_EQ(check_decryption(g, 300, rng, 30).failures, 0u);
}

TEST(GraphScheme, ComponentsComeFromIndependentEncryptions) {
  Rng rng(4);
  const GraphScheme<GmIdentity> g{GmIdentity(GmScheme(48))};
  const auto kp = g.keygen(rng);
  for (int i = 0; i < 300; ++i) {
    const auto c = g.encrypt(kp.pk, 1, rng);
    ASSERT_NE(c.c1, c.c2);
  }
}

TEST(GraphScheme, DecryptionIgnoresSecondComponent) {
  Rng rng(5);
  const GmScheme gm(48);
  const GraphScheme<GmIdentity> g{GmIdentity(gm)};
  const auto kp = g.keygen(rng);
  for (int i = 0; i < 200; ++i) {
    const Bit m = rng.coin();
    auto c = g.encrypt(kp.pk, m, rng);
    c.c2 = gm.encrypt(kp.pk.pk2, static_cast<Bit>(1 - m), rng);
    ASSERT_EQ(g.decrypt(kp.sk, c), m);
    ASSERT_EQ(g.decrypt_second(kp.sk, c), 1 - m);
  }
}

TEST(GraphScheme, MatchesBaseSchemeOnSharedSeeds) {
  const GmScheme gm(48);
  const GraphScheme<GmIdentity> g{GmIdentity(gm)};
  Rng a(6), b(6);
  const auto kg = g.keygen(a);
  const auto kb = gm.keygen(b);
  EXPECT_EQ(kg.pk.pk1, kb.pk);
  EXPECT_EQ(kg.sk.first, kb.sk);
  EXPECT_FALSE(g.info().insecure);
  EXPECT_NE(g.info().name.find("identity"), std::string::npos);
}

TEST(BridgeCorrectness, BoundLogic) {
  BridgeCorrectness exact{1000, 1, 0.0};
  EXPECT_FALSE(exact.within_bound());
  BridgeCorrectness noisy{10000, 120, 0.01};
  EXPECT_TRUE(noisy.within_bound());
  BridgeCorrectness over{10000, 200, 0.01};
  EXPECT_FALSE(over.within_bound());
  Rng rng(7);
  EXPECT_THROW(check_bridge_correctness(GmIdentity(GmScheme(32)), 0, rng), InvalidArgument);
}

}  // namespace
}  // namespace bridges
