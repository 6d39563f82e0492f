// Copyright 2026 The bridges Authors
// SPDX-License-Identifier: Apache-2.0

#include "bridges/scheme.hpp"

#include <gtest/gtest.h>

#include "bridges/csgn.hpp"
#include "bridges/gm.hpp"
#include "bridges/mockfhe.hpp"
#include "bridges/syy.hpp"

namespace bridges {
namespace {

static_assert(EncryptionScheme<GmScheme>);
static_assert(Rekeyable<GmScheme>);
static_assert(BitDecomposable<GmScheme>);
static_assert(EncryptionScheme<SyyScheme>);
static_assert(MultiplicativeTarget<SyyScheme>);
static_assert(HomomorphicScheme<SyyScheme>);
static_assert(!RingTarget<SyyScheme>);
static_assert(EncryptionScheme<ProductScheme<GmScheme, GmScheme>>);
static_assert(EncryptionScheme<PowerScheme<MockFhe>>);

TEST(ProductScheme, GmTimesGm) {
  Rng rng(1);
  const ProductScheme<GmScheme, GmScheme> s(GmScheme(32), GmScheme(32));
  const auto kp = s.keygen(rng);
  const std::pair<Bit, Bit> m{0, 1};
  EXPECT_EQ(s.decrypt(kp.sk, s.encrypt(kp.pk, m, rng)), m);
  EXPECT_EQ(s.plaintexts().size(), 4u);
}

TEST(ProductScheme, RandomRoundTrips) {
  Rng rng(2);
  const ProductScheme<GmScheme, MockFhe> s(GmScheme(32), MockFhe(5));
  const auto r = check_decryption(s, 100, rng, 10);
  EXPECT_EQ(r.failures, 0u);
  EXPECT_EQ(r.trials, 100u);
}

TEST(PowerScheme, SingleCopyBehavesLikeBase) {
  Rng a(3), b(3);
  const GmScheme gm(32);
  const PowerScheme<GmScheme> p1(gm, 1);
  const auto k1 = gm.keygen(a);
  const auto kp = p1.keygen(b);
  ASSERT_EQ(kp.pk.size(), 1u);
  EXPECT_EQ(kp.pk[0], k1.pk);
  for (int i = 0; i < 50; ++i) {
    const Bit m = a.coin();
    (void)b.coin();
    const auto c = gm.encrypt(k1.pk, m, a);
    const auto cp = p1.encrypt(kp.pk, {m}, b);
    EXPECT_EQ(cp[0], c);
    EXPECT_EQ(p1.decrypt(kp.sk, cp), std::vector<Bit>{m});
  }
}

TEST(PowerScheme, PlaintextSpaceIsCartesianPower) {
  const PowerScheme<MockFhe> p(MockFhe(2), 3);
  EXPECT_EQ(p.plaintexts().size(), 8u);
  EXPECT_THROW(PowerScheme<MockFhe>(MockFhe(2), 0), InvalidArgument);
  Rng rng(4);
  EXPECT_EQ(check_decryption(p, 200, rng).failures, 0u);
  const auto kp = p.keygen(rng);
  EXPECT_THROW(p.encrypt(kp.pk, {1, 0}, rng), InvalidArgument);
}

TEST(KnowledgeWrapped, EncDecIdenticalToBaseOnSharedSeeds) {
  const GmScheme gm(48);
  auto k = [](const GmSecretKey& sk, const GmPublicKey&, Rng&) -> BigInt { return sk.p % 2; };
  const KnowledgeWrapped<GmScheme, decltype(k)> wrapped(gm, k);
  Rng key_rng(5);
  const auto kp = wrapped.keygen(key_rng);
  Rng a(6), b(6);
  for (int i = 0; i < 200; ++i) {
    const Bit m = i & 1;
    const auto cw = wrapped.encrypt(kp.pk, m, a);
    const auto cb = gm.encrypt(kp.pk.base, m, b);
    EXPECT_EQ(cw, cb);
    EXPECT_EQ(wrapped.decrypt(kp.sk, cw), gm.decrypt(kp.sk, cb));
  }
  EXPECT_EQ(kp.pk.knowledge, 1);
}

TEST(CheckDecryption, AllRegisteredSchemesAreCorrect) {
  Rng rng(7);
  EXPECT_EQ(check_decryption(GmScheme(64), 500, rng).failures, 0u);
  EXPECT_EQ(check_decryption(SyyScheme(GmScheme(64), 6), 500, rng).failures, 0u);
  EXPECT_EQ(check_decryption(CsgnScheme(csgn_toy_preset()), 500, rng).failures, 0u);
  EXPECT_EQ(check_decryption(MockFhe(7), 500, rng).failures, 0u);
}

}  // namespace
}  // namespace bridges
