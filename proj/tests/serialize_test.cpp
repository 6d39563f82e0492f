// Copyright 2026 The bridges Authors
// SPDX-License-Identifier: Apache-2.0

#include "bridges/serialize.hpp"

#include <gtest/gtest.h>

#include "bridges/secgames.hpp"

namespace bridges {
namespace {

template <typename T>
T round_trip(const T& x, SerializeOptions opt = {}) {
  const std::string text = encode(x, opt).dump();
  return decode<T>(Json::parse(text), opt);
}

TEST(Serialize, GmRoundTrips) {
  Rng rng(1);
  const auto kp = gm_keygen(128, rng);
  EXPECT_EQ(round_trip(kp.sk), kp.sk);
  EXPECT_EQ(round_trip(kp.pk), kp.pk);
  const auto c = gm_enc(kp.pk, 1, rng);
  EXPECT_EQ(round_trip(c), c);
  const Json j = encode(kp.pk);
  EXPECT_EQ(j["kind"], "gm-public-key");
  EXPECT_EQ(j["version"], 1);
  EXPECT_TRUE(j["payload"].contains("gamma"));
}

TEST(Serialize, SyyRoundTrips) {
  Rng rng(2);
  const auto kp = gm_keygen(64, rng);
  const SyyPublicKeyFile pk{kp.pk, 6};
  EXPECT_EQ(round_trip(pk), pk);
  const auto c = syy_enc(kp.pk, 0, 6, rng);
  EXPECT_EQ(round_trip(c), c);
  Json bad = encode(c);
  bad["params"]["ell"] = 5;
  EXPECT_THROW(decode<SyyCiphertext>(bad), InvalidArgument);
}

TEST(Serialize, CsgnRoundTrips) {
  Rng rng(3);
  const auto k = csgn_keygen(csgn_toy_preset(), rng);
  EXPECT_EQ(round_trip(k), k);
  const auto c = csgn_enc(k, 0, rng);
  EXPECT_EQ(round_trip(c), c);
  const auto k2 = csgn_keygen({16, 2, 3, FiniteDistribution<std::size_t>(
                                             {1, 2}, {Rational(1, 3), Rational(2, 3)})},
                              rng);
  EXPECT_EQ(round_trip(k2), k2);
}

TEST(Serialize, MockRequiresInsecureFlag) {
  Rng rng(4);
  const MockFhe h(5, 7);
  const auto kp = h.keygen(rng);
  const auto c = h.mul(kp.pk, h.encrypt(kp.pk, 3, rng), h.encrypt(kp.pk, 4, rng));
  EXPECT_THROW(encode(c), InvalidArgument);
  const SerializeOptions ok{true};
  const Json j = encode(c, ok);
  EXPECT_EQ(j["insecure"], true);
  EXPECT_THROW(decode<MockCiphertext>(j), InvalidArgument);
  EXPECT_EQ(decode<MockCiphertext>(j, ok), c);
  EXPECT_EQ(round_trip(kp.pk, ok), kp.pk);
  EXPECT_EQ(round_trip(kp.sk, ok), kp.sk);
  EXPECT_EQ(round_trip(MockFhe(2).keygen(rng).pk, ok).capacity, std::nullopt);
}

TEST(Serialize, CircuitRoundTripsAndValidates) {
  Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    const Circuit c = random_boolean_circuit(3, 10, rng);
    EXPECT_EQ(round_trip(c), c);
  }
  Circuit r(2);
  r.mark_output(r.pow(r.add(0, r.constant(4)), 5));
  EXPECT_EQ(round_trip(r), r);
  Json j = encode(r);
  j["payload"]["gates"][2]["args"] = {7, 0};
  EXPECT_THROW(decode<Circuit>(j), InvalidArgument);
}

TEST(Serialize, GameReportAndBridgeMaterial) {
  auto rep = make_report(500, 240, 260, 99);
  rep.fixed_key = true;
  const auto back = round_trip(rep);
  EXPECT_EQ(back.wins1, 260u);
  EXPECT_TRUE(back.fixed_key);
  EXPECT_DOUBLE_EQ(back.advantage, rep.advantage);
  Rng rng(6);
  const auto kp = gm_keygen(64, rng);
  const BridgeMaterialFile m{"gm-syy", encode(kp.pk),
                             encode(SyyPublicKeyFile{gm_public_key_for(kp.sk, rng), 8}), nullptr};
  const auto mb = round_trip(m);
  EXPECT_EQ(mb, m);
  EXPECT_TRUE(mb.bk.is_null());
}

TEST(Serialize, UnknownAndMismatchedKindsRejected) {
  Rng rng(7);
  const auto kp = gm_keygen(64, rng);
  Json j = encode(kp.pk);
  EXPECT_THROW(decode<GmSecretKey>(j), InvalidArgument);
  j["kind"] = "rsa-public-key";
  EXPECT_THROW(decode<GmPublicKey>(j), InvalidArgument);
  EXPECT_THROW(envelope_kind(Json::parse("{\"version\":1}")), InvalidArgument);
  Json v = encode(kp.pk);
  v["version"] = 2;
  EXPECT_THROW(decode<GmPublicKey>(v), InvalidArgument);
  Json m = encode(kp.pk);
  m["payload"].erase("gamma");
  EXPECT_THROW(decode<GmPublicKey>(m), InvalidArgument);
}

TEST(Serialize, EnvelopeListsForBridgeKeys) {
  Rng rng(8);
  const MockFhe h(2);
  const auto kp = h.keygen(rng);
  std::vector<MockCiphertext> xs;
  for (int i = 0; i < 5; ++i) xs.push_back(h.encrypt(kp.pk, i & 1, rng));
  const SerializeOptions ok{true};
  EXPECT_EQ(decode_list<MockCiphertext>(encode_list(xs, ok), ok), xs);
  EXPECT_THROW(decode_list<MockCiphertext>(Json::object(), ok), InvalidArgument);
}

TEST(Serialize, BitHexEncoding) {
  const BitVector v = {1, 0, 1, 1, 0, 0, 0, 0, 1};
  EXPECT_EQ(bits_to_hex(v), "10d");
  EXPECT_EQ(bits_from_hex("10d", 9), v);
  EXPECT_THROW(bits_from_hex("10d", 8), InvalidArgument);
}

TEST(Serialize, BridgeKeys) {
  const SerializeOptions ok{true};
  EXPECT_TRUE(encode_bridge_key(std::monostate{}, ok).is_null());
  EXPECT_NO_THROW(decode_bridge_key<std::monostate>(Json(nullptr), ok));
  EXPECT_THROW(decode_bridge_key<std::monostate>(Json::array(), ok), InvalidArgument);
  Rng rng(9);
  const MockFhe h(2);
  const auto kp = h.keygen(rng);
  std::vector<std::vector<MockCiphertext>> bk(3);
  for (auto& row : bk) {
    for (int i = 0; i < 4; ++i) row.push_back(h.encrypt(kp.pk, i & 1, rng));
  }
  const Json j = encode_bridge_key(bk, ok);
  EXPECT_EQ(j.size(), 3u);
  EXPECT_EQ(decode_bridge_key<decltype(bk)>(j, ok), bk);
  EXPECT_THROW(encode_bridge_key(bk), InvalidArgument);
}

}  // namespace
}  // namespace bridges
