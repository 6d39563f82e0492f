// Copyright 2026 The bridges Authors
// SPDX-License-Identifier: Apache-2.0

#include "bridges/csgn_bridges.hpp"

#include <gtest/gtest.h>

#include "bridges/mockfhe.hpp"

namespace bridges {
namespace {

static_assert(Bridge<CsgnBridge1<MockFhe>>);
static_assert(Bridge<CsgnBridge2<SyyScheme>>);
static_assert(Bridge<CsgnBridge2<MockFhe>>);
static_assert(Bridge<CsgnBridge3<MockFhe>>);
static_assert(Bridge<CsgnBridge4<MockFhe>>);

Bit closed_form(const CsgnKey& k, const BitVector& c) {
  for (auto i : k.indices()) {
    if (!c[i]) return 0;
  }
  return 1;
}

BitVector random_bits_biased(std::size_t n, Rng& rng) {
  BitVector v(n);
  for (auto& b : v) b = rng.uniform_below(16) != 0;
  return v;
}

// Decrypted bridge output on arbitrary vectors, not only encryptions.
template <typename B>
void expect_matches_closed_form(const B& b, std::size_t trials, Rng& rng) {
  const auto mat = bridge_keygen(b, rng);
  const std::size_t n = b.source().params().n;
  std::vector<BitVector> probes = {BitVector(n, 1), BitVector(n, 0)};
  for (std::size_t t = 0; t < trials; ++t) probes.push_back(random_bits_biased(n, rng));
  for (auto i : mat.sk1.indices()) {
    BitVector v(n, 1);
    v[i] = 0;
    probes.push_back(v);
  }
  for (const auto& v : probes) {
    const auto out = b.apply(mat.pk2, mat.bk, CsgnCiphertext{v}, rng);
    ASSERT_EQ(b.unembed(b.target().decrypt(b.target_secret(mat.sk2), out)),
              closed_form(mat.sk1, v));
  }
}

TEST(CsgnBridge1, ExactOverMockOnToyPreset) {
  Rng rng(1);
  const CsgnBridge1<MockFhe> b(CsgnScheme(csgn_toy_preset()), MockFhe(2));
  const auto r = check_bridge_correctness(b, 1000, rng);
  EXPECT_EQ(r.failures, 0u);
  expect_matches_closed_form(b, 200, rng);
  const auto mat = bridge_keygen(b, rng);
  ASSERT_EQ(mat.bk.size(), 32u);
  EXPECT_EQ(mat.bk[0].size(), 256u);
}

TEST(CsgnBridge1, DepthBudgetAndCharacteristic) {
  EXPECT_THROW(CsgnBridge1<MockFhe>(CsgnScheme(csgn_toy_preset()), MockFhe(2, 4)),
               DepthExceeded);
  EXPECT_NO_THROW(CsgnBridge1<MockFhe>(CsgnScheme(csgn_toy_preset()), MockFhe(2, 5)));
  EXPECT_THROW(CsgnBridge1<MockFhe>(CsgnScheme(csgn_toy_preset()), MockFhe(3)),
               InvalidArgument);
}

TEST(CsgnBridge2, ExactOverMock) {
  Rng rng(2);
  const CsgnBridge2<MockFhe> b(CsgnScheme(csgn_toy_preset()), MockFhe(2));
  EXPECT_EQ(b.failure_bound(), 0.0);
  EXPECT_EQ(check_bridge_correctness(b, 1000, rng).failures, 0u);
  expect_matches_closed_form(b, 200, rng);
}

TEST(CsgnBridge2, AllOnesGivesFreshEncryptionOfOne) {
  Rng rng(3);
  const CsgnBridge2<SyyScheme> b(CsgnScheme({16, 2, 4, std::nullopt}), SyyScheme(GmScheme(48), 6));
  const auto mat = bridge_keygen(b, rng);
  const auto c1 = b.apply(mat.pk2, mat.bk, CsgnCiphertext{BitVector(16, 1)}, rng);
  const auto c2 = b.apply(mat.pk2, mat.bk, CsgnCiphertext{BitVector(16, 1)}, rng);
  EXPECT_NE(c1, c2);
  EXPECT_EQ(b.target().decrypt(mat.sk2.second, c1), 1);
}

TEST(CsgnBridge2, SyyFailureRateWithinBound) {
  Rng rng(4);
  const CsgnBridge2<SyyScheme> b(CsgnScheme({64, 8, 16, std::nullopt}), SyyScheme(GmScheme(64), 8));
  EXPECT_DOUBLE_EQ(b.failure_bound(), 7.0 * std::ldexp(1.0, -7));
  const auto r = check_bridge_correctness(b, 1000, rng, 100);
  EXPECT_TRUE(r.within_bound()) << r.failures << " failures";
}

TEST(CsgnBridge3, FermatTermBruteForceAtFive) {
  for (std::uint64_t v = 0; v < 5; ++v) {
    std::uint64_t t = 1;
    for (int i = 0; i < 4; ++i) t = t * v % 5;
    EXPECT_EQ((1 + 5 - t) % 5, v == 0 ? 1u : 0u);
  }
}

TEST(CsgnBridge3, ExplicitCompositionOverF5) {
  Rng rng(5);
  const CsgnBridge3<MockFhe> b(CsgnScheme({24, 4, 3, std::nullopt}), MockFhe(5), 5,
                               {1, 1, 2});
  EXPECT_EQ(check_bridge_correctness(b, 1000, rng).failures, 0u);
  expect_matches_closed_form(b, 300, rng);
}

TEST(CsgnBridge3, DefaultCompositionOnToyPreset) {
  Rng rng(6);
  const CsgnBridge3<MockFhe> b(CsgnScheme(csgn_toy_preset()), MockFhe(37));
  EXPECT_EQ(b.p(), 37u);
  EXPECT_EQ(b.weights().back(), 5u);
  EXPECT_EQ(check_bridge_correctness(b, 1000, rng).failures, 0u);
  const auto mat = bridge_keygen(b, rng);
  std::uint64_t total = 0;
  for (auto w : b.weighted_key(mat.sk1)) total += w;
  EXPECT_EQ(total, 36u);
}

TEST(CsgnBridge3, ParameterErrors) {
  const CsgnScheme s({24, 4, 3, std::nullopt});
  EXPECT_THROW(CsgnBridge3<MockFhe>(s, MockFhe(3), 3), InvalidArgument);
  EXPECT_THROW(CsgnBridge3<MockFhe>(s, MockFhe(5), 5, {1, 1, 1}), InvalidArgument);
  EXPECT_THROW(CsgnBridge3<MockFhe>(s, MockFhe(5), 5, {0, 2, 2}), InvalidArgument);
  EXPECT_THROW(CsgnBridge3<MockFhe>(s, MockFhe(7), 5), InvalidArgument);
  EXPECT_THROW(CsgnBridge3<MockFhe>(s, MockFhe(5), 6), InvalidArgument);
  EXPECT_EQ(smallest_prime_above(3), 5u);
  EXPECT_EQ(smallest_prime_above(32), 37u);
}

TEST(Circulant, FirstColumnReconstructsMatrixExhaustive) {
  for (std::size_t m = 2; m <= 6; ++m) {
    for (unsigned bits = 0; bits < (1u << m); ++bits) {
      BitVector a(m);
      for (std::size_t i = 0; i < m; ++i) a[i] = bits >> i & 1;
      const auto rows = circulant_from_first_column(a);
      for (std::size_t c = 0; c < m; ++c) {
        for (std::size_t r = 0; r < m; ++r) ASSERT_EQ(rows[r][c], a[(r + m - c) % m]);
      }
    }
    for (std::size_t k = 0; k < m; ++k) {
      ASSERT_EQ(circulant_from_first_column(shift_first_column(m, k)), shift_matrix(m, k));
    }
  }
}

TEST(Circulant, ConvolutionIsMatrixProduct) {
  for (std::size_t m = 2; m <= 4; ++m) {
    for (unsigned x = 0; x < (1u << m); ++x) {
      for (unsigned y = 0; y < (1u << m); ++y) {
        BitVector a(m), b(m);
        for (std::size_t i = 0; i < m; ++i) {
          a[i] = x >> i & 1;
          b[i] = y >> i & 1;
        }
        const auto A = circulant_from_first_column(a);
        const auto B = circulant_from_first_column(b);
        std::vector<BitVector> P(m, BitVector(m, 0));
        for (std::size_t r = 0; r < m; ++r) {
          for (std::size_t c = 0; c < m; ++c) {
            for (std::size_t k = 0; k < m; ++k) P[r][c] ^= A[r][k] & B[k][c];
          }
        }
        ASSERT_EQ(circulant_from_first_column(circulant_product(a, b)), P);
      }
    }
  }
}

TEST(CsgnBridge4, ShiftPowerEntrySelectsFullSurvival) {
  const std::size_t s = 5, m = s + 1;
  for (std::size_t k = 0; k <= s; ++k) {
    EXPECT_EQ(shift_matrix(m, k)[0][s], k == s ? 1 : 0);
    EXPECT_EQ(shift_first_column(m, k)[1], k == s ? 1 : 0);
  }
}

TEST(CsgnBridge4, ExhaustiveAtSmallParameters) {
  Rng rng(7);
  const CsgnBridge4<MockFhe> b(CsgnScheme({4, 2, 2, std::nullopt}), MockFhe(2));
  for (int key = 0; key < 10; ++key) {
    const auto mat = bridge_keygen(b, rng);
    for (unsigned v = 0; v < 16; ++v) {
      BitVector c(4);
      for (int i = 0; i < 4; ++i) c[i] = v >> i & 1;
      const auto out = b.apply(mat.pk2, mat.bk, CsgnCiphertext{c}, rng);
      ASSERT_EQ(b.target().decrypt(mat.sk2.second, out), csgn_dec(mat.sk1, {c}));
    }
  }
}

TEST(CsgnBridge4, ExactOverMock) {
  Rng rng(8);
  const CsgnBridge4<MockFhe> b(CsgnScheme({64, 8, 12, std::nullopt}), MockFhe(2));
  EXPECT_EQ(check_bridge_correctness(b, 1000, rng).failures, 0u);
  expect_matches_closed_form(b, 100, rng);
}

}  // namespace
}  // namespace bridges
