// Copyright 2026 The bridges Authors
// SPDX-License-Identifier: Apache-2.0

#include "bridges/numtheory.hpp"

#include <gtest/gtest.h>

#include <set>

namespace bridges {
namespace {

// Squares modulo a small prime, by enumeration.
std::set<long> squares_mod(long p) {
  std::set<long> out;
  for (long x = 1; x < p; ++x) out.insert((x * x) % p);
  return out;
}

int legendre_by_enumeration(long a, long p) {
  a %= p;
  if (a == 0) return 0;
  return squares_mod(p).count(a) ? 1 : -1;
}

TEST(Jacobi, TrivialValues) {
  EXPECT_EQ(jacobi(1, 15), 1);
  EXPECT_EQ(jacobi(0, 15), 0);
  EXPECT_EQ(jacobi(5, 15), 0);
  EXPECT_EQ(jacobi(7, 1), 1);
}

TEST(Jacobi, SixModSeventySeven) {
  EXPECT_EQ(legendre_by_enumeration(6, 7), -1);
  EXPECT_EQ(legendre_by_enumeration(6, 11), -1);
  EXPECT_EQ(legendre(6, 7), -1);
  EXPECT_EQ(legendre(6, 11), -1);
  EXPECT_EQ(jacobi(6, 77), 1);
}

TEST(Jacobi, RejectsBadModulus) {
  EXPECT_THROW(jacobi(3, 10), InvalidArgument);
  EXPECT_THROW(jacobi(3, 0), InvalidArgument);
  EXPECT_THROW(jacobi(3, -7), InvalidArgument);
}

TEST(Jacobi, MatchesGmpOnRandomInputs) {
  Rng rng(11);
  for (int i = 0; i < 2000; ++i) {
    BigInt n = rng.random_bits(1 + rng.uniform_below(200)) | 1;
    if (n < 3) n = 3;
    BigInt a = rng.random_bits(220);
    if (rng.coin()) a = -a;
    EXPECT_EQ(jacobi(a, n), mpz_jacobi(a.get_mpz_t(), n.get_mpz_t())) << a << " / " << n;
  }
}

TEST(Jacobi, LegendreAgreesWithEnumeration) {
  for (long p : {3L, 5L, 7L, 11L, 13L, 101L}) {
    for (long a = 0; a < 2 * p; ++a) {
      EXPECT_EQ(legendre(a, p), legendre_by_enumeration(a, p));
      EXPECT_EQ(jacobi(a, p), legendre_by_enumeration(a, p));
    }
  }
}

TEST(Jacobi, Multiplicative) {
  Rng rng(12);
  for (int i = 0; i < 1000; ++i) {
    const BigInt n = rng.random_bits(64) | 1;
    if (n < 3) continue;
    const BigInt a = rng.random_bits(70);
    const BigInt b = rng.random_bits(70);
    EXPECT_EQ(jacobi(a * b, n), jacobi(a, n) * jacobi(b, n));
    EXPECT_EQ(jacobi(a, n), jacobi(a + n, n));
  }
}

TEST(Jacobi, SquaresOfUnits) {
  Rng rng(13);
  for (int i = 0; i < 1000; ++i) {
    const BigInt n = rng.random_bits(64) | 1;
    if (n < 3) continue;
    const BigInt x = rng.random_bits(64);
    if (gcd(x, n) != 1) continue;
    EXPECT_EQ(jacobi(x * x, n), 1);
  }
}

TEST(Primes, SmallCases) {
  Rng rng(1);
  for (long n = 0; n < 2000; ++n) {
    bool prime = n >= 2;
    for (long d = 2; d * d <= n; ++d) {
      if (n % d == 0) prime = false;
    }
    EXPECT_EQ(is_probable_prime(n, rng), prime) << n;
  }
}

TEST(Primes, RandomPrimeHasRequestedSize) {
  Rng rng(2);
  for (std::size_t bits : {8u, 16u, 64u, 256u}) {
    const BigInt p = random_prime(bits, rng);
    EXPECT_EQ(bit_length(p), bits);
    EXPECT_NE(mpz_probab_prime_p(p.get_mpz_t(), 30), 0);
  }
}

TEST(GmModulus, ForcedSmallPrimes) {
  Rng rng(3);
  const GmModulus m = gm_modulus_from_primes(7, 11, rng);
  EXPECT_EQ(m.n, 77);
  EXPECT_EQ(legendre_by_enumeration(m.eta.get_si(), 7), -1);
  EXPECT_EQ(legendre_by_enumeration(m.eta.get_si(), 11), -1);
  EXPECT_EQ(jacobi(m.eta, m.n), 1);
  EXPECT_GE(m.attempts, 1u);
}

TEST(GmModulus, EtaSixIsValidForSevenEleven) {
  // η = 6 is a non-residue mod both 7 and 11 (squares mod 7: {1,2,4},
  // squares mod 11: {1,3,4,5,9}).
  EXPECT_FALSE(squares_mod(7).count(6));
  EXPECT_FALSE(squares_mod(11).count(6));
}

TEST(GmModulus, GeneratedModulusInvariants) {
  Rng rng(4);
  for (int i = 0; i < 1000; ++i) {
    const GmModulus m = gen_gm_modulus(16 + (i % 3) * 8, rng);
    ASSERT_NE(m.p, m.q);
    ASSERT_EQ(m.p * m.q, m.n);
    ASSERT_EQ(legendre(m.eta, m.p), -1);
    ASSERT_EQ(legendre(m.eta, m.q), -1);
    ASSERT_EQ(jacobi(m.eta, m.n), 1);
  }
}

TEST(GmModulus, RejectsTinyBitLength) {
  Rng rng(5);
  EXPECT_THROW(gen_gm_modulus(8, rng), InvalidArgument);
  EXPECT_THROW(gm_modulus_from_primes(7, 7, rng), InvalidArgument);
}

TEST(GmModulus, BoundedAttemptsAreReported) {
  Rng rng(6);
  // A zero budget forces the failure path.
  try {
    gm_modulus_from_primes(3, 5, rng, 0);
    FAIL() << "expected GenerationFailed";
  } catch (const GenerationFailed& e) {
    EXPECT_EQ(e.attempts(), 0u);
  }
}

TEST(Hex, RoundTrip) {
  Rng rng(7);
  for (int i = 0; i < 100; ++i) {
    const BigInt x = rng.random_bits(300);
    const std::string h = to_hex(x);
    for (char ch : h) EXPECT_TRUE(std::isdigit(ch) || (ch >= 'a' && ch <= 'f'));
    EXPECT_EQ(from_hex(h), x);
  }
  EXPECT_EQ(to_hex(255), "ff");
  EXPECT_THROW(from_hex("xyz"), InvalidArgument);
  EXPECT_THROW(from_hex(""), InvalidArgument);
}

TEST(Rng, DerivedStreamsAreReproducible) {
  Rng a = Rng::derive(42, {1, 2, 3});
  Rng b = Rng::derive(42, {1, 2, 3});
  Rng c = Rng::derive(42, {1, 2, 4});
  const auto x = a.next_u64();
  EXPECT_EQ(x, b.next_u64());
  EXPECT_NE(x, c.next_u64());
}

TEST(Rng, UniformBelowBigStaysInRange) {
  Rng rng(8);
  const BigInt bound("1000000000000000000000000000007");
  for (int i = 0; i < 1000; ++i) {
    const BigInt x = rng.uniform_below(bound);
    EXPECT_GE(x, 0);
    EXPECT_LT(x, bound);
  }
}

}  // namespace
}  // namespace bridges
