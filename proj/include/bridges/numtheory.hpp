// Copyright 2026 The bridges Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>

#include "bridges/error.hpp"
#include "bridges/rng.hpp"

namespace bridges {

inline std::size_t bit_length(const BigInt& x) {
  return sgn(x) == 0 ? 0 : mpz_sizeinbase(x.get_mpz_t(), 2);
}

inline BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// Least nonnegative residue.
inline BigInt mod(const BigInt& a, const BigInt& n) {
  BigInt r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
  return r;
}

inline BigInt powm(const BigInt& base, const BigInt& exp, const BigInt& n) {
  BigInt r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), n.get_mpz_t());
  return r;
}

inline BigInt mulm(const BigInt& a, const BigInt& b, const BigInt& n) {
  return mod(a * b, n);
}

/// Jacobi symbol (a/n) for odd positive n, by the binary reciprocity
/// algorithm. Throws InvalidArgument for even or non-positive n.
inline int jacobi(const BigInt& a, const BigInt& n) {
  if (sgn(n) <= 0 || mpz_even_p(n.get_mpz_t())) {
    throw InvalidArgument("jacobi: modulus must be odd and positive");
  }
  BigInt x = mod(a, n);
  BigInt m = n;
  int result = 1;
  while (sgn(x) != 0) {
    const mp_bitcnt_t twos = mpz_scan1(x.get_mpz_t(), 0);
    if (twos > 0) {
      mpz_fdiv_q_2exp(x.get_mpz_t(), x.get_mpz_t(), twos);
      const unsigned long m8 = mpz_fdiv_ui(m.get_mpz_t(), 8);
      if ((twos & 1) && (m8 == 3 || m8 == 5)) result = -result;
    }
    if (mpz_fdiv_ui(x.get_mpz_t(), 4) == 3 && mpz_fdiv_ui(m.get_mpz_t(), 4) == 3) {
      result = -result;
    }
    std::swap(x, m);
    x = mod(x, m);
  }
  return m == 1 ? result : 0;
}

/// Legendre symbol by Euler's criterion, a^((p-1)/2) mod p. p must be an
/// odd prime; primality is not checked.
inline int legendre(const BigInt& a, const BigInt& p) {
  if (sgn(p) <= 0 || mpz_even_p(p.get_mpz_t())) {
    throw InvalidArgument("legendre: modulus must be an odd prime");
  }
  const BigInt r = powm(mod(a, p), (p - 1) / 2, p);
  if (sgn(r) == 0) return 0;
  return r == 1 ? 1 : -1;
}

namespace detail {

inline constexpr std::array<unsigned, 24> kSmallPrimes = {
    3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
    43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

}  // namespace detail

/// Miller-Rabin with `rounds` random bases drawn from rng.
inline bool is_probable_prime(const BigInt& n, Rng& rng, int rounds = 40) {
  if (n < 2) return false;
  if (n == 2) return true;
  if (mpz_even_p(n.get_mpz_t())) return false;
  for (unsigned p : detail::kSmallPrimes) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  BigInt d = n - 1;
  const mp_bitcnt_t s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  const BigInt n_minus_1 = n - 1;
  const BigInt base_range = n - 3;
  for (int round = 0; round < rounds; ++round) {
    const BigInt a = rng.uniform_below(base_range) + 2;
    BigInt x = powm(a, d, n);
    if (x == 1 || x == n_minus_1) continue;
    bool witness = true;
    for (mp_bitcnt_t i = 1; i < s; ++i) {
      x = mulm(x, x, n);
      if (x == n_minus_1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

/// Random prime of exactly `bits` bits with the top two bits set, so a
/// product of two such primes has exactly the combined bit length.
inline BigInt random_prime(std::size_t bits, Rng& rng,
                           std::size_t max_attempts = 0) {
  if (bits < 3) throw InvalidArgument("random_prime: need at least 3 bits");
  if (max_attempts == 0) max_attempts = 200 * bits;
  for (std::size_t attempt = 1; attempt <= max_attempts; ++attempt) {
    BigInt c = rng.random_bits(bits);
    mpz_setbit(c.get_mpz_t(), bits - 1);
    mpz_setbit(c.get_mpz_t(), bits - 2);
    mpz_setbit(c.get_mpz_t(), 0);
    if (is_probable_prime(c, rng)) return c;
  }
  throw GenerationFailed("random_prime: no prime found", max_attempts);
}

/// Uniform element of (Z/nZ)^x by rejection.
inline BigInt random_unit(const BigInt& n, Rng& rng) {
  while (true) {
    BigInt x = rng.uniform_below(n);
    if (sgn(x) != 0 && gcd(x, n) == 1) return x;
  }
}

inline bool is_unit(const BigInt& x, const BigInt& n) {
  return sgn(x) > 0 && x < n && gcd(x, n) == 1;
}

/// Modulus material for Goldwasser-Micali: N = pq and a unit eta that is a
/// non-residue modulo both primes (so eta has Jacobi symbol +1 mod N).
struct GmModulus {
  BigInt p;
  BigInt q;
  BigInt n;
  BigInt eta;
  std::size_t attempts = 0;  // total sampling attempts spent
};

/// eta search for fixed primes: rejection-sample units and test both
/// Legendre symbols with Euler's criterion.
inline GmModulus gm_modulus_from_primes(const BigInt& p, const BigInt& q,
                                        Rng& rng,
                                        std::size_t max_attempts = 1000) {
  if (p == q) throw InvalidArgument("gm modulus: p and q must differ");
  if (p < 3 || q < 3 || mpz_even_p(p.get_mpz_t()) || mpz_even_p(q.get_mpz_t())) {
    throw InvalidArgument("gm modulus: p and q must be odd primes");
  }
  GmModulus out{p, q, p * q, 0, 0};
  for (std::size_t attempt = 1; attempt <= max_attempts; ++attempt) {
    const BigInt eta = random_unit(out.n, rng);
    if (legendre(eta, p) == -1 && legendre(eta, q) == -1) {
      out.eta = eta;
      out.attempts = attempt;
      return out;
    }
  }
  throw GenerationFailed("gm modulus: no eta found", max_attempts);
}

/// Fresh GM modulus of `bits` bits (bits >= 16).
inline GmModulus gen_gm_modulus(std::size_t bits, Rng& rng,
                                std::size_t max_attempts = 64) {
  if (bits < 16) throw InvalidArgument("gen_gm_modulus: bit_length must be >= 16");
  const std::size_t p_bits = bits / 2;
  const std::size_t q_bits = bits - p_bits;
  for (std::size_t attempt = 1; attempt <= max_attempts; ++attempt) {
    BigInt p = random_prime(p_bits, rng);
    BigInt q = random_prime(q_bits, rng);
    if (p == q) continue;
    GmModulus m = gm_modulus_from_primes(p, q, rng);
    m.attempts += attempt;
    return m;
  }
  throw GenerationFailed("gen_gm_modulus: p == q on every attempt", max_attempts);
}

/// Lowercase big-endian hex, "0" for zero, leading '-' for negatives.
inline std::string to_hex(const BigInt& x) { return x.get_str(16); }

inline BigInt from_hex(std::string_view hex) {
  if (hex.empty()) throw InvalidArgument("from_hex: empty string");
  BigInt out;
  if (out.set_str(std::string(hex), 16) != 0) {
    throw InvalidArgument("from_hex: not a hex integer: " + std::string(hex));
  }
  return out;
}

}  // namespace bridges
