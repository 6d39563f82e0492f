// Copyright 2026 The bridges Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bridges/error.hpp"
#include "bridges/gf2.hpp"
#include "bridges/numtheory.hpp"
#include "bridges/rng.hpp"
#include "bridges/scheme.hpp"

namespace bridges {

struct GmSecretKey {
  BigInt p;
  BigInt q;

  BigInt modulus() const { return p * q; }
  bool operator==(const GmSecretKey&) const = default;
};

struct GmPublicKey {
  BigInt n;
  BigInt gamma;

  bool operator==(const GmPublicKey&) const = default;
};

struct GmCiphertext {
  BigInt value;

  bool operator==(const GmCiphertext&) const = default;
};

using GmKeyPair = KeyPair<GmSecretKey, GmPublicKey>;

/// Keys from explicit material: γ = η·u² mod pq. Checks that η is a
/// non-residue modulo both primes and that u is a unit.
inline GmKeyPair gm_keypair_from(const BigInt& p, const BigInt& q, const BigInt& eta,
                                 const BigInt& u) {
  if (p == q) throw InvalidArgument("gm: p and q must differ");
  const BigInt n = p * q;
  if (!is_unit(mod(eta, n), n) || legendre(eta, p) != -1 || legendre(eta, q) != -1) {
    throw InvalidArgument("gm: eta must be a non-residue modulo both p and q");
  }
  if (!is_unit(mod(u, n), n)) throw InvalidArgument("gm: u must be a unit mod N");
  return {{p, q}, {n, mulm(eta, mulm(u, u, n), n)}};
}

/// Fresh γ for an existing factorization: new η and new u.
inline GmPublicKey gm_public_key_for(const GmSecretKey& sk, Rng& rng) {
  const GmModulus m = gm_modulus_from_primes(sk.p, sk.q, rng);
  const BigInt u = random_unit(m.n, rng);
  return {m.n, mulm(m.eta, mulm(u, u, m.n), m.n)};
}

inline GmKeyPair gm_keygen(std::size_t bits, Rng& rng) {
  const GmModulus m = gen_gm_modulus(bits, rng);
  const BigInt u = random_unit(m.n, rng);
  return {{m.p, m.q}, {m.n, mulm(m.eta, mulm(u, u, m.n), m.n)}};
}

inline void gm_check_ciphertext(const GmPublicKey& pk, const GmCiphertext& c) {
  if (!is_unit(c.value, pk.n)) {
    throw CryptoError("gm: ciphertext is not a unit modulo this public key's N");
  }
}

/// γ^m·ξ² mod N with caller-chosen ξ.
inline GmCiphertext gm_enc_with(const GmPublicKey& pk, Bit m, const BigInt& xi) {
  if (m > 1) throw InvalidArgument("gm: plaintext must be a bit");
  const BigInt sq = mulm(xi, xi, pk.n);
  return {m ? mulm(pk.gamma, sq, pk.n) : sq};
}

inline GmCiphertext gm_enc(const GmPublicKey& pk, Bit m, Rng& rng) {
  return gm_enc_with(pk, m, random_unit(pk.n, rng));
}

/// 0 iff c is a square modulo p. Non-units are rejected rather than
/// decoded, since they indicate malformed input.
inline Bit gm_dec(const GmSecretKey& sk, const GmCiphertext& c) {
  const BigInt n = sk.modulus();
  if (!is_unit(c.value, n)) throw CryptoError("gm: ciphertext is not a unit mod N");
  return legendre(c.value, sk.p) == 1 ? 0 : 1;
}

/// c1·c2 mod N, an encryption of the XOR of the plaintexts.
inline GmCiphertext gm_xor(const GmPublicKey& pk, const GmCiphertext& c1,
                           const GmCiphertext& c2) {
  if (c1.value >= pk.n || c2.value >= pk.n) throw CryptoError("gm_xor: modulus mismatch");
  gm_check_ciphertext(pk, c1);
  gm_check_ciphertext(pk, c2);
  return {mulm(c1.value, c2.value, pk.n)};
}

inline GmCiphertext gm_rerandomize(const GmPublicKey& pk, const GmCiphertext& c, Rng& rng) {
  const BigInt xi = random_unit(pk.n, rng);
  return {mulm(c.value, mulm(xi, xi, pk.n), pk.n)};
}

namespace detail {

inline BitVector to_bits(const BigInt& x, std::size_t width) {
  if (bit_length(x) > width) throw InvalidArgument("value does not fit in bit width");
  BitVector out(width);
  for (std::size_t i = 0; i < width; ++i) out[i] = mpz_tstbit(x.get_mpz_t(), i) ? 1 : 0;
  return out;
}

}  // namespace detail

/// Goldwasser-Micali bit encryption. Either draws fresh primes of the given
/// total bit length per keypair, or reuses fixed primes (toy keys).
class GmScheme {
 public:
  using SecretKey = GmSecretKey;
  using PublicKey = GmPublicKey;
  using Plaintext = Bit;
  using Ciphertext = GmCiphertext;

  explicit GmScheme(std::size_t bits) : bits_(bits) {
    if (bits < 16) throw InvalidArgument("gm: bit_length must be >= 16");
  }

  static GmScheme with_primes(BigInt p, BigInt q) {
    if (p == q) throw InvalidArgument("gm: p and q must differ");
    GmScheme s;
    s.bits_ = bit_length(p * q);
    s.fixed_ = GmSecretKey{std::move(p), std::move(q)};
    return s;
  }

  std::size_t bits() const { return bits_; }
  const std::optional<GmSecretKey>& fixed_primes() const { return fixed_; }

  KeyPair<SecretKey, PublicKey> keygen(Rng& rng) const {
    if (fixed_) return {*fixed_, gm_public_key_for(*fixed_, rng)};
    return gm_keygen(bits_, rng);
  }
  PublicKey derive_public_key(const SecretKey& sk, Rng& rng) const {
    return gm_public_key_for(sk, rng);
  }
  Ciphertext encrypt(const PublicKey& pk, const Plaintext& m, Rng& rng) const {
    return gm_enc(pk, m, rng);
  }
  Plaintext decrypt(const SecretKey& sk, const Ciphertext& c) const { return gm_dec(sk, c); }
  std::vector<Plaintext> plaintexts() const { return {0, 1}; }
  SchemeInfo info() const { return {"gm-" + std::to_string(bits_), 0, true, 0.0, false}; }

  GmCiphertext xor_(const PublicKey& pk, const Ciphertext& a, const Ciphertext& b) const {
    return gm_xor(pk, a, b);
  }

  // Bit decomposition, least significant bit first: the key is p, the
  // ciphertext is its residue.
  std::size_t secret_key_width() const { return bits_; }
  std::size_t ciphertext_width() const { return bits_; }
  BitVector secret_key_bits(const SecretKey& sk) const { return detail::to_bits(sk.p, bits_); }
  BitVector ciphertext_bits(const Ciphertext& c) const {
    return detail::to_bits(c.value, bits_);
  }

 private:
  GmScheme() = default;

  std::size_t bits_ = 0;
  std::optional<GmSecretKey> fixed_;
};

}  // namespace bridges
