// Copyright 2026 The bridges Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "bridges/error.hpp"
#include "bridges/gf2.hpp"
#include "bridges/gm.hpp"
#include "bridges/numtheory.hpp"
#include "bridges/rng.hpp"
#include "bridges/scheme.hpp"

namespace bridges {

/// Vector of GM ciphertexts. The all-zero plaintext vector encodes 1; any
/// nonzero vector encodes 0.
struct SyyCiphertext {
  std::vector<GmCiphertext> components;

  std::size_t ell() const { return components.size(); }
  bool operator==(const SyyCiphertext&) const = default;
};

/// GM-encrypts an explicit vector v ∈ {0,1}^ℓ componentwise.
inline SyyCiphertext syy_enc_vector(const GmPublicKey& pk, const BitVector& v, Rng& rng) {
  SyyCiphertext c;
  c.components.reserve(v.size());
  for (Bit b : v) c.components.push_back(gm_enc(pk, b, rng));
  return c;
}

inline SyyCiphertext syy_enc(const GmPublicKey& pk, Bit m, std::size_t ell, Rng& rng) {
  if (ell == 0) throw InvalidArgument("syy: ell must be >= 1");
  if (m > 1) throw InvalidArgument("syy: plaintext must be a bit");
  return syy_enc_vector(pk, m ? BitVector(ell, 0) : random_nonzero_bits(ell, rng), rng);
}

/// Componentwise GM decryption, the plaintext vector v_c.
inline BitVector syy_dec_vector(const GmSecretKey& sk, const SyyCiphertext& c) {
  BitVector v;
  v.reserve(c.ell());
  for (const auto& comp : c.components) v.push_back(gm_dec(sk, comp));
  return v;
}

inline Bit syy_dec(const GmSecretKey& sk, const SyyCiphertext& c) {
  if (c.components.empty()) throw CryptoError("syy: empty ciphertext");
  return is_zero(syy_dec_vector(sk, c)) ? 1 : 0;
}

inline void syy_check_pair(const GmPublicKey& pk, const SyyCiphertext& x,
                           const SyyCiphertext& y) {
  if (x.ell() != y.ell() || x.ell() == 0) throw InvalidArgument("syy_and: length mismatch");
  for (const auto* c : {&x, &y}) {
    for (const auto& comp : c->components) {
      if (comp.value >= pk.n) throw CryptoError("syy_and: modulus mismatch");
    }
  }
}

/// ⊙ with caller-supplied matrices: z_i = ∏_{a_ij=1} x_j · ∏_{b_ij=1} y_j · r_i²,
/// so v_z = A·v_x + B·v_y.
inline SyyCiphertext syy_and_with(const GmPublicKey& pk, const SyyCiphertext& x,
                                  const SyyCiphertext& y, const GF2Matrix& a,
                                  const GF2Matrix& b, Rng& rng) {
  syy_check_pair(pk, x, y);
  const std::size_t ell = x.ell();
  if (a.dim() != ell || b.dim() != ell) throw InvalidArgument("syy_and: matrix dimension");
  SyyCiphertext z;
  z.components.reserve(ell);
  for (std::size_t i = 0; i < ell; ++i) {
    BigInt acc = 1;
    for (std::size_t j = 0; j < ell; ++j) {
      if (a.get(i, j)) acc = mulm(acc, x.components[j].value, pk.n);
      if (b.get(i, j)) acc = mulm(acc, y.components[j].value, pk.n);
    }
    const BigInt r = random_unit(pk.n, rng);
    z.components.push_back({mulm(acc, mulm(r, r, pk.n), pk.n)});
  }
  return z;
}

/// Randomized AND: fresh nonsingular A, B on every call. Fails exactly
/// when both operands encrypt 0 and A·v_x = B·v_y, which for independent
/// uniform A, B has probability 1/(2^ℓ − 1).
inline SyyCiphertext syy_and(const GmPublicKey& pk, const SyyCiphertext& x,
                             const SyyCiphertext& y, Rng& rng) {
  syy_check_pair(pk, x, y);
  const GF2Matrix a = random_nonsingular_gf2(x.ell(), rng);
  const GF2Matrix b = random_nonsingular_gf2(x.ell(), rng);
  return syy_and_with(pk, x, y, a, b, rng);
}

inline double syy_and_failure_probability(std::size_t ell) {
  return 1.0 / (std::ldexp(1.0, static_cast<int>(ell)) - 1.0);
}

/// Sander-Young-Yung encryption of the monoid ({0,1}, ·) over GM keys.
class SyyScheme {
 public:
  using SecretKey = GmSecretKey;
  using PublicKey = GmPublicKey;
  using Plaintext = Bit;
  using Ciphertext = SyyCiphertext;

  SyyScheme(GmScheme gm, std::size_t ell) : gm_(std::move(gm)), ell_(ell) {
    if (ell_ == 0) throw InvalidArgument("syy: ell must be >= 1");
  }

  const GmScheme& gm() const { return gm_; }
  std::size_t ell() const { return ell_; }

  KeyPair<SecretKey, PublicKey> keygen(Rng& rng) const { return gm_.keygen(rng); }
  PublicKey derive_public_key(const SecretKey& sk, Rng& rng) const {
    return gm_.derive_public_key(sk, rng);
  }
  Ciphertext encrypt(const PublicKey& pk, const Plaintext& m, Rng& rng) const {
    return syy_enc(pk, m, ell_, rng);
  }
  Plaintext decrypt(const SecretKey& sk, const Ciphertext& c) const {
    if (c.ell() != ell_) throw CryptoError("syy: ciphertext length does not match ell");
    return syy_dec(sk, c);
  }
  std::vector<Plaintext> plaintexts() const { return {0, 1}; }
  SchemeInfo info() const {
    return {"syy-" + std::to_string(gm_.bits()) + "-l" + std::to_string(ell_), 0, true, 0.0,
            false};
  }

  Ciphertext multiply(const PublicKey& pk, const Ciphertext& a, const Ciphertext& b,
                      Rng& rng) const {
    return syy_and(pk, a, b, rng);
  }

  /// MUL/AND gates and constants only; constants become fresh encryptions.
  std::vector<Ciphertext> eval(const PublicKey& pk, const Circuit& f,
                               std::span<const Ciphertext> in, Rng& rng) const {
    struct Ops {
      const SyyScheme* s;
      const PublicKey* pk;
      Rng* rng;
      Ciphertext mul(const Ciphertext& a, const Ciphertext& b) {
        return syy_and(*pk, a, b, *rng);
      }
      Ciphertext constant(std::uint64_t v) {
        if (v > 1) throw InvalidArgument("syy eval: constants must be bits");
        return s->encrypt(*pk, static_cast<Bit>(v), *rng);
      }
    } ops{this, &pk, &rng};
    return evaluate_with<Ciphertext>(f, in, ops);
  }

 private:
  GmScheme gm_;
  std::size_t ell_;
};

}  // namespace bridges
