// Copyright 2026 The bridges Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bridges/circuit.hpp"
#include "bridges/error.hpp"
#include "bridges/rng.hpp"
#include "bridges/scheme.hpp"

namespace bridges {

// INSECURE. A transparent stand-in for a somewhat homomorphic scheme over
// F_p: ciphertexts carry their plaintext in the clear together with a
// multiplicative depth counter. Decryption refuses ciphertexts deeper than
// the key's capacity, which models a noise budget running out.

struct MockSecretKey {
  std::uint64_t key_id = 0;
  bool operator==(const MockSecretKey&) const = default;
};

struct MockPublicKey {
  std::uint64_t p = 2;
  std::optional<std::size_t> capacity;  // nullopt: unbounded
  std::uint64_t key_id = 0;
  bool operator==(const MockPublicKey&) const = default;
};

struct MockCiphertext {
  std::uint64_t value = 0;
  std::size_t depth = 0;
  std::uint64_t tag = 0;  // blinding value, cosmetic only
  std::uint64_t key_id = 0;
  std::uint64_t modulus = 2;
  bool operator==(const MockCiphertext&) const = default;
};

class MockFhe {
 public:
  using SecretKey = MockSecretKey;
  using PublicKey = MockPublicKey;
  using Plaintext = std::uint64_t;
  using Ciphertext = MockCiphertext;

  explicit MockFhe(std::uint64_t p = 2, std::optional<std::size_t> capacity = std::nullopt)
      : p_(p), capacity_(capacity) {
    if (p > std::numeric_limits<std::uint32_t>::max() || !is_small_prime(p)) {
      throw InvalidArgument("mockfhe: plaintext modulus must be a prime below 2^32");
    }
  }

  std::uint64_t p() const { return p_; }
  std::optional<std::size_t> capacity() const { return capacity_; }

  KeyPair<SecretKey, PublicKey> keygen(Rng& rng) const {
    const std::uint64_t id = rng.next_u64() | 1;
    return {{id}, {p_, capacity_, id}};
  }
  PublicKey derive_public_key(const SecretKey& sk, Rng&) const { return {p_, capacity_, sk.key_id}; }

  Ciphertext encrypt(const PublicKey& pk, const Plaintext& m, Rng& rng) const {
    return {m % pk.p, 0, rng.next_u64(), pk.key_id, pk.p};
  }
  Plaintext decrypt(const SecretKey& sk, const Ciphertext& c) const {
    if (c.key_id != sk.key_id) throw CryptoError("mockfhe: ciphertext under a different key");
    if (capacity_ && c.depth > *capacity_) throw DepthExceeded(c.depth, *capacity_);
    return c.value;
  }
  std::vector<Plaintext> plaintexts() const {
    std::vector<Plaintext> out(p_);
    for (std::uint64_t i = 0; i < p_; ++i) out[i] = i;
    return out;
  }
  SchemeInfo info() const {
    return {"mockfhe-F" + std::to_string(p_), capacity_.value_or(0), true, 0.0, true};
  }

  Ciphertext trivial(const PublicKey& pk, std::uint64_t v) const {
    return {v % pk.p, 0, 0, pk.key_id, pk.p};
  }
  Ciphertext add(const PublicKey& pk, const Ciphertext& a, const Ciphertext& b) const {
    check(pk, a, b);
    return {(a.value + b.value) % pk.p, std::max(a.depth, b.depth), mix(a, b, 1), pk.key_id,
            pk.p};
  }
  Ciphertext sub(const PublicKey& pk, const Ciphertext& a, const Ciphertext& b) const {
    check(pk, a, b);
    return {(a.value + pk.p - b.value) % pk.p, std::max(a.depth, b.depth), mix(a, b, 2),
            pk.key_id, pk.p};
  }
  Ciphertext mul(const PublicKey& pk, const Ciphertext& a, const Ciphertext& b) const {
    check(pk, a, b);
    return {(a.value * b.value) % pk.p, std::max(a.depth, b.depth) + 1, mix(a, b, 3),
            pk.key_id, pk.p};
  }
  Ciphertext multiply(const PublicKey& pk, const Ciphertext& a, const Ciphertext& b,
                      Rng&) const {
    return mul(pk, a, b);
  }
  // Square-and-multiply, so depth grows as pow_depth predicts.
  Ciphertext pow(const PublicKey& pk, const Ciphertext& a, std::uint64_t e) const {
    Circuit f(1);
    f.mark_output(f.pow(0, e));
    const std::vector<Ciphertext> in = {a};
    return eval_rngless(pk, f, in)[0];
  }
  std::uint64_t characteristic(const PublicKey& pk) const { return pk.p; }

  std::vector<Ciphertext> eval(const PublicKey& pk, const Circuit& f,
                               std::span<const Ciphertext> in, Rng&) const {
    return eval_rngless(pk, f, in);
  }

  std::vector<Ciphertext> eval_rngless(const PublicKey& pk, const Circuit& f,
                                       std::span<const Ciphertext> in) const {
    for (const auto& g : f.gates()) {
      if ((g.kind == GateKind::Xor || g.kind == GateKind::And) && pk.p != 2) {
        throw InvalidArgument("mockfhe: boolean gate over F_" + std::to_string(pk.p));
      }
    }
    struct Ops {
      const MockFhe* h;
      const PublicKey* pk;
      Ciphertext constant(std::uint64_t v) { return h->trivial(*pk, v); }
      Ciphertext add(const Ciphertext& a, const Ciphertext& b) { return h->add(*pk, a, b); }
      Ciphertext sub(const Ciphertext& a, const Ciphertext& b) { return h->sub(*pk, a, b); }
      Ciphertext mul(const Ciphertext& a, const Ciphertext& b) { return h->mul(*pk, a, b); }
    } ops{this, &pk};
    return evaluate_with<Ciphertext>(f, in, ops);
  }

 private:
  static void check(const PublicKey& pk, const Ciphertext& a, const Ciphertext& b) {
    if (a.modulus != pk.p || b.modulus != pk.p) throw CryptoError("mockfhe: ring mismatch");
    if (a.key_id != pk.key_id || b.key_id != pk.key_id) {
      throw CryptoError("mockfhe: ciphertexts under different keys");
    }
  }
  static std::uint64_t mix(const Ciphertext& a, const Ciphertext& b, std::uint64_t op) {
    return detail::splitmix64(a.tag ^ detail::splitmix64(b.tag + op));
  }

  std::uint64_t p_;
  std::optional<std::size_t> capacity_;
};

}  // namespace bridges
