// Copyright 2026 The bridges Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <concepts>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "bridges/error.hpp"
#include "bridges/rng.hpp"
#include "bridges/scheme.hpp"

namespace bridges {

/// Injective ι: P1 → P2 with partial inverse (nullopt off the image).
template <typename P1, typename P2>
struct PlaintextEmbedding {
  std::function<P2(const P1&)> to;
  std::function<std::optional<P1>(const P2&)> from;
};

/// Bits into a plaintext space containing 0 and 1 (F_p, {0,1}, ...).
template <typename P2, typename P1 = Bit>
PlaintextEmbedding<P1, P2> bit_embedding() {
  return {[](const P1& m) { return static_cast<P2>(m); },
          [](const P2& v) -> std::optional<P1> {
            if (v == P2{0} || v == P2{1}) return static_cast<P1>(v);
            return std::nullopt;
          }};
}

template <typename P>
PlaintextEmbedding<P, P> identity_embedding() {
  return {[](const P& m) { return m; }, [](const P& v) -> std::optional<P> { return v; }};
}

// Output of key generation stages two and three: the second secret key
// (derived from sk₁), the second public key, and the bridge key.
template <typename SK2, typename PK2, typename BK>
struct KeyExtension {
  SK2 sk2;
  PK2 pk2;
  BK bk;
};

/// A bridge (ι, keygen, f) from Source to Target.
///
///   extend_keys(sk1, pk1, rng)   stages two and three of key generation
///   apply(pk2, bk, c1, rng)      the map f; pk2 carries the target's
///                                evaluation key
///   target_secret(sk2)           the Target key that decrypts f's output
///
/// Stage one is always Source::keygen; see bridge_keygen.
template <typename B>
concept Bridge = requires(const B& b, Rng& rng, const typename B::Source::SecretKey& sk1,
                          const typename B::Source::PublicKey& pk1,
                          const typename B::Source::Ciphertext& c1,
                          const typename B::Source::Plaintext& m,
                          const typename B::Target::Plaintext& m2,
                          const typename B::SecondSecret& sk2,
                          const typename B::Target::PublicKey& pk2,
                          const typename B::BridgeKey& bk) {
  requires EncryptionScheme<typename B::Source>;
  requires EncryptionScheme<typename B::Target>;
  { b.source() } -> std::convertible_to<const typename B::Source&>;
  { b.target() } -> std::convertible_to<const typename B::Target&>;
  { b.extend_keys(sk1, pk1, rng) } -> std::same_as<
      KeyExtension<typename B::SecondSecret, typename B::Target::PublicKey, typename B::BridgeKey>>;
  { b.apply(pk2, bk, c1, rng) } -> std::same_as<typename B::Target::Ciphertext>;
  { b.target_secret(sk2) } -> std::convertible_to<typename B::Target::SecretKey>;
  { b.embed(m) } -> std::same_as<typename B::Target::Plaintext>;
  { b.unembed(m2) } -> std::same_as<std::optional<typename B::Source::Plaintext>>;
  { b.failure_bound() } -> std::convertible_to<double>;
  { b.name() } -> std::convertible_to<std::string>;
};

template <Bridge B>
struct BridgeKeyMaterial {
  typename B::Source::SecretKey sk1;
  typename B::Source::PublicKey pk1;
  typename B::SecondSecret sk2;
  typename B::Target::PublicKey pk2;
  typename B::BridgeKey bk;
};

template <Bridge B>
struct BridgePublicKey {
  typename B::Source::PublicKey pk1;
  typename B::Target::PublicKey pk2;
  typename B::BridgeKey bk;
};

/// Three-stage key generation: (sk₁, pk₁) ← KeyGen₁, then the bridge
/// derives sk₂ from sk₁, draws pk₂ and finally bk.
template <Bridge B>
BridgeKeyMaterial<B> bridge_keygen(const B& b, Rng& rng) {
  auto kp1 = b.source().keygen(rng);
  auto ext = b.extend_keys(kp1.sk, kp1.pk, rng);
  return {std::move(kp1.sk), std::move(kp1.pk), std::move(ext.sk2), std::move(ext.pk2),
          std::move(ext.bk)};
}

template <typename C1, typename C2>
struct GraphCiphertext {
  C1 c1;
  C2 c2;
  bool operator==(const GraphCiphertext&) const = default;
};

/// The scheme attached to a bridge: ciphertexts (a, f(bk, b)) with a and b
/// independent encryptions of m. Decryption only looks at the first
/// component.
template <Bridge B>
class GraphScheme {
 public:
  using Plaintext = typename B::Source::Plaintext;
  using Ciphertext =
      GraphCiphertext<typename B::Source::Ciphertext, typename B::Target::Ciphertext>;
  using SecretKey = std::pair<typename B::Source::SecretKey, typename B::SecondSecret>;
  using PublicKey = BridgePublicKey<B>;
  static constexpr bool symmetric = is_symmetric_v<typename B::Source>;

  explicit GraphScheme(B bridge) : bridge_(std::move(bridge)) {}

  const B& bridge() const { return bridge_; }

  KeyPair<SecretKey, PublicKey> keygen(Rng& rng) const {
    auto mat = bridge_keygen(bridge_, rng);
    return {{std::move(mat.sk1), std::move(mat.sk2)},
            {std::move(mat.pk1), std::move(mat.pk2), std::move(mat.bk)}};
  }
  Ciphertext encrypt(const PublicKey& pk, const Plaintext& m, Rng& rng) const {
    auto a = bridge_.source().encrypt(pk.pk1, m, rng);
    auto b = bridge_.source().encrypt(pk.pk1, m, rng);
    return {std::move(a), bridge_.apply(pk.pk2, pk.bk, b, rng)};
  }
  Plaintext decrypt(const SecretKey& sk, const Ciphertext& c) const {
    return bridge_.source().decrypt(sk.first, c.c1);
  }
  /// ι⁻¹(Dec₂(sk₂, c₂)).
  std::optional<Plaintext> decrypt_second(const SecretKey& sk, const Ciphertext& c) const {
    return bridge_.unembed(bridge_.target().decrypt(bridge_.target_secret(sk.second), c.c2));
  }
  std::vector<Plaintext> plaintexts() const { return bridge_.source().plaintexts(); }
  SchemeInfo info() const {
    auto i = bridge_.source().info();
    i.name = "graph(" + bridge_.name() + ")";
    i.insecure = i.insecure || bridge_.target().info().insecure;
    return i;
  }

 private:
  B bridge_;
};

/// f = id on a single scheme: sk₂ = sk₁, pk₂ a second public key for the
/// same secret, empty bridge key.
template <Rekeyable S>
class IdentityBridge {
 public:
  using Source = S;
  using Target = S;
  using SecondSecret = typename S::SecretKey;
  using BridgeKey = std::monostate;

  explicit IdentityBridge(S scheme) : scheme_(std::move(scheme)) {}

  const S& source() const { return scheme_; }
  const S& target() const { return scheme_; }
  std::string name() const { return "identity(" + scheme_.info().name + ")"; }

  KeyExtension<SecondSecret, typename S::PublicKey, BridgeKey> extend_keys(
      const typename S::SecretKey& sk1, const typename S::PublicKey&, Rng& rng) const {
    return {sk1, scheme_.derive_public_key(sk1, rng), {}};
  }
  typename S::Ciphertext apply(const typename S::PublicKey&, const BridgeKey&,
                               const typename S::Ciphertext& c, Rng&) const {
    return c;
  }
  const typename S::SecretKey& target_secret(const SecondSecret& sk2) const { return sk2; }
  typename S::Plaintext embed(const typename S::Plaintext& m) const { return m; }
  std::optional<typename S::Plaintext> unembed(const typename S::Plaintext& m) const {
    return m;
  }
  double failure_bound() const { return scheme_.info().failure_bound; }

 private:
  S scheme_;
};

struct BridgeCorrectness {
  std::size_t trials = 0;
  std::size_t failures = 0;
  double bound = 0.0;

  double rate() const {
    return trials ? static_cast<double>(failures) / static_cast<double>(trials) : 0.0;
  }
  // One-sided 95% Hoeffding margin on the failure rate.
  double half_width() const {
    return trials ? std::sqrt(std::log(20.0) / (2.0 * static_cast<double>(trials))) : 1.0;
  }
  /// Exact bridges (bound 0) must not fail at all; others may exceed the
  /// declared bound by at most three binomial standard deviations.
  bool within_bound() const {
    if (bound <= 0.0) return failures == 0;
    const double sigma = std::sqrt(bound * (1.0 - bound) / static_cast<double>(trials));
    return rate() <= bound + 3.0 * sigma;
  }
};

/// Pr[Dec₂(sk₂, f(bk, Enc₁(pk₁, m))) ≠ ι(m)] over uniform m, with fresh
/// bridge keys every `block` trials.
template <Bridge B>
BridgeCorrectness check_bridge_correctness(const B& b, std::size_t trials, Rng& rng,
                                           std::size_t block = 100) {
  if (trials == 0) throw InvalidArgument("check_bridge_correctness: trials must be >= 1");
  if (block == 0) block = 1;
  BridgeCorrectness r;
  r.bound = b.failure_bound();
  std::optional<BridgeKeyMaterial<B>> mat;
  for (std::size_t t = 0; t < trials; ++t) {
    if (t % block == 0) mat = bridge_keygen(b, rng);
    const auto m = random_plaintext(b.source(), rng);
    const auto c1 = b.source().encrypt(mat->pk1, m, rng);
    const auto c2 = b.apply(mat->pk2, mat->bk, c1, rng);
    const auto got = b.target().decrypt(b.target_secret(mat->sk2), c2);
    ++r.trials;
    if (!(got == b.embed(m))) ++r.failures;
  }
  return r;
}

}  // namespace bridges
