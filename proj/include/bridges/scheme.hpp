// Copyright 2026 The bridges Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <type_traits>
#include <utility>
#include <vector>

#include "bridges/circuit.hpp"
#include "bridges/error.hpp"
#include "bridges/gf2.hpp"
#include "bridges/rng.hpp"

namespace bridges {

template <typename SK, typename PK>
struct KeyPair {
  SK sk;
  PK pk;
};

/// Descriptive metadata. Nothing branches on `level` or `compact`.
struct SchemeInfo {
  std::string name;
  std::size_t level = 0;
  bool compact = true;
  double failure_bound = 0.0;  // declared per-decryption failure bound
  bool insecure = false;
};

/// keygen / encrypt / decrypt over a finite, enumerable plaintext space.
/// Symmetric schemes declare `static constexpr bool symmetric = true` and
/// use the secret key itself as their PublicKey (it is never given to an
/// adversary; the game harness hands out an encryption oracle instead).
template <typename S>
concept EncryptionScheme = requires(const S& s, Rng& rng, const typename S::SecretKey& sk,
                                    const typename S::PublicKey& pk,
                                    const typename S::Plaintext& m,
                                    const typename S::Ciphertext& c) {
  typename S::SecretKey;
  typename S::PublicKey;
  typename S::Plaintext;
  typename S::Ciphertext;
  { s.keygen(rng) } -> std::same_as<KeyPair<typename S::SecretKey, typename S::PublicKey>>;
  { s.encrypt(pk, m, rng) } -> std::same_as<typename S::Ciphertext>;
  { s.decrypt(sk, c) } -> std::same_as<typename S::Plaintext>;
  { s.plaintexts() } -> std::same_as<std::vector<typename S::Plaintext>>;
  { s.info() } -> std::same_as<SchemeInfo>;
};

template <typename S>
constexpr bool is_symmetric_v = [] {
  if constexpr (requires { S::symmetric; }) {
    return static_cast<bool>(S::symmetric);
  } else {
    return false;
  }
}();

/// Schemes that can issue a second public key for an existing secret key.
template <typename S>
concept Rekeyable = EncryptionScheme<S> &&
    requires(const S& s, const typename S::SecretKey& sk, Rng& rng) {
      { s.derive_public_key(sk, rng) } -> std::same_as<typename S::PublicKey>;
    };

/// Homomorphic evaluation of a Circuit. The evaluation key travels inside
/// the public key.
template <typename S>
concept HomomorphicScheme = EncryptionScheme<S> &&
    requires(const S& s, const typename S::PublicKey& pk, const Circuit& f,
             std::span<const typename S::Ciphertext> in, Rng& rng) {
      { s.eval(pk, f, in, rng) } -> std::same_as<std::vector<typename S::Ciphertext>>;
    };

/// Per-operation interface used by the bridge constructions: ring
/// arithmetic on ciphertexts plus trivial encryptions of constants.
template <typename H>
concept RingTarget = EncryptionScheme<H> &&
    requires(const H& h, const typename H::PublicKey& pk, const typename H::Ciphertext& a,
             Rng& rng, std::uint64_t v) {
      { h.add(pk, a, a) } -> std::same_as<typename H::Ciphertext>;
      { h.sub(pk, a, a) } -> std::same_as<typename H::Ciphertext>;
      { h.multiply(pk, a, a, rng) } -> std::same_as<typename H::Ciphertext>;
      { h.trivial(pk, v) } -> std::same_as<typename H::Ciphertext>;
      { h.characteristic(pk) } -> std::convertible_to<std::uint64_t>;
    };

/// Targets that only multiply (SYY). Encryptions of constants are fresh.
template <typename H>
concept MultiplicativeTarget = EncryptionScheme<H> &&
    requires(const H& h, const typename H::PublicKey& pk, const typename H::Ciphertext& a,
             Rng& rng) {
      { h.multiply(pk, a, a, rng) } -> std::same_as<typename H::Ciphertext>;
    };

/// Source schemes whose keys and ciphertexts flatten to bit strings, as
/// the generic recipe requires.
template <typename S>
concept BitDecomposable = EncryptionScheme<S> &&
    requires(const S& s, const typename S::SecretKey& sk, const typename S::Ciphertext& c) {
      { s.secret_key_bits(sk) } -> std::same_as<BitVector>;
      { s.ciphertext_bits(c) } -> std::same_as<BitVector>;
      { s.secret_key_width() } -> std::convertible_to<std::size_t>;
      { s.ciphertext_width() } -> std::convertible_to<std::size_t>;
    };

template <EncryptionScheme S>
typename S::Plaintext random_plaintext(const S& s, Rng& rng) {
  auto space = s.plaintexts();
  return space[rng.uniform_below(static_cast<std::uint64_t>(space.size()))];
}

/// Generic circuit evaluator over ciphertexts. `ops` supplies whichever of
/// constant(v), add(a,b), sub(a,b), mul(a,b) the backend supports; gates
/// needing a missing operation raise InvalidArgument. POW runs
/// square-and-multiply (see pow_depth), XOR maps to add, AND to mul.
template <typename C, typename Ops>
std::vector<C> evaluate_with(const Circuit& f, std::span<const C> inputs, Ops& ops) {
  if (inputs.size() != f.num_inputs()) {
    throw InvalidArgument("eval: expected " + std::to_string(f.num_inputs()) +
                          " inputs, got " + std::to_string(inputs.size()));
  }
  auto unsupported = [](GateKind k) {
    return InvalidArgument("eval: backend does not support gate '" +
                           std::string(gate_kind_name(k)) + "'");
  };
  std::vector<std::optional<C>> val(f.size());
  for (std::size_t id = 0; id < f.size(); ++id) {
    const Gate& g = f.gates()[id];
    auto arg = [&](std::size_t k) -> const C& { return *val[g.args[k]]; };
    switch (g.kind) {
      case GateKind::Input: val[id] = inputs[g.value]; break;
      case GateKind::Const:
        if constexpr (requires { ops.constant(std::uint64_t{}); }) {
          val[id] = ops.constant(g.value);
        } else {
          throw unsupported(g.kind);
        }
        break;
      case GateKind::Xor:
      case GateKind::Add:
        if constexpr (requires { ops.add(arg(0), arg(1)); }) {
          val[id] = ops.add(arg(0), arg(1));
        } else {
          throw unsupported(g.kind);
        }
        break;
      case GateKind::Sub:
        if constexpr (requires { ops.sub(arg(0), arg(1)); }) {
          val[id] = ops.sub(arg(0), arg(1));
        } else {
          throw unsupported(g.kind);
        }
        break;
      case GateKind::And:
      case GateKind::Mul: val[id] = ops.mul(arg(0), arg(1)); break;
      case GateKind::Pow: {
        std::uint64_t e = g.value;
        if (e == 0) {
          if constexpr (requires { ops.constant(std::uint64_t{}); }) {
            val[id] = ops.constant(1);
            break;
          } else {
            throw unsupported(g.kind);
          }
        }
        std::optional<C> acc;
        C base = arg(0);
        while (e) {
          if (e & 1) acc = acc ? ops.mul(*acc, base) : base;
          e >>= 1;
          if (e) base = ops.mul(base, base);
        }
        val[id] = std::move(*acc);
        break;
      }
    }
  }
  std::vector<C> out;
  out.reserve(f.outputs().size());
  for (auto w : f.outputs()) out.push_back(*val[w]);
  return out;
}

/// The product 𝒮₁ × 𝒮₂: componentwise keys, encryption and decryption.
template <EncryptionScheme S1, EncryptionScheme S2>
class ProductScheme {
 public:
  using SecretKey = std::pair<typename S1::SecretKey, typename S2::SecretKey>;
  using PublicKey = std::pair<typename S1::PublicKey, typename S2::PublicKey>;
  using Plaintext = std::pair<typename S1::Plaintext, typename S2::Plaintext>;
  using Ciphertext = std::pair<typename S1::Ciphertext, typename S2::Ciphertext>;
  static constexpr bool symmetric = is_symmetric_v<S1> || is_symmetric_v<S2>;

  ProductScheme(S1 a, S2 b) : first_(std::move(a)), second_(std::move(b)) {}

  const S1& first() const { return first_; }
  const S2& second() const { return second_; }

  KeyPair<SecretKey, PublicKey> keygen(Rng& rng) const {
    auto k1 = first_.keygen(rng);
    auto k2 = second_.keygen(rng);
    return {{k1.sk, k2.sk}, {k1.pk, k2.pk}};
  }
  Ciphertext encrypt(const PublicKey& pk, const Plaintext& m, Rng& rng) const {
    auto c1 = first_.encrypt(pk.first, m.first, rng);
    auto c2 = second_.encrypt(pk.second, m.second, rng);
    return {std::move(c1), std::move(c2)};
  }
  Plaintext decrypt(const SecretKey& sk, const Ciphertext& c) const {
    return {first_.decrypt(sk.first, c.first), second_.decrypt(sk.second, c.second)};
  }
  std::vector<Plaintext> plaintexts() const {
    std::vector<Plaintext> out;
    for (const auto& a : first_.plaintexts()) {
      for (const auto& b : second_.plaintexts()) out.emplace_back(a, b);
    }
    return out;
  }
  SchemeInfo info() const {
    auto a = first_.info();
    auto b = second_.info();
    return {a.name + "x" + b.name, std::max(a.level, b.level), a.compact && b.compact,
            a.failure_bound + b.failure_bound, a.insecure || b.insecure};
  }

 private:
  S1 first_;
  S2 second_;
};

/// 𝓗^p: p copies of one scheme with independent keys per copy.
template <EncryptionScheme S>
class PowerScheme {
 public:
  using SecretKey = std::vector<typename S::SecretKey>;
  using PublicKey = std::vector<typename S::PublicKey>;
  using Plaintext = std::vector<typename S::Plaintext>;
  using Ciphertext = std::vector<typename S::Ciphertext>;
  static constexpr bool symmetric = is_symmetric_v<S>;

  PowerScheme(S base, std::size_t copies) : base_(std::move(base)), copies_(copies) {
    if (copies_ == 0) throw InvalidArgument("PowerScheme: need at least one copy");
  }

  const S& base() const { return base_; }
  std::size_t copies() const { return copies_; }

  KeyPair<SecretKey, PublicKey> keygen(Rng& rng) const {
    KeyPair<SecretKey, PublicKey> out;
    for (std::size_t i = 0; i < copies_; ++i) {
      auto k = base_.keygen(rng);
      out.sk.push_back(std::move(k.sk));
      out.pk.push_back(std::move(k.pk));
    }
    return out;
  }
  Ciphertext encrypt(const PublicKey& pk, const Plaintext& m, Rng& rng) const {
    check(pk.size());
    check(m.size());
    Ciphertext out;
    for (std::size_t i = 0; i < copies_; ++i) out.push_back(base_.encrypt(pk[i], m[i], rng));
    return out;
  }
  Plaintext decrypt(const SecretKey& sk, const Ciphertext& c) const {
    check(sk.size());
    check(c.size());
    Plaintext out;
    for (std::size_t i = 0; i < copies_; ++i) out.push_back(base_.decrypt(sk[i], c[i]));
    return out;
  }
  std::vector<Plaintext> plaintexts() const {
    const auto single = base_.plaintexts();
    std::vector<Plaintext> out{Plaintext{}};
    for (std::size_t i = 0; i < copies_; ++i) {
      std::vector<Plaintext> next;
      for (const auto& prefix : out) {
        for (const auto& v : single) {
          auto p = prefix;
          p.push_back(v);
          next.push_back(std::move(p));
        }
      }
      out = std::move(next);
    }
    return out;
  }
  SchemeInfo info() const {
    auto i = base_.info();
    i.name += "^" + std::to_string(copies_);
    i.failure_bound *= static_cast<double>(copies_);
    return i;
  }

 private:
  void check(std::size_t n) const {
    if (n != copies_) throw InvalidArgument("PowerScheme: component count mismatch");
  }

  S base_;
  std::size_t copies_;
};

/// S[K]: the base scheme with K(sk, pk, rng) appended to its public key.
/// Encryption and decryption are the base scheme's, bit for bit.
template <EncryptionScheme S, typename K>
class KnowledgeWrapped {
 public:
  using Knowledge = std::invoke_result_t<const K&, const typename S::SecretKey&,
                                         const typename S::PublicKey&, Rng&>;
  struct PublicKey {
    typename S::PublicKey base;
    Knowledge knowledge;
  };
  using SecretKey = typename S::SecretKey;
  using Plaintext = typename S::Plaintext;
  using Ciphertext = typename S::Ciphertext;
  static constexpr bool symmetric = is_symmetric_v<S>;

  KnowledgeWrapped(S base, K k) : base_(std::move(base)), k_(std::move(k)) {}

  const S& base() const { return base_; }

  KeyPair<SecretKey, PublicKey> keygen(Rng& rng) const {
    auto kp = base_.keygen(rng);
    auto extra = k_(kp.sk, kp.pk, rng);
    return {kp.sk, PublicKey{kp.pk, std::move(extra)}};
  }
  Ciphertext encrypt(const PublicKey& pk, const Plaintext& m, Rng& rng) const {
    return base_.encrypt(pk.base, m, rng);
  }
  Plaintext decrypt(const SecretKey& sk, const Ciphertext& c) const {
    return base_.decrypt(sk, c);
  }
  std::vector<Plaintext> plaintexts() const { return base_.plaintexts(); }
  SchemeInfo info() const {
    auto i = base_.info();
    i.name += "[K]";
    return i;
  }

 private:
  S base_;
  K k_;
};

struct CorrectnessReport {
  std::size_t trials = 0;
  std::size_t failures = 0;
  double rate() const {
    return trials ? static_cast<double>(failures) / static_cast<double>(trials) : 0.0;
  }
};

/// Empirical decryption failures on uniform plaintexts, with a fresh
/// keypair every `block` trials.
template <EncryptionScheme S>
CorrectnessReport check_decryption(const S& s, std::size_t trials, Rng& rng,
                                   std::size_t block = 100) {
  if (trials == 0) throw InvalidArgument("check_decryption: trials must be >= 1");
  if (block == 0) block = 1;
  CorrectnessReport r;
  std::optional<KeyPair<typename S::SecretKey, typename S::PublicKey>> kp;
  for (std::size_t t = 0; t < trials; ++t) {
    if (t % block == 0) kp = s.keygen(rng);
    const auto m = random_plaintext(s, rng);
    const auto c = s.encrypt(kp->pk, m, rng);
    ++r.trials;
    if (!(s.decrypt(kp->sk, c) == m)) ++r.failures;
  }
  return r;
}

}  // namespace bridges
