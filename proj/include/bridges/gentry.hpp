// Copyright 2026 The bridges Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bridges/bridge.hpp"
#include "bridges/circuit.hpp"
#include "bridges/error.hpp"
#include "bridges/gf2.hpp"
#include "bridges/numtheory.hpp"
#include "bridges/rng.hpp"
#include "bridges/scheme.hpp"

namespace bridges {

/// XOR(x, y) ↦ 2(x+y) − (x+y)², AND(x, y) ↦ x·y. On inputs in {0, 1} of any
/// ring the result agrees with the boolean circuit. With `equality_p` set,
/// each output o is additionally normalized to 1 − (o − 1)^(p−1), the
/// indicator [o = 1] over F_p.
inline Circuit rewrite_boolean_to_ring(const Circuit& c,
                                       std::optional<std::uint64_t> equality_p = std::nullopt) {
  Circuit out;
  std::vector<Circuit::Wire> map(c.size());
  for (std::size_t id = 0; id < c.size(); ++id) {
    const Gate& g = c.gates()[id];
    switch (g.kind) {
      case GateKind::Input: map[id] = out.input(); break;
      case GateKind::Const: map[id] = out.constant(g.value); break;
      case GateKind::Xor: {
        // x ⊕ 1 = 1 − x costs no multiplication.
        const Gate& l = c.gates()[g.args[0]];
        const Gate& r = c.gates()[g.args[1]];
        if (l.kind == GateKind::Const || r.kind == GateKind::Const) {
          const bool left_const = l.kind == GateKind::Const;
          const auto k = (left_const ? l.value : r.value) & 1;
          const auto x = map[left_const ? g.args[1] : g.args[0]];
          map[id] = k ? out.sub(out.constant(1), x) : x;
          break;
        }
        const auto s = out.add(map[g.args[0]], map[g.args[1]]);
        map[id] = out.sub(out.add(s, s), out.mul(s, s));
        break;
      }
      case GateKind::And: map[id] = out.mul(map[g.args[0]], map[g.args[1]]); break;
      default:
        throw InvalidArgument("rewrite_boolean_to_ring: unsupported gate kind '" +
                              std::string(gate_kind_name(g.kind)) + "'");
    }
  }
  for (auto w : c.outputs()) {
    auto o = map[w];
    if (equality_p && *equality_p != 2) {
      const auto one = out.constant(1);
      o = out.sub(one, out.pow(out.sub(o, one), *equality_p - 1));
    }
    out.mark_output(o);
  }
  return out;
}

/// Boolean circuit(s) computing ι∘Dec from (key bits, ciphertext bits).
/// Inputs 0..key_bits−1 are the secret key, the rest the ciphertext.
struct DecCircuit {
  Circuit circuit;
  std::size_t key_bits = 0;
  std::size_t ciphertext_bits = 0;

  std::size_t outputs() const { return circuit.outputs().size(); }

  std::vector<std::uint64_t> eval(const BitVector& key, const BitVector& ct) const {
    if (key.size() != key_bits || ct.size() != ciphertext_bits) {
      throw InvalidArgument("DecCircuit: input width mismatch");
    }
    std::vector<std::uint64_t> in(key.begin(), key.end());
    in.insert(in.end(), ct.begin(), ct.end());
    return eval_circuit_plain(circuit, PrimeField{2}, in);
  }
};

/// CSGN decryption ∏_{i∈S} c_i written over the key's characteristic
/// vector: AND_i NOT(sk_i AND NOT c_i).
inline DecCircuit csgn_dec_circuit(std::size_t n) {
  if (n == 0) throw InvalidArgument("csgn_dec_circuit: n must be >= 1");
  Circuit c(2 * n);
  std::vector<Circuit::Wire> terms;
  terms.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    terms.push_back(c.not_(c.and_(i, c.not_(n + i))));
  }
  c.mark_output(c.and_all(terms));
  return {std::move(c), n, n};
}

namespace detail {

// AND of literals matching the `width` low bits of `value`.
inline Circuit::Wire match_constant(Circuit& c, std::size_t first_input, std::size_t width,
                                    std::uint64_t value, const std::vector<Circuit::Wire>& neg) {
  std::vector<Circuit::Wire> lits;
  lits.reserve(width);
  for (std::size_t k = 0; k < width; ++k) {
    lits.push_back((value >> k) & 1 ? first_input + k : neg[k]);
  }
  return c.and_all(lits);
}

}  // namespace detail

/// Lookup-table GM decryption for a fixed toy modulus N = p·q (N < 2^16).
/// The key input is the bit pattern of the secret prime; the ciphertext
/// input is the residue. For each candidate prime the circuit matches the
/// key bits and ORs the indicators of the residues that are non-squares
/// modulo that prime, found by enumerating squares. Matches are mutually
/// exclusive, so the ORs are plain XORs.
inline DecCircuit gm_table_dec_circuit(std::uint64_t p, std::uint64_t q) {
  if (p == q || p < 3 || q < 3) throw InvalidArgument("gm_table_dec_circuit: bad primes");
  const std::uint64_t n = p * q;
  if (n >= (1u << 16)) throw InvalidArgument("gm_table_dec_circuit: modulus too large");
  const std::size_t width = bit_length(BigInt(static_cast<unsigned long>(n)));
  Circuit c(2 * width);
  std::vector<Circuit::Wire> neg_key, neg_ct;
  for (std::size_t k = 0; k < width; ++k) {
    neg_key.push_back(c.not_(k));
    neg_ct.push_back(c.not_(width + k));
  }
  std::vector<Circuit::Wire> branches;
  for (std::uint64_t r : {p, q}) {
    std::vector<bool> square(r, false);
    for (std::uint64_t x = 1; x < r; ++x) square[(x * x) % r] = true;
    std::vector<Circuit::Wire> hits;
    for (std::uint64_t v = 1; v < n; ++v) {
      if (v % p == 0 || v % q == 0 || square[v % r]) continue;
      hits.push_back(detail::match_constant(c, width, width, v, neg_ct));
    }
    const auto table = c.xor_all(hits);
    const auto sel = detail::match_constant(c, 0, width, r, neg_key);
    branches.push_back(c.and_(sel, table));
  }
  c.mark_output(c.xor_(branches[0], branches[1]));
  return {std::move(c), width, width};
}

enum class CiphertextInjection { Trivial, Fresh };

namespace detail {

template <typename H>
struct RingOps {
  const H* h;
  const typename H::PublicKey* pk;
  Rng* rng;
  typename H::Ciphertext constant(std::uint64_t v) { return h->trivial(*pk, v); }
  typename H::Ciphertext add(const typename H::Ciphertext& a, const typename H::Ciphertext& b) {
    return h->add(*pk, a, b);
  }
  typename H::Ciphertext sub(const typename H::Ciphertext& a, const typename H::Ciphertext& b) {
    return h->sub(*pk, a, b);
  }
  typename H::Ciphertext mul(const typename H::Ciphertext& a, const typename H::Ciphertext& b) {
    return h->multiply(*pk, a, b, *rng);
  }
};

template <RingTarget H>
std::vector<typename H::Ciphertext> ring_eval(const H& h, const typename H::PublicKey& pk,
                                              const Circuit& f,
                                              std::span<const typename H::Ciphertext> in,
                                              Rng& rng) {
  RingOps<H> ops{&h, &pk, &rng};
  return evaluate_with<typename H::Ciphertext>(f, in, ops);
}

template <RingTarget H>
void check_depth(const H& h, const Circuit& ring) {
  if constexpr (requires { h.capacity(); }) {
    const auto cap = h.capacity();
    const std::size_t depth = multiplicative_depth(ring);
    if (cap && depth > *cap) throw DepthExceeded(depth, *cap);
  }
}

template <EncryptionScheme H>
std::vector<typename H::Ciphertext> encrypt_bits(const H& h, const typename H::PublicKey& pk,
                                                 const BitVector& bits, Rng& rng) {
  std::vector<typename H::Ciphertext> out;
  out.reserve(bits.size());
  for (Bit b : bits) out.push_back(h.encrypt(pk, typename H::Plaintext(b), rng));
  return out;
}

}  // namespace detail

/// f(bk, c) = Eval_H(D̃ec_S, bk, c̃): bk holds H-encryptions of the source
/// secret-key bits and c̃ the ciphertext bits as H-ciphertexts.
template <BitDecomposable S, RingTarget H>
class GentryBridge {
 public:
  using Source = S;
  using Target = H;
  using SecondSecret = std::pair<typename S::SecretKey, typename H::SecretKey>;
  using BridgeKey = std::vector<typename H::Ciphertext>;

  GentryBridge(S source, H target, DecCircuit dec, PlaintextEmbedding<typename S::Plaintext,
               typename H::Plaintext> embedding, Circuit ring, CiphertextInjection injection)
      : source_(std::move(source)),
        target_(std::move(target)),
        dec_(std::move(dec)),
        embedding_(std::move(embedding)),
        ring_(std::move(ring)),
        injection_(injection) {}

  const S& source() const { return source_; }
  const H& target() const { return target_; }
  const DecCircuit& dec_circuit() const { return dec_; }
  const Circuit& ring_circuit() const { return ring_; }
  std::string name() const {
    return "gentry(" + source_.info().name + "->" + target_.info().name + ")";
  }

  KeyExtension<SecondSecret, typename H::PublicKey, BridgeKey> extend_keys(
      const typename S::SecretKey& sk1, const typename S::PublicKey&, Rng& rng) const {
    auto kh = target_.keygen(rng);
    auto bk = detail::encrypt_bits(target_, kh.pk, source_.secret_key_bits(sk1), rng);
    return {{sk1, std::move(kh.sk)}, std::move(kh.pk), std::move(bk)};
  }

  typename H::Ciphertext apply(const typename H::PublicKey& pk2, const BridgeKey& bk,
                               const typename S::Ciphertext& c, Rng& rng) const {
    if (bk.size() != dec_.key_bits) throw InvalidArgument("gentry: bridge key size mismatch");
    std::vector<typename H::Ciphertext> in = bk;
    for (Bit b : source_.ciphertext_bits(c)) {
      in.push_back(injection_ == CiphertextInjection::Trivial
                       ? target_.trivial(pk2, b)
                       : target_.encrypt(pk2, typename H::Plaintext(b), rng));
    }
    auto out = detail::ring_eval(target_, pk2, ring_, in, rng);
    return std::move(out.front());
  }

  const typename H::SecretKey& target_secret(const SecondSecret& sk2) const {
    return sk2.second;
  }
  typename H::Plaintext embed(const typename S::Plaintext& m) const { return embedding_.to(m); }
  std::optional<typename S::Plaintext> unembed(const typename H::Plaintext& v) const {
    return embedding_.from(v);
  }
  double failure_bound() const { return target_.info().failure_bound; }

 private:
  S source_;
  H target_;
  DecCircuit dec_;
  PlaintextEmbedding<typename S::Plaintext, typename H::Plaintext> embedding_;
  Circuit ring_;
  CiphertextInjection injection_;
};

/// Checks widths and the target's depth budget, rewrites the circuit for
/// the target ring and returns the bridge.
template <BitDecomposable S, RingTarget H>
GentryBridge<S, H> compile_gentry_bridge(
    S source, H target, DecCircuit dec,
    PlaintextEmbedding<typename S::Plaintext, typename H::Plaintext> embedding =
        bit_embedding<typename H::Plaintext, typename S::Plaintext>(),
    CiphertextInjection injection = CiphertextInjection::Trivial,
    bool equality_test = false) {
  if (dec.key_bits != source.secret_key_width() ||
      dec.ciphertext_bits != source.ciphertext_width() ||
      dec.circuit.num_inputs() != dec.key_bits + dec.ciphertext_bits) {
    throw InvalidArgument("compile_gentry_bridge: decryption circuit arity mismatch");
  }
  if (dec.outputs() != 1) {
    throw InvalidArgument("compile_gentry_bridge: expected a single-output circuit");
  }
  if (!dec.circuit.is_boolean()) {
    throw InvalidArgument("compile_gentry_bridge: decryption circuit must be boolean");
  }
  std::optional<std::uint64_t> eq;
  if (equality_test) {
    if constexpr (requires { target.p(); }) eq = target.p();
  }
  Circuit ring = rewrite_boolean_to_ring(dec.circuit, eq);
  detail::check_depth(target, ring);
  return GentryBridge<S, H>(std::move(source), std::move(target), std::move(dec),
                            std::move(embedding), std::move(ring), injection);
}

/// Bridge into 𝓗^p: output i is Eval_H(g̃_i, bk_i, c̃) under the i-th
/// component key, with the bridge key encrypted under every component.
template <BitDecomposable S, RingTarget H>
class HpBridge {
 public:
  using Source = S;
  using Target = PowerScheme<H>;
  using SecondSecret = std::pair<typename S::SecretKey, typename Target::SecretKey>;
  using BridgeKey = std::vector<std::vector<typename H::Ciphertext>>;

  HpBridge(S source, H target, DecCircuit dec,
           PlaintextEmbedding<typename S::Plaintext, typename Target::Plaintext> embedding,
           std::vector<Circuit> rings)
      : source_(std::move(source)),
        target_(std::move(target), dec.outputs()),
        dec_(std::move(dec)),
        embedding_(std::move(embedding)),
        rings_(std::move(rings)) {}

  const S& source() const { return source_; }
  const Target& target() const { return target_; }
  std::size_t width() const { return rings_.size(); }
  std::string name() const {
    return "gentry-hp(" + source_.info().name + "->" + target_.info().name + ")";
  }

  KeyExtension<SecondSecret, typename Target::PublicKey, BridgeKey> extend_keys(
      const typename S::SecretKey& sk1, const typename S::PublicKey&, Rng& rng) const {
    auto kh = target_.keygen(rng);
    const BitVector bits = source_.secret_key_bits(sk1);
    BridgeKey bk;
    for (const auto& pk : kh.pk) bk.push_back(detail::encrypt_bits(target_.base(), pk, bits, rng));
    return {{sk1, std::move(kh.sk)}, std::move(kh.pk), std::move(bk)};
  }

  typename Target::Ciphertext apply(const typename Target::PublicKey& pk2, const BridgeKey& bk,
                                    const typename S::Ciphertext& c, Rng& rng) const {
    if (pk2.size() != width() || bk.size() != width()) {
      throw InvalidArgument("gentry-hp: component count mismatch");
    }
    const BitVector bits = source_.ciphertext_bits(c);
    typename Target::Ciphertext out;
    for (std::size_t i = 0; i < width(); ++i) {
      std::vector<typename H::Ciphertext> in = bk[i];
      for (Bit b : bits) in.push_back(target_.base().trivial(pk2[i], b));
      out.push_back(detail::ring_eval(target_.base(), pk2[i], rings_[i], in, rng).front());
    }
    return out;
  }

  const typename Target::SecretKey& target_secret(const SecondSecret& sk2) const {
    return sk2.second;
  }
  typename Target::Plaintext embed(const typename S::Plaintext& m) const {
    return embedding_.to(m);
  }
  std::optional<typename S::Plaintext> unembed(const typename Target::Plaintext& v) const {
    return embedding_.from(v);
  }
  double failure_bound() const { return target_.info().failure_bound; }

 private:
  S source_;
  Target target_;
  DecCircuit dec_;
  PlaintextEmbedding<typename S::Plaintext, typename Target::Plaintext> embedding_;
  std::vector<Circuit> rings_;
};

/// Embeds an integer plaintext as its `width` low bits, least significant
/// first, into a product of bit-valued plaintext spaces.
template <typename P1, typename V = std::uint64_t>
PlaintextEmbedding<P1, std::vector<V>> bits_embedding(std::size_t width) {
  return {[width](const P1& m) {
            std::vector<V> out(width);
            for (std::size_t i = 0; i < width; ++i) out[i] = (static_cast<std::uint64_t>(m) >> i) & 1;
            return out;
          },
          [width](const std::vector<V>& v) -> std::optional<P1> {
            if (v.size() != width) return std::nullopt;
            std::uint64_t m = 0;
            for (std::size_t i = 0; i < width; ++i) {
              if (v[i] > 1) return std::nullopt;
              m |= static_cast<std::uint64_t>(v[i]) << i;
            }
            return static_cast<P1>(m);
          }};
}

template <BitDecomposable S, RingTarget H>
HpBridge<S, H> compile_hp_variant(S source, H target, DecCircuit dec,
                                  PlaintextEmbedding<typename S::Plaintext,
                                                     std::vector<typename H::Plaintext>>
                                      embedding) {
  if (dec.key_bits != source.secret_key_width() ||
      dec.ciphertext_bits != source.ciphertext_width() || dec.outputs() == 0 ||
      !dec.circuit.is_boolean()) {
    throw InvalidArgument("compile_hp_variant: decryption circuit does not fit the source");
  }
  if constexpr (requires { target.p(); }) {
    if (target.p() != 2) {
      throw InvalidArgument("compile_hp_variant: component scheme must be over F_2");
    }
  }
  std::vector<Circuit> rings;
  for (std::size_t i = 0; i < dec.outputs(); ++i) {
    rings.push_back(rewrite_boolean_to_ring(dec.circuit.output_projection(i)));
    detail::check_depth(target, rings.back());
  }
  return HpBridge<S, H>(std::move(source), std::move(target), std::move(dec),
                        std::move(embedding), std::move(rings));
}

}  // namespace bridges
