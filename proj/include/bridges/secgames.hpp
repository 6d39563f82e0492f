// Copyright 2026 The bridges Authors
// SPDX-License-Identifier: Apache-2.0

// Left-right indistinguishability experiments with statistical controls.
//
// One trial of arm b: fresh keys, the adversary picks (m0, m1), receives
// an encryption of m_b and outputs a bit. wins_b counts outputs of 1 in
// arm b, so the advantage is |wins1 − wins0| / trials_per_arm.
//
// Every trial draws from four streams derived from (seed, b, t): keys,
// challenger, adversary coins, encryption oracle. Two games over the same
// seed therefore agree trial by trial whenever they consume those streams
// identically, which is what the shared-seed equality checks rely on.

#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "bridges/bridge.hpp"
#include "bridges/error.hpp"
#include "bridges/findist.hpp"
#include "bridges/gm.hpp"
#include "bridges/mockfhe.hpp"
#include "bridges/rng.hpp"
#include "bridges/scheme.hpp"

namespace bridges {

/// What the adversary sees. Symmetric schemes withhold the key (pk is
/// null) and expose only the encryption oracle.
template <EncryptionScheme S>
struct AdversaryView {
  const S& scheme;
  const typename S::PublicKey* pk;
  std::function<typename S::Ciphertext(const typename S::Plaintext&)> encrypt;
  Rng& coins;
};

template <typename A, typename S>
concept Adversary = EncryptionScheme<S> && std::copy_constructible<A> &&
    requires(A& a, const AdversaryView<S>& v, const typename S::Ciphertext& c) {
      { a.choose(v) } -> std::convertible_to<
          std::pair<typename S::Plaintext, typename S::Plaintext>>;
      { a.guess(v, c) } -> std::convertible_to<bool>;
    };

template <typename A, typename S>
concept TwoChallengeAdversary = EncryptionScheme<S> && std::copy_constructible<A> &&
    requires(A& a, const AdversaryView<S>& v, const typename S::Ciphertext& c) {
      { a.choose(v) } -> std::convertible_to<
          std::pair<typename S::Plaintext, typename S::Plaintext>>;
      { a.guess(v, c, c) } -> std::convertible_to<bool>;
    };

struct GameOptions {
  // One keypair shared by all trials. Faster, but not the standard
  // experiment; reports carry fixed_key = true.
  bool fixed_key = false;
  unsigned jobs = 1;
};

namespace detail {

enum StreamPurpose : std::uint64_t { kKeys = 0, kChallenger = 1, kCoins = 2, kOracle = 3 };
inline constexpr std::uint64_t kFixedKeyStream = 0xf17edULL;

template <EncryptionScheme S>
void check_messages(const S& s, const typename S::Plaintext& m0,
                    const typename S::Plaintext& m1) {
  const auto space = s.plaintexts();
  const bool ok = !(m0 == m1) && std::find(space.begin(), space.end(), m0) != space.end() &&
                  std::find(space.begin(), space.end(), m1) != space.end();
  if (!ok) throw InvalidArgument("game: adversary emitted invalid messages");
}

// Runs both arms; `play(adv, view, pk, m_b, challenger_rng)` returns the
// adversary's output bit.
template <EncryptionScheme S, typename A, typename Play>
GameReport run_game(const S& s, const A& proto, std::size_t trials, Rng& rng,
                    const GameOptions& opt, Play&& play) {
  if (trials < 100) throw InvalidArgument("game: trials must be >= 100");
  const std::size_t per_arm = trials / 2;
  const std::uint64_t seed = rng.next_u64();
  std::optional<KeyPair<typename S::SecretKey, typename S::PublicKey>> fixed;
  if (opt.fixed_key) {
    Rng key_rng = Rng::derive(seed, {kFixedKeyStream});
    fixed = s.keygen(key_rng);
  }

  auto trial = [&](std::uint64_t b, std::uint64_t t) -> bool {
    std::optional<KeyPair<typename S::SecretKey, typename S::PublicKey>> own;
    if (!fixed) {
      Rng key_rng = Rng::derive(seed, {b, t, kKeys});
      own = s.keygen(key_rng);
    }
    const auto& kp = fixed ? *fixed : *own;
    Rng ch = Rng::derive(seed, {b, t, kChallenger});
    Rng coins = Rng::derive(seed, {b, t, kCoins});
    Rng oracle = Rng::derive(seed, {b, t, kOracle});
    A adv = proto;
    const AdversaryView<S> view{
        s, is_symmetric_v<S> ? nullptr : &kp.pk,
        [&](const typename S::Plaintext& m) { return s.encrypt(kp.pk, m, oracle); }, coins};
    auto [m0, m1] = adv.choose(view);
    check_messages(s, m0, m1);
    return static_cast<bool>(play(adv, view, kp.pk, b ? m1 : m0, ch));
  };

  const unsigned jobs = std::max(1u, opt.jobs);
  std::vector<std::size_t> w0(jobs, 0), w1(jobs, 0);
  std::exception_ptr error;
  std::mutex error_mu;
  auto worker = [&](unsigned w) {
    try {
      for (std::size_t t = w; t < per_arm; t += jobs) {
        w0[w] += trial(0, t);
        w1[w] += trial(1, t);
      }
    } catch (...) {
      std::lock_guard lock(error_mu);
      if (!error) error = std::current_exception();
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(worker, w);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);
  std::size_t wins0 = 0, wins1 = 0;
  for (unsigned w = 0; w < jobs; ++w) {
    wins0 += w0[w];
    wins1 += w1[w];
  }
  auto report = make_report(per_arm, wins0, wins1, seed);
  report.fixed_key = opt.fixed_key;
  return report;
}

}  // namespace detail

template <EncryptionScheme S, Adversary<S> A>
GameReport run_ind_cpa(const S& s, const A& adv, std::size_t trials, Rng& rng,
                       const GameOptions& opt = {}) {
  return detail::run_game(s, adv, trials, rng, opt,
                          [&](A& a, const AdversaryView<S>& v, const typename S::PublicKey& pk,
                              const typename S::Plaintext& m, Rng& ch) {
                            return a.guess(v, s.encrypt(pk, m, ch));
                          });
}

/// The challenge is two independent encryptions of m_b.
template <EncryptionScheme S, TwoChallengeAdversary<S> A>
GameReport run_2ind_cpa(const S& s, const A& adv, std::size_t trials, Rng& rng,
                        const GameOptions& opt = {}) {
  return detail::run_game(s, adv, trials, rng, opt,
                          [&](A& a, const AdversaryView<S>& v, const typename S::PublicKey& pk,
                              const typename S::Plaintext& m, Rng& ch) {
                            auto c = s.encrypt(pk, m, ch);
                            auto c2 = s.encrypt(pk, m, ch);
                            return a.guess(v, c, c2);
                          });
}

/// A bridge is as secure as its graph scheme.
template <Bridge B, typename A>
  requires Adversary<A, GraphScheme<B>>
GameReport run_bridge_game(const B& bridge, const A& adv, std::size_t trials, Rng& rng,
                           const GameOptions& opt = {}) {
  return run_ind_cpa(GraphScheme<B>(bridge), adv, trials, rng, opt);
}

// ---------------------------------------------------------------- adversaries

/// Negative control: picks the first two plaintexts, outputs a coin flip.
struct RandomGuessAdversary {
  template <typename S>
  auto choose(const AdversaryView<S>& v) const {
    const auto space = v.scheme.plaintexts();
    if (space.size() < 2) throw InvalidArgument("game: plaintext space too small");
    return std::pair{space[0], space[1]};
  }
  template <typename S, typename C>
  bool guess(const AdversaryView<S>& v, const C&) const {
    return v.coins.coin();
  }
  template <typename S, typename C>
  bool guess(const AdversaryView<S>& v, const C&, const C&) const {
    return v.coins.coin();
  }
};

/// Trial division of a modulus below 2^64; returns the smaller factor.
inline std::optional<std::uint64_t> trial_division(std::uint64_t n) {
  if (n % 2 == 0) return n == 2 ? std::nullopt : std::optional<std::uint64_t>(2);
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return d;
  }
  return std::nullopt;
}

/// Positive control for toy GM moduli: factors N, then decrypts.
struct GmFactoringAdversary {
  std::pair<Bit, Bit> choose(const AdversaryView<GmScheme>& v) {
    if (!v.pk) throw InvalidArgument("factoring adversary needs the public key");
    if (bit_length(v.pk->n) > 63) throw InvalidArgument("factoring adversary: N too large");
    const std::uint64_t n = v.pk->n.get_ui();
    const auto p = trial_division(n);
    if (!p) throw CryptoError("factoring adversary: N is prime");
    sk_ = GmSecretKey{BigInt(static_cast<unsigned long>(*p)),
                      BigInt(static_cast<unsigned long>(n / *p))};
    return {0, 1};
  }
  bool guess(const AdversaryView<GmScheme>&, const GmCiphertext& c) const {
    return gm_dec(*sk_, c) == 1;
  }

 private:
  std::optional<GmSecretKey> sk_;
};

/// Positive control for the transparent mock: the ciphertext shows m.
struct MockTransparentAdversary {
  std::pair<std::uint64_t, std::uint64_t> choose(const AdversaryView<MockFhe>&) { return {0, 1}; }
  bool guess(const AdversaryView<MockFhe>&, const MockCiphertext& c) const {
    return c.value == 1;
  }
};

/// Against a graph scheme whose target is transparent: reads c₂ and
/// compares with ι(m₁). Shows the harness delivers the second component.
template <Bridge B>
struct SecondComponentAdversary {
  std::pair<typename B::Source::Plaintext, typename B::Source::Plaintext> choose(
      const AdversaryView<GraphScheme<B>>& v) {
    const auto space = v.scheme.plaintexts();
    m1_ = space[1];
    return {space[0], space[1]};
  }
  bool guess(const AdversaryView<GraphScheme<B>>& v,
             const typename GraphScheme<B>::Ciphertext& c) const {
    return c.c2.value == v.scheme.bridge().embed(*m1_);
  }

 private:
  std::optional<typename B::Source::Plaintext> m1_;
};

/// Lifts a source adversary to the graph scheme by ignoring c₂.
template <Bridge B, typename A1>
struct FirstComponentAdversary {
  using G = GraphScheme<B>;
  using S = typename B::Source;

  A1 inner;

  auto choose(const AdversaryView<G>& v) {
    return inner.choose(lower(v));
  }
  bool guess(const AdversaryView<G>& v, const typename G::Ciphertext& c) {
    return inner.guess(lower(v), c.c1);
  }

 private:
  static AdversaryView<S> lower(const AdversaryView<G>& v) {
    return {v.scheme.bridge().source(), v.pk ? &v.pk->pk1 : nullptr,
            [&v](const typename S::Plaintext& m) { return v.encrypt(m).c1; }, v.coins};
  }
};

template <Bridge B>
struct BridgeKnowledgeValue {
  typename B::Target::PublicKey pk2;
  typename B::BridgeKey bk;
};

/// K(sk₁, pk₁) = (pk₂, bk): the public part of the graph scheme's key.
template <Bridge B>
struct BridgeKnowledge {
  B bridge;
  BridgeKnowledgeValue<B> operator()(const typename B::Source::SecretKey& sk1,
                                     const typename B::Source::PublicKey& pk1, Rng& rng) const {
    auto ext = bridge.extend_keys(sk1, pk1, rng);
    return {std::move(ext.pk2), std::move(ext.bk)};
  }
};

template <Bridge B>
using KnowledgeScheme = KnowledgeWrapped<typename B::Source, BridgeKnowledge<B>>;

template <Bridge B>
KnowledgeScheme<B> knowledge_scheme(const B& bridge) {
  return KnowledgeScheme<B>(bridge.source(), BridgeKnowledge<B>{bridge});
}

/// Two-challenge adversary against S₁[(pk₂, bk)] built from a graph-scheme
/// adversary: (c, c′) ↦ (c, f(bk, c′)).
template <Bridge B, typename Inner>
struct TwoChallengeReduction {
  using W = KnowledgeScheme<B>;
  using G = GraphScheme<B>;

  TwoChallengeReduction(B bridge, Inner inner)
      : graph_(std::move(bridge)), inner_(std::move(inner)) {}

  auto choose(const AdversaryView<W>& v) {
    if (!v.pk) throw InvalidArgument("reduction needs the public key");
    gpk_ = typename G::PublicKey{v.pk->base, v.pk->knowledge.pk2, v.pk->knowledge.bk};
    return inner_.choose(lift(v));
  }
  bool guess(const AdversaryView<W>& v, const typename W::Ciphertext& c,
             const typename W::Ciphertext& c2) {
    typename G::Ciphertext gc{c, graph_.bridge().apply(gpk_->pk2, gpk_->bk, c2, v.coins)};
    return inner_.guess(lift(v), gc);
  }

 private:
  AdversaryView<G> lift(const AdversaryView<W>& v) const {
    return {graph_, &*gpk_,
            [this, &v](const typename B::Source::Plaintext& m) {
              auto a = v.encrypt(m);
              auto b = v.encrypt(m);
              return typename G::Ciphertext{a, graph_.bridge().apply(gpk_->pk2, gpk_->bk, b,
                                                                     v.coins)};
            },
            v.coins};
  }

  G graph_;
  Inner inner_;
  std::optional<typename G::PublicKey> gpk_;
};

// ------------------------------------------------------------ knowledge gap

struct KnowledgeGapReport {
  GameReport with_knowledge;
  GameReport without_knowledge;
  double gap = 0.0;
  double half_width = 0.0;  // sum of both 95% half-widths

  bool within_noise() const { return gap <= half_width; }
};

/// Advantage of `adv_k` against S[K] minus that of `adv` against S, both
/// on the same seed. A measurement for one adversary pair, not a proof
/// about all adversaries.
template <EncryptionScheme S, typename K, typename AK, typename A>
KnowledgeGapReport measure_knowledge_gap(const S& s, const K& k, const AK& adv_k, const A& adv,
                                         std::size_t trials, Rng& rng,
                                         const GameOptions& opt = {}) {
  const std::uint64_t seed = rng.next_u64();
  Rng r1(seed), r2(seed);
  KnowledgeGapReport out;
  out.with_knowledge = run_ind_cpa(KnowledgeWrapped<S, K>(s, k), adv_k, trials, r1, opt);
  out.without_knowledge = run_ind_cpa(s, adv, trials, r2, opt);
  out.gap = out.with_knowledge.advantage - out.without_knowledge.advantage;
  out.half_width = out.with_knowledge.half_width + out.without_knowledge.half_width;
  if (out.gap < 0) out.gap = -out.gap;
  return out;
}

// ---------------------------------------------------------------- hybrids

/// One draw of hybrid i: keys for both schemes and x, where x[j] encrypts
/// secret-key bit j for j < i and 0 from i on. The adversary-facing
/// triple is (pk_s, pk_h, x); the secrets are kept for checking.
template <EncryptionScheme S, EncryptionScheme H>
struct HybridSample {
  typename S::SecretKey sk_s;
  typename S::PublicKey pk_s;
  typename H::SecretKey sk_h;
  typename H::PublicKey pk_h;
  std::vector<typename H::Ciphertext> x;
};

/// Hybrid 0 is the all-zero bridge key, hybrid e = |sk bits| the real one.
template <BitDecomposable S, EncryptionScheme H>
Sampler<HybridSample<S, H>> hybrid_fixture(S source, H target, std::size_t i) {
  const std::size_t e = source.secret_key_width();
  if (i > e) {
    throw InvalidArgument("hybrid_fixture: index " + std::to_string(i) + " outside 0.." +
                          std::to_string(e));
  }
  return [source = std::move(source), target = std::move(target), i](Rng& rng) {
    auto ks = source.keygen(rng);
    auto kh = target.keygen(rng);
    const BitVector bits = source.secret_key_bits(ks.sk);
    std::vector<typename H::Ciphertext> x;
    x.reserve(bits.size());
    for (std::size_t j = 0; j < bits.size(); ++j) {
      x.push_back(target.encrypt(kh.pk, typename H::Plaintext(j < i ? bits[j] : 0), rng));
    }
    return HybridSample<S, H>{std::move(ks.sk), std::move(ks.pk), std::move(kh.sk),
                              std::move(kh.pk), std::move(x)};
  };
}

}  // namespace bridges
