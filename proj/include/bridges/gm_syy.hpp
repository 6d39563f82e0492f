// Copyright 2026 The bridges Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "bridges/bridge.hpp"
#include "bridges/error.hpp"
#include "bridges/gf2.hpp"
#include "bridges/gm.hpp"
#include "bridges/numtheory.hpp"
#include "bridges/rng.hpp"
#include "bridges/syy.hpp"

namespace bridges {

/// How t_i = (c·γ′)^{w_i} is computed. Even powers are squares and vanish
/// into the r_i² randomizer, so Parity only keeps w_i mod 2.
enum class ExponentMode { Parity, Full };

/// GM → SYY without a bridge key. c·γ′ is a square exactly when c
/// decrypts to 1; a nonsingular A has a row of odd weight, so a non-square
/// c·γ′ always lights up some component.
inline SyyCiphertext gm_to_syy_with(const GmPublicKey& pk2, const GmCiphertext& c,
                                    const GF2Matrix& a, Rng& rng,
                                    ExponentMode mode = ExponentMode::Parity) {
  if (c.value <= 0 || c.value >= pk2.n || jacobi(c.value, pk2.n) != 1) {
    throw CryptoError("gm_to_syy: ciphertext is not in J1(N)");
  }
  const BigInt base = mulm(c.value, pk2.gamma, pk2.n);
  SyyCiphertext out;
  out.components.reserve(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const std::size_t w = a.row_weight(i);
    const BigInt t = powm(base, BigInt(static_cast<unsigned long>(
                                    mode == ExponentMode::Parity ? w % 2 : w)),
                          pk2.n);
    const BigInt r = random_unit(pk2.n, rng);
    out.components.push_back({mulm(t, mulm(r, r, pk2.n), pk2.n)});
  }
  return out;
}

inline SyyCiphertext gm_to_syy(const GmPublicKey& pk2, const GmCiphertext& c, std::size_t ell,
                               Rng& rng, ExponentMode mode = ExponentMode::Parity) {
  if (ell == 0) throw InvalidArgument("gm_to_syy: ell must be >= 1");
  const GF2Matrix a = random_nonsingular_gf2(ell, rng);
  return gm_to_syy_with(pk2, c, a, rng, mode);
}

/// sk₂ = sk₁; pk₂ = (N, γ′) with γ′ from a fresh key generation run on the
/// same primes. The bridge key is empty.
class GmSyyBridge {
 public:
  using Source = GmScheme;
  using Target = SyyScheme;
  using SecondSecret = GmSecretKey;
  using BridgeKey = std::monostate;

  GmSyyBridge(GmScheme gm, std::size_t ell, ExponentMode mode = ExponentMode::Parity)
      : source_(gm), target_(std::move(gm), ell), mode_(mode) {}

  const GmScheme& source() const { return source_; }
  const SyyScheme& target() const { return target_; }
  std::size_t ell() const { return target_.ell(); }
  ExponentMode mode() const { return mode_; }
  std::string name() const { return "gm-syy-l" + std::to_string(ell()); }
  double failure_bound() const { return 0.0; }

  KeyExtension<SecondSecret, GmPublicKey, BridgeKey> extend_keys(const GmSecretKey& sk1,
                                                                const GmPublicKey&,
                                                                Rng& rng) const {
    return {sk1, gm_public_key_for(sk1, rng), {}};
  }

  SyyCiphertext apply(const GmPublicKey& pk2, const BridgeKey&, const GmCiphertext& c,
                      Rng& rng) const {
    return gm_to_syy(pk2, c, ell(), rng, mode_);
  }

  const GmSecretKey& target_secret(const GmSecretKey& sk2) const { return sk2; }
  Bit embed(const Bit& m) const { return m; }
  std::optional<Bit> unembed(const Bit& m) const { return m; }

 private:
  GmScheme source_;
  SyyScheme target_;
  ExponentMode mode_;
};

enum class FoldOrder { Left, Balanced };

/// SYY encryption of [x = y] from GM encryptions of x and y under pk1:
/// c_i·d_i·γ encrypts x_i ⊕ y_i ⊕ 1, the bridge moves each into SYY and ⊙
/// multiplies them up.
inline SyyCiphertext compare_eval(const GmSyyBridge& bridge, const GmPublicKey& pk1,
                                  const GmPublicKey& pk2, std::span<const GmCiphertext> cs,
                                  std::span<const GmCiphertext> ds, Rng& rng,
                                  FoldOrder order = FoldOrder::Left) {
  if (cs.size() != ds.size()) throw InvalidArgument("compare_eval: length mismatch");
  if (cs.empty()) throw InvalidArgument("compare_eval: need at least one position");
  if (pk1.n != pk2.n) throw InvalidArgument("compare_eval: public keys must share N");
  std::vector<SyyCiphertext> terms;
  terms.reserve(cs.size());
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const GmCiphertext e{mulm(gm_xor(pk1, cs[i], ds[i]).value, pk1.gamma, pk1.n)};
    terms.push_back(bridge.apply(pk2, {}, e, rng));
  }
  if (order == FoldOrder::Left) {
    SyyCiphertext acc = std::move(terms[0]);
    for (std::size_t i = 1; i < terms.size(); ++i) acc = syy_and(pk2, acc, terms[i], rng);
    return acc;
  }
  while (terms.size() > 1) {
    std::vector<SyyCiphertext> next;
    for (std::size_t i = 0; i + 1 < terms.size(); i += 2) {
      next.push_back(syy_and(pk2, terms[i], terms[i + 1], rng));
    }
    if (terms.size() % 2) next.push_back(std::move(terms.back()));
    terms = std::move(next);
  }
  return std::move(terms.front());
}

/// Union bound on Pr[compare_eval decrypts wrongly] for n positions.
inline double compare_failure_bound(std::size_t n, std::size_t ell) {
  return n <= 1 ? 0.0 : static_cast<double>(n - 1) * syy_and_failure_probability(ell);
}

}  // namespace bridges
