// Copyright 2026 The bridges Authors
// SPDX-License-Identifier: Apache-2.0

// Four bridges out of the CSGN scheme. Each evaluates the decryption
// ∏_{i∈S} c_i differently:
//   1  ∏_{i∈S} ⟨c, e_i⟩                          ring target over F_2
//   2  ∏_{c[i]=0} (1 − sk[i])                    multiplicative target
//   3  1 − (1 + ⟨c, sk⟩)^(p−1), sk weighted      ring target over F_p
//   4  entry of ∏_{c[i]=1} M_i, M_i circulant    ring target over F_2

#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bridges/bridge.hpp"
#include "bridges/circuit.hpp"
#include "bridges/csgn.hpp"
#include "bridges/error.hpp"
#include "bridges/gf2.hpp"
#include "bridges/rng.hpp"
#include "bridges/scheme.hpp"
#include "bridges/syy.hpp"

namespace bridges {

/// Upper bound on the failure probability of one homomorphic product of
/// two fresh-ish ciphertexts. Exact targets contribute nothing.
template <typename H>
double multiply_failure_bound(const H&) {
  return 0.0;
}
inline double multiply_failure_bound(const SyyScheme& s) {
  return std::ldexp(1.0, 1 - static_cast<int>(s.ell()));
}

namespace detail {

inline std::size_t ceil_log2(std::size_t n) {
  std::size_t d = 0;
  while ((std::size_t{1} << d) < n) ++d;
  return d;
}

template <typename H>
void require_depth(const H& h, std::size_t depth) {
  if constexpr (requires { h.capacity(); }) {
    const auto cap = h.capacity();
    if (cap && depth > *cap) throw DepthExceeded(depth, *cap);
  }
}

template <typename H>
void require_characteristic(const H& h, std::uint64_t p, const char* who) {
  if constexpr (requires { h.p(); }) {
    if (h.p() != p) {
      throw InvalidArgument(std::string(who) + ": target must have characteristic " +
                            std::to_string(p));
    }
  }
}

// Pairwise reduction; depth ⌈log₂ n⌉ instead of n − 1.
template <typename C, typename Mul>
C balanced_product(std::vector<C> xs, Mul&& mul) {
  if (xs.empty()) throw InvalidArgument("balanced_product: empty input");
  while (xs.size() > 1) {
    std::vector<C> next;
    next.reserve((xs.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < xs.size(); i += 2) next.push_back(mul(xs[i], xs[i + 1]));
    if (xs.size() % 2) next.push_back(std::move(xs.back()));
    xs = std::move(next);
  }
  return std::move(xs.front());
}

template <typename H>
typename H::Ciphertext ring_pow(const H& h, const typename H::PublicKey& pk,
                                const typename H::Ciphertext& a, std::uint64_t e, Rng& rng) {
  if constexpr (requires { h.pow(pk, a, e); }) {
    return h.pow(pk, a, e);
  } else {
    std::optional<typename H::Ciphertext> acc;
    auto base = a;
    while (e) {
      if (e & 1) acc = acc ? h.multiply(pk, *acc, base, rng) : base;
      e >>= 1;
      if (e) base = h.multiply(pk, base, base, rng);
    }
    return acc ? *acc : h.trivial(pk, 1);
  }
}

// Members shared by every CSGN bridge.
template <EncryptionScheme H>
class CsgnBridgeBase {
 public:
  using Source = CsgnScheme;
  using Target = H;
  using SecondSecret = std::pair<CsgnKey, typename H::SecretKey>;

  CsgnBridgeBase(CsgnScheme source, H target)
      : source_(std::move(source)), target_(std::move(target)) {}

  const CsgnScheme& source() const { return source_; }
  const H& target() const { return target_; }
  const typename H::SecretKey& target_secret(const SecondSecret& sk2) const {
    return sk2.second;
  }
  typename H::Plaintext embed(const Bit& m) const { return typename H::Plaintext(m); }
  std::optional<Bit> unembed(const typename H::Plaintext& v) const {
    return bit_embedding<typename H::Plaintext>().from(v);
  }

 protected:
  void check_width(const CsgnCiphertext& c) const {
    if (c.bits.size() != source_.params().n) {
      throw InvalidArgument("csgn bridge: ciphertext length mismatch");
    }
  }

  CsgnScheme source_;
  H target_;
};

}  // namespace detail

/// Bridge 1: bk holds encryptions of the standard basis vectors e_i for
/// i ∈ S, in increasing order of i.
template <RingTarget H>
class CsgnBridge1 : public detail::CsgnBridgeBase<H> {
  using Base = detail::CsgnBridgeBase<H>;

 public:
  using typename Base::SecondSecret;
  using BridgeKey = std::vector<std::vector<typename H::Ciphertext>>;

  CsgnBridge1(CsgnScheme source, H target) : Base(std::move(source), std::move(target)) {
    detail::require_characteristic(this->target_, 2, "csgn bridge 1");
    detail::require_depth(this->target_, detail::ceil_log2(this->source_.params().s));
  }

  std::string name() const { return "csgn-1"; }
  double failure_bound() const { return this->target_.info().failure_bound; }

  KeyExtension<SecondSecret, typename H::PublicKey, BridgeKey> extend_keys(
      const CsgnKey& sk1, const CsgnKey&, Rng& rng) const {
    auto kh = this->target_.keygen(rng);
    BridgeKey bk;
    for (auto i : sk1.indices()) {
      std::vector<typename H::Ciphertext> row;
      row.reserve(sk1.n);
      for (std::size_t j = 0; j < sk1.n; ++j) row.push_back(this->target_.encrypt(kh.pk, j == i, rng));
      bk.push_back(std::move(row));
    }
    return {{sk1, std::move(kh.sk)}, std::move(kh.pk), std::move(bk)};
  }

  typename H::Ciphertext apply(const typename H::PublicKey& pk2, const BridgeKey& bk,
                               const CsgnCiphertext& c, Rng& rng) const {
    this->check_width(c);
    const H& h = this->target_;
    std::vector<typename H::Ciphertext> factors;
    factors.reserve(bk.size());
    for (const auto& row : bk) {
      if (row.size() != c.bits.size()) throw InvalidArgument("csgn bridge 1: bad bridge key");
      auto acc = h.trivial(pk2, 0);
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (c.bits[j]) acc = h.add(pk2, acc, row[j]);
      }
      factors.push_back(std::move(acc));
    }
    if (factors.empty()) return h.trivial(pk2, 1);
    return detail::balanced_product(std::move(factors), [&](const auto& a, const auto& b) {
      return h.multiply(pk2, a, b, rng);
    });
  }
};

/// Bridge 2: bk[i] encrypts 1 − sk[i]. The output multiplies the entries at
/// the zero positions of c; an all-ones c yields a fresh encryption of 1.
template <MultiplicativeTarget H>
class CsgnBridge2 : public detail::CsgnBridgeBase<H> {
  using Base = detail::CsgnBridgeBase<H>;

 public:
  using typename Base::SecondSecret;
  using BridgeKey = std::vector<typename H::Ciphertext>;

  CsgnBridge2(CsgnScheme source, H target) : Base(std::move(source), std::move(target)) {
    detail::require_depth(this->target_, detail::ceil_log2(this->source_.params().n));
  }

  std::string name() const { return "csgn-2"; }
  /// For fresh source ciphertexts: d − 1 products, each failing with
  /// probability at most multiply_failure_bound(target).
  double failure_bound() const {
    const double per = multiply_failure_bound(this->target_);
    return std::min(1.0, static_cast<double>(this->source_.params().d - 1) * per +
                             this->target_.info().failure_bound);
  }

  KeyExtension<SecondSecret, typename H::PublicKey, BridgeKey> extend_keys(
      const CsgnKey& sk1, const CsgnKey&, Rng& rng) const {
    auto kh = this->target_.keygen(rng);
    BridgeKey bk;
    bk.reserve(sk1.n);
    for (Bit b : sk1.subset) {
      bk.push_back(this->target_.encrypt(kh.pk, typename H::Plaintext(1 - b), rng));
    }
    return {{sk1, std::move(kh.sk)}, std::move(kh.pk), std::move(bk)};
  }

  typename H::Ciphertext apply(const typename H::PublicKey& pk2, const BridgeKey& bk,
                               const CsgnCiphertext& c, Rng& rng) const {
    this->check_width(c);
    if (bk.size() != c.bits.size()) throw InvalidArgument("csgn bridge 2: bad bridge key");
    const H& h = this->target_;
    std::vector<typename H::Ciphertext> factors;
    for (std::size_t i = 0; i < c.bits.size(); ++i) {
      if (!c.bits[i]) factors.push_back(bk[i]);
    }
    if (factors.empty()) return h.encrypt(pk2, typename H::Plaintext(1), rng);
    return detail::balanced_product(std::move(factors), [&](const auto& a, const auto& b) {
      return h.multiply(pk2, a, b, rng);
    });
  }
};

inline std::uint64_t smallest_prime_above(std::uint64_t s) {
  std::uint64_t p = s + 1;
  while (!is_small_prime(p)) ++p;
  return p;
}

/// Bridge 3 over F_p. Position i ∈ S carries weight x_{φ(i)}, where φ
/// numbers S in increasing order and the weights sum to p − 1; positions
/// outside S carry 0. The sum ⟨c, sk⟩ reaches p − 1 only when c keeps
/// every position of S.
template <RingTarget H>
class CsgnBridge3 : public detail::CsgnBridgeBase<H> {
  using Base = detail::CsgnBridgeBase<H>;

 public:
  using typename Base::SecondSecret;
  using BridgeKey = std::vector<typename H::Ciphertext>;

  CsgnBridge3(CsgnScheme source, H target, std::optional<std::uint64_t> p = std::nullopt,
              std::vector<std::uint64_t> weights = {})
      : Base(std::move(source), std::move(target)) {
    const std::size_t s = this->source_.params().s;
    p_ = p ? *p : smallest_prime_above(s);
    if (!is_small_prime(p_)) throw InvalidArgument("csgn bridge 3: p must be prime");
    if (p_ <= s) throw InvalidArgument("csgn bridge 3: need p > s");
    if (weights.empty()) {
      weights.assign(s, 1);
      weights.back() = p_ - s;
    }
    std::uint64_t total = 0;
    for (auto w : weights) {
      if (w == 0) throw InvalidArgument("csgn bridge 3: weights must be positive");
      total += w;
    }
    if (weights.size() != s || total != p_ - 1) {
      throw InvalidArgument("csgn bridge 3: need s positive weights summing to p - 1");
    }
    weights_ = std::move(weights);
    detail::require_characteristic(this->target_, p_, "csgn bridge 3");
    detail::require_depth(this->target_, pow_depth(0, p_ - 1));
  }

  std::uint64_t p() const { return p_; }
  const std::vector<std::uint64_t>& weights() const { return weights_; }
  std::string name() const { return "csgn-3"; }
  double failure_bound() const { return this->target_.info().failure_bound; }

  /// sk[i] = x_{φ(i)} on S, 0 elsewhere.
  std::vector<std::uint64_t> weighted_key(const CsgnKey& sk1) const {
    if (sk1.s() != weights_.size()) throw InvalidArgument("csgn bridge 3: key size mismatch");
    std::vector<std::uint64_t> out(sk1.n, 0);
    std::size_t k = 0;
    for (auto i : sk1.indices()) out[i] = weights_[k++];
    return out;
  }

  KeyExtension<SecondSecret, typename H::PublicKey, BridgeKey> extend_keys(
      const CsgnKey& sk1, const CsgnKey&, Rng& rng) const {
    auto kh = this->target_.keygen(rng);
    if (this->target_.characteristic(kh.pk) != p_) {
      throw InvalidArgument("csgn bridge 3: target characteristic differs from p");
    }
    BridgeKey bk;
    for (auto w : weighted_key(sk1)) bk.push_back(this->target_.encrypt(kh.pk, w, rng));
    return {{sk1, std::move(kh.sk)}, std::move(kh.pk), std::move(bk)};
  }

  typename H::Ciphertext apply(const typename H::PublicKey& pk2, const BridgeKey& bk,
                               const CsgnCiphertext& c, Rng& rng) const {
    this->check_width(c);
    if (bk.size() != c.bits.size()) throw InvalidArgument("csgn bridge 3: bad bridge key");
    const H& h = this->target_;
    const auto one = h.trivial(pk2, 1);
    auto acc = one;
    for (std::size_t i = 0; i < c.bits.size(); ++i) {
      if (c.bits[i]) acc = h.add(pk2, acc, bk[i]);
    }
    return h.sub(pk2, one, detail::ring_pow(h, pk2, acc, p_ - 1, rng));
  }

 private:
  std::uint64_t p_ = 0;
  std::vector<std::uint64_t> weights_;
};

/// m × m circulants over F_2 are stored by their first column a, with
/// M[r][c] = a[(r − c) mod m]. The identity is e_0; the cyclic shift
/// (row r has its 1 in column r + 1) is e_{m−1}.
inline std::vector<BitVector> circulant_from_first_column(const BitVector& a) {
  const std::size_t m = a.size();
  std::vector<BitVector> rows(m, BitVector(m));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < m; ++c) rows[r][c] = a[(r + m - c) % m];
  }
  return rows;
}

/// Permutation matrix of r ↦ r + k (mod m): entry (r, c) is 1 iff c = r + k.
inline std::vector<BitVector> shift_matrix(std::size_t m, std::size_t k) {
  std::vector<BitVector> rows(m, BitVector(m, 0));
  for (std::size_t r = 0; r < m; ++r) rows[r][(r + k) % m] = 1;
  return rows;
}

inline BitVector shift_first_column(std::size_t m, std::size_t k) {
  BitVector a(m, 0);
  a[(m - k % m) % m] = 1;
  return a;
}

/// First column of C_a · C_b: the cyclic convolution of a and b.
inline BitVector circulant_product(const BitVector& a, const BitVector& b) {
  const std::size_t m = a.size();
  if (b.size() != m) throw InvalidArgument("circulant_product: size mismatch");
  BitVector out(m, 0);
  for (std::size_t j = 0; j < m; ++j) {
    if (!a[j]) continue;
    for (std::size_t k = 0; k < m; ++k) out[(j + k) % m] ^= b[k];
  }
  return out;
}

/// Bridge 4 with m = s + 1: position i maps to the shift if i ∈ S and to
/// the identity otherwise. The product over the ones of c is shift^k with
/// k = #(S kept by c) ≤ s, and entry (0, s) of shift^k is [k = s]. In
/// first-column storage that entry is a[1].
template <RingTarget H>
class CsgnBridge4 : public detail::CsgnBridgeBase<H> {
  using Base = detail::CsgnBridgeBase<H>;

 public:
  using typename Base::SecondSecret;
  using Column = std::vector<typename H::Ciphertext>;
  using BridgeKey = std::vector<Column>;

  CsgnBridge4(CsgnScheme source, H target) : Base(std::move(source), std::move(target)) {
    detail::require_characteristic(this->target_, 2, "csgn bridge 4");
    detail::require_depth(this->target_, detail::ceil_log2(this->source_.params().n));
  }

  std::size_t m() const { return this->source_.params().s + 1; }
  std::string name() const { return "csgn-4"; }
  double failure_bound() const { return this->target_.info().failure_bound; }

  KeyExtension<SecondSecret, typename H::PublicKey, BridgeKey> extend_keys(
      const CsgnKey& sk1, const CsgnKey&, Rng& rng) const {
    auto kh = this->target_.keygen(rng);
    BridgeKey bk;
    bk.reserve(sk1.n);
    for (Bit b : sk1.subset) {
      Column col;
      for (Bit v : shift_first_column(m(), b)) col.push_back(this->target_.encrypt(kh.pk, v, rng));
      bk.push_back(std::move(col));
    }
    return {{sk1, std::move(kh.sk)}, std::move(kh.pk), std::move(bk)};
  }

  typename H::Ciphertext apply(const typename H::PublicKey& pk2, const BridgeKey& bk,
                               const CsgnCiphertext& c, Rng& rng) const {
    this->check_width(c);
    if (bk.size() != c.bits.size()) throw InvalidArgument("csgn bridge 4: bad bridge key");
    const H& h = this->target_;
    const std::size_t mm = m();
    std::vector<Column> factors;
    for (std::size_t i = 0; i < c.bits.size(); ++i) {
      if (c.bits[i]) {
        if (bk[i].size() != mm) throw InvalidArgument("csgn bridge 4: bad bridge key");
        factors.push_back(bk[i]);
      }
    }
    if (factors.empty()) return h.trivial(pk2, 0);
    auto conv = [&](const Column& a, const Column& b) {
      std::vector<std::optional<typename H::Ciphertext>> out(mm);
      for (std::size_t j = 0; j < mm; ++j) {
        for (std::size_t k = 0; k < mm; ++k) {
          auto t = h.multiply(pk2, a[j], b[k], rng);
          auto& slot = out[(j + k) % mm];
          slot = slot ? h.add(pk2, *slot, t) : std::move(t);
        }
      }
      Column col;
      col.reserve(mm);
      for (auto& x : out) col.push_back(std::move(*x));
      return col;
    };
    return detail::balanced_product(std::move(factors), conv)[1];
  }
};

}  // namespace bridges
