// Copyright 2026 The bridges Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "bridges/error.hpp"
#include "bridges/findist.hpp"
#include "bridges/gf2.hpp"
#include "bridges/rng.hpp"
#include "bridges/scheme.hpp"

namespace bridges {

/// Dimensions and the distribution X of the number of zeros placed inside
/// S when encrypting 0. X defaults to uniform on {1..min(d, s)}.
struct CsgnParams {
  std::size_t n = 0;
  std::size_t d = 0;
  std::size_t s = 0;
  std::optional<FiniteDistribution<std::size_t>> x;
};

/// Toy preset, not derived from any security analysis.
inline CsgnParams csgn_toy_preset() { return {256, 16, 32, std::nullopt}; }

inline FiniteDistribution<std::size_t> csgn_default_x(std::size_t d, std::size_t s) {
  std::vector<std::size_t> support(std::min(d, s));
  std::iota(support.begin(), support.end(), std::size_t{1});
  return FiniteDistribution<std::size_t>::uniform(std::move(support));
}

inline void csgn_check_params(const CsgnParams& p) {
  if (p.n == 0 || p.d == 0 || p.s == 0) throw InvalidArgument("csgn: n, d, s must be >= 1");
  if (p.s + p.d > p.n) throw InvalidArgument("csgn: need s + d <= n");
  if (p.x) {
    for (std::size_t i = 0; i < p.x->size(); ++i) {
      const std::size_t k = p.x->support()[i];
      if (k < 1 || k > p.d) throw InvalidArgument("csgn: X support must lie in {1..d}");
      // A draw of k needs k slots inside S.
      if (k > p.s && sgn(p.x->probs()[i]) > 0) {
        throw InvalidArgument("csgn: X puts mass above s");
      }
    }
  }
}

/// The secret subset S as its characteristic vector, with the parameters
/// needed to encrypt.
struct CsgnKey {
  std::size_t n = 0;
  std::size_t d = 0;
  BitVector subset;
  FiniteDistribution<std::size_t> x = FiniteDistribution<std::size_t>::point(1);

  std::size_t s() const {
    return static_cast<std::size_t>(std::count(subset.begin(), subset.end(), Bit{1}));
  }
  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < subset.size(); ++i) {
      if (subset[i]) out.push_back(i);
    }
    return out;
  }
  bool operator==(const CsgnKey& o) const {
    return n == o.n && d == o.d && subset == o.subset && x == o.x;
  }
};

struct CsgnCiphertext {
  BitVector bits;

  std::size_t zeros() const {
    return static_cast<std::size_t>(std::count(bits.begin(), bits.end(), Bit{0}));
  }
  bool operator==(const CsgnCiphertext&) const = default;
};

namespace detail {

// k distinct elements of pool, uniformly, by partial Fisher-Yates.
inline std::vector<std::size_t> choose_distinct(std::vector<std::size_t> pool, std::size_t k,
                                                Rng& rng) {
  if (k > pool.size()) throw InvalidArgument("csgn: not enough positions");
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + rng.uniform_below(static_cast<std::uint64_t>(pool.size() - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  return pool;
}

}  // namespace detail

inline CsgnKey csgn_keygen(const CsgnParams& params, Rng& rng) {
  csgn_check_params(params);
  std::vector<std::size_t> all(params.n);
  std::iota(all.begin(), all.end(), std::size_t{0});
  CsgnKey key;
  key.n = params.n;
  key.d = params.d;
  key.subset.assign(params.n, 0);
  for (auto i : detail::choose_distinct(all, params.s, rng)) key.subset[i] = 1;
  key.x = params.x ? *params.x : csgn_default_x(params.d, params.s);
  return key;
}

/// m = 1: d zeros, all outside S. m = 0: k ~ X zeros inside S and d − k
/// outside.
inline CsgnCiphertext csgn_enc(const CsgnKey& key, Bit m, Rng& rng) {
  if (m > 1) throw InvalidArgument("csgn: plaintext must be a bit");
  std::vector<std::size_t> inside, outside;
  for (std::size_t i = 0; i < key.n; ++i) (key.subset[i] ? inside : outside).push_back(i);
  const std::size_t k = m ? 0 : sample(key.x, rng);
  CsgnCiphertext c{BitVector(key.n, 1)};
  for (auto i : detail::choose_distinct(inside, k, rng)) c.bits[i] = 0;
  for (auto i : detail::choose_distinct(outside, key.d - k, rng)) c.bits[i] = 0;
  return c;
}

inline Bit csgn_dec(const CsgnKey& key, const CsgnCiphertext& c) {
  if (c.bits.size() != key.n) throw InvalidArgument("csgn_dec: length mismatch");
  Bit out = 1;
  for (std::size_t i = 0; i < key.n; ++i) {
    if (key.subset[i]) out &= c.bits[i];
  }
  return out;
}

inline CsgnCiphertext csgn_mul(const CsgnCiphertext& a, const CsgnCiphertext& b) {
  if (a.bits.size() != b.bits.size()) throw InvalidArgument("csgn_mul: length mismatch");
  CsgnCiphertext out{a.bits};
  for (std::size_t i = 0; i < out.bits.size(); ++i) out.bits[i] &= b.bits[i];
  return out;
}

/// Symmetric AND-homomorphic scheme over F_2^n with componentwise product.
class CsgnScheme {
 public:
  using SecretKey = CsgnKey;
  using PublicKey = CsgnKey;  // symmetric: encryption needs the secret key
  using Plaintext = Bit;
  using Ciphertext = CsgnCiphertext;
  static constexpr bool symmetric = true;

  explicit CsgnScheme(CsgnParams params) : params_(std::move(params)) {
    csgn_check_params(params_);
  }

  const CsgnParams& params() const { return params_; }

  KeyPair<SecretKey, PublicKey> keygen(Rng& rng) const {
    auto k = csgn_keygen(params_, rng);
    return {k, k};
  }
  PublicKey derive_public_key(const SecretKey& sk, Rng&) const { return sk; }
  Ciphertext encrypt(const PublicKey& k, const Plaintext& m, Rng& rng) const {
    return csgn_enc(k, m, rng);
  }
  Plaintext decrypt(const SecretKey& k, const Ciphertext& c) const { return csgn_dec(k, c); }
  std::vector<Plaintext> plaintexts() const { return {0, 1}; }
  SchemeInfo info() const {
    return {"csgn-" + std::to_string(params_.n) + "-" + std::to_string(params_.d) + "-" +
                std::to_string(params_.s),
            0, true, 0.0, false};
  }

  Ciphertext multiply(const PublicKey&, const Ciphertext& a, const Ciphertext& b, Rng&) const {
    return csgn_mul(a, b);
  }

  std::size_t secret_key_width() const { return params_.n; }
  std::size_t ciphertext_width() const { return params_.n; }
  BitVector secret_key_bits(const SecretKey& k) const { return k.subset; }
  BitVector ciphertext_bits(const Ciphertext& c) const {
    if (c.bits.size() != params_.n) throw InvalidArgument("csgn: ciphertext length mismatch");
    return c.bits;
  }

 private:
  CsgnParams params_;
};

}  // namespace bridges
