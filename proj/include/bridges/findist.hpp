// Copyright 2026 The bridges Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "bridges/error.hpp"
#include "bridges/rng.hpp"

namespace bridges {

using Rational = mpq_class;

/// Finite distribution with explicit support and exact probabilities.
/// Support entries are distinct; probabilities are nonnegative and sum to
/// exactly one. Zero-probability support points are allowed.
template <typename T>
class FiniteDistribution {
 public:
  using value_type = T;

  FiniteDistribution(std::vector<T> support, std::vector<Rational> probs)
      : support_(std::move(support)), probs_(std::move(probs)) {
    if (support_.size() != probs_.size()) {
      throw InvalidArgument("FiniteDistribution: support/probability size mismatch");
    }
    if (support_.empty()) throw InvalidArgument("FiniteDistribution: empty support");
    Rational total = 0;
    for (auto& p : probs_) {
      p.canonicalize();
      if (sgn(p) < 0) throw InvalidArgument("FiniteDistribution: negative probability");
      total += p;
    }
    if (total != 1) throw InvalidArgument("FiniteDistribution: probabilities must sum to 1");
    for (std::size_t i = 0; i < support_.size(); ++i) {
      for (std::size_t j = i + 1; j < support_.size(); ++j) {
        if (support_[i] == support_[j]) {
          throw InvalidArgument("FiniteDistribution: duplicate support entry");
        }
      }
    }
  }

  static FiniteDistribution uniform(std::vector<T> support) {
    const std::size_t n = support.size();
    if (n == 0) throw InvalidArgument("FiniteDistribution: empty support");
    std::vector<Rational> probs(n, Rational(1, static_cast<unsigned long>(n)));
    return FiniteDistribution(std::move(support), std::move(probs));
  }

  static FiniteDistribution point(T value) {
    return FiniteDistribution({std::move(value)}, {Rational(1)});
  }

  const std::vector<T>& support() const noexcept { return support_; }
  const std::vector<Rational>& probs() const noexcept { return probs_; }
  std::size_t size() const noexcept { return support_.size(); }

  std::optional<std::size_t> index_of(const T& x) const {
    for (std::size_t i = 0; i < support_.size(); ++i) {
      if (support_[i] == x) return i;
    }
    return std::nullopt;
  }

  bool contains(const T& x) const { return index_of(x).has_value(); }

  // Zero for values outside the support.
  Rational probability(const T& x) const {
    auto i = index_of(x);
    return i ? probs_[*i] : Rational(0);
  }

  /// Equality as distributions: same support set with the same masses,
  /// regardless of listing order.
  bool operator==(const FiniteDistribution& o) const {
    if (size() != o.size()) return false;
    for (std::size_t i = 0; i < size(); ++i) {
      auto j = o.index_of(support_[i]);
      if (!j || o.probs_[*j] != probs_[i]) return false;
    }
    return true;
  }

 private:
  std::vector<T> support_;
  std::vector<Rational> probs_;
};

/// Exact sampling: draws a uniform integer below the common denominator.
template <typename T>
const T& sample(const FiniteDistribution<T>& d, Rng& rng) {
  BigInt denom = 1;
  for (const auto& p : d.probs()) {
    mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), p.get_den_mpz_t());
  }
  const BigInt u = rng.uniform_below(denom);
  BigInt acc = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const Rational& p = d.probs()[i];
    acc += p.get_num() * (denom / p.get_den());
    if (u < acc) return d.support()[i];
  }
  return d.support().back();  // unreachable: masses sum to denom
}

/// A map of supports Y -> X intended to be a morphism of distributions.
template <typename Y, typename X>
struct DistMorphism {
  FiniteDistribution<Y> source;
  FiniteDistribution<X> target;
  std::function<X(const Y&)> map;
};

template <typename X>
DistMorphism<X, X> identity_morphism(const FiniteDistribution<X>& d) {
  return {d, d, [](const X& x) { return x; }};
}

template <typename Y, typename X>
DistMorphism<Y, X> constant_morphism(const FiniteDistribution<Y>& d, X point) {
  return {d, FiniteDistribution<X>::point(point), [point](const Y&) { return point; }};
}

template <typename X>
struct MorphismCheck {
  bool holds = true;
  std::optional<X> counterexample;  // first x whose fiber mass is wrong
  Rational expected;                // Pr{X = x}
  Rational actual;                  // mass of the preimage of x

  explicit operator bool() const noexcept { return holds; }
};

/// Exact check of the fiber-sum law Pr{X=x} = Σ_{y ∈ φ⁻¹(x)} Pr{Y=y}.
/// Throws if the map leaves the target support.
template <typename Y, typename X>
MorphismCheck<X> check_morphism(const DistMorphism<Y, X>& m) {
  const auto& tgt = m.target;
  std::vector<Rational> mass(tgt.size(), Rational(0));
  for (std::size_t i = 0; i < m.source.size(); ++i) {
    const X image = m.map(m.source.support()[i]);
    auto j = tgt.index_of(image);
    if (!j) throw InvalidArgument("check_morphism: map leaves the target support");
    mass[*j] += m.source.probs()[i];
  }
  for (std::size_t j = 0; j < tgt.size(); ++j) {
    if (mass[j] != tgt.probs()[j]) {
      return {false, tgt.support()[j], tgt.probs()[j], mass[j]};
    }
  }
  return {};
}

/// The fiber of Y over x: support φ⁻¹(x), masses Pr{Y=y}/Pr{X=x}.
template <typename Y, typename X>
FiniteDistribution<Y> fiber(const DistMorphism<Y, X>& m, const X& x) {
  const Rational px = m.target.probability(x);
  if (sgn(px) == 0) throw InvalidArgument("fiber: Pr{X = x} is zero");
  std::vector<Y> support;
  std::vector<Rational> probs;
  for (std::size_t i = 0; i < m.source.size(); ++i) {
    const Y& y = m.source.support()[i];
    if (m.map(y) == x) {
      support.push_back(y);
      probs.push_back(m.source.probs()[i] / px);
    }
  }
  return FiniteDistribution<Y>(std::move(support), std::move(probs));
}

template <typename Y1, typename Y2, typename X>
struct FiberProduct {
  using Pair = std::pair<Y1, Y2>;
  FiniteDistribution<Pair> dist;
  DistMorphism<Pair, X> structural;  // ψ = φ₁∘pr₁ = φ₂∘pr₂
  DistMorphism<Pair, Y1> pr1;
  DistMorphism<Pair, Y2> pr2;
};

/// Y₁ ×_X Y₂ with Pr{(y₁,y₂)} = Pr{y₁}·Pr{y₂}/Pr{x} (zero when Pr{x} = 0).
template <typename Y1, typename Y2, typename X>
FiberProduct<Y1, Y2, X> fiber_product(const DistMorphism<Y1, X>& m1,
                                      const DistMorphism<Y2, X>& m2) {
  if (!(m1.target == m2.target)) {
    throw InvalidArgument("fiber_product: morphisms have different targets");
  }
  using Pair = std::pair<Y1, Y2>;
  std::vector<Pair> support;
  std::vector<Rational> probs;
  for (std::size_t i = 0; i < m1.source.size(); ++i) {
    const Y1& y1 = m1.source.support()[i];
    const X x = m1.map(y1);
    const Rational px = m1.target.probability(x);
    for (std::size_t j = 0; j < m2.source.size(); ++j) {
      const Y2& y2 = m2.source.support()[j];
      if (!(m2.map(y2) == x)) continue;
      support.emplace_back(y1, y2);
      probs.push_back(sgn(px) == 0 ? Rational(0)
                                   : m1.source.probs()[i] * m2.source.probs()[j] / px);
    }
  }
  FiniteDistribution<Pair> dist(std::move(support), std::move(probs));
  auto phi1 = m1.map;
  return FiberProduct<Y1, Y2, X>{
      dist,
      {dist, m1.target, [phi1](const Pair& p) { return phi1(p.first); }},
      {dist, m1.source, [](const Pair& p) { return p.first; }},
      {dist, m2.source, [](const Pair& p) { return p.second; }},
  };
}

template <typename T>
using Sampler = std::function<T(Rng&)>;

template <typename T>
Sampler<T> sampler_of(FiniteDistribution<T> d) {
  return [d = std::move(d)](Rng& rng) { return sample(d, rng); };
}

/// 95% two-sided Hoeffding half-width for a difference of two empirical
/// means built from n samples each: P(|err| >= t) <= 2·exp(-n t²).
inline double hoeffding_half_width(std::size_t n_per_arm) {
  if (n_per_arm == 0) return 1.0;
  return std::sqrt(std::log(40.0) / static_cast<double>(n_per_arm));
}

/// Outcome of a two-arm distinguishing experiment.
struct GameReport {
  std::size_t trials = 0;          // total experiment runs, both arms
  std::size_t trials_per_arm = 0;
  std::size_t wins0 = 0;           // runs of arm 0 where the output was 1
  std::size_t wins1 = 0;
  double advantage = 0.0;          // |wins1/T − wins0/T|
  double half_width = 0.0;
  std::uint64_t seed = 0;
  bool fixed_key = false;          // non-standard single-keypair mode

  bool within_noise() const { return advantage <= half_width; }
};

inline GameReport make_report(std::size_t per_arm, std::size_t wins0,
                              std::size_t wins1, std::uint64_t seed) {
  GameReport r;
  r.trials = 2 * per_arm;
  r.trials_per_arm = per_arm;
  r.wins0 = wins0;
  r.wins1 = wins1;
  const double t = static_cast<double>(per_arm);
  r.advantage = std::fabs(static_cast<double>(wins1) / t - static_cast<double>(wins0) / t);
  r.half_width = hoeffding_half_width(per_arm);
  r.seed = seed;
  return r;
}

/// |Pr[D(s1)=1] − Pr[D(s0)=1]| estimated from `trials` samples of each.
template <typename T, typename Distinguisher>
GameReport estimate_advantage(Distinguisher&& d, const Sampler<T>& s0,
                              const Sampler<T>& s1, std::size_t trials, Rng& rng) {
  if (trials == 0) throw InvalidArgument("estimate_advantage: trials must be >= 1");
  const std::uint64_t seed = rng.next_u64();
  std::size_t w0 = 0;
  std::size_t w1 = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng r0 = Rng::derive(seed, {0, t});
    Rng r1 = Rng::derive(seed, {1, t});
    if (d(s0(r0))) ++w0;
    if (d(s1(r1))) ++w1;
  }
  return make_report(trials, w0, w1, seed);
}

}  // namespace bridges
