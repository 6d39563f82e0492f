// Copyright 2026 The bridges Authors
// SPDX-License-Identifier: Apache-2.0

// JSON files for keys, ciphertexts, circuits, bridge material and game
// reports. Every file is an envelope
//
//   {"kind": "...", "version": 1, "params": {...}, "payload": {...}}
//
// Integers modulo N and bit strings travel as lowercase hex; a bit string
// is read as the integer Σ b_i 2^i. Mock artifacts carry "insecure": true
// and are refused unless the caller opts in.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

#include <json.hpp>

#include "bridges/circuit.hpp"
#include "bridges/csgn.hpp"
#include "bridges/error.hpp"
#include "bridges/findist.hpp"
#include "bridges/gf2.hpp"
#include "bridges/gm.hpp"
#include "bridges/mockfhe.hpp"
#include "bridges/numtheory.hpp"
#include "bridges/syy.hpp"

namespace bridges {

using Json = nlohmann::json;

inline constexpr int kFormatVersion = 1;

struct SerializeOptions {
  bool allow_insecure = false;
};

/// SYY public key file: the GM key plus the vector length ℓ.
struct SyyPublicKeyFile {
  GmPublicKey pk;
  std::size_t ell = 0;
  bool operator==(const SyyPublicKeyFile&) const = default;
};

/// Public bridge material: both public keys as nested envelopes and the
/// bridge key (null when empty).
struct BridgeMaterialFile {
  std::string bridge;
  Json scheme1;
  Json scheme2;
  Json bk;
  bool operator==(const BridgeMaterialFile&) const = default;
};

inline std::string bits_to_hex(const BitVector& v) {
  BigInt x = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i]) mpz_setbit(x.get_mpz_t(), i);
  }
  return to_hex(x);
}

inline BitVector bits_from_hex(std::string_view hex, std::size_t n) {
  const BigInt x = from_hex(hex);
  if (sgn(x) < 0 || bit_length(x) > n) {
    throw InvalidArgument("bit string does not fit in " + std::to_string(n) + " bits");
  }
  return detail::to_bits(x, n);
}

template <typename T>
struct Codec;

template <>
struct Codec<GmSecretKey> {
  static constexpr std::string_view kind = "gm-secret-key";
  static constexpr bool insecure = false;
  static Json params(const GmSecretKey& k) { return {{"bits", bit_length(k.modulus())}}; }
  static Json payload(const GmSecretKey& k) { return {{"p", to_hex(k.p)}, {"q", to_hex(k.q)}}; }
  static GmSecretKey read(const Json&, const Json& j) {
    GmSecretKey k{from_hex(j.at("p").get<std::string>()), from_hex(j.at("q").get<std::string>())};
    if (k.p < 3 || k.q < 3 || k.p == k.q) throw InvalidArgument("gm-secret-key: bad primes");
    return k;
  }
};

template <>
struct Codec<GmPublicKey> {
  static constexpr std::string_view kind = "gm-public-key";
  static constexpr bool insecure = false;
  static Json params(const GmPublicKey& k) { return {{"bits", bit_length(k.n)}}; }
  static Json payload(const GmPublicKey& k) {
    return {{"n", to_hex(k.n)}, {"gamma", to_hex(k.gamma)}};
  }
  static GmPublicKey read(const Json&, const Json& j) {
    GmPublicKey k{from_hex(j.at("n").get<std::string>()),
                  from_hex(j.at("gamma").get<std::string>())};
    if (sgn(k.n) <= 0 || !is_unit(k.gamma, k.n)) {
      throw InvalidArgument("gm-public-key: gamma is not a unit mod n");
    }
    return k;
  }
};

template <>
struct Codec<GmCiphertext> {
  static constexpr std::string_view kind = "gm-ciphertext";
  static constexpr bool insecure = false;
  static Json params(const GmCiphertext&) { return Json::object(); }
  static Json payload(const GmCiphertext& c) { return {{"c", to_hex(c.value)}}; }
  static GmCiphertext read(const Json&, const Json& j) {
    return {from_hex(j.at("c").get<std::string>())};
  }
};

template <>
struct Codec<SyyPublicKeyFile> {
  static constexpr std::string_view kind = "syy-public-key";
  static constexpr bool insecure = false;
  static Json params(const SyyPublicKeyFile& k) {
    return {{"bits", bit_length(k.pk.n)}, {"ell", k.ell}};
  }
  static Json payload(const SyyPublicKeyFile& k) { return Codec<GmPublicKey>::payload(k.pk); }
  static SyyPublicKeyFile read(const Json& params, const Json& j) {
    const auto ell = params.at("ell").get<std::size_t>();
    if (ell == 0) throw InvalidArgument("syy-public-key: ell must be >= 1");
    return {Codec<GmPublicKey>::read(params, j), ell};
  }
};

template <>
struct Codec<SyyCiphertext> {
  static constexpr std::string_view kind = "syy-ciphertext";
  static constexpr bool insecure = false;
  static Json params(const SyyCiphertext& c) { return {{"ell", c.ell()}}; }
  static Json payload(const SyyCiphertext& c) {
    Json comps = Json::array();
    for (const auto& x : c.components) comps.push_back(to_hex(x.value));
    return {{"components", comps}};
  }
  static SyyCiphertext read(const Json& params, const Json& j) {
    SyyCiphertext c;
    for (const auto& x : j.at("components")) c.components.push_back({from_hex(x.get<std::string>())});
    if (params.contains("ell") && params.at("ell").get<std::size_t>() != c.ell()) {
      throw InvalidArgument("syy-ciphertext: ell does not match component count");
    }
    if (c.components.empty()) throw InvalidArgument("syy-ciphertext: no components");
    return c;
  }
};

template <>
struct Codec<CsgnKey> {
  static constexpr std::string_view kind = "csgn-key";
  static constexpr bool insecure = false;
  static Json params(const CsgnKey& k) { return {{"n", k.n}, {"d", k.d}, {"s", k.s()}}; }
  static Json payload(const CsgnKey& k) {
    Json probs = Json::array();
    for (const auto& p : k.x.probs()) probs.push_back(p.get_str());
    return {{"subset", bits_to_hex(k.subset)}, {"x", {{"support", k.x.support()}, {"probs", probs}}}};
  }
  static CsgnKey read(const Json& params, const Json& j) {
    CsgnKey k;
    k.n = params.at("n").get<std::size_t>();
    k.d = params.at("d").get<std::size_t>();
    k.subset = bits_from_hex(j.at("subset").get<std::string>(), k.n);
    std::vector<Rational> probs;
    for (const auto& p : j.at("x").at("probs")) probs.emplace_back(p.get<std::string>());
    k.x = FiniteDistribution<std::size_t>(j.at("x").at("support").get<std::vector<std::size_t>>(),
                                          std::move(probs));
    if (params.contains("s") && params.at("s").get<std::size_t>() != k.s()) {
      throw InvalidArgument("csgn-key: subset size does not match s");
    }
    csgn_check_params({k.n, k.d, k.s(), k.x});
    return k;
  }
};

template <>
struct Codec<CsgnCiphertext> {
  static constexpr std::string_view kind = "csgn-ciphertext";
  static constexpr bool insecure = false;
  static Json params(const CsgnCiphertext& c) { return {{"n", c.bits.size()}}; }
  static Json payload(const CsgnCiphertext& c) { return {{"bits", bits_to_hex(c.bits)}}; }
  static CsgnCiphertext read(const Json& params, const Json& j) {
    return {bits_from_hex(j.at("bits").get<std::string>(), params.at("n").get<std::size_t>())};
  }
};

namespace detail {
inline std::string u64_hex(std::uint64_t v) { return to_hex(BigInt(std::to_string(v))); }
inline std::uint64_t u64_from_hex(const Json& j) {
  const BigInt x = from_hex(j.get<std::string>());
  if (sgn(x) < 0 || bit_length(x) > 64) throw InvalidArgument("value exceeds 64 bits");
  return std::stoull(x.get_str());
}
}  // namespace detail

template <>
struct Codec<MockSecretKey> {
  static constexpr std::string_view kind = "mock-secret-key";
  static constexpr bool insecure = true;
  static Json params(const MockSecretKey&) { return Json::object(); }
  static Json payload(const MockSecretKey& k) { return {{"key_id", detail::u64_hex(k.key_id)}}; }
  static MockSecretKey read(const Json&, const Json& j) {
    return {detail::u64_from_hex(j.at("key_id"))};
  }
};

template <>
struct Codec<MockPublicKey> {
  static constexpr std::string_view kind = "mock-public-key";
  static constexpr bool insecure = true;
  static Json params(const MockPublicKey& k) {
    return {{"p", k.p}, {"capacity", k.capacity ? Json(*k.capacity) : Json(nullptr)}};
  }
  static Json payload(const MockPublicKey& k) { return {{"key_id", detail::u64_hex(k.key_id)}}; }
  static MockPublicKey read(const Json& params, const Json& j) {
    MockPublicKey k;
    k.p = params.at("p").get<std::uint64_t>();
    if (!is_small_prime(k.p)) throw InvalidArgument("mock-public-key: p must be prime");
    if (!params.at("capacity").is_null()) k.capacity = params.at("capacity").get<std::size_t>();
    k.key_id = detail::u64_from_hex(j.at("key_id"));
    return k;
  }
};

template <>
struct Codec<MockCiphertext> {
  static constexpr std::string_view kind = "mock-ciphertext";
  static constexpr bool insecure = true;
  static Json params(const MockCiphertext& c) { return {{"p", c.modulus}}; }
  static Json payload(const MockCiphertext& c) {
    return {{"value", c.value},
            {"depth", c.depth},
            {"tag", detail::u64_hex(c.tag)},
            {"key_id", detail::u64_hex(c.key_id)}};
  }
  static MockCiphertext read(const Json& params, const Json& j) {
    MockCiphertext c;
    c.modulus = params.at("p").get<std::uint64_t>();
    c.value = j.at("value").get<std::uint64_t>();
    if (c.value >= c.modulus) throw InvalidArgument("mock-ciphertext: value out of range");
    c.depth = j.at("depth").get<std::size_t>();
    c.tag = detail::u64_from_hex(j.at("tag"));
    c.key_id = detail::u64_from_hex(j.at("key_id"));
    return c;
  }
};

template <>
struct Codec<Circuit> {
  static constexpr std::string_view kind = "circuit";
  static constexpr bool insecure = false;
  static Json params(const Circuit& c) {
    return {{"inputs", c.num_inputs()}, {"gates", c.size()}, {"outputs", c.outputs().size()}};
  }
  static Json payload(const Circuit& c) {
    Json gates = Json::array();
    for (std::size_t id = 0; id < c.size(); ++id) {
      const Gate& g = c.gates()[id];
      Json e = {{"id", id}, {"kind", gate_kind_name(g.kind)}, {"args", g.args}};
      if (g.kind == GateKind::Input || g.kind == GateKind::Const || g.kind == GateKind::Pow) {
        e["value"] = g.value;
      }
      gates.push_back(std::move(e));
    }
    return {{"gates", gates}, {"outputs", c.outputs()}};
  }
  static Circuit read(const Json&, const Json& j) {
    std::vector<Gate> gates;
    for (const auto& e : j.at("gates")) {
      if (e.at("id").get<std::size_t>() != gates.size()) {
        throw InvalidArgument("circuit: gate ids must be 0, 1, 2, ... in order");
      }
      Gate g;
      g.kind = gate_kind_from_name(e.at("kind").get<std::string>());
      g.args = e.at("args").get<std::vector<std::size_t>>();
      g.value = e.value("value", std::uint64_t{0});
      gates.push_back(std::move(g));
    }
    return Circuit::from_gates(std::move(gates), j.at("outputs").get<std::vector<std::size_t>>());
  }
};

template <>
struct Codec<BridgeMaterialFile> {
  static constexpr std::string_view kind = "bridge-material";
  static constexpr bool insecure = false;
  static Json params(const BridgeMaterialFile& b) { return {{"bridge", b.bridge}}; }
  static Json payload(const BridgeMaterialFile& b) {
    return {{"scheme1", b.scheme1}, {"scheme2", b.scheme2}, {"bk", b.bk}};
  }
  static BridgeMaterialFile read(const Json& params, const Json& j) {
    return {params.at("bridge").get<std::string>(), j.at("scheme1"), j.at("scheme2"), j.at("bk")};
  }
};

template <>
struct Codec<GameReport> {
  static constexpr std::string_view kind = "game-report";
  static constexpr bool insecure = false;
  static Json params(const GameReport& r) {
    return {{"seed", r.seed}, {"fixed_key", r.fixed_key}};
  }
  static Json payload(const GameReport& r) {
    return {{"trials", r.trials},         {"trials_per_arm", r.trials_per_arm},
            {"wins0", r.wins0},           {"wins1", r.wins1},
            {"advantage", r.advantage},   {"half_width", r.half_width},
            {"within_noise", r.within_noise()}};
  }
  static GameReport read(const Json& params, const Json& j) {
    auto r = make_report(j.at("trials_per_arm").get<std::size_t>(), j.at("wins0").get<std::size_t>(),
                         j.at("wins1").get<std::size_t>(), params.at("seed").get<std::uint64_t>());
    r.fixed_key = params.at("fixed_key").get<bool>();
    return r;
  }
};

inline const std::vector<std::string>& known_kinds() {
  static const std::vector<std::string> kinds = {
      "gm-secret-key",   "gm-public-key",   "gm-ciphertext", "syy-public-key",
      "syy-ciphertext",  "csgn-key",        "csgn-ciphertext", "mock-secret-key",
      "mock-public-key", "mock-ciphertext", "circuit",       "bridge-material",
      "game-report"};
  return kinds;
}

/// Validated "kind" of an envelope.
inline std::string envelope_kind(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
    throw InvalidArgument("not an envelope: missing \"kind\"");
  }
  const auto kind = j.at("kind").get<std::string>();
  const auto& all = known_kinds();
  if (std::find(all.begin(), all.end(), kind) == all.end()) {
    throw InvalidArgument("unknown kind '" + kind + "'");
  }
  if (!j.contains("version") || j.at("version") != kFormatVersion) {
    throw InvalidArgument("unsupported version for kind '" + kind + "'");
  }
  return kind;
}

template <typename T>
Json encode(const T& x, const SerializeOptions& opt = {}) {
  using C = Codec<T>;
  if (C::insecure && !opt.allow_insecure) {
    throw InvalidArgument(std::string(C::kind) +
                          " is an insecure mock artifact; pass --insecure to serialize it");
  }
  Json j = {{"kind", C::kind},
            {"version", kFormatVersion},
            {"params", C::params(x)},
            {"payload", C::payload(x)}};
  if (C::insecure) j["insecure"] = true;
  return j;
}

template <typename T>
T decode(const Json& j, const SerializeOptions& opt = {}) {
  using C = Codec<T>;
  const auto kind = envelope_kind(j);
  if (kind != C::kind) {
    throw InvalidArgument("expected kind '" + std::string(C::kind) + "', got '" + kind + "'");
  }
  if (C::insecure && !opt.allow_insecure) {
    throw InvalidArgument(kind + " is an insecure mock artifact; pass --insecure to load it");
  }
  try {
    return C::read(j.at("params"), j.at("payload"));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument("malformed " + kind + ": " + e.what());
  }
}

/// Arrays of envelopes, used for bridge keys.
template <typename T>
Json encode_list(const std::vector<T>& xs, const SerializeOptions& opt = {}) {
  Json arr = Json::array();
  for (const auto& x : xs) arr.push_back(encode(x, opt));
  return arr;
}

template <typename T>
std::vector<T> decode_list(const Json& arr, const SerializeOptions& opt = {}) {
  if (!arr.is_array()) throw InvalidArgument("expected a JSON array");
  std::vector<T> out;
  out.reserve(arr.size());
  for (const auto& e : arr) out.push_back(decode<T>(e, opt));
  return out;
}

namespace detail {
template <typename T>
struct IsVector : std::false_type {};
template <typename T>
struct IsVector<std::vector<T>> : std::true_type {};
}  // namespace detail

/// Bridge keys: monostate is JSON null, vectors are arrays, anything else
/// its own envelope.
template <typename T>
Json encode_bridge_key(const T& x, const SerializeOptions& o = {}) {
  if constexpr (std::is_same_v<T, std::monostate>) {
    return nullptr;
  } else if constexpr (detail::IsVector<T>::value) {
    Json arr = Json::array();
    for (const auto& e : x) arr.push_back(encode_bridge_key(e, o));
    return arr;
  } else {
    return encode(x, o);
  }
}

template <typename T>
T decode_bridge_key(const Json& j, const SerializeOptions& o = {}) {
  if constexpr (std::is_same_v<T, std::monostate>) {
    if (!j.is_null()) throw InvalidArgument("bridge key: expected an empty bridge key");
    return {};
  } else if constexpr (detail::IsVector<T>::value) {
    if (!j.is_array()) throw InvalidArgument("bridge key: bridge key must be an array");
    T out;
    for (const auto& e : j) out.push_back(decode_bridge_key<typename T::value_type>(e, o));
    return out;
  } else {
    return decode<T>(j, o);
  }
}

}  // namespace bridges
