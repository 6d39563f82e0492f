// Copyright 2026 The bridges Authors
// SPDX-License-Identifier: Apache-2.0

// bridgectl: key generation, encryption, bridging, comparison, security
// games and benchmarks from the command line. Every artifact is a JSON
// envelope (see serialize.hpp); benchmark output is CSV.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "bridges/bench.hpp"
#include "bridges/bridge.hpp"
#include "bridges/csgn.hpp"
#include "bridges/csgn_bridges.hpp"
#include "bridges/gentry.hpp"
#include "bridges/gm.hpp"
#include "bridges/gm_syy.hpp"
#include "bridges/mockfhe.hpp"
#include "bridges/secgames.hpp"
#include "bridges/serialize.hpp"
#include "bridges/syy.hpp"

namespace {

using namespace bridges;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCrypto = 2;
constexpr int kExitCheck = 3;

// A --check comparison came out wrong.
class CheckFailed : public Error {
 public:
  using Error::Error;
};

struct Globals {
  std::optional<std::uint64_t> seed;
  std::string scheme = "gm";
  std::string params;
  std::string out;
  bool insecure = false;
  unsigned jobs = 1;

  Json params_json;
  SerializeOptions ser() const { return {insecure}; }
  Rng rng() const { return Rng(seed ? *seed : std::random_device{}()); }
};

// ---- I/O ----

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidArgument(what + ": invalid JSON: " + e.what());
  }
}

Json read_json(const std::string& path) { return parse_json(read_text(path), path); }

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write file '" + path + "'");
  out << text;
}

void write_json(const std::string& path, const Json& j) { write_text(path, j.dump(2) + "\n"); }

void warn(const std::string& msg) { std::cerr << Json{{"warning", msg}}.dump() << "\n"; }

// A key file is either a single envelope or a keygen bundle {"sk", "pk"}.
Json load_key(const std::string& path, const char* role) {
  Json j = read_json(path);
  if (j.is_object() && !j.contains("kind") && j.contains(role)) j = j.at(role);
  envelope_kind(j);
  return j;
}

Json load_envelope(const std::string& path) {
  Json j = read_json(path);
  envelope_kind(j);
  return j;
}

// ---- parameters: an explicit flag wins over --params, which wins over the default ----

template <typename T>
T pick(const std::optional<T>& flag, const Globals& g, const char* key, T fallback) {
  if (flag) return *flag;
  if (g.params_json.contains(key)) {
    try {
      return g.params_json.at(key).get<T>();
    } catch (const Json::exception&) {
      throw InvalidArgument(std::string("--params: field '") + key + "' has the wrong type");
    }
  }
  return fallback;
}

CsgnParams csgn_params(const Globals& g) {
  CsgnParams p = csgn_toy_preset();
  const Json& j = g.params_json;
  if (j.value("preset", std::string("toy")) != "toy") {
    throw InvalidArgument("--params: unknown csgn preset");
  }
  try {
    p.n = j.value("n", p.n);
    p.d = j.value("d", p.d);
    p.s = j.value("s", p.s);
  } catch (const Json::exception&) {
    throw InvalidArgument("--params: csgn n, d, s must be integers");
  }
  csgn_check_params(p);
  return p;
}

CsgnParams params_of(const CsgnKey& k) { return {k.n, k.d, k.s(), k.x}; }

Bit parse_bit(std::uint64_t m) {
  if (m > 1) throw InvalidArgument("plaintext must be 0 or 1 for this scheme");
  return static_cast<Bit>(m);
}

void require_insecure(const Globals& g, const std::string& what) {
  if (!g.insecure) {
    throw InvalidArgument(what + " uses the transparent mock backend; pass --insecure");
  }
}

std::vector<std::size_t> parse_sizes(const std::string& list) {
  std::vector<std::size_t> out;
  std::stringstream ss(list);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(cell, &used);
    } catch (const std::logic_error&) {
      used = 0;
    }
    if (used == 0 || used != cell.size() || v == 0) {
      throw InvalidArgument("--n: expected a comma-separated list of positive integers");
    }
    out.push_back(v);
  }
  if (out.empty()) throw InvalidArgument("--n: empty list");
  return out;
}

// ---- keygen / enc / dec ----

struct KeygenArgs {
  std::optional<std::size_t> bits;
  std::optional<std::size_t> ell;
  std::optional<std::uint64_t> p;
  std::optional<std::size_t> capacity;
  std::string sk_out;
  std::string pk_out;
};

int cmd_keygen(const Globals& g, const KeygenArgs& a) {
  Rng rng = g.rng();
  Json sk, pk;
  if (g.scheme == "gm" || g.scheme == "syy") {
    const std::size_t bits = pick(a.bits, g, "bits", std::size_t{512});
    if (bits < 1024) warn("modulus below 1024 bits is for experiments only");
    const auto kp = GmScheme(bits).keygen(rng);
    sk = encode(kp.sk);
    if (g.scheme == "gm") {
      pk = encode(kp.pk);
    } else {
      const std::size_t ell = pick(a.ell, g, "ell", std::size_t{8});
      pk = encode(SyyPublicKeyFile{kp.pk, SyyScheme(GmScheme(bits), ell).ell()});
    }
  } else if (g.scheme == "csgn") {
    const auto kp = CsgnScheme(csgn_params(g)).keygen(rng);
    sk = encode(kp.sk);
    pk = encode(kp.pk);
  } else if (g.scheme == "mock") {
    require_insecure(g, "keygen");
    std::optional<std::size_t> cap = a.capacity;
    if (!cap && g.params_json.contains("capacity")) cap = pick(a.capacity, g, "capacity", std::size_t{0});
    const MockFhe h(pick(a.p, g, "p", std::uint64_t{2}), cap);
    const auto kp = h.keygen(rng);
    sk = encode(kp.sk, g.ser());
    pk = encode(kp.pk, g.ser());
  } else {
    throw InvalidArgument("--scheme must be one of gm, syy, csgn, mock");
  }
  if (!a.sk_out.empty()) write_json(a.sk_out, sk);
  if (!a.pk_out.empty()) write_json(a.pk_out, pk);
  if (a.sk_out.empty() && a.pk_out.empty()) write_json(g.out, {{"sk", sk}, {"pk", pk}});
  return kExitOk;
}

struct EncArgs {
  std::string pk;
  std::uint64_t m = 0;
};

int cmd_enc(const Globals& g, const EncArgs& a) {
  Rng rng = g.rng();
  const Json key = load_key(a.pk, "pk");
  const std::string kind = envelope_kind(key);
  Json ct;
  if (kind == "gm-public-key") {
    ct = encode(gm_enc(decode<GmPublicKey>(key), parse_bit(a.m), rng));
  } else if (kind == "syy-public-key") {
    const auto pk = decode<SyyPublicKeyFile>(key);
    ct = encode(syy_enc(pk.pk, parse_bit(a.m), pk.ell, rng));
  } else if (kind == "csgn-key") {
    ct = encode(csgn_enc(decode<CsgnKey>(key), parse_bit(a.m), rng));
  } else if (kind == "mock-public-key") {
    require_insecure(g, "enc");
    const auto pk = decode<MockPublicKey>(key, g.ser());
    if (a.m >= pk.p) throw InvalidArgument("plaintext must be below p");
    ct = encode(MockFhe(pk.p, pk.capacity).encrypt(pk, a.m, rng), g.ser());
  } else {
    throw InvalidArgument("enc: '" + kind + "' is not a public key");
  }
  write_json(g.out, ct);
  return kExitOk;
}

struct DecArgs {
  std::string sk;
  std::string ct;
};

std::uint64_t decrypt_envelope(const Globals& g, const Json& key, const Json& ct) {
  const std::string kind = envelope_kind(ct);
  if (kind == "gm-ciphertext") return gm_dec(decode<GmSecretKey>(key), decode<GmCiphertext>(ct));
  if (kind == "syy-ciphertext") return syy_dec(decode<GmSecretKey>(key), decode<SyyCiphertext>(ct));
  if (kind == "csgn-ciphertext") {
    const auto k = decode<CsgnKey>(key);
    const auto c = decode<CsgnCiphertext>(ct);
    if (c.bits.size() != k.n) throw CryptoError("csgn: ciphertext length does not match key");
    return csgn_dec(k, c);
  }
  if (kind == "mock-ciphertext") {
    require_insecure(g, "dec");
    const auto c = decode<MockCiphertext>(ct, g.ser());
    return MockFhe(c.modulus).decrypt(decode<MockSecretKey>(key, g.ser()), c);
  }
  throw InvalidArgument("dec: '" + kind + "' is not a ciphertext");
}

int cmd_dec(const Globals& g, const DecArgs& a) {
  const Json key = load_key(a.sk, "sk");
  const Json ct = load_envelope(a.ct);
  write_json(g.out, {{"plaintext", decrypt_envelope(g, key, ct)}});
  return kExitOk;
}

// ---- bridge ----

template <typename H>
Json target_pk_to_json(const H& h, const typename H::PublicKey& pk, const SerializeOptions& o) {
  if constexpr (std::is_same_v<H, SyyScheme>) {
    return encode(SyyPublicKeyFile{pk, h.ell()}, o);
  } else {
    return encode(pk, o);
  }
}

template <typename H>
typename H::PublicKey target_pk_from_json(const H& h, const Json& j, const SerializeOptions& o) {
  if constexpr (std::is_same_v<H, SyyScheme>) {
    auto f = decode<SyyPublicKeyFile>(j, o);
    if (f.ell != h.ell()) throw InvalidArgument("bridge material: ell does not match --ell");
    return f.pk;
  } else {
    auto pk = decode<typename H::PublicKey>(j, o);
    if constexpr (std::is_same_v<H, MockFhe>) {
      if (pk.p != h.p()) throw InvalidArgument("bridge material: target modulus mismatch");
    }
    return pk;
  }
}

struct BridgeArgs {
  std::string name;
  std::string sk;
  std::string ct;
  std::string material;
  std::string material_out;
  std::string target_sk;
  std::string target_sk_out;
  std::optional<std::size_t> ell;
  std::optional<std::size_t> bits;
  std::optional<std::uint64_t> p;
  bool check = false;
};

template <typename SK1>
SK1 read_source_secret(const BridgeArgs& a) {
  return decode<SK1>(load_key(a.sk, "sk"));
}

template <typename B>
int run_bridge(const Globals& g, const BridgeArgs& a, const B& bridge,
               const typename B::Source::SecretKey& sk1, const Json& scheme1, Rng& rng) {
  using Src = typename B::Source;
  using Tgt = typename B::Target;
  const auto o = g.ser();
  const auto c1 = decode<typename Src::Ciphertext>(load_envelope(a.ct), o);

  std::optional<typename Tgt::PublicKey> pk2;
  std::optional<typename B::BridgeKey> bk;
  std::optional<typename Tgt::SecretKey> sk2;
  if (!a.material.empty()) {
    const auto m = decode<BridgeMaterialFile>(load_envelope(a.material), o);
    if (m.bridge != a.name) {
      throw InvalidArgument("bridge material is for '" + m.bridge + "', not '" + a.name + "'");
    }
    pk2 = target_pk_from_json(bridge.target(), m.scheme2, o);
    bk = decode_bridge_key<typename B::BridgeKey>(m.bk, o);
    if (!a.target_sk.empty()) {
      sk2 = decode<typename Tgt::SecretKey>(load_key(a.target_sk, "sk"), o);
    }
  } else {
    const auto pk1 = bridge.source().derive_public_key(sk1, rng);
    auto ext = bridge.extend_keys(sk1, pk1, rng);
    sk2 = bridge.target_secret(ext.sk2);
    pk2 = std::move(ext.pk2);
    bk = std::move(ext.bk);
    if (!a.material_out.empty()) {
      const BridgeMaterialFile m{a.name, scheme1, target_pk_to_json(bridge.target(), *pk2, o),
                                 encode_bridge_key(*bk, o)};
      write_json(a.material_out, encode(m, o));
    }
    if (!a.target_sk_out.empty()) write_json(a.target_sk_out, encode(*sk2, o));
  }

  const auto c2 = bridge.apply(*pk2, *bk, c1, rng);
  const Json out = encode(c2, o);
  if (a.check) {
    if (!sk2) throw InvalidArgument("--check with --material also needs --target-sk");
    const auto want = bridge.embed(bridge.source().decrypt(sk1, c1));
    const auto got = bridge.target().decrypt(*sk2, c2);
    write_json(g.out, out);
    if (!(got == want)) {
      throw CheckFailed("bridged ciphertext decrypts to " + std::to_string(got) + ", expected " +
                        std::to_string(want));
    }
    return kExitOk;
  }
  write_json(g.out, out);
  return kExitOk;
}

int cmd_bridge(const Globals& g, const BridgeArgs& a) {
  Rng rng = g.rng();
  const std::size_t ell = pick(a.ell, g, "ell", std::size_t{8});
  if (a.name == "gm-syy") {
    const auto sk1 = read_source_secret<GmSecretKey>(a);
    const std::size_t bits = bit_length(sk1.modulus());
    const GmSyyBridge b(GmScheme(bits), ell);
    return run_bridge(g, a, b, sk1, {{"scheme", "gm"}, {"params", {{"bits", bits}}}}, rng);
  }
  const bool csgn_source = a.name == "csgn-1" || a.name == "csgn-2" || a.name == "csgn-3" ||
                           a.name == "csgn-4" || a.name == "csgn-2-syy" ||
                           a.name == "gentry-csgn";
  if (!csgn_source) {
    throw InvalidArgument(
        "--name must be one of gm-syy, csgn-1, csgn-2, csgn-3, csgn-4, csgn-2-syy, gentry-csgn");
  }
  const auto sk1 = read_source_secret<CsgnKey>(a);
  const CsgnParams cp = params_of(sk1);
  const CsgnScheme src(cp);
  const Json scheme1 = {{"scheme", "csgn"}, {"params", {{"n", cp.n}, {"d", cp.d}, {"s", cp.s}}}};
  if (a.name == "csgn-2-syy") {
    const std::size_t bits = pick(a.bits, g, "bits", std::size_t{512});
    return run_bridge(g, a, CsgnBridge2<SyyScheme>(src, SyyScheme(GmScheme(bits), ell)), sk1,
                      scheme1, rng);
  }
  require_insecure(g, "bridge " + a.name);
  if (a.name == "csgn-1") return run_bridge(g, a, CsgnBridge1<MockFhe>(src, MockFhe(2)), sk1, scheme1, rng);
  if (a.name == "csgn-2") return run_bridge(g, a, CsgnBridge2<MockFhe>(src, MockFhe(2)), sk1, scheme1, rng);
  if (a.name == "csgn-4") return run_bridge(g, a, CsgnBridge4<MockFhe>(src, MockFhe(2)), sk1, scheme1, rng);
  if (a.name == "csgn-3") {
    const std::uint64_t p = pick(a.p, g, "p", smallest_prime_above(cp.s));
    return run_bridge(g, a, CsgnBridge3<MockFhe>(src, MockFhe(p), p), sk1, scheme1, rng);
  }
  return run_bridge(g, a, compile_gentry_bridge(src, MockFhe(2), csgn_dec_circuit(cp.n)), sk1,
                    scheme1, rng);
}

// ---- compare ----

struct CompareArgs {
  std::size_t n = 8;
  std::string x;
  std::string y;
  std::string sk;
  std::string pk;
  std::string material;
  std::optional<std::size_t> ell;
  std::optional<std::size_t> bits;
  bool balanced = false;
  bool check = false;
};

int cmd_compare(const Globals& g, const CompareArgs& a) {
  if (a.n == 0) throw InvalidArgument("--n must be >= 1");
  Rng rng = g.rng();
  const std::size_t ell = pick(a.ell, g, "ell", std::size_t{8});

  std::optional<GmSecretKey> sk;
  GmPublicKey pk1;
  if (!a.sk.empty()) sk = decode<GmSecretKey>(load_key(a.sk, "sk"));
  if (!a.pk.empty()) {
    pk1 = decode<GmPublicKey>(load_key(a.pk, "pk"));
  } else if (sk) {
    pk1 = gm_public_key_for(*sk, rng);
  } else {
    const auto kp = GmScheme(pick(a.bits, g, "bits", std::size_t{512})).keygen(rng);
    sk = kp.sk;
    pk1 = kp.pk;
  }
  if (sk && sk->modulus() != pk1.n) throw CryptoError("compare: secret and public key differ in N");

  GmPublicKey pk2;
  if (!a.material.empty()) {
    const auto m = decode<BridgeMaterialFile>(load_envelope(a.material));
    if (m.bridge != "gm-syy") throw InvalidArgument("compare: material must be for gm-syy");
    const auto f = decode<SyyPublicKeyFile>(m.scheme2);
    if (f.ell != ell) throw InvalidArgument("compare: material ell does not match --ell");
    pk2 = f.pk;
  } else if (sk) {
    pk2 = gm_public_key_for(*sk, rng);
  } else {
    throw InvalidArgument("compare: need --sk or gm-syy --material to form the bridge key");
  }

  const BitVector x = a.x.empty() ? random_bits_vector(a.n, rng) : bits_from_hex(a.x, a.n);
  const BitVector y = a.y.empty() ? x : bits_from_hex(a.y, a.n);
  std::vector<GmCiphertext> cs, ds;
  for (Bit b : x) cs.push_back(gm_enc(pk1, b, rng));
  for (Bit b : y) ds.push_back(gm_enc(pk1, b, rng));
  const GmSyyBridge bridge(GmScheme(bit_length(pk1.n)), ell);
  const auto c = compare_eval(bridge, pk1, pk2, cs, ds, rng,
                              a.balanced ? FoldOrder::Balanced : FoldOrder::Left);

  const Bit expected = x == y;
  Json out = {{"n", a.n},
              {"ell", ell},
              {"x", bits_to_hex(x)},
              {"y", bits_to_hex(y)},
              {"expected", expected},
              {"failure_bound", compare_failure_bound(a.n, ell)},
              {"ciphertext", encode(c)}};
  std::optional<Bit> verdict;
  if (sk) {
    verdict = syy_dec(*sk, c);
    out["verdict"] = *verdict;
  }
  write_json(g.out, out);
  if (a.check) {
    if (!verdict) throw InvalidArgument("--check needs the secret key");
    if (*verdict != expected) {
      throw CheckFailed("comparison verdict " + std::to_string(*verdict) + " but vectors are " +
                        (expected ? "equal" : "different"));
    }
  }
  return kExitOk;
}

// ---- game ----

struct GameArgs {
  std::string adversary = "random";
  std::size_t trials = 1000;
  std::optional<std::size_t> bits;
  std::optional<std::size_t> ell;
  std::optional<std::uint64_t> p;
  bool fixed_key = false;
};

template <typename S, typename A>
GameReport play(const S& s, const A& adv, const GameArgs& a, const Globals& g, Rng& rng) {
  return run_ind_cpa(s, adv, a.trials, rng, GameOptions{a.fixed_key, g.jobs});
}

int cmd_game(const Globals& g, const GameArgs& a) {
  Rng rng = g.rng();
  GameReport r;
  const bool random = a.adversary == "random";
  auto unsupported = [&] {
    return InvalidArgument("adversary '" + a.adversary + "' does not apply to scheme '" +
                           g.scheme + "'");
  };
  if (!random && a.adversary != "factoring" && a.adversary != "transparent") {
    throw InvalidArgument("--adversary must be one of random, factoring, transparent");
  }
  if (g.scheme == "gm") {
    const GmScheme s(pick(a.bits, g, "bits", std::size_t{512}));
    if (random) {
      r = play(s, RandomGuessAdversary{}, a, g, rng);
    } else if (a.adversary == "factoring") {
      r = play(s, GmFactoringAdversary{}, a, g, rng);
    } else {
      throw unsupported();
    }
  } else if (g.scheme == "syy") {
    if (!random) throw unsupported();
    const SyyScheme s(GmScheme(pick(a.bits, g, "bits", std::size_t{512})),
                      pick(a.ell, g, "ell", std::size_t{8}));
    r = play(s, RandomGuessAdversary{}, a, g, rng);
  } else if (g.scheme == "csgn") {
    if (!random) throw unsupported();
    r = play(CsgnScheme(csgn_params(g)), RandomGuessAdversary{}, a, g, rng);
  } else if (g.scheme == "mock") {
    require_insecure(g, "game");
    const MockFhe s(pick(a.p, g, "p", std::uint64_t{2}));
    if (random) {
      r = play(s, RandomGuessAdversary{}, a, g, rng);
    } else if (a.adversary == "transparent") {
      r = play(s, MockTransparentAdversary{}, a, g, rng);
    } else {
      throw unsupported();
    }
  } else {
    throw InvalidArgument("--scheme must be one of gm, syy, csgn, mock");
  }
  Json j = encode(r);
  j["params"]["scheme"] = g.scheme;
  j["params"]["adversary"] = a.adversary;
  write_json(g.out, j);
  return kExitOk;
}

// ---- bench ----

struct BenchArgs {
  std::string bridge = "gm-syy";
  std::string sizes = "4,8,16,32";
  std::size_t reps = 10;
  std::optional<std::size_t> ell;
  std::optional<std::size_t> bits;
  std::string trend_from;
  std::optional<double> min_r2;
};

int cmd_bench(const Globals& g, const BenchArgs& a) {
  if (!a.trend_from.empty()) {
    std::ifstream in(a.trend_from);
    if (!in) throw InvalidArgument("cannot read file '" + a.trend_from + "'");
    const LinearFit f = bench_trend(read_bench_csv(in));
    Json out = {{"slope", f.slope}, {"intercept", f.intercept}, {"r2", f.r2}, {"points", f.points}};
    if (a.min_r2) out["min_r2"] = *a.min_r2;
    write_json(g.out, out);
    if (a.min_r2 && !(f.r2 >= *a.min_r2)) {
      throw CheckFailed("trend R^2 " + std::to_string(f.r2) + " below " + std::to_string(*a.min_r2));
    }
    return kExitOk;
  }
  if (a.bridge != "gm-syy") throw InvalidArgument("--bridge: only gm-syy is benchmarked");
  if (a.reps < 10) throw InvalidArgument("--reps must be >= 10");
  Rng rng = g.rng();
  const auto rows = bench_gm_syy_compare(parse_sizes(a.sizes), a.reps,
                                         pick(a.ell, g, "ell", std::size_t{8}),
                                         pick(a.bits, g, "bits", std::size_t{512}), rng);
  std::ostringstream os;
  write_bench_csv(os, rows);
  write_text(g.out, os.str());
  return kExitOk;
}

void print_error(const char* code, const std::string& msg) {
  std::cerr << Json{{"error", code}, {"message", msg}}.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bridgectl: ciphertext bridges between encryption schemes"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--seed", g.seed, "RNG seed; fixes every output except timings");
  app.add_option("--scheme", g.scheme, "gm | syy | csgn | mock");
  app.add_option("--params", g.params, "scheme parameters as a JSON object or a JSON file");
  app.add_option("--out", g.out, "output file (default stdout)");
  app.add_flag("--insecure", g.insecure, "allow the transparent mock backend");
  app.add_option("--jobs", g.jobs, "worker threads for games")->check(CLI::PositiveNumber);

  KeygenArgs ka;
  auto* keygen = app.add_subcommand("keygen", "generate a key pair");
  keygen->add_option("--bits", ka.bits, "GM modulus size");
  keygen->add_option("--ell", ka.ell, "SYY vector length");
  keygen->add_option("--p", ka.p, "mock plaintext modulus");
  keygen->add_option("--capacity", ka.capacity, "mock multiplicative depth budget");
  keygen->add_option("--sk-out", ka.sk_out, "write the secret key here");
  keygen->add_option("--pk-out", ka.pk_out, "write the public key here");

  EncArgs ea;
  auto* enc = app.add_subcommand("enc", "encrypt a plaintext");
  enc->add_option("--pk", ea.pk, "public key file")->required();
  enc->add_option("--m", ea.m, "plaintext")->required();

  DecArgs da;
  auto* dec = app.add_subcommand("dec", "decrypt a ciphertext");
  dec->add_option("--sk", da.sk, "secret key file")->required();
  dec->add_option("--ct", da.ct, "ciphertext file")->required();

  BridgeArgs ba;
  auto* bridge = app.add_subcommand("bridge", "move a ciphertext into the target scheme");
  bridge->add_option("--name", ba.name, "gm-syy | csgn-1 | csgn-2 | csgn-3 | csgn-4 | csgn-2-syy | gentry-csgn")
      ->required();
  bridge->add_option("--sk", ba.sk, "source secret key file")->required();
  bridge->add_option("--ct", ba.ct, "source ciphertext file")->required();
  bridge->add_option("--material", ba.material, "reuse bridge material from an earlier run");
  bridge->add_option("--material-out", ba.material_out, "write the generated bridge material");
  bridge->add_option("--target-sk", ba.target_sk, "target secret key, for --check with --material");
  bridge->add_option("--target-sk-out", ba.target_sk_out, "write the target secret key");
  bridge->add_option("--ell", ba.ell, "SYY vector length");
  bridge->add_option("--bits", ba.bits, "SYY modulus size for csgn-2-syy");
  bridge->add_option("--p", ba.p, "field size for csgn-3");
  bridge->add_flag("--check", ba.check, "decrypt both sides and exit 3 on mismatch");

  CompareArgs ca;
  auto* compare = app.add_subcommand("compare", "homomorphic equality test of two bit vectors");
  compare->add_option("--n", ca.n, "vector length");
  compare->add_option("--x", ca.x, "first vector, hex, bit i = bit i of the number");
  compare->add_option("--y", ca.y, "second vector (default: equal to x)");
  compare->add_option("--sk", ca.sk, "GM secret key (enables the verdict)");
  compare->add_option("--pk", ca.pk, "GM public key");
  compare->add_option("--material", ca.material, "gm-syy bridge material");
  compare->add_option("--ell", ca.ell, "SYY vector length");
  compare->add_option("--bits", ca.bits, "modulus size when generating fresh keys");
  compare->add_flag("--balanced", ca.balanced, "balanced product tree instead of left fold");
  compare->add_flag("--check", ca.check, "exit 3 if the verdict is wrong");

  GameArgs ga;
  auto* game = app.add_subcommand("game", "run an IND-CPA experiment");
  game->add_option("--adversary", ga.adversary, "random | factoring | transparent");
  game->add_option("--trials", ga.trials, "total runs over both arms (>= 100)");
  game->add_option("--bits", ga.bits, "GM modulus size");
  game->add_option("--ell", ga.ell, "SYY vector length");
  game->add_option("--p", ga.p, "mock plaintext modulus");
  game->add_flag("--fixed-key", ga.fixed_key, "share one key pair across trials");

  BenchArgs bn;
  auto* bench = app.add_subcommand("bench", "time the gm-syy comparison circuit");
  bench->add_option("--bridge", bn.bridge, "gm-syy");
  bench->add_option("--n", bn.sizes, "comma-separated vector lengths");
  bench->add_option("--reps", bn.reps, "timed repetitions per size (>= 10)");
  bench->add_option("--ell", bn.ell, "SYY vector length");
  bench->add_option("--bits", bn.bits, "GM modulus size");
  bench->add_option("--trend-from", bn.trend_from, "fit a line to an existing CSV instead");
  bench->add_option("--min-r2", bn.min_r2, "with --trend-from: exit 3 below this R^2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    print_error("usage", e.what());
    return kExitUsage;
  }

  try {
    if (!g.params.empty()) {
      const auto& p = g.params;
      g.params_json = parse_json(p.find('{') != std::string::npos ? p : read_text(p), "--params");
      if (!g.params_json.is_object()) throw InvalidArgument("--params must be a JSON object");
    } else {
      g.params_json = Json::object();
    }
    if (*keygen) return cmd_keygen(g, ka);
    if (*enc) return cmd_enc(g, ea);
    if (*dec) return cmd_dec(g, da);
    if (*bridge) return cmd_bridge(g, ba);
    if (*compare) return cmd_compare(g, ca);
    if (*game) return cmd_game(g, ga);
    if (*bench) return cmd_bench(g, bn);
  } catch (const CheckFailed& e) {
    print_error("check_failed", e.what());
    return kExitCheck;
  } catch (const InvalidArgument& e) {
    print_error("invalid_argument", e.what());
    return kExitUsage;
  } catch (const Json::exception& e) {
    print_error("invalid_argument", e.what());
    return kExitUsage;
  } catch (const CryptoError& e) {
    print_error("crypto_error", e.what());
    return kExitCrypto;
  } catch (const std::exception& e) {
    print_error("crypto_error", e.what());
    return kExitCrypto;
  }
  return kExitUsage;
}
