// Copyright 2026 The bridges Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bridges/error.hpp"
#include "bridges/rng.hpp"

namespace bridges {

enum class GateKind : std::uint8_t { Input, Const, Xor, And, Add, Sub, Mul, Pow };

inline std::string_view gate_kind_name(GateKind k) {
  switch (k) {
    case GateKind::Input: return "input";
    case GateKind::Const: return "const";
    case GateKind::Xor: return "xor";
    case GateKind::And: return "and";
    case GateKind::Add: return "add";
    case GateKind::Sub: return "sub";
    case GateKind::Mul: return "mul";
    case GateKind::Pow: return "pow";
  }
  return "?";
}

inline GateKind gate_kind_from_name(std::string_view s) {
  for (auto k : {GateKind::Input, GateKind::Const, GateKind::Xor, GateKind::And,
                 GateKind::Add, GateKind::Sub, GateKind::Mul, GateKind::Pow}) {
    if (gate_kind_name(k) == s) return k;
  }
  throw InvalidArgument("unknown gate kind: " + std::string(s));
}

inline std::size_t gate_arity(GateKind k) {
  switch (k) {
    case GateKind::Input:
    case GateKind::Const: return 0;
    case GateKind::Pow: return 1;
    default: return 2;
  }
}

inline bool is_boolean_gate(GateKind k) { return k == GateKind::Xor || k == GateKind::And; }
inline bool is_ring_gate(GateKind k) {
  return k == GateKind::Add || k == GateKind::Sub || k == GateKind::Mul ||
         k == GateKind::Pow || k == GateKind::Const;
}

/// One node of a circuit DAG. `value` is the input index for Input, the
/// constant for Const and the exponent for Pow; unused otherwise.
struct Gate {
  GateKind kind = GateKind::Input;
  std::vector<std::size_t> args;
  std::uint64_t value = 0;

  bool operator==(const Gate&) const = default;
};

/// Straight-line circuit. Gates may only reference earlier gates, so the
/// graph is acyclic by construction; `validate` re-checks that for
/// circuits assembled from external data.
class Circuit {
 public:
  using Wire = std::size_t;

  Circuit() = default;
  explicit Circuit(std::size_t num_inputs) {
    for (std::size_t i = 0; i < num_inputs; ++i) input();
  }

  Wire input() {
    gates_.push_back({GateKind::Input, {}, num_inputs_++});
    return gates_.size() - 1;
  }
  Wire constant(std::uint64_t v) { return push({GateKind::Const, {}, v}); }
  Wire xor_(Wire a, Wire b) { return push({GateKind::Xor, {a, b}, 0}); }
  Wire and_(Wire a, Wire b) { return push({GateKind::And, {a, b}, 0}); }
  Wire add(Wire a, Wire b) { return push({GateKind::Add, {a, b}, 0}); }
  Wire sub(Wire a, Wire b) { return push({GateKind::Sub, {a, b}, 0}); }
  Wire mul(Wire a, Wire b) { return push({GateKind::Mul, {a, b}, 0}); }
  Wire pow(Wire a, std::uint64_t e) { return push({GateKind::Pow, {a}, e}); }

  // Boolean NOT as XOR with the constant 1.
  Wire not_(Wire a) { return xor_(a, constant(1)); }
  // a OR b = a ⊕ b ⊕ ab
  Wire or_(Wire a, Wire b) { return xor_(xor_(a, b), and_(a, b)); }

  Wire xor_all(std::span<const Wire> ws) { return reduce(ws, GateKind::Xor, 0); }
  Wire and_all(std::span<const Wire> ws) { return reduce(ws, GateKind::And, 1); }
  Wire add_all(std::span<const Wire> ws) { return reduce(ws, GateKind::Add, 0); }
  Wire mul_all(std::span<const Wire> ws) { return reduce(ws, GateKind::Mul, 1); }

  void mark_output(Wire w) {
    check_wire(w);
    outputs_.push_back(w);
  }

  const std::vector<Gate>& gates() const noexcept { return gates_; }
  const std::vector<Wire>& outputs() const noexcept { return outputs_; }
  std::size_t num_inputs() const noexcept { return num_inputs_; }
  std::size_t size() const noexcept { return gates_.size(); }

  /// Only XOR/AND plus inputs and 0/1 constants.
  bool is_boolean() const {
    for (const auto& g : gates_) {
      if (g.kind == GateKind::Const && g.value > 1) return false;
      if (g.kind != GateKind::Input && g.kind != GateKind::Const && !is_boolean_gate(g.kind)) {
        return false;
      }
    }
    return true;
  }

  /// Same gates with a single designated output.
  Circuit output_projection(std::size_t i) const {
    if (i >= outputs_.size()) throw InvalidArgument("Circuit: output index out of range");
    Circuit c = *this;
    c.outputs_ = {outputs_[i]};
    return c;
  }

  /// Rebuild from a gate list (e.g. deserialized data), checking arities,
  /// forward references and input numbering.
  static Circuit from_gates(std::vector<Gate> gates, std::vector<Wire> outputs) {
    Circuit c;
    c.gates_ = std::move(gates);
    c.outputs_ = std::move(outputs);
    c.num_inputs_ = 0;
    for (const auto& g : c.gates_) {
      if (g.kind == GateKind::Input) ++c.num_inputs_;
    }
    c.validate();
    return c;
  }

  void validate() const {
    std::size_t next_input = 0;
    for (std::size_t id = 0; id < gates_.size(); ++id) {
      const Gate& g = gates_[id];
      if (g.args.size() != gate_arity(g.kind)) {
        throw InvalidArgument("Circuit: gate " + std::to_string(id) + " has wrong arity");
      }
      for (Wire a : g.args) {
        if (a >= id) {
          throw InvalidArgument("Circuit: gate " + std::to_string(id) +
                                " references a later gate (cycle)");
        }
      }
      if (g.kind == GateKind::Input && g.value != next_input++) {
        throw InvalidArgument("Circuit: inputs must be numbered in order");
      }
    }
    for (Wire w : outputs_) check_wire(w);
  }

  bool operator==(const Circuit&) const = default;

 private:
  Wire push(Gate g) {
    for (Wire a : g.args) check_wire(a);
    gates_.push_back(std::move(g));
    return gates_.size() - 1;
  }

  void check_wire(Wire w) const {
    if (w >= gates_.size()) throw InvalidArgument("Circuit: wire out of range");
  }

  Wire reduce(std::span<const Wire> ws, GateKind kind, std::uint64_t empty) {
    if (ws.empty()) return constant(empty);
    std::vector<Wire> layer(ws.begin(), ws.end());
    while (layer.size() > 1) {
      std::vector<Wire> next;
      next.reserve((layer.size() + 1) / 2);
      for (std::size_t i = 0; i + 1 < layer.size(); i += 2) {
        next.push_back(push({kind, {layer[i], layer[i + 1]}, 0}));
      }
      if (layer.size() % 2) next.push_back(layer.back());
      layer = std::move(next);
    }
    return layer.front();
  }

  std::vector<Gate> gates_;
  std::vector<Wire> outputs_;
  std::size_t num_inputs_ = 0;
};

/// The prime field F_p with elements stored as reduced uint64 values.
/// p must fit in 32 bits so products cannot overflow.
struct PrimeField {
  std::uint64_t p = 2;

  std::uint64_t reduce(std::uint64_t x) const { return x % p; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p - b) % p; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % p; }
  std::uint64_t characteristic() const { return p; }

  bool operator==(const PrimeField&) const = default;
};

inline bool is_small_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

/// Reference gate-by-gate evaluator. XOR/AND are only meaningful in
/// characteristic 2 and are rejected elsewhere; POW is computed by plain
/// repeated multiplication so it stays independent from the
/// square-and-multiply used by homomorphic backends.
inline std::vector<std::uint64_t> eval_circuit_plain(const Circuit& c, const PrimeField& f,
                                                     std::span<const std::uint64_t> inputs) {
  if (inputs.size() != c.num_inputs()) {
    throw InvalidArgument("eval_circuit_plain: expected " + std::to_string(c.num_inputs()) +
                          " inputs, got " + std::to_string(inputs.size()));
  }
  std::vector<std::uint64_t> val(c.size());
  for (std::size_t id = 0; id < c.size(); ++id) {
    const Gate& g = c.gates()[id];
    auto arg = [&](std::size_t k) { return val[g.args[k]]; };
    switch (g.kind) {
      case GateKind::Input: val[id] = f.reduce(inputs[g.value]); break;
      case GateKind::Const: val[id] = f.reduce(g.value); break;
      case GateKind::Xor:
      case GateKind::And:
        if (f.p != 2) {
          throw InvalidArgument("eval_circuit_plain: boolean gate over a ring of characteristic " +
                                std::to_string(f.p));
        }
        val[id] = g.kind == GateKind::Xor ? (arg(0) ^ arg(1)) : (arg(0) & arg(1));
        break;
      case GateKind::Add: val[id] = f.add(arg(0), arg(1)); break;
      case GateKind::Sub: val[id] = f.sub(arg(0), arg(1)); break;
      case GateKind::Mul: val[id] = f.mul(arg(0), arg(1)); break;
      case GateKind::Pow: {
        std::uint64_t r = f.reduce(1);
        for (std::uint64_t e = 0; e < g.value; ++e) r = f.mul(r, arg(0));
        val[id] = r;
        break;
      }
    }
  }
  std::vector<std::uint64_t> out;
  out.reserve(c.outputs().size());
  for (auto w : c.outputs()) out.push_back(val[w]);
  return out;
}

/// Depth reached by square-and-multiply x^e from a base of depth d. The
/// homomorphic pow implementations follow the same schedule, so this
/// matches their bookkeeping exactly.
inline std::size_t pow_depth(std::size_t d, std::uint64_t e) {
  if (e == 0) return 0;
  bool have = false;
  std::size_t acc = 0;
  std::size_t base = d;
  while (e) {
    if (e & 1) {
      acc = have ? std::max(acc, base) + 1 : base;
      have = true;
    }
    e >>= 1;
    if (e) base += 1;
  }
  return acc;
}

/// Multiplicative depth of every designated output (max over outputs).
/// ADD/SUB/XOR keep the larger input depth; MUL/AND add one.
inline std::size_t multiplicative_depth(const Circuit& c) {
  std::vector<std::size_t> depth(c.size(), 0);
  for (std::size_t id = 0; id < c.size(); ++id) {
    const Gate& g = c.gates()[id];
    switch (g.kind) {
      case GateKind::Input:
      case GateKind::Const: depth[id] = 0; break;
      case GateKind::Xor:
      case GateKind::Add:
      case GateKind::Sub: depth[id] = std::max(depth[g.args[0]], depth[g.args[1]]); break;
      case GateKind::And:
      case GateKind::Mul: depth[id] = std::max(depth[g.args[0]], depth[g.args[1]]) + 1; break;
      case GateKind::Pow: depth[id] = pow_depth(depth[g.args[0]], g.value); break;
    }
  }
  std::size_t out = 0;
  for (auto w : c.outputs()) out = std::max(out, depth[w]);
  return out;
}

/// Random boolean circuit with `inputs` inputs and `gates` XOR/AND gates,
/// each consuming two uniformly chosen earlier wires. The last gate is the
/// output.
inline Circuit random_boolean_circuit(std::size_t inputs, std::size_t gates, Rng& rng) {
  if (inputs == 0) throw InvalidArgument("random_boolean_circuit: need at least one input");
  Circuit c(inputs);
  Circuit::Wire last = 0;
  for (std::size_t g = 0; g < gates; ++g) {
    const auto a = rng.uniform_below(static_cast<std::uint64_t>(c.size()));
    const auto b = rng.uniform_below(static_cast<std::uint64_t>(c.size()));
    last = rng.coin() ? c.xor_(a, b) : c.and_(a, b);
  }
  c.mark_output(last);
  return c;
}

}  // namespace bridges
