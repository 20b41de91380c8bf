// Copyright 2026 The srdct Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "srdct/common.hpp"
#include "srdct/flops.hpp"

namespace srdct {

/// Weighted DAG of a straight-line linear algorithm. Vertices sum their
/// incoming edges; edges multiply by their weight.
struct LinearNetwork {
  struct Edge {
    std::uint32_t from = 0;
    std::uint32_t to = 0;
    double weight = 1.0;
  };

  std::size_t vertex_count = 0;
  std::vector<Edge> edges;
  std::vector<std::uint32_t> inputs;
  std::vector<std::uint32_t> outputs;
};

class trace_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Signed reference to a network vertex. Negation flips the sign and is
/// carried into the weight of whatever edge consumes the value.
struct Sym {
  std::int32_t vertex = -1;
  bool negated = false;

  bool valid() const { return vertex >= 0; }
};

/// Arithmetic context that records a LinearNetwork instead of computing.
class TraceOps {
 public:
  using value_type = Sym;

  Sym input() {
    const auto v = new_vertex();
    net_.inputs.push_back(v);
    return {static_cast<std::int32_t>(v), false};
  }

  Sym add(Sym a, Sym b) { return combine(a, b, 1.0); }
  Sym sub(Sym a, Sym b) { return combine(a, b, -1.0); }

  Sym mul(Sym a, double constant) {
    check(a);
    if (!std::isfinite(constant) || constant == 0.0 || constant == 1.0 || constant == -1.0) {
      throw trace_error("trace: multiplication by trivial or non-finite constant " +
                        std::to_string(constant));
    }
    const auto v = new_vertex();
    edge(a, v, constant);
    return {static_cast<std::int32_t>(v), false};
  }

  Sym neg(Sym a) {
    check(a);
    return {a.vertex, !a.negated};
  }

  Sym zero() { return {}; }

  /// Product of two traced values: not linear, always an error.
  [[noreturn]] Sym product(Sym, Sym) {
    throw trace_error("trace: product of two signal-dependent values is not linear");
  }

  /// Appends a sink vertex for each output so outputs have outdegree 0.
  LinearNetwork finish(std::span<const Sym> outs) && {
    for (const Sym& s : outs) {
      check(s);
      const auto v = new_vertex();
      edge(s, v, 1.0);
      net_.outputs.push_back(v);
    }
    return std::move(net_);
  }

 private:
  static void check(Sym s) {
    if (!s.valid()) throw trace_error("trace: structural zero used in arithmetic");
  }

  std::uint32_t new_vertex() { return static_cast<std::uint32_t>(net_.vertex_count++); }

  void edge(Sym from, std::uint32_t to, double w) {
    net_.edges.push_back({static_cast<std::uint32_t>(from.vertex), to, from.negated ? -w : w});
  }

  Sym combine(Sym a, Sym b, double sign_b) {
    check(a);
    check(b);
    const auto v = new_vertex();
    edge(a, v, 1.0);
    edge(b, v, sign_b);
    return {static_cast<std::int32_t>(v), false};
  }

  LinearNetwork net_;
};

namespace detail {

inline bool unit_weight(double w) { return w == 1.0 || w == -1.0; }

/// Kahn's algorithm; throws if the graph has a cycle.
inline std::vector<std::uint32_t> topological_order(const LinearNetwork& net) {
  std::vector<std::uint32_t> indeg(net.vertex_count, 0);
  std::vector<std::vector<std::uint32_t>> succ(net.vertex_count);
  for (const auto& e : net.edges) {
    ++indeg[e.to];
    succ[e.from].push_back(e.to);
  }
  std::vector<std::uint32_t> order, stack;
  for (std::size_t v = net.vertex_count; v-- > 0;) {
    if (indeg[v] == 0) stack.push_back(static_cast<std::uint32_t>(v));
  }
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (auto w : succ[v]) {
      if (--indeg[w] == 0) stack.push_back(w);
    }
  }
  if (order.size() != net.vertex_count) throw std::invalid_argument("network has a cycle");
  return order;
}

/// Keeps the vertices flagged in `keep`, renumbered in their original order.
inline LinearNetwork compact(const LinearNetwork& net, const std::vector<bool>& keep) {
  std::vector<std::uint32_t> id(net.vertex_count, 0);
  LinearNetwork out;
  for (std::size_t v = 0; v < net.vertex_count; ++v) {
    if (keep[v]) id[v] = static_cast<std::uint32_t>(out.vertex_count++);
  }
  for (const auto& e : net.edges) {
    if (keep[e.from] && keep[e.to]) out.edges.push_back({id[e.from], id[e.to], e.weight});
  }
  for (auto v : net.inputs) out.inputs.push_back(id[v]);
  for (auto v : net.outputs) out.outputs.push_back(id[v]);
  return out;
}

}  // namespace detail

/// Drops vertices that cannot reach an output (inputs are always kept).
inline LinearNetwork prune_dead(const LinearNetwork& net) {
  std::vector<std::vector<std::uint32_t>> pred(net.vertex_count);
  for (const auto& e : net.edges) pred[e.to].push_back(e.from);
  std::vector<bool> live(net.vertex_count, false);
  std::vector<std::uint32_t> stack(net.outputs.begin(), net.outputs.end());
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    if (live[v]) continue;
    live[v] = true;
    for (auto u : pred[v]) stack.push_back(u);
  }
  for (auto v : net.inputs) live[v] = true;
  return detail::compact(net, live);
}

/// Runs a linear kernel on traced inputs. The kernel is called as
/// kernel(TraceOps&, std::span<const Sym>) and returns its outputs.
template <class Kernel>
LinearNetwork record(Kernel&& kernel, std::size_t n_inputs) {
  TraceOps ops;
  std::vector<Sym> in;
  in.reserve(n_inputs);
  for (std::size_t i = 0; i < n_inputs; ++i) in.push_back(ops.input());
  const std::vector<Sym> out = kernel(ops, std::span<const Sym>(in));
  return prune_dead(std::move(ops).finish(out));
}

/// Reverses every edge; inputs and outputs trade places.
inline LinearNetwork transpose(const LinearNetwork& net) {
  LinearNetwork t;
  t.vertex_count = net.vertex_count;
  t.edges.reserve(net.edges.size());
  for (const auto& e : net.edges) t.edges.push_back({e.to, e.from, e.weight});
  t.inputs = net.outputs;
  t.outputs = net.inputs;
  return t;
}

/// Removes interior vertices with a single incoming edge of weight +-1,
/// redirecting their outgoing edges to the source with the sign folded in.
inline LinearNetwork collapse_unit_vertices(const LinearNetwork& net) {
  std::vector<int> indeg(net.vertex_count, 0);
  std::vector<std::int64_t> in_edge(net.vertex_count, -1);
  for (std::size_t i = 0; i < net.edges.size(); ++i) {
    ++indeg[net.edges[i].to];
    in_edge[net.edges[i].to] = static_cast<std::int64_t>(i);
  }
  std::vector<bool> terminal(net.vertex_count, false);
  for (auto v : net.inputs) terminal[v] = true;
  for (auto v : net.outputs) terminal[v] = true;

  // alias[v] = (root, sign) with value(v) = sign * value(root).
  std::vector<std::uint32_t> root(net.vertex_count);
  std::vector<double> sign(net.vertex_count, 1.0);
  std::vector<bool> keep(net.vertex_count, true);
  for (auto v : detail::topological_order(net)) {
    root[v] = v;
    if (terminal[v] || indeg[v] != 1) continue;
    const auto& e = net.edges[static_cast<std::size_t>(in_edge[v])];
    if (!detail::unit_weight(e.weight)) continue;
    root[v] = root[e.from];
    sign[v] = sign[e.from] * e.weight;
    keep[v] = false;
  }
  LinearNetwork out = net;
  out.edges.clear();
  for (const auto& e : net.edges) {
    if (!keep[e.to]) continue;
    out.edges.push_back({root[e.from], e.to, sign[e.from] * e.weight});
  }
  return detail::compact(out, keep);
}

/// Adds = N_in + |E| - |V|; mults = edges whose weight is not +-1.
inline FlopLedger structural_flops(const LinearNetwork& net) {
  FlopLedger l;
  l.adds = static_cast<std::int64_t>(net.inputs.size()) +
           static_cast<std::int64_t>(net.edges.size()) -
           static_cast<std::int64_t>(net.vertex_count);
  for (const auto& e : net.edges) {
    if (!detail::unit_weight(e.weight)) ++l.mults;
  }
  return l;
}

/// Sum of (indegree - 1) over all non-input vertices.
inline std::int64_t adds_by_indegree(const LinearNetwork& net) {
  std::vector<std::int64_t> indeg(net.vertex_count, 0);
  for (const auto& e : net.edges) ++indeg[e.to];
  std::vector<bool> is_input(net.vertex_count, false);
  for (auto v : net.inputs) is_input[v] = true;
  std::int64_t adds = 0;
  for (std::size_t v = 0; v < net.vertex_count; ++v) {
    if (!is_input[v]) adds += indeg[v] - 1;
  }
  return adds;
}

/// Straight-line schedule of a network in topological order.
class CompiledNetwork {
 public:
  CompiledNetwork() = default;

  explicit CompiledNetwork(const LinearNetwork& net)
      : n_inputs_(net.inputs.size()), n_outputs_(net.outputs.size()) {
    const auto order = detail::topological_order(net);
    std::vector<std::uint32_t> slot(net.vertex_count);
    for (std::size_t i = 0; i < order.size(); ++i) slot[order[i]] = static_cast<std::uint32_t>(i);
    std::vector<std::vector<Term>> in_terms(net.vertex_count);
    for (const auto& e : net.edges) in_terms[e.to].push_back({slot[e.from], e.weight});
    std::vector<bool> is_input(net.vertex_count, false);
    for (auto v : net.inputs) is_input[v] = true;

    slots_ = order.size();
    for (auto v : order) {
      if (is_input[v]) continue;
      if (in_terms[v].empty()) {
        throw std::invalid_argument("network vertex " + std::to_string(v) + " has no inputs");
      }
      ops_.push_back({slot[v], static_cast<std::uint32_t>(terms_.size()),
                      static_cast<std::uint32_t>(in_terms[v].size())});
      terms_.insert(terms_.end(), in_terms[v].begin(), in_terms[v].end());
    }
    for (auto v : net.inputs) input_slots_.push_back(slot[v]);
    for (auto v : net.outputs) output_slots_.push_back(slot[v]);
  }

  std::size_t input_size() const { return n_inputs_; }
  std::size_t output_size() const { return n_outputs_; }

  /// Evaluates through an arithmetic context: each vertex with d incoming
  /// edges costs d - 1 adds plus one mult per non-unit edge.
  template <class Ops, class T = typename Ops::value_type>
  std::vector<T> run(Ops& ops, std::span<const T> x) const {
    if (x.size() != n_inputs_) {
      throw std::invalid_argument("network input size " + std::to_string(x.size()) +
                                  " != " + std::to_string(n_inputs_));
    }
    std::vector<T> val(slots_);
    for (std::size_t i = 0; i < n_inputs_; ++i) val[input_slots_[i]] = x[i];
    for (const auto& op : ops_) {
      const Term* t = terms_.data() + op.first;
      T acc = weighted(ops, val[t[0].src], t[0].weight);
      for (std::uint32_t j = 1; j < op.count; ++j) {
        const T& s = val[t[j].src];
        const double w = t[j].weight;
        if (w == 1.0) {
          acc = ops.add(acc, s);
        } else if (w == -1.0) {
          acc = ops.sub(acc, s);
        } else {
          acc = ops.add(acc, ops.mul(s, w));
        }
      }
      val[op.slot] = acc;
    }
    std::vector<T> y(n_outputs_);
    for (std::size_t i = 0; i < n_outputs_; ++i) y[i] = val[output_slots_[i]];
    return y;
  }

 private:
  struct Term {
    std::uint32_t src;
    double weight;
  };
  struct VertexOp {
    std::uint32_t slot;
    std::uint32_t first;
    std::uint32_t count;
  };

  template <class Ops, class T>
  static T weighted(Ops& ops, const T& v, double w) {
    if (w == 1.0) return v;
    if (w == -1.0) return ops.neg(v);
    return ops.mul(v, w);
  }

  std::size_t n_inputs_ = 0;
  std::size_t n_outputs_ = 0;
  std::size_t slots_ = 0;
  std::vector<VertexOp> ops_;
  std::vector<Term> terms_;
  std::vector<std::uint32_t> input_slots_;
  std::vector<std::uint32_t> output_slots_;
};

/// Plain double evaluation (no ledger).
inline std::vector<double> eval(const LinearNetwork& net, std::span<const double> x) {
  FlopLedger discard;
  CountingOps ops(discard);
  return CompiledNetwork(net).run(ops, x);
}

/// Debug dump: "# inputs ..." / "# outputs ..." headers, then "from to weight".
inline void write_edge_list(std::ostream& os, const LinearNetwork& net) {
  os << "# vertices " << net.vertex_count << "\n# inputs";
  for (auto v : net.inputs) os << ' ' << v;
  os << "\n# outputs";
  for (auto v : net.outputs) os << ' ' << v;
  os << '\n';
  char buf[64];
  for (const auto& e : net.edges) {
    std::snprintf(buf, sizeof buf, "%.17g", e.weight);
    os << e.from << ' ' << e.to << ' ' << buf << '\n';
  }
}

// Lane layouts used when tracing complex-valued kernels over real scalars.

/// Half spectrum of length n as n real lanes:
/// Re X_0, Re X_1, Im X_1, ..., Re X_{n/2-1}, Im X_{n/2-1}, Re X_{n/2}.
template <class T>
std::vector<T> pack_half_spectrum(const std::vector<Cplx<T>>& h, std::size_t n) {
  std::vector<T> lanes;
  lanes.reserve(n);
  lanes.push_back(h[0].re);
  if (n == 1) return lanes;
  for (std::size_t k = 1; k < n / 2; ++k) {
    lanes.push_back(h[k].re);
    lanes.push_back(h[k].im);
  }
  lanes.push_back(h[n / 2].re);
  return lanes;
}

/// Interleaved re, im lanes.
template <class T>
std::vector<T> pack_complex(const std::vector<Cplx<T>>& z) {
  std::vector<T> lanes;
  lanes.reserve(2 * z.size());
  for (const auto& c : z) {
    lanes.push_back(c.re);
    lanes.push_back(c.im);
  }
  return lanes;
}

template <class T>
std::vector<Cplx<T>> unpack_complex(std::span<const T> lanes) {
  std::vector<Cplx<T>> z(lanes.size() / 2);
  for (std::size_t i = 0; i < z.size(); ++i) z[i] = {lanes[2 * i], lanes[2 * i + 1]};
  return z;
}

}  // namespace srdct
