// Copyright 2026 The toffoli-forge Authors
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

#include "tforge/route.hpp"

#include "tforge/synth.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <tuple>
#include <utility>

namespace tforge {

namespace {

/// One network operation on positions (pos, pos + 1). Rotations put the
/// control on `pos`.
struct LineOp {
  bool swap = false;
  Qubit pos = 0;
};

using Network = std::vector<std::vector<LineOp>>;

/*
 * Staggered pipelines over m consecutive positions starting at `first`.
 * Pipeline p (0-based) starts at slot 4p and makes m-1-p hops from the last
 * position towards the front: at step s it fires the rotation on
 * (last-1-s, last-s) and then swaps the same pair. Starting from wires in
 * increasing order, every pair (lower wire -> higher wire) fires exactly
 * once, each pair fires only after all pairs controlled by its target, and
 * the line ends reversed. 4m-6 slots for m >= 2.
 */
Network pipeline_network(Qubit first, std::size_t m) {
  if (m < 2) {
    return {};
  }
  Network net(4 * (m - 2) + 2);
  const Qubit last = first + static_cast<Qubit>(m) - 1;
  for (std::size_t p = 0; p + 1 < m; ++p) {
    for (std::size_t s = 0; s + 1 + p < m; ++s) {
      const Qubit pos = last - 1 - static_cast<Qubit>(s);
      net[4 * p + 2 * s].push_back({false, pos});
      net[4 * p + 2 * s + 1].push_back({true, pos});
    }
  }
  return net;
}

Network odd_even_network(std::vector<Qubit> order) {
  Network net;
  const std::size_t n = order.size();
  for (std::size_t round = 0; !std::is_sorted(order.begin(), order.end()); ++round) {
    std::vector<LineOp> layer;
    for (std::size_t i = round % 2; i + 1 < n; i += 2) {
      if (order[i] > order[i + 1]) {
        std::swap(order[i], order[i + 1]);
        layer.push_back({true, static_cast<Qubit>(i)});
      }
    }
    if (!layer.empty()) {
      net.push_back(std::move(layer));
    }
  }
  return net;
}

/// Rotations of one routing group, keyed by logical (control, target).
class AngleBook {
public:
  AngleBook(const Circuit& c, std::initializer_list<SectionLabel> labels) {
    for (const SectionLabel label : labels) {
      for (const Gate& g : c.section_gates(label)) {
        if (g.kind != GateKind::crx) {
          throw RouteError("line routing accepts only crx gates");
        }
        if (!entries_.emplace(std::pair{g.control, g.target}, g.angle).second) {
          throw RouteError("duplicate rotation pair in section " +
                           std::string(to_string(label)));
        }
      }
    }
  }

  std::optional<DyadicAngle> take(Qubit control, Qubit target) {
    const auto it = entries_.find({control, target});
    if (it == entries_.end()) {
      return std::nullopt;
    }
    const DyadicAngle angle = it->second;
    entries_.erase(it);
    return angle;
  }

  [[nodiscard]] bool exhausted() const noexcept { return entries_.empty(); }

private:
  std::map<std::pair<Qubit, Qubit>, DyadicAngle> entries_;
};

class LineRouter {
public:
  explicit LineRouter(std::size_t n)
      : n_(n), layout_(Permutation::identity(n)) {
    trace_.snapshots.push_back({0, layout_});
  }

  void play(const std::string& label, const Network& net, bool backwards,
            AngleBook* book) {
    const std::size_t first_layer = depth();
    const auto emit = [&](const std::vector<LineOp>& ops) {
      std::vector<Gate> layer;
      for (const LineOp& op : ops) {
        if (op.swap) {
          layer.push_back(Gate::swap(op.pos, op.pos + 1));
        } else if (book != nullptr) {
          if (const auto angle = book->take(layout_[op.pos], layout_[op.pos + 1])) {
            layer.push_back(Gate::crx(*angle, op.pos, op.pos + 1));
          }
        }
      }
      push_layer(layer);
    };
    if (backwards) {
      std::for_each(net.rbegin(), net.rend(), emit);
    } else {
      std::for_each(net.begin(), net.end(), emit);
    }
    groups_.push_back({label, first_layer, depth() - first_layer});
  }

  void restore() {
    const auto mapping = layout_.mapping();
    play("restore", odd_even_network({mapping.begin(), mapping.end()}), false,
         nullptr);
  }

  RoutedCircuit finish() && {
    RoutedCircuit out;
    out.circuit = Circuit(n_, std::move(gates_));
    out.layer_offsets = std::move(offsets_);
    out.groups = std::move(groups_);
    out.trace = std::move(trace_);
    out.final_layout = layout_;
    return out;
  }

private:
  [[nodiscard]] std::size_t depth() const noexcept { return offsets_.size() - 1; }

  void push_layer(const std::vector<Gate>& layer) {
    if (layer.empty()) {
      return;
    }
    for (const Gate& g : layer) {
      gates_.push_back(g);
      if (g.kind == GateKind::swap) {
        layout_.swap_positions(g.control, g.target);
      }
    }
    offsets_.push_back(gates_.size());
    trace_.snapshots.push_back({depth(), layout_});
  }

  std::size_t n_;
  Permutation layout_;
  std::vector<Gate> gates_;
  std::vector<std::size_t> offsets_{0};
  std::vector<RoutedGroup> groups_;
  LayoutTrace trace_;
};

using PairKey = std::tuple<std::size_t, Qubit, Qubit>;

std::size_t group_of(SectionLabel label) noexcept {
  switch (label) {
  case SectionLabel::c1:
  case SectionLabel::c2:
    return 0;
  case SectionLabel::c3:
    return 1;
  case SectionLabel::c4:
  case SectionLabel::c5:
    return 2;
  case SectionLabel::c6:
    return 3;
  }
  return 0;
}

// Every non-commuting pair of the input must keep its relative order in the
// routed sequence, otherwise the reordering changed the operator.
void check_order_preserved(const Circuit& input, const RoutedCircuit& routed) {
  std::map<PairKey, std::size_t> routed_index;
  Permutation layout = Permutation::identity(input.n_qubits());
  std::size_t group = 0;
  std::size_t sequence = 0;
  for (const RoutedGroup& rg : routed.groups) {
    const std::size_t begin = routed.layer_offsets[rg.first_layer];
    const std::size_t end = routed.layer_offsets[rg.first_layer + rg.depth];
    for (std::size_t i = begin; i < end; ++i) {
      const Gate& g = routed.circuit[i];
      if (g.kind == GateKind::swap) {
        layout.swap_positions(g.control, g.target);
      } else {
        routed_index[{group, layout[g.control], layout[g.target]}] = sequence++;
      }
    }
    if (rg.label != "restore") {
      ++group;
    }
  }

  std::vector<std::size_t> input_group(input.size());
  for (const Section& s : input.sections()) {
    for (std::size_t i = s.begin; i < s.end; ++i) {
      input_group[i] = group_of(s.label);
    }
  }
  std::vector<std::size_t> index(input.size());
  for (std::size_t i = 0; i < input.size(); ++i) {
    index[i] = routed_index.at({input_group[i], input[i].control, input[i].target});
  }

  // All gates are CRX here, so on each wire two gates fail to commute exactly
  // when the wire is control of one and target of the other. The wire's gate
  // sequence splits into runs of equal role; each run must come entirely
  // after the previous run in the routed order.
  struct WireRuns {
    bool as_target = false;
    std::size_t prev_max = 0;
    bool has_prev = false;
    std::size_t cur_min = std::numeric_limits<std::size_t>::max();
    std::size_t cur_max = 0;
    bool started = false;
  };
  std::vector<WireRuns> wires(input.n_qubits());
  for (std::size_t i = 0; i < input.size(); ++i) {
    const Gate& g = input[i];
    for (const Qubit q : g.qubits()) {
      WireRuns& w = wires[q];
      const bool as_target = q == g.target;
      if (w.started && as_target != w.as_target) {
        w.prev_max = w.cur_max;
        w.has_prev = true;
        w.cur_min = std::numeric_limits<std::size_t>::max();
        w.cur_max = 0;
      }
      w.started = true;
      w.as_target = as_target;
      w.cur_min = std::min(w.cur_min, index[i]);
      w.cur_max = std::max(w.cur_max, index[i]);
      if (w.has_prev && w.prev_max > w.cur_min) {
        throw RouteError("circuit order is incompatible with line routing");
      }
    }
  }
}

} // namespace

RoutedCircuit route_circuit(const Circuit& circuit) {
  const std::size_t n = circuit.n_qubits();
  if (n < 3) {
    throw RouteError("line routing needs n >= 3");
  }
  if (!circuit.has_sections()) {
    throw RouteError("line routing needs a circuit with C1..C6 section tags");
  }
  if (circuit.has_basis_layer()) {
    throw RouteError("line routing does not accept a basis layer");
  }

  AngleBook g12(circuit, {SectionLabel::c1, SectionLabel::c2});
  AngleBook g3(circuit, {SectionLabel::c3});
  AngleBook g45(circuit, {SectionLabel::c4, SectionLabel::c5});
  AngleBook g6(circuit, {SectionLabel::c6});

  LineRouter router(n);
  router.play("C1+C2", pipeline_network(0, n), false, &g12);
  router.play("C3", pipeline_network(0, n - 1), true, &g3);
  router.restore();
  router.play("C4+C5", pipeline_network(0, n - 1), false, &g45);
  router.play("C6", pipeline_network(0, n - 2), true, &g6);
  router.restore();

  if (!g12.exhausted() || !g3.exhausted() || !g45.exhausted() || !g6.exhausted()) {
    throw RouteError("circuit contains rotations outside its section's pair set");
  }
  RoutedCircuit routed = std::move(router).finish();
  validate_routed(routed);

  check_order_preserved(circuit, routed);
  return routed;
}

RoutedCircuit route_lnn(std::size_t n) {
  if (n < 3) {
    throw std::invalid_argument("line routing needs n >= 3");
  }
  return route_circuit(synth_toffoli(n));
}

Circuit restore_permutation(const Permutation& p) {
  Circuit out(std::max<std::size_t>(p.size(), 1));
  const auto mapping = p.mapping();
  for (const auto& layer : odd_even_network({mapping.begin(), mapping.end()})) {
    for (const LineOp& op : layer) {
      out.append(Gate::swap(op.pos, op.pos + 1));
    }
  }
  return out;
}

RoutedMetrics routed_metrics(const RoutedCircuit& routed) {
  RoutedMetrics m;
  m.depth = routed.depth();
  m.crx_count = count_kind(routed.circuit, GateKind::crx);
  m.swap_count = count_kind(routed.circuit, GateKind::swap);
  for (std::size_t k = 0; k < routed.depth(); ++k) {
    for (std::size_t i = routed.layer_offsets[k]; i < routed.layer_offsets[k + 1]; ++i) {
      if (routed.circuit[i].kind == GateKind::swap) {
        ++m.swap_layers;
        break;
      }
    }
  }
  for (const RoutedGroup& g : routed.groups) {
    m.per_group_depths.emplace_back(g.label, g.depth);
  }
  return m;
}

void validate_routed(const RoutedCircuit& routed) {
  const std::size_t n = routed.circuit.n_qubits();
  if (routed.layer_offsets.empty() || routed.layer_offsets.front() != 0 ||
      routed.layer_offsets.back() != routed.circuit.size()) {
    throw std::logic_error("routed layer offsets do not cover the circuit");
  }
  if (routed.trace.snapshots.size() != routed.depth() + 1) {
    throw std::logic_error("trace needs one snapshot per layer plus the initial one");
  }
  Permutation layout = Permutation::identity(n);
  if (routed.trace.snapshots.front().layout != layout) {
    throw std::logic_error("trace does not start at the identity layout");
  }
  for (std::size_t k = 0; k < routed.depth(); ++k) {
    std::vector<bool> used(n, false);
    for (std::size_t i = routed.layer_offsets[k]; i < routed.layer_offsets[k + 1]; ++i) {
      const Gate& g = routed.circuit[i];
      const Qubit lo = std::min(g.control, g.target);
      const Qubit hi = std::max(g.control, g.target);
      if (hi - lo != 1) {
        throw std::logic_error("routed gate acts on non-adjacent positions");
      }
      if (used[lo] || used[hi]) {
        throw std::logic_error("routed layer overlaps on a position");
      }
      used[lo] = used[hi] = true;
      if (g.kind == GateKind::swap) {
        layout.swap_positions(lo, hi);
      }
    }
    const LayoutSnapshot& snap = routed.trace.snapshots[k + 1];
    if (snap.layer != k + 1 || snap.layout != layout) {
      throw std::logic_error("trace snapshot disagrees with the layer's swaps");
    }
  }
  if (!layout.is_identity() || routed.final_layout != layout) {
    throw std::logic_error("routed circuit does not restore the identity layout");
  }
}

} // namespace tforge
