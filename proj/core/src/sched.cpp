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

#include "tforge/sched.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

namespace tforge {

namespace {

constexpr std::size_t kGroupCount = 4;

std::size_t group_of(SectionLabel label) {
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

std::vector<std::vector<std::size_t>> split_groups(const Circuit& c) {
  if (!c.has_sections()) {
    std::vector<std::size_t> all(c.size());
    for (std::size_t i = 0; i < all.size(); ++i) {
      all[i] = i;
    }
    return {std::move(all)};
  }
  std::vector<std::vector<std::size_t>> groups(kGroupCount);
  for (const Section& s : c.sections()) {
    auto& g = groups[group_of(s.label)];
    for (std::size_t i = s.begin; i < s.end; ++i) {
      g.push_back(i);
    }
  }
  return groups;
}

/// Local gates of one group plus, for each, the earlier local gates it must
/// follow.
struct GroupGraph {
  std::vector<Gate> gates;
  std::vector<std::vector<std::size_t>> preds;
};

// Role a gate plays on one of its wires. Two gates sharing a wire commute
// there iff their roles match and neither is a swap.
int wire_role(const Gate& g, Qubit q) {
  if (g.kind == GateKind::swap) {
    return 0;
  }
  if (q == g.control) {
    return 1;
  }
  return g.kind == GateKind::crx ? 2 : 3;
}

// Per wire, gates form runs of equal role. A gate depends on the latest run
// of a different role; earlier conflicts follow transitively.
GroupGraph build_graph(const Circuit& c, const std::vector<std::size_t>& members) {
  struct Run {
    int role = 0;
    std::vector<std::size_t> gates;
  };
  struct Wire {
    Run last;
    Run before;
  };
  GroupGraph graph;
  graph.gates.reserve(members.size());
  for (const std::size_t idx : members) {
    graph.gates.push_back(c[idx]);
  }
  graph.preds.resize(members.size());
  std::vector<Wire> wires(c.n_qubits());
  std::vector<std::size_t> marked(members.size(), std::numeric_limits<std::size_t>::max());
  for (std::size_t i = 0; i < graph.gates.size(); ++i) {
    const Gate& g = graph.gates[i];
    for (const Qubit q : g.qubits()) {
      Wire& w = wires[q];
      const int role = wire_role(g, q);
      const bool joins = role != 0 && !w.last.gates.empty() && w.last.role == role;
      const Run& dep = joins ? w.before : w.last;
      for (const std::size_t h : dep.gates) {
        if (marked[h] != i) {
          marked[h] = i;
          graph.preds[i].push_back(h);
        }
      }
      if (!joins) {
        w.before = std::move(w.last);
        w.last = Run{role, {}};
      }
      w.last.gates.push_back(i);
    }
  }
  return graph;
}

// Order that keeps gates with a common target consecutive, or nullopt when
// the target blocks cannot be ordered consistently with the dependencies.
std::optional<std::vector<std::size_t>> target_block_order(const GroupGraph& graph) {
  struct Block {
    std::vector<std::size_t> gates;
    std::vector<Qubit> after;
  };
  std::map<Qubit, Block> blocks;
  for (std::size_t i = 0; i < graph.gates.size(); ++i) {
    const Gate& g = graph.gates[i];
    if (!g.is_rotation()) {
      return std::nullopt;
    }
    blocks[g.target].gates.push_back(i);
  }
  for (std::size_t i = 0; i < graph.gates.size(); ++i) {
    const Qubit t = graph.gates[i].target;
    for (const std::size_t h : graph.preds[i]) {
      const Qubit th = graph.gates[h].target;
      if (th != t) {
        blocks[t].after.push_back(th);
      }
    }
  }

  std::vector<std::size_t> order;
  order.reserve(graph.gates.size());
  std::map<Qubit, bool> placed;
  while (placed.size() < blocks.size()) {
    const Block* best = nullptr;
    Qubit best_target = 0;
    for (const auto& [target, block] : blocks) {
      if (placed.contains(target)) {
        continue;
      }
      const bool ready = std::all_of(block.after.begin(), block.after.end(),
                                     [&](Qubit t) { return placed.contains(t); });
      if (ready && (best == nullptr || block.gates.front() < best->gates.front())) {
        best = &block;
        best_target = target;
      }
    }
    if (best == nullptr) {
      return std::nullopt;
    }
    placed[best_target] = true;
    order.insert(order.end(), best->gates.begin(), best->gates.end());
  }
  return order;
}

std::vector<std::vector<std::size_t>> layer_in_order(const GroupGraph& graph,
                                                     const std::vector<std::size_t>& order,
                                                     std::size_t n_qubits) {
  std::vector<std::size_t> busy_until(n_qubits, 0);
  std::vector<std::vector<std::size_t>> layers;
  for (const std::size_t i : order) {
    const Gate& g = graph.gates[i];
    const std::size_t layer = std::max(busy_until[g.control], busy_until[g.target]);
    busy_until[g.control] = busy_until[g.target] = layer + 1;
    if (layers.size() <= layer) {
      layers.resize(layer + 1);
    }
    layers[layer].push_back(i);
  }
  return layers;
}

std::vector<std::vector<std::size_t>> list_schedule(const GroupGraph& graph,
                                                    std::size_t n_qubits) {
  const std::size_t m = graph.gates.size();
  std::vector<std::vector<std::size_t>> succs(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (const std::size_t h : graph.preds[i]) {
      succs[h].push_back(i);
    }
  }
  std::vector<std::size_t> chain(m, 1);
  for (std::size_t i = m; i-- > 0;) {
    for (const std::size_t s : succs[i]) {
      chain[i] = std::max(chain[i], chain[s] + 1);
    }
  }

  std::vector<std::size_t> waiting(m);
  std::vector<std::size_t> ready;
  for (std::size_t i = 0; i < m; ++i) {
    waiting[i] = graph.preds[i].size();
    if (waiting[i] == 0) {
      ready.push_back(i);
    }
  }
  const auto priority = [&](std::size_t a, std::size_t b) {
    return chain[a] != chain[b] ? chain[a] > chain[b] : a < b;
  };

  std::vector<std::vector<std::size_t>> layers;
  std::size_t scheduled = 0;
  while (scheduled < m) {
    std::sort(ready.begin(), ready.end(), priority);
    std::vector<bool> used(n_qubits, false);
    std::vector<std::size_t> layer;
    std::vector<std::size_t> rest;
    for (const std::size_t i : ready) {
      const Gate& g = graph.gates[i];
      if (used[g.control] || used[g.target]) {
        rest.push_back(i);
        continue;
      }
      used[g.control] = used[g.target] = true;
      layer.push_back(i);
    }
    for (const std::size_t i : layer) {
      for (const std::size_t s : succs[i]) {
        if (--waiting[s] == 0) {
          rest.push_back(s);
        }
      }
    }
    scheduled += layer.size();
    ready = std::move(rest);
    std::sort(layer.begin(), layer.end());
    layers.push_back(std::move(layer));
  }
  return layers;
}

} // namespace

bool commutes(const Gate& g, const Gate& h) noexcept {
  if (!g.shares_qubit(h)) {
    return true;
  }
  if (!g.is_rotation() || !h.is_rotation()) {
    return false;
  }
  if (g.control == h.control && g.target != h.target) {
    return true;
  }
  return g.target == h.target && g.kind == h.kind;
}

std::vector<std::size_t> Schedule::group_depths() const {
  std::vector<std::size_t> out;
  std::size_t begin = 0;
  for (const std::size_t barrier : group_barriers) {
    out.push_back(barrier - begin);
    begin = barrier;
  }
  out.push_back(layers.size() - begin);
  return out;
}

Schedule asap_schedule(const Circuit& circuit) {
  Schedule schedule;
  const auto groups = split_groups(circuit);
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    if (gi > 0) {
      schedule.group_barriers.push_back(schedule.layers.size());
    }
    const auto& members = groups[gi];
    const GroupGraph graph = build_graph(circuit, members);
    const auto order = target_block_order(graph);
    auto local_layers = order ? layer_in_order(graph, *order, circuit.n_qubits())
                              : list_schedule(graph, circuit.n_qubits());
    for (auto& layer : local_layers) {
      for (auto& i : layer) {
        i = members[i];
      }
      schedule.layers.push_back(std::move(layer));
    }
  }
  return schedule;
}

std::size_t depth(const Schedule& schedule) {
  return static_cast<std::size_t>(
      std::count_if(schedule.layers.begin(), schedule.layers.end(),
                    [](const auto& layer) { return !layer.empty(); }));
}

void validate_schedule(const Circuit& circuit, const Schedule& schedule) {
  std::vector<bool> seen(circuit.size(), false);
  for (const auto& layer : schedule.layers) {
    std::vector<bool> used(circuit.n_qubits(), false);
    for (const std::size_t i : layer) {
      if (i >= circuit.size() || seen[i]) {
        throw std::logic_error("schedule places a gate twice or out of range");
      }
      seen[i] = true;
      const Gate& g = circuit[i];
      if (used[g.control] || used[g.target]) {
        throw std::logic_error("layer gates overlap on a qubit");
      }
      used[g.control] = used[g.target] = true;
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw std::logic_error("schedule misses a gate");
  }
}

Circuit flatten(const Circuit& circuit, const Schedule& schedule) {
  std::vector<Gate> gates;
  gates.reserve(circuit.size());
  for (const auto& layer : schedule.layers) {
    for (const std::size_t i : layer) {
      gates.push_back(circuit[i]);
    }
  }
  const auto basis = circuit.basis_layer();
  return Circuit(circuit.n_qubits(), std::move(gates), {},
                 {basis.begin(), basis.end()});
}

Circuit flatten_shuffled(const Circuit& circuit, const Schedule& schedule,
                         std::mt19937_64& rng) {
  Schedule shuffled = schedule;
  for (auto& layer : shuffled.layers) {
    std::shuffle(layer.begin(), layer.end(), rng);
  }
  return flatten(circuit, shuffled);
}

} // namespace tforge
