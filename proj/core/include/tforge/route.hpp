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

#pragma once

#include "tforge/circuit.hpp"
#include "tforge/permutation.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace tforge {

/// Input the line router cannot handle (missing or inconsistent sections).
class RouteError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Layout after a given number of layers; layer 0 is the initial layout.
struct LayoutSnapshot {
  std::size_t layer = 0;
  Permutation layout;
};

struct LayoutTrace {
  std::vector<LayoutSnapshot> snapshots;
};

/// A contiguous run of routed layers with its origin ("C1+C2", "C3",
/// "restore", "C4+C5", "C6", "restore").
struct RoutedGroup {
  std::string label;
  std::size_t first_layer = 0;
  std::size_t depth = 0;
};

/**
 * A circuit on line positions. Every gate acts on adjacent positions, and
 * the gates of layer k are circuit[layer_offsets[k] .. layer_offsets[k+1]).
 */
struct RoutedCircuit {
  Circuit circuit{1};
  std::vector<std::size_t> layer_offsets{0};
  std::vector<RoutedGroup> groups;
  LayoutTrace trace;
  Permutation final_layout;

  [[nodiscard]] std::size_t depth() const noexcept { return layer_offsets.size() - 1; }
};

/**
 * Routes synth_toffoli(n) onto a line of n qubits.
 *
 * C1+C2 runs as staggered SWAP pipelines (each carries one wire from the end
 * of the line to the front, firing the rotation that targets it before each
 * hop), reversing the line in 4n-6 layers. C3 replays the same pipeline
 * pattern over wires 2..n backwards in time (4n-10 layers). An odd-even
 * transposition network restores the identity layout, C4+C5 and C6 repeat
 * the pattern on the first n-1 wires (4n-10 and 4n-14 layers), and a second
 * restore network returns to the identity. Requires n >= 3.
 */
RoutedCircuit route_lnn(std::size_t n);

/**
 * Routes a sectioned circuit with the structure of synth_toffoli or
 * synth_approx (same rotation pairs per section, possibly with some
 * rotations dropped; angles are taken from the input). Throws RouteError if
 * the circuit has no sections, carries a basis layer, or some rotation does
 * not belong to its section's pair set.
 */
RoutedCircuit route_circuit(const Circuit& circuit);

/**
 * Adjacent-SWAP network, built by odd-even transposition sort, that takes
 * layout `p` to the identity layout. Depth <= n, size = number of
 * inversions of p.
 */
Circuit restore_permutation(const Permutation& p);

struct RoutedMetrics {
  std::size_t depth = 0;
  std::size_t crx_count = 0;
  std::size_t swap_count = 0;
  /// Layers that contain at least one SWAP.
  std::size_t swap_layers = 0;
  std::vector<std::pair<std::string, std::size_t>> per_group_depths;
};

RoutedMetrics routed_metrics(const RoutedCircuit& routed);

/// Throws std::logic_error unless every gate is adjacent, the trace is
/// consistent with the SWAPs of each layer, and the final layout is the
/// identity.
void validate_routed(const RoutedCircuit& routed);

} // namespace tforge
