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

#include <cstddef>
#include <random>
#include <vector>

namespace tforge {

/**
 * Conservative commutation test.
 *
 * True iff the gates have disjoint support, or both are rotations with the
 * same control and different targets, or both are CRX with the same target,
 * or both are CPRX with the same target. Everything else is reported as
 * non-commuting.
 */
bool commutes(const Gate& g, const Gate& h) noexcept;

/**
 * Parallel layers of gate indices into the scheduled circuit.
 *
 * group_barriers holds the layer index at which each group after the first
 * begins; groups never share a layer.
 */
struct Schedule {
  std::vector<std::vector<std::size_t>> layers;
  std::vector<std::size_t> group_barriers;

  [[nodiscard]] std::size_t depth() const noexcept { return layers.size(); }
  /// One entry per group, in order.
  [[nodiscard]] std::vector<std::size_t> group_depths() const;
};

/**
 * Layers a circuit group by group.
 *
 * Sectioned circuits are split into the groups {C1+C2 | C3 | C4+C5 | C6};
 * anything else forms a single group. Inside a group the gates are first
 * regrouped so that gates sharing a target run consecutively (blocks ordered
 * by their non-commuting dependencies, ties broken by first appearance),
 * then placed as early as their qubits allow. If the blocks cannot be
 * ordered, the group falls back to critical-path list scheduling over the
 * commutation dependency graph.
 *
 * For synth_toffoli(n) with n >= 5 the group depths are
 * (2n-3, 2n-5, 2n-5, 2n-7), total 8n-20.
 */
Schedule asap_schedule(const Circuit& circuit);

/// Number of non-empty layers.
std::size_t depth(const Schedule& schedule);

/// Throws std::logic_error if some layer holds two gates on one qubit or the
/// schedule does not place every gate exactly once.
void validate_schedule(const Circuit& circuit, const Schedule& schedule);

/// Gates in layer order; within each layer in stored order.
Circuit flatten(const Circuit& circuit, const Schedule& schedule);

/// Gates in layer order with each layer shuffled by `rng`.
Circuit flatten_shuffled(const Circuit& circuit, const Schedule& schedule,
                         std::mt19937_64& rng);

} // namespace tforge
