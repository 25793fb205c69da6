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

#include "tforge/baseline.hpp"

#include "tforge/synth.hpp"

#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tforge {

namespace {

// Appends C^{|controls|} PRx(pi / 2^root) onto target.
void controlled_root(std::span<const Qubit> controls, Qubit target,
                     std::uint32_t root, std::vector<Gate>& out) {
  if (controls.size() == 1) {
    out.push_back(Gate::cprx(DyadicAngle(1, root), controls[0], target));
    return;
  }
  const Qubit last = controls.back();
  const auto rest = controls.first(controls.size() - 1);
  out.push_back(Gate::cprx(DyadicAngle(1, root + 1), last, target));
  controlled_root(rest, last, 0, out);
  out.push_back(Gate::cprx(DyadicAngle(-1, root + 1), last, target));
  controlled_root(rest, last, 0, out);
  controlled_root(rest, target, root + 1, out);
}

} // namespace

Circuit barenco_toffoli(std::size_t n) {
  if (n < 2 || n > kBarencoMaxQubits) {
    throw std::invalid_argument("barenco construction needs 2 <= n <= " +
                                std::to_string(kBarencoMaxQubits));
  }
  std::vector<Qubit> controls(n - 1);
  std::iota(controls.begin(), controls.end(), Qubit{0});
  std::vector<Gate> gates;
  gates.reserve(barenco_gate_count(n));
  controlled_root(controls, static_cast<Qubit>(n - 1), 0, gates);
  return Circuit(n, std::move(gates));
}

std::size_t barenco_gate_count(std::size_t n) {
  std::size_t count = 1;
  for (std::size_t m = 3; m <= n; ++m) {
    count = 2 + 3 * count;
  }
  return count;
}

std::size_t serialized_depth(std::size_t n) {
  if (n < 2) {
    throw std::invalid_argument("n must be >= 2");
  }
  return toffoli_gate_count(n);
}

} // namespace tforge
