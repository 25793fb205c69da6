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
#include <cstdint>

namespace tforge {

enum class BaselineKind : std::uint8_t { barenco_recursive, serialized_paper };

/// Gate count grows like 3^n, so the full expansion is capped here.
inline constexpr std::size_t kBarencoMaxQubits = 12;

/**
 * Barenco-style n-qubit Toffoli with an exact X target, fully expanded into
 * controlled roots of NOT (CPRX gates).
 *
 * C^{m}V_d with V_d = PRx(pi/2^d) splits into
 *   V_{d+1} on (last control -> target), C^{m-1}X onto the last control,
 *   V_{d+1}^dagger, the same C^{m-1}X, then C^{m-1}V_{d+1} from the
 *   remaining controls,
 * and every inner piece is expanded by the same rule. Requires
 * 2 <= n <= kBarencoMaxQubits.
 */
Circuit barenco_toffoli(std::size_t n);

/// Gate count of barenco_toffoli(n): T(2) = 1, T(n) = 2 + 3 T(n-1).
std::size_t barenco_gate_count(std::size_t n);

/// Depth of the flat construction run one gate per step: 2n^2 - 6n + 5.
std::size_t serialized_depth(std::size_t n);

} // namespace tforge
