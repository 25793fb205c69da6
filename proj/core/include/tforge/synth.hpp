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
#include <optional>

namespace tforge {

/**
 * Ancilla-free n-qubit Toffoli C^{n-1}Rx(pi) over controlled x-rotations.
 *
 * Controls are qubits 0..n-2, the target is qubit n-1. The result carries
 * section tags C1..C6 (all six present, some possibly empty) and has
 * exactly 2n^2 - 6n + 5 gates. Within a column of gates sharing a control,
 * targets are emitted in increasing index.
 *
 * Throws std::invalid_argument if n < 2.
 */
Circuit synth_toffoli(std::size_t n);

/**
 * Same operator as synth_toffoli(n), built by expanding the recursive
 * identity top-down: the rotations onto the target, the cascade of smaller
 * Toffolis, the compensating rotations, then the cascade undone. Gate count
 * grows exponentially; no section tags.
 */
Circuit synth_recursive(std::size_t n);

/// Drops every rotation whose canonical angle has denom_exp > kmax and
/// recomputes section ranges.
Circuit truncate_rotations(const Circuit& circuit, std::uint32_t kmax);

/// synth_toffoli(n) without rotations finer than pi/2^kmax.
Circuit synth_approx(std::size_t n, std::uint32_t kmax);

/// Basis-layer exponent used by basis_conjugate: diag(1, -i) is applied to
/// every wire first and diag(1, i) last.
inline constexpr std::uint8_t kHatBasisExponent = 3;

/**
 * Wraps `circuit` in a diagonal single-qubit layer on every wire and its
 * adjoint afterwards (recorded as the circuit's basis layer). For a Toffoli
 * construction the result maps each computational basis state |x> to the
 * Toffoli image of x times a unit-modulus phase.
 */
Circuit basis_conjugate(const Circuit& circuit);

/// 2n^2 - 6n + 5.
std::size_t toffoli_gate_count(std::size_t n);

enum class SynthVariant : std::uint8_t { flat, recursive };

struct SynthConfig {
  std::size_t n = 3;
  SynthVariant variant = SynthVariant::flat;
  std::optional<std::uint32_t> approx_kmax;
  bool basis_wrap = false;
};

/// Dispatches on a config. Throws std::invalid_argument on n < 2 or
/// approx_kmax == 0.
Circuit synthesize(const SynthConfig& config);

} // namespace tforge
