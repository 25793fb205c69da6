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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

namespace tforge {

using Complex = std::complex<double>;

/// Raised when a request exceeds the configured simulation width.
class SimulationLimitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Width caps for the dense oracle. The matrix cap bounds 4^n memory, the
/// state cap bounds 2^n.
struct SimLimits {
  std::size_t max_matrix_qubits = 13;
  std::size_t max_state_qubits = 20;
};

/*
 * Bit convention for every dense object here: qubit q is bit (n - 1 - q) of
 * the basis index, so qubit 0 is the most significant bit and |110> is
 * index 6 for n = 3.
 */

class StateVector {
public:
  explicit StateVector(std::size_t n_qubits);
  StateVector(std::size_t n_qubits, std::vector<Complex> amplitudes);

  static StateVector basis(std::size_t n_qubits, std::uint64_t index);
  /// Gaussian amplitudes, normalized.
  static StateVector random(std::size_t n_qubits, std::mt19937_64& rng);

  [[nodiscard]] std::size_t n_qubits() const noexcept { return n_qubits_; }
  [[nodiscard]] std::size_t dim() const noexcept { return amps_.size(); }
  [[nodiscard]] Complex& operator[](std::size_t i) { return amps_[i]; }
  [[nodiscard]] const Complex& operator[](std::size_t i) const { return amps_[i]; }
  [[nodiscard]] std::span<Complex> amplitudes() noexcept { return amps_; }
  [[nodiscard]] std::span<const Complex> amplitudes() const noexcept { return amps_; }

  [[nodiscard]] double norm() const noexcept;
  void normalize();

private:
  std::size_t n_qubits_;
  std::vector<Complex> amps_;
};

/// Dense 2^n x 2^n matrix, stored column-major.
class DenseUnitary {
public:
  explicit DenseUnitary(std::size_t n_qubits);  // zero matrix
  static DenseUnitary identity(std::size_t n_qubits);

  [[nodiscard]] std::size_t n_qubits() const noexcept { return n_qubits_; }
  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
  [[nodiscard]] Complex& operator()(std::size_t row, std::size_t col) {
    return entries_[col * dim_ + row];
  }
  [[nodiscard]] const Complex& operator()(std::size_t row, std::size_t col) const {
    return entries_[col * dim_ + row];
  }
  [[nodiscard]] std::span<Complex> entries() noexcept { return entries_; }
  [[nodiscard]] std::span<const Complex> entries() const noexcept { return entries_; }

  [[nodiscard]] DenseUnitary adjoint() const;
  friend DenseUnitary operator*(const DenseUnitary& a, const DenseUnitary& b);

  /// max |(U U^dagger - I)_{ij}|.
  [[nodiscard]] double unitarity_deviation() const;

private:
  std::size_t n_qubits_;
  std::size_t dim_;
  std::vector<Complex> entries_;
};

/// C^{n-1}Rx(pi): identity except Rx(pi) = [[0,-i],[-i,0]] on |1..10>, |1..11>.
DenseUnitary reference_unitary(std::size_t n, const SimLimits& limits = {});

/// The exact X-target Toffoli (a permutation matrix).
DenseUnitary toffoli_x_unitary(std::size_t n, const SimLimits& limits = {});

/// Basis index of the Toffoli image of x: the last bit flips iff all other
/// bits are set.
std::uint64_t toffoli_image(std::uint64_t x, std::size_t n) noexcept;

/// Gate matrices left-multiplied in circuit order, with the basis layer D
/// applied first and D^dagger last.
DenseUnitary unitary_of(const Circuit& circuit, const SimLimits& limits = {});

/// Statevector simulation; equals unitary_of(circuit) * state.
StateVector apply(const Circuit& circuit, StateVector state,
                  const SimLimits& limits = {});

/// Action of reference_unitary(n), or of its adjoint, without the matrix.
StateVector reference_apply(StateVector state, bool adjoint = false);

/// max |u - phi v| over all entries with phi the unit phase aligning the
/// first entry of v of modulus > 0.5/sqrt(dim) with u. Throws
/// std::invalid_argument on a dimension mismatch.
double global_phase_deviation(const DenseUnitary& u, const DenseUnitary& v);

bool equiv_global_phase(const DenseUnitary& u, const DenseUnitary& v, double tol);

/// max |u - v| over all entries.
double max_entry_deviation(const DenseUnitary& u, const DenseUnitary& v);
double max_entry_deviation(const StateVector& u, const StateVector& v);

/**
 * Spectral norm of unitary_of(c_approx) - reference_unitary(n).
 *
 * Power iteration on D^dagger D, driven by statevector applications so the
 * difference matrix is never formed. Converges to relative tolerance 1e-6;
 * throws std::runtime_error after 10^4 iterations without convergence.
 */
double op_norm_error(const Circuit& c_approx, std::size_t n,
                     const SimLimits& limits = {});

/// |Tr(R^dagger U)| / 2^n against the reference; 1 for an exact circuit.
double trace_fidelity(const Circuit& circuit, const SimLimits& limits = {});

} // namespace tforge
