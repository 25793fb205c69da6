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

#include "tforge/sim.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <utility>

namespace tforge {

namespace {

constexpr Complex kI{0.0, 1.0};

void require_width(std::size_t n, std::size_t cap, const char* what) {
  if (n > cap) {
    throw SimulationLimitError(std::string(what) + " simulation limited to " +
                               std::to_string(cap) + " qubits, got " +
                               std::to_string(n));
  }
  if (n >= 32) {
    throw SimulationLimitError("simulation width must be below 32 qubits");
  }
}

std::uint64_t qubit_mask(Qubit q, std::size_t n) {
  return std::uint64_t{1} << (n - 1 - q);
}

// Inserts a zero bit at each of the two bit positions given by masks
// lo < hi.
std::uint64_t spread(std::uint64_t k, std::uint64_t lo, std::uint64_t hi) {
  k = ((k & ~(lo - 1)) << 1) | (k & (lo - 1));
  k = ((k & ~(hi - 1)) << 1) | (k & (hi - 1));
  return k;
}

// Applies one gate to a buffer whose low n bits index the acted-on space.
// A column-major matrix is such a buffer, so the same kernel serves both
// statevectors and full unitaries.
void apply_gate(std::span<Complex> a, const Gate& g, std::size_t n) {
  const std::uint64_t cm = qubit_mask(g.control, n);
  const std::uint64_t tm = qubit_mask(g.target, n);
  const std::uint64_t lo = std::min(cm, tm);
  const std::uint64_t hi = std::max(cm, tm);
  const std::uint64_t quarter = a.size() / 4;

  if (g.kind == GateKind::swap) {
    for (std::uint64_t k = 0; k < quarter; ++k) {
      const std::uint64_t i = spread(k, lo, hi) | cm;
      std::swap(a[i], a[i ^ cm ^ tm]);
    }
    return;
  }

  const double half = 0.5 * g.angle.radians();
  const double c = std::cos(half);
  const Complex ms{0.0, -std::sin(half)};
  const Complex phase = g.kind == GateKind::cprx ? std::polar(1.0, half) : 1.0;
  for (std::uint64_t k = 0; k < quarter; ++k) {
    const std::uint64_t i = spread(k, lo, hi) | cm;
    const std::uint64_t j = i | tm;
    const Complex a0 = a[i];
    const Complex a1 = a[j];
    a[i] = phase * (c * a0 + ms * a1);
    a[j] = phase * (ms * a0 + c * a1);
  }
}

// Multiplies each amplitude by i^{+-sum_q k_q x_q}.
void apply_basis_layer(std::span<Complex> a, std::span<const std::uint8_t> exps,
                       std::size_t n, bool adjoint) {
  const std::uint64_t dim = std::uint64_t{1} << n;
  const std::array<Complex, 4> powers = {Complex{1, 0}, kI, Complex{-1, 0}, -kI};
  for (std::uint64_t i = 0; i < a.size(); ++i) {
    const std::uint64_t row = i & (dim - 1);
    unsigned total = 0;
    for (std::size_t q = 0; q < n; ++q) {
      if (row & qubit_mask(static_cast<Qubit>(q), n)) {
        total += exps[q];
      }
    }
    total %= 4;
    a[i] *= powers[adjoint ? (4 - total) % 4 : total];
  }
}

void run(const Circuit& c, std::span<Complex> buffer) {
  const std::size_t n = c.n_qubits();
  if (c.has_basis_layer()) {
    apply_basis_layer(buffer, c.basis_layer(), n, false);
  }
  for (const Gate& g : c.gates()) {
    apply_gate(buffer, g, n);
  }
  if (c.has_basis_layer()) {
    apply_basis_layer(buffer, c.basis_layer(), n, true);
  }
}

double vector_norm(std::span<const Complex> a) {
  double sum = 0.0;
  for (const Complex& z : a) {
    sum += std::norm(z);
  }
  return std::sqrt(sum);
}

} // namespace

StateVector::StateVector(std::size_t n_qubits)
    : n_qubits_(n_qubits), amps_(std::size_t{1} << n_qubits) {
  amps_[0] = 1.0;
}

StateVector::StateVector(std::size_t n_qubits, std::vector<Complex> amplitudes)
    : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
  if (amps_.size() != (std::size_t{1} << n_qubits)) {
    throw std::invalid_argument("statevector length is not 2^n");
  }
}

StateVector StateVector::basis(std::size_t n_qubits, std::uint64_t index) {
  StateVector s(n_qubits);
  if (index >= s.dim()) {
    throw std::invalid_argument("basis index out of range");
  }
  s.amps_[0] = 0.0;
  s.amps_[index] = 1.0;
  return s;
}

StateVector StateVector::random(std::size_t n_qubits, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  StateVector s(n_qubits);
  for (auto& z : s.amps_) {
    z = {normal(rng), normal(rng)};
  }
  s.normalize();
  return s;
}

double StateVector::norm() const noexcept { return vector_norm(amps_); }

void StateVector::normalize() {
  const double nrm = norm();
  if (nrm == 0.0) {
    throw std::domain_error("cannot normalize a zero vector");
  }
  for (auto& z : amps_) {
    z /= nrm;
  }
}

DenseUnitary::DenseUnitary(std::size_t n_qubits)
    : n_qubits_(n_qubits), dim_(std::size_t{1} << n_qubits),
      entries_(dim_ * dim_) {}

DenseUnitary DenseUnitary::identity(std::size_t n_qubits) {
  DenseUnitary u(n_qubits);
  for (std::size_t i = 0; i < u.dim_; ++i) {
    u(i, i) = 1.0;
  }
  return u;
}

DenseUnitary DenseUnitary::adjoint() const {
  DenseUnitary out(n_qubits_);
  for (std::size_t c = 0; c < dim_; ++c) {
    for (std::size_t r = 0; r < dim_; ++r) {
      out(c, r) = std::conj((*this)(r, c));
    }
  }
  return out;
}

DenseUnitary operator*(const DenseUnitary& a, const DenseUnitary& b) {
  if (a.dim_ != b.dim_) {
    throw std::invalid_argument("matrix dimension mismatch");
  }
  DenseUnitary out(a.n_qubits_);
  const std::size_t d = a.dim_;
  for (std::size_t c = 0; c < d; ++c) {
    for (std::size_t k = 0; k < d; ++k) {
      const Complex bkc = b(k, c);
      if (bkc == Complex{}) {
        continue;
      }
      for (std::size_t r = 0; r < d; ++r) {
        out(r, c) += a(r, k) * bkc;
      }
    }
  }
  return out;
}

double DenseUnitary::unitarity_deviation() const {
  const DenseUnitary prod = (*this) * adjoint();
  double worst = 0.0;
  for (std::size_t c = 0; c < dim_; ++c) {
    for (std::size_t r = 0; r < dim_; ++r) {
      const Complex expected = r == c ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(prod(r, c) - expected));
    }
  }
  return worst;
}

DenseUnitary reference_unitary(std::size_t n, const SimLimits& limits) {
  if (n < 2) {
    throw std::invalid_argument("n must be >= 2");
  }
  require_width(n, limits.max_matrix_qubits, "matrix");
  DenseUnitary u = DenseUnitary::identity(n);
  const std::size_t d = u.dim();
  u(d - 2, d - 2) = 0.0;
  u(d - 1, d - 1) = 0.0;
  u(d - 2, d - 1) = -kI;
  u(d - 1, d - 2) = -kI;
  return u;
}

DenseUnitary toffoli_x_unitary(std::size_t n, const SimLimits& limits) {
  if (n < 2) {
    throw std::invalid_argument("n must be >= 2");
  }
  require_width(n, limits.max_matrix_qubits, "matrix");
  DenseUnitary u(n);
  for (std::uint64_t x = 0; x < u.dim(); ++x) {
    u(toffoli_image(x, n), x) = 1.0;
  }
  return u;
}

std::uint64_t toffoli_image(std::uint64_t x, std::size_t n) noexcept {
  const std::uint64_t controls = ((std::uint64_t{1} << n) - 1) & ~std::uint64_t{1};
  return (x & controls) == controls ? x ^ 1 : x;
}

DenseUnitary unitary_of(const Circuit& circuit, const SimLimits& limits) {
  require_width(circuit.n_qubits(), limits.max_matrix_qubits, "matrix");
  DenseUnitary u = DenseUnitary::identity(circuit.n_qubits());
  run(circuit, u.entries());
  return u;
}

StateVector apply(const Circuit& circuit, StateVector state,
                  const SimLimits& limits) {
  if (state.n_qubits() != circuit.n_qubits()) {
    throw std::invalid_argument("statevector width does not match circuit");
  }
  require_width(circuit.n_qubits(), limits.max_state_qubits, "statevector");
  run(circuit, state.amplitudes());
  return state;
}

StateVector reference_apply(StateVector state, bool adjoint) {
  const std::size_t d = state.dim();
  const Complex factor = adjoint ? kI : -kI;
  const Complex a0 = state[d - 2];
  const Complex a1 = state[d - 1];
  state[d - 2] = factor * a1;
  state[d - 1] = factor * a0;
  return state;
}

double global_phase_deviation(const DenseUnitary& u, const DenseUnitary& v) {
  if (u.dim() != v.dim()) {
    throw std::invalid_argument("matrix dimension mismatch");
  }
  const auto ue = u.entries();
  const auto ve = v.entries();
  const double threshold = 0.5 / std::sqrt(static_cast<double>(u.dim()));
  Complex phase = 1.0;
  for (std::size_t k = 0; k < ve.size(); ++k) {
    if (std::abs(ve[k]) > threshold) {
      const Complex ratio = ue[k] / ve[k];
      if (std::abs(ratio) > 0.0) {
        phase = ratio / std::abs(ratio);
      }
      break;
    }
  }
  double worst = 0.0;
  for (std::size_t k = 0; k < ue.size(); ++k) {
    worst = std::max(worst, std::abs(ue[k] - phase * ve[k]));
  }
  return worst;
}

bool equiv_global_phase(const DenseUnitary& u, const DenseUnitary& v, double tol) {
  return global_phase_deviation(u, v) <= tol;
}

double max_entry_deviation(const DenseUnitary& u, const DenseUnitary& v) {
  if (u.dim() != v.dim()) {
    throw std::invalid_argument("matrix dimension mismatch");
  }
  double worst = 0.0;
  for (std::size_t k = 0; k < u.entries().size(); ++k) {
    worst = std::max(worst, std::abs(u.entries()[k] - v.entries()[k]));
  }
  return worst;
}

double max_entry_deviation(const StateVector& u, const StateVector& v) {
  if (u.dim() != v.dim()) {
    throw std::invalid_argument("statevector dimension mismatch");
  }
  double worst = 0.0;
  for (std::size_t k = 0; k < u.dim(); ++k) {
    worst = std::max(worst, std::abs(u[k] - v[k]));
  }
  return worst;
}

double op_norm_error(const Circuit& c_approx, std::size_t n, const SimLimits& limits) {
  if (c_approx.n_qubits() != n) {
    throw std::invalid_argument("circuit width does not match n");
  }
  require_width(n, limits.max_state_qubits, "statevector");
  const Circuit adj = inverse(c_approx);
  const auto difference = [&](const Circuit& c, const StateVector& v, bool adjoint) {
    StateVector out = apply(c, v, limits);
    const StateVector ref = reference_apply(v, adjoint);
    for (std::size_t k = 0; k < out.dim(); ++k) {
      out[k] -= ref[k];
    }
    return out;
  };

  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  StateVector v = StateVector::random(n, rng);
  double previous = 0.0;
  constexpr int kMaxIterations = 10000;
  for (int it = 0; it < kMaxIterations; ++it) {
    StateVector w = difference(adj, difference(c_approx, v, false), true);
    const double lambda = w.norm();
    // sigma below 1e-12: the circuits agree to round-off.
    if (lambda < 1e-24) {
      return std::sqrt(lambda);
    }
    for (auto& z : w.amplitudes()) {
      z /= lambda;
    }
    v = std::move(w);
    if (it > 0 && std::abs(lambda - previous) <= 1e-6 * lambda) {
      return std::min(2.0, std::sqrt(lambda));
    }
    previous = lambda;
  }
  throw std::runtime_error("op_norm_error: power iteration did not converge");
}

double trace_fidelity(const Circuit& circuit, const SimLimits& limits) {
  const DenseUnitary u = unitary_of(circuit, limits);
  const DenseUnitary r = reference_unitary(circuit.n_qubits(), limits);
  Complex trace = 0.0;
  for (std::size_t k = 0; k < u.entries().size(); ++k) {
    trace += std::conj(r.entries()[k]) * u.entries()[k];
  }
  return std::abs(trace) / static_cast<double>(u.dim());
}

} // namespace tforge
