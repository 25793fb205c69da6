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

// One PASS/FAIL line per acceptance criterion. Expected values come from the
// Kronecker-product oracle in tests/support or from closed forms written out
// here, never from the library under test.

#include "tforge/baseline.hpp"
#include "tforge/io.hpp"
#include "tforge/route.hpp"
#include "tforge/sched.hpp"
#include "tforge/sim.hpp"
#include "tforge/synth.hpp"

#include "dense_oracle.hpp"

#include <Eigen/Eigenvalues>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

namespace {

using tforge::Circuit;
using tforge::DyadicAngle;
using tforge::Gate;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && out_.pass) {
      out_.pass = false;
      out_.detail = what;
    }
  }
  void note(const std::string& text) {
    if (out_.pass) {
      out_.detail = text;
    }
  }
  [[nodiscard]] Outcome result() const { return out_; }

 private:
  Outcome out_;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

// Closed-form action of C^{n-1}Rx(pi): only the last two amplitudes mix.
tforge::StateVector reference_action(const tforge::StateVector& s) {
  tforge::StateVector out = s;
  const std::size_t d = s.dim();
  const tforge::Complex mi(0.0, -1.0);
  out[d - 2] = mi * s[d - 1];
  out[d - 1] = mi * s[d - 2];
  return out;
}

std::uint64_t flip_target(std::uint64_t x, std::size_t n) {
  const std::uint64_t controls = ((std::uint64_t{1} << n) - 1) & ~std::uint64_t{1};
  return (x & controls) == controls ? x ^ 1 : x;
}

double spectral_distance(const oracle::Mat& u, const oracle::Mat& v) {
  const oracle::Mat d = u - v;
  Eigen::SelfAdjointEigenSolver<oracle::Mat> es(d.adjoint() * d, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

Outcome gate_count() {
  Check c;
  const auto start = Clock::now();
  for (std::size_t n = 2; n <= 128; ++n) {
    const std::size_t want = 2 * n * n - 6 * n + 5;
    c.expect(tforge::synth_toffoli(n).size() == want, "n=" + std::to_string(n));
  }
  const double t = seconds_since(start);
  c.expect(t < 1.0, fmt("runtime %.2fs", t));
  c.note("n in [2,128]" + fmt(", %.3fs", t));
  return c.result();
}

Outcome golden_three_qubit() {
  Check c;
  const auto start = Clock::now();
  const Circuit got = tforge::synth_toffoli(3);
  const std::vector<Gate> want = {
      Gate::crx(DyadicAngle(1, 1), 1, 2), Gate::crx(DyadicAngle(1, 0), 0, 1),
      Gate::crx(DyadicAngle(1, 1), 0, 2), Gate::crx(DyadicAngle(-1, 1), 1, 2),
      Gate::crx(DyadicAngle(-1, 0), 0, 1)};
  c.expect(got.size() == want.size(), "size");
  for (std::size_t i = 0; i < std::min(got.size(), want.size()); ++i) {
    c.expect(got[i] == want[i], "gate " + std::to_string(i));
  }
  const double dev = oracle::max_abs_diff(oracle::circuit_matrix(got), oracle::reference(3));
  c.expect(dev <= 1e-12, fmt("max entry %.3e", dev));
  const double lib =
      tforge::max_entry_deviation(tforge::unitary_of(got), tforge::reference_unitary(3));
  c.expect(lib <= 1e-12, fmt("library max entry %.3e", lib));
  const double t = seconds_since(start);
  c.expect(t < 1.0, fmt("runtime %.2fs", t));
  c.note(fmt("max entry deviation %.1e", dev));
  return c.result();
}

Outcome depth_formula() {
  Check c;
  const auto start = Clock::now();
  for (std::size_t n = 4; n <= 128; ++n) {
    const tforge::Schedule s = tforge::asap_schedule(tforge::synth_toffoli(n));
    c.expect(tforge::depth(s) == 8 * n - 20, "depth at n=" + std::to_string(n));
    if (n >= 5) {
      const std::vector<std::size_t> want = {2 * n - 3, 2 * n - 5, 2 * n - 5, 2 * n - 7};
      c.expect(s.group_depths() == want, "group depths at n=" + std::to_string(n));
    }
  }
  const double t = seconds_since(start);
  c.expect(t < 10.0, fmt("runtime %.2fs", t));
  c.note("8n-20 for n in [4,128]" + fmt(", %.2fs", t));
  return c.result();
}

Outcome five_qubit_first_group() {
  Check c;
  const tforge::Schedule s = tforge::asap_schedule(tforge::synth_toffoli(5));
  const auto groups = s.group_depths();
  c.expect(!groups.empty() && groups[0] == 7, "C1+C2 depth");
  c.note("C1+C2 layers = " + std::to_string(groups.empty() ? 0 : groups[0]));
  return c.result();
}

Outcome flat_equivalence() {
  Check c;
  const auto start = Clock::now();
  double worst = 0.0;
  for (std::size_t n = 2; n <= 10; ++n) {
    const tforge::DenseUnitary u = tforge::unitary_of(tforge::synth_toffoli(n));
    const tforge::DenseUnitary r = tforge::reference_unitary(n);
    c.expect(oracle::max_abs_diff(oracle::from_dense(r), oracle::reference(n)) <= 1e-15,
             "reference matrix at n=" + std::to_string(n));
    c.expect(tforge::equiv_global_phase(u, r, 1e-9), "matrix at n=" + std::to_string(n));
    worst = std::max(worst, oracle::phase_distance(oracle::from_dense(u), oracle::reference(n)));
    if (n <= 7) {
      const double d = oracle::phase_distance(oracle::circuit_matrix(tforge::synth_toffoli(n)),
                                              oracle::reference(n));
      c.expect(d <= 1e-9, "kronecker oracle at n=" + std::to_string(n));
    }
  }
  c.expect(worst <= 1e-9, fmt("phase distance %.3e", worst));
  const double t_matrix = seconds_since(start);
  c.expect(t_matrix < 120.0, fmt("matrix runtime %.1fs", t_matrix));
  std::mt19937_64 rng(20260101);
  double state_worst = 0.0;
  for (std::size_t n = 11; n <= 14; ++n) {
    const Circuit circuit = tforge::synth_toffoli(n);
    for (int t = 0; t < 100; ++t) {
      const tforge::StateVector s = tforge::StateVector::random(n, rng);
      state_worst = std::max(state_worst, tforge::max_entry_deviation(tforge::apply(circuit, s),
                                                                      reference_action(s)));
    }
  }
  c.expect(state_worst <= 1e-8, fmt("statevector deviation %.3e", state_worst));
  c.note(fmt("matrix n<=10 phase distance %.1e", worst) +
         fmt(", states n in [11,14] deviation %.1e", state_worst) +
         fmt(", %.1fs", seconds_since(start)));
  return c.result();
}

Outcome recursive_equivalence() {
  Check c;
  double worst = 0.0;
  for (std::size_t n = 2; n <= 8; ++n) {
    const tforge::DenseUnitary a = tforge::unitary_of(tforge::synth_recursive(n));
    const tforge::DenseUnitary b = tforge::unitary_of(tforge::synth_toffoli(n));
    c.expect(tforge::equiv_global_phase(a, b, 1e-10), "n=" + std::to_string(n));
    worst = std::max(worst, oracle::phase_distance(oracle::from_dense(a), oracle::from_dense(b)));
    if (n <= 6) {
      const double d = oracle::phase_distance(oracle::circuit_matrix(tforge::synth_recursive(n)),
                                              oracle::reference(n));
      c.expect(d <= 1e-10, "kronecker oracle at n=" + std::to_string(n));
    }
  }
  c.expect(worst <= 1e-10, fmt("phase distance %.3e", worst));
  c.note(fmt("phase distance %.1e", worst));
  return c.result();
}

Outcome schedule_semantics() {
  Check c;
  std::mt19937_64 rng(7);
  double worst = 0.0;
  for (std::size_t n = 3; n <= 8; ++n) {
    const Circuit circuit = tforge::synth_toffoli(n);
    const tforge::Schedule s = tforge::asap_schedule(circuit);
    const tforge::DenseUnitary want = tforge::unitary_of(circuit);
    for (int t = 0; t < 50; ++t) {
      const Circuit shuffled = tforge::flatten_shuffled(circuit, s, rng);
      worst = std::max(worst, tforge::max_entry_deviation(tforge::unitary_of(shuffled), want));
      if (n <= 5) {
        worst = std::max(worst, oracle::max_abs_diff(oracle::circuit_matrix(shuffled),
                                                     oracle::circuit_matrix(circuit)));
      }
    }
  }
  c.expect(worst <= 1e-10, fmt("max entry %.3e", worst));
  c.note(fmt("300 orderings, max entry deviation %.1e", worst));
  return c.result();
}

Outcome routing() {
  Check c;
  const tforge::RoutedCircuit r5 = tforge::route_lnn(5);
  std::size_t swap_layers = 0;
  std::size_t swaps = 0;
  if (!r5.groups.empty()) {
    c.expect(r5.groups[0].depth == 14, "n=5 C1+C2 depth");
    for (std::size_t k = 0; k < r5.groups[0].depth; ++k) {
      bool any = false;
      for (std::size_t i = r5.layer_offsets[k]; i < r5.layer_offsets[k + 1]; ++i) {
        if (r5.circuit[i].kind == tforge::GateKind::swap) {
          any = true;
          ++swaps;
        }
      }
      swap_layers += any ? 1 : 0;
    }
  }
  c.expect(swap_layers == 7, "n=5 C1+C2 swap layers " + std::to_string(swap_layers));

  for (std::size_t n = 5; n <= 64; ++n) {
    const tforge::RoutedCircuit r = tforge::route_lnn(n);
    const std::string at = " at n=" + std::to_string(n);
    c.expect(r.groups.size() == 6, "group count" + at);
    if (r.groups.size() == 6) {
      c.expect(r.groups[0].depth == 4 * n - 6 && r.groups[1].depth == 4 * n - 10 &&
                   r.groups[3].depth == 4 * n - 10 && r.groups[4].depth == 4 * n - 14,
               "group depths" + at);
    }
  }
  double worst = 0.0;
  for (std::size_t n = 3; n <= 8; ++n) {
    const tforge::RoutedCircuit r = tforge::route_lnn(n);
    worst = std::max(worst, oracle::phase_distance(oracle::from_dense(tforge::unitary_of(r.circuit)),
                                                   oracle::reference(n)));
  }
  c.expect(worst <= 1e-9, fmt("routed unitary %.3e", worst));
  std::size_t worst_ratio_n = 0;
  double worst_slope = 0.0;
  for (std::size_t n = 5; n <= 256; ++n) {
    const tforge::RoutedCircuit r = tforge::route_lnn(n);
    const std::string at = " at n=" + std::to_string(n);
    bool adjacent = true;
    for (const Gate& g : r.circuit.gates()) {
      adjacent = adjacent && std::max(g.control, g.target) - std::min(g.control, g.target) == 1;
    }
    c.expect(adjacent, "adjacency" + at);
    c.expect(r.final_layout.is_identity(), "final layout" + at);
    const double slope = static_cast<double>(r.depth()) / static_cast<double>(n);
    if (slope > worst_slope) {
      worst_slope = slope;
      worst_ratio_n = n;
    }
    c.expect(r.depth() <= 19 * n, "depth" + at);
  }
  std::ostringstream os;
  os << "n=5 C1+C2 depth 14 with " << swaps << " swaps in " << swap_layers
     << " swap layers, depth(5)=" << r5.depth() << ", max depth/n "
     << fmt("%.2f", worst_slope) << " at n=" << worst_ratio_n;
  c.note(os.str());
  return c.result();
}

Outcome baseline() {
  Check c;
  const auto v = [](std::int64_t num, std::uint32_t e, tforge::Qubit ctl, tforge::Qubit tgt) {
    return Gate::cprx(DyadicAngle(num, e), ctl, tgt);
  };
  const std::vector<Gate> want = {v(1, 1, 1, 2), v(1, 0, 0, 1), v(-1, 1, 1, 2), v(1, 0, 0, 1),
                                  v(1, 1, 0, 2)};
  const Circuit got = tforge::barenco_toffoli(3);
  c.expect(got.size() == want.size(), "size");
  for (std::size_t i = 0; i < std::min(got.size(), want.size()); ++i) {
    c.expect(got[i] == want[i], "gate " + std::to_string(i));
  }
  const double d3 = oracle::max_abs_diff(oracle::circuit_matrix(got), oracle::toffoli_x(3));
  c.expect(d3 <= 1e-12, fmt("n=3 max entry %.3e", d3));
  double worst = 0.0;
  for (std::size_t n = 2; n <= 8; ++n) {
    const tforge::DenseUnitary u = tforge::unitary_of(tforge::barenco_toffoli(n));
    worst = std::max(worst, oracle::max_abs_diff(oracle::from_dense(u), oracle::toffoli_x(n)));
  }
  c.expect(worst <= 1e-10, fmt("max entry %.3e", worst));
  c.note(fmt("n=3 deviation %.1e", d3) + fmt(", n<=8 deviation %.1e", worst));
  return c.result();
}

Outcome approximation() {
  Check c;
  std::ostringstream os;
  for (const std::size_t n : {std::size_t{8}, std::size_t{10}}) {
    const auto kmax = static_cast<std::uint32_t>(std::ceil(std::log2(static_cast<double>(n))));
    const double bound = 4 * std::numbers::pi / static_cast<double>(n);
    double previous = std::numeric_limits<double>::infinity();
    for (std::uint32_t k = 1; k <= n - 2; ++k) {
      const Circuit circuit = tforge::synth_approx(n, k);
      const double e = tforge::op_norm_error(circuit, n);
      const std::string at = " n=" + std::to_string(n) + " k=" + std::to_string(k);
      c.expect(e <= previous + 1e-9, "non-increasing" + at);
      previous = e;
      if (n == 8) {
        const double exact = spectral_distance(oracle::circuit_matrix(circuit), oracle::reference(n));
        c.expect(std::abs(exact - e) <= 1e-4 * std::max(1.0, exact), fmt("oracle %.4e", exact) + at);
      }
      if (k == kmax) {
        c.expect(e > 0.0 && e <= bound, fmt("eps %.4e", e) + at);
        os << "n=" << n << " k=" << k << fmt(" eps %.3f", e) << fmt(" (bound %.3f)", bound)
           << fmt(" pi/n %.3f; ", std::numbers::pi / static_cast<double>(n));
      }
      if (k == n - 2) {
        c.expect(e <= 1e-9, "exact at k=n-2" + at);
      }
    }
  }
  c.note(os.str() + "zero at k=n-2, non-increasing in k");
  return c.result();
}

Outcome basis_wrapper() {
  Check c;
  double worst = 0.0;
  for (std::size_t n = 2; n <= 8; ++n) {
    const oracle::Mat u = oracle::circuit_matrix(tforge::basis_conjugate(tforge::synth_toffoli(n)));
    const std::uint64_t dim = std::uint64_t{1} << n;
    for (std::uint64_t x = 0; x < dim; ++x) {
      const auto row = static_cast<Eigen::Index>(flip_target(x, n));
      worst = std::max(worst, std::abs(std::abs(u(row, static_cast<Eigen::Index>(x))) - 1.0));
    }
  }
  c.expect(worst <= 1e-10, fmt("deviation %.3e", worst));
  const oracle::Mat u3 = oracle::circuit_matrix(tforge::basis_conjugate(tforge::synth_toffoli(3)));
  const bool plus = std::abs(u3(7, 6) - oracle::cd(1.0, 0.0)) <= 1e-12;
  const bool minus = std::abs(u3(6, 7) - oracle::cd(-1.0, 0.0)) <= 1e-12;
  c.expect(plus && minus, "n=3 controlled block");
  c.note(fmt("max | |<T(x)|U|x>| - 1 | = %.1e over n in [2,8]", worst));
  return c.result();
}

Outcome round_trip() {
  Check c;
  for (std::size_t n = 2; n <= 32; ++n) {
    const Circuit circuit = tforge::synth_toffoli(n);
    c.expect(tforge::circuit_from_json(tforge::circuit_to_json(circuit)) == circuit,
             "json n=" + std::to_string(n));
    const Circuit wrapped = tforge::basis_conjugate(tforge::synth_approx(n, 3));
    c.expect(tforge::circuit_from_json(tforge::circuit_to_json(wrapped)) == wrapped,
             "wrapped json n=" + std::to_string(n));
    c.expect(tforge::to_qasm(circuit) == tforge::to_qasm(tforge::synth_toffoli(n)),
             "qasm n=" + std::to_string(n));
  }
  c.note("json n in [2,32], qasm byte-identical");
  return c.result();
}

} // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"gate count 2n^2-6n+5", gate_count},
      {"three-qubit golden circuit", golden_three_qubit},
      {"scheduled depth 8n-20", depth_formula},
      {"five-qubit first group in 7 layers", five_qubit_first_group},
      {"flat construction equivalence", flat_equivalence},
      {"recursive construction equivalence", recursive_equivalence},
      {"schedule semantics", schedule_semantics},
      {"line routing", routing},
      {"baseline decomposition", baseline},
      {"approximation error", approximation},
      {"basis wrapper", basis_wrapper},
      {"round trip and determinism", round_trip},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += o.pass ? 0 : 1;
    std::printf("[%s] %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed),
              criteria.size());
  return failed == 0 ? 0 : 1;
}
