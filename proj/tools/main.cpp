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
#include "tforge/bench.hpp"
#include "tforge/io.hpp"
#include "tforge/route.hpp"
#include "tforge/sched.hpp"
#include "tforge/sim.hpp"
#include "tforge/synth.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

namespace {

using namespace tforge;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

/// Bad input discovered after flag parsing; reported with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

SimLimits sim_limits() {
  SimLimits limits;
  if (const char* env = std::getenv("TOFFOLI_FORGE_MAX_SIM_QUBITS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end == env || *end != '\0' || v == 0 || v >= 32) {
      throw UsageError("TOFFOLI_FORGE_MAX_SIM_QUBITS must be an integer in 1..31");
    }
    if (v > limits.max_matrix_qubits || v > limits.max_state_qubits) {
      std::cerr << "warning: simulator cap raised to " << v
                << " qubits; dense simulation memory grows as 2^n (states) and 4^n "
                   "(matrices)\n";
    }
    limits.max_matrix_qubits = v;
    limits.max_state_qubits = v;
  }
  return limits;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw UsageError("cannot read " + path);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Circuit load_circuit(const std::string& path) {
  try {
    return circuit_from_json(read_file(path));
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw UsageError("cannot write " + path);
  }
  out << text;
}

void require_n(std::size_t n) {
  if (n < 2) {
    throw UsageError("n must be ≥ 2");
  }
}

std::string render(const Circuit& c, const std::string& format) {
  if (format == "qasm") {
    return to_qasm(c);
  }
  if (format == "ascii") {
    return to_ascii(c);
  }
  return circuit_to_json(c);
}

// ---------------------------------------------------------------- synth

struct SynthArgs {
  std::size_t n = 0;
  std::string construction = "paper";
  std::optional<std::uint32_t> approx_k;
  std::string basis = "hat";
  std::string format = "json";
  std::string out;
};

int cmd_synth(const SynthArgs& a) {
  require_n(a.n);
  Circuit c(1);
  if (a.construction == "barenco") {
    if (a.n > kBarencoMaxQubits) {
      throw UsageError("barenco construction supports n ≤ " +
                       std::to_string(kBarencoMaxQubits));
    }
    c = barenco_toffoli(a.n);
    if (a.approx_k) {
      c = truncate_rotations(c, *a.approx_k);
    }
    if (a.basis == "wrapped") {
      c = basis_conjugate(c);
    }
  } else {
    SynthConfig config;
    config.n = a.n;
    config.variant = a.construction == "recursive" ? SynthVariant::recursive : SynthVariant::flat;
    config.approx_kmax = a.approx_k;
    config.basis_wrap = a.basis == "wrapped";
    c = synthesize(config);
  }
  write_output(a.out, render(c, a.format));
  return kOk;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::optional<std::size_t> n;
  std::string in;
  std::string stage = "all";
  std::string mode = "exhaustive";
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  double tol = 1e-9;
};

struct StageResult {
  std::string stage;
  std::string method;
  double deviation = 0.0;
  bool skipped = false;
};

// Max deviation from the reference action over statevectors, after removing
// one global phase fixed by the first probe.
double state_deviation(const Circuit& c, const std::vector<StateVector>& probes,
                       const SimLimits& limits) {
  std::optional<Complex> phase;
  double worst = 0.0;
  for (const StateVector& s : probes) {
    const StateVector got = apply(c, s, limits);
    const StateVector want = reference_apply(s);
    if (!phase) {
      Complex overlap = 0.0;
      for (std::size_t i = 0; i < got.dim(); ++i) {
        overlap += std::conj(want[i]) * got[i];
      }
      phase = std::abs(overlap) > 1e-12 ? overlap / std::abs(overlap) : Complex{1.0};
    }
    for (std::size_t i = 0; i < got.dim(); ++i) {
      worst = std::max(worst, std::abs(got[i] - *phase * want[i]));
    }
  }
  return worst;
}

StageResult check_stage(const std::string& stage, const Circuit& c, const VerifyArgs& a,
                        const SimLimits& limits) {
  StageResult r{stage, "", 0.0, false};
  const std::size_t n = c.n_qubits();
  if (a.mode == "exhaustive" && n <= limits.max_matrix_qubits) {
    r.method = "matrix";
    r.deviation = global_phase_deviation(unitary_of(c, limits), reference_unitary(n, limits));
    return r;
  }
  if (n > limits.max_state_qubits) {
    throw UsageError("n = " + std::to_string(n) + " exceeds the statevector cap of " +
                     std::to_string(limits.max_state_qubits) +
                     " (set TOFFOLI_FORGE_MAX_SIM_QUBITS to raise it)");
  }
  std::vector<StateVector> probes;
  if (a.mode == "exhaustive") {
    r.method = "basis-states";
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
      probes.push_back(StateVector::basis(n, x));
    }
    // Basis probes alone cannot see relative phases between columns.
    std::mt19937_64 rng(a.seed);
    probes.push_back(StateVector::random(n, rng));
  } else {
    r.method = "random-states";
    std::mt19937_64 rng(a.seed);
    for (std::size_t t = 0; t < a.trials; ++t) {
      probes.push_back(StateVector::random(n, rng));
    }
  }
  r.deviation = state_deviation(c, probes, limits);
  return r;
}

int cmd_verify(const VerifyArgs& a) {
  const SimLimits limits = sim_limits();
  Circuit base(1);
  if (!a.in.empty()) {
    base = load_circuit(a.in);
    if (a.n && *a.n != base.n_qubits()) {
      throw UsageError("--n does not match the circuit width in " + a.in);
    }
    if (base.has_basis_layer()) {
      throw UsageError("verify compares against C^{n-1}Rx(pi); drop the basis layer");
    }
  } else {
    if (!a.n) {
      throw UsageError("verify needs --n or --in");
    }
    require_n(*a.n);
    base = synth_toffoli(*a.n);
  }
  require_n(base.n_qubits());

  std::vector<StageResult> results;
  const bool all = a.stage == "all";
  if (all || a.stage == "synth") {
    results.push_back(check_stage("synth", base, a, limits));
  }
  if (all || a.stage == "sched") {
    const Schedule s = asap_schedule(base);
    validate_schedule(base, s);
    results.push_back(check_stage("sched", flatten(base, s), a, limits));
  }
  if (all || a.stage == "route") {
    if (base.n_qubits() < 3) {
      results.push_back({"route", "n/a", 0.0, true});
    } else {
      RoutedCircuit routed = [&] {
        try {
          return route_circuit(base);
        } catch (const RouteError& e) {
          throw UsageError(std::string("route: ") + e.what());
        }
      }();
      results.push_back(check_stage("route", routed.circuit, a, limits));
    }
  }

  bool ok = true;
  for (const StageResult& r : results) {
    if (r.skipped) {
      std::cout << "stage " << r.stage << ": skipped (needs n >= 3)\n";
      continue;
    }
    const bool pass = r.deviation <= a.tol;
    ok = ok && pass;
    char dev[32];
    std::snprintf(dev, sizeof dev, "%.3e", r.deviation);
    std::cout << "stage " << r.stage << ": max deviation " << dev << " (" << r.method
              << ", n=" << base.n_qubits() << ") " << (pass ? "PASS" : "FAIL") << "\n";
  }
  return ok ? kOk : kVerifyFailed;
}

// ---------------------------------------------------------------- bench

struct BenchArgs {
  std::size_t n_min = 4;
  std::size_t n_max = 8;
  std::string arch = "both";
  std::string out;
  std::string per_group;
};

int cmd_bench(const BenchArgs& a) {
  if (a.n_min < 2) {
    throw UsageError("n-min must be ≥ 2");
  }
  if (a.n_min > a.n_max) {
    throw UsageError("n-min must not exceed n-max");
  }
  BenchOptions options;
  options.n_min = a.n_min;
  options.n_max = a.n_max;
  options.full = a.arch != "line";
  options.line = a.arch != "full";
  const auto rows = run_bench(options);
  write_output(a.out, bench_csv(rows));
  if (!a.per_group.empty()) {
    write_output(a.per_group, bench_groups_csv(rows));
  }
  return kOk;
}

// ---------------------------------------------------------------- schedule / route

struct InputArgs {
  std::optional<std::size_t> n;
  std::string in;
  std::string out;
};

Circuit input_circuit(const InputArgs& a) {
  if (!a.in.empty()) {
    if (a.n) {
      throw UsageError("give either --n or --in, not both");
    }
    return load_circuit(a.in);
  }
  if (!a.n) {
    throw UsageError("need --n or --in");
  }
  require_n(*a.n);
  return synth_toffoli(*a.n);
}

int cmd_schedule(const InputArgs& a) {
  const Circuit c = input_circuit(a);
  const Schedule s = asap_schedule(c);
  validate_schedule(c, s);
  write_output(a.out, schedule_to_json(s));
  return kOk;
}

int cmd_route(const InputArgs& a, const std::string& format) {
  const Circuit c = input_circuit(a);
  RoutedCircuit routed = [&] {
    try {
      return route_circuit(c);
    } catch (const RouteError& e) {
      throw UsageError(e.what());
    }
  }();
  write_output(a.out, format == "json" ? routed_to_json(routed) : render(routed.circuit, format));
  return kOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ancilla-free n-qubit Toffoli synthesis over controlled x-rotations"};
  app.require_subcommand(1);

  SynthArgs synth;
  auto* synth_cmd = app.add_subcommand("synth", "Emit a Toffoli circuit");
  synth_cmd->add_option("--n", synth.n, "Number of qubits (controls + target)")->required();
  synth_cmd->add_option("--construction", synth.construction)
      ->check(CLI::IsMember({"paper", "recursive", "barenco"}));
  synth_cmd->add_option("--approx-k", synth.approx_k, "Drop rotations finer than pi/2^K")
      ->check(CLI::PositiveNumber);
  synth_cmd->add_option("--basis", synth.basis)->check(CLI::IsMember({"hat", "wrapped"}));
  synth_cmd->add_option("--format", synth.format)->check(CLI::IsMember({"json", "qasm", "ascii"}));
  synth_cmd->add_option("--out", synth.out, "Output path (default stdout)");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check stages against the dense oracle");
  verify_cmd->add_option("--n", verify.n);
  verify_cmd->add_option("--in", verify.in, "Circuit JSON to check instead of synthesizing");
  verify_cmd->add_option("--stage", verify.stage)
      ->check(CLI::IsMember({"synth", "sched", "route", "all"}));
  verify_cmd->add_option("--mode", verify.mode)->check(CLI::IsMember({"exhaustive", "random"}));
  verify_cmd->add_option("--trials", verify.trials)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", verify.seed);
  verify_cmd->add_option("--tol", verify.tol)->check(CLI::PositiveNumber);

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Write size/depth metrics as CSV");
  bench_cmd->add_option("--n-min", bench.n_min);
  bench_cmd->add_option("--n-max", bench.n_max);
  bench_cmd->add_option("--arch", bench.arch)->check(CLI::IsMember({"full", "line", "both"}));
  bench_cmd->add_option("--out", bench.out, "CSV path (default stdout)");
  bench_cmd->add_option("--per-group", bench.per_group, "Per-group depth CSV path");

  InputArgs schedule;
  auto* schedule_cmd = app.add_subcommand("schedule", "Layer a circuit");
  schedule_cmd->add_option("--n", schedule.n);
  schedule_cmd->add_option("--in", schedule.in);
  schedule_cmd->add_option("--out", schedule.out);

  InputArgs route;
  std::string restore = "sortnet";
  std::string route_format = "json";
  auto* route_cmd = app.add_subcommand("route", "Map a circuit onto a 1-D line");
  route_cmd->add_option("--n", route.n);
  route_cmd->add_option("--in", route.in);
  route_cmd->add_option("--out", route.out);
  route_cmd->add_option("--restore", restore)->check(CLI::IsMember({"sortnet"}));
  route_cmd->add_option("--format", route_format)
      ->check(CLI::IsMember({"json", "qasm", "ascii"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (synth_cmd->parsed()) {
      return cmd_synth(synth);
    }
    if (verify_cmd->parsed()) {
      return cmd_verify(verify);
    }
    if (bench_cmd->parsed()) {
      return cmd_bench(bench);
    }
    if (schedule_cmd->parsed()) {
      return cmd_schedule(schedule);
    }
    if (route_cmd->parsed()) {
      return cmd_route(route, route_format);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const SimulationLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
