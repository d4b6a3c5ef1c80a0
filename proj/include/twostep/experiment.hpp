// Copyright 2026 The twostep Authors
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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twostep/matrix_model.hpp"
#include "twostep/phases.hpp"
#include "twostep/statevector.hpp"

namespace twostep {

enum class RunMode { Circuit, Matrix };

std::string_view mode_name(RunMode mode);
/// Throws DataError for anything but "circuit" or "matrix".
RunMode parse_mode(std::string_view name);

struct HistogramEntry {
  Bitstring bitstring;
  double probability = 0.0;
  std::optional<int> count;

  bool operator==(const HistogramEntry&) const = default;
};

struct RunReport {
  int n = 0;
  int k = 0;
  int width = 0;
  int q1 = 0;
  int q2 = 0;
  RunMode mode = RunMode::Circuit;
  std::uint64_t seed = 0;
  int shots = 0;
  std::vector<HistogramEntry> histogram;
  std::optional<ProbabilitySeries> series;

  bool operator==(const RunReport&) const = default;
};

std::string report_to_json(const RunReport& report);
RunReport report_from_json(const std::string& text);

/// Second-stage trajectory of the full circuit: the state is prepared with
/// the marker, the Hadamard layer and q1 x G1, then G2 is applied t_max times.
struct CircuitTrace {
  ProbabilitySeries series;
  /// Main-register mass outside the tour states, per t.
  std::vector<double> infeasible;
  Distribution final_distribution;
};

CircuitTrace circuit_sweep(const PhaseAssignment& phases, int q1, int t_max);

/// Default schedule: optimal_q1(n), optimal_q2(n, 2).
Schedule default_schedule(int n);

/// Circuit mode needs n <= 4; matrix mode uses the tour subspace. Histogram
/// counts are attached when shots > 0.
RunReport run_experiment(const PhaseAssignment& phases, RunMode mode,
                         const Schedule& schedule, int shots,
                         std::uint64_t seed);

ProbabilitySeries sweep(const PhaseAssignment& phases, RunMode mode, int q1,
                        int t_max);

/// Largest n the dense circuit simulator handles (15 qubits at n = 4).
inline constexpr int kMaxCircuitCities = 4;

}  // namespace twostep
