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

#include "twostep/experiment.hpp"

#include <cmath>

#include <json.hpp>

#include "twostep/errors.hpp"
#include "twostep/oracles.hpp"

namespace twostep {

std::string_view mode_name(RunMode mode) {
  return mode == RunMode::Circuit ? "circuit" : "matrix";
}

RunMode parse_mode(std::string_view name) {
  if (name == "circuit") return RunMode::Circuit;
  if (name == "matrix") return RunMode::Matrix;
  throw DataError("unknown mode '" + std::string(name) + "'");
}

std::string report_to_json(const RunReport& r) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["n"] = r.n;
  doc["k"] = r.k;
  doc["width"] = r.width;
  doc["q1"] = r.q1;
  doc["q2"] = r.q2;
  doc["mode"] = mode_name(r.mode);
  doc["seed"] = r.seed;
  doc["shots"] = r.shots;
  doc["histogram"] = ordered_json::array();
  for (const auto& e : r.histogram) {
    ordered_json row;
    row["bitstring"] = e.bitstring;
    row["probability"] = e.probability;
    if (e.count) row["count"] = *e.count;
    doc["histogram"].push_back(std::move(row));
  }
  if (r.series) {
    doc["series"] = ordered_json::array();
    const auto& s = *r.series;
    for (std::size_t i = 0; i < s.size(); ++i) {
      doc["series"].push_back(ordered_json{{"t", s.times[i]},
                                           {"p_min", s.p_min[i]},
                                           {"p_max", s.p_max[i]},
                                           {"p_combined", s.p_combined[i]}});
    }
  }
  return doc.dump(2) + "\n";
}

RunReport report_from_json(const std::string& text) {
  RunReport r;
  try {
    const auto doc = nlohmann::json::parse(text);
    r.n = doc.at("n").get<int>();
    r.k = doc.at("k").get<int>();
    r.width = doc.at("width").get<int>();
    r.q1 = doc.at("q1").get<int>();
    r.q2 = doc.at("q2").get<int>();
    r.mode = parse_mode(doc.at("mode").get<std::string>());
    r.seed = doc.at("seed").get<std::uint64_t>();
    r.shots = doc.at("shots").get<int>();
    double total = 0.0;
    for (const auto& row : doc.at("histogram")) {
      HistogramEntry e;
      e.bitstring = row.at("bitstring").get<std::string>();
      e.probability = row.at("probability").get<double>();
      if (row.contains("count")) e.count = row["count"].get<int>();
      total += e.probability;
      r.histogram.push_back(std::move(e));
    }
    if (std::abs(total - 1.0) > 1e-9) {
      throw DataError("histogram probabilities do not sum to 1");
    }
    if (doc.contains("series")) {
      ProbabilitySeries s;
      for (const auto& row : doc["series"]) {
        s.times.push_back(row.at("t").get<int>());
        s.p_min.push_back(row.at("p_min").get<double>());
        s.p_max.push_back(row.at("p_max").get<double>());
        s.p_combined.push_back(row.at("p_combined").get<double>());
      }
      r.series = std::move(s);
    }
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("malformed run report: ") + e.what());
  }
  return r;
}

CircuitTrace circuit_sweep(const PhaseAssignment& phases, int q1, int t_max) {
  if (phases.n() > kMaxCircuitCities) {
    throw CapacityError("circuit simulation supports n <= " +
                        std::to_string(kMaxCircuitCities));
  }
  if (t_max < 0) throw DataError("t_max must be >= 0");
  const HoboLayout layout(phases.n());
  StateVector state(layout.width());
  state.apply(build_two_step(layout, phases, {q1, 0}));
  const Circuit g2 = build_g2(layout, phases, q1);

  CircuitTrace trace;
  for (int t = 0; t <= t_max; ++t) {
    if (t > 0) state.apply(g2);
    auto dist = main_distribution(state, layout);
    double feasible = 0.0;
    for (const auto& [bits, w] : phases.phases()) feasible += dist.probs[bits];
    trace.series.push(t, dist.probs[phases.min_tour()],
                      dist.probs[phases.max_tour()]);
    trace.infeasible.push_back(std::max(0.0, dist.total() - feasible));
    if (t == t_max) trace.final_distribution = std::move(dist);
  }
  return trace;
}

Schedule default_schedule(int n) { return {optimal_q1(n), optimal_q2(n, 2)}; }

ProbabilitySeries sweep(const PhaseAssignment& phases, RunMode mode, int q1,
                        int t_max) {
  if (mode == RunMode::Circuit) return circuit_sweep(phases, q1, t_max).series;
  return evolve(SearchSpace::subspace(phases), t_max);
}

RunReport run_experiment(const PhaseAssignment& phases, RunMode mode,
                         const Schedule& schedule, int shots,
                         std::uint64_t seed) {
  if (schedule.q1 < 0 || schedule.q2 < 0) {
    throw DataError("schedule counts must be >= 0");
  }
  if (shots < 0) throw DataError("shots must be >= 0");
  const HoboLayout layout(phases.n());
  RunReport r;
  r.n = layout.n();
  r.k = layout.k();
  r.width = layout.width();
  r.q1 = schedule.q1;
  r.q2 = schedule.q2;
  r.mode = mode;
  r.seed = seed;
  r.shots = shots;

  Distribution dist;
  if (mode == RunMode::Circuit) {
    auto trace = circuit_sweep(phases, schedule.q1, schedule.q2);
    r.series = std::move(trace.series);
    dist = std::move(trace.final_distribution);
  } else {
    const auto space = SearchSpace::subspace(phases);
    r.series = evolve(space, schedule.q2);
    dist = distribution_at(space, schedule.q2);
  }

  std::map<Bitstring, int> counts;
  if (shots > 0) counts = sample(dist, shots, seed);
  for (const auto& [bits, p] : dist.probs) {
    HistogramEntry e{bits, p, std::nullopt};
    if (shots > 0) {
      auto it = counts.find(bits);
      e.count = it == counts.end() ? 0 : it->second;
    }
    r.histogram.push_back(std::move(e));
  }
  return r;
}

}  // namespace twostep
