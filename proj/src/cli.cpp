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

#include "twostep/cli.hpp"

#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "twostep/errors.hpp"
#include "twostep/experiment.hpp"
#include "twostep/oracles.hpp"

namespace twostep::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("failed reading '" + path + "'");
  return buf.str();
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  file << text;
  file.flush();
  if (!file) throw IoError("failed writing '" + path + "'");
}

PhaseAssignment load_dataset(int n, const std::string& dataset) {
  if (n < 2) throw CapacityError("need at least 2 cities");
  if (dataset == "builtin") return builtin_phases(n);
  auto phases = phases_from_json(read_file(dataset));
  if (phases.n() != n) {
    throw DataError("dataset is for n = " + std::to_string(phases.n()) +
                    ", requested n = " + std::to_string(n));
  }
  return phases;
}

void require_mode_capacity(int n, RunMode mode) {
  if (mode == RunMode::Circuit && n > kMaxCircuitCities) {
    throw CapacityError("circuit mode supports n <= " +
                        std::to_string(kMaxCircuitCities));
  }
  if (n > kMaxCities) {
    throw CapacityError("matrix mode supports n <= " +
                        std::to_string(kMaxCities));
  }
}

std::string metrics_line(const std::string& label, const CircuitMetrics& m) {
  std::ostringstream line;
  line << label << " width=" << m.width << " unit_depth=" << m.unit_depth
       << " gates=" << m.total_gates;
  for (const auto& [kind, count] : m.gate_counts) {
    line << " " << kind << "=" << count;
  }
  line << "\n";
  return line.str();
}

struct Options {
  int n = 0;
  double mu = std::numbers::pi;
  double sigma = 0.5;
  std::uint64_t seed = 42;
  std::string dataset = "builtin";
  std::string mode = "circuit";
  std::optional<int> q1;
  std::optional<int> q2;
  int shots = 1024;
  int t_max = 10;
  std::string out;
  std::string dump;
};

}  // namespace

std::string inspect_summary(int n, const std::string& dataset, int q1, int q2) {
  const auto phases = load_dataset(n, dataset);
  const HoboLayout layout(n);
  std::ostringstream text;
  text << "n=" << layout.n() << " k=" << layout.k()
       << " width=" << layout.width() << " q1=" << q1 << " q2=" << q2 << "\n";
  text << metrics_line("G1", metrics(build_g1(layout)));
  text << metrics_line("G2", metrics(build_g2(layout, phases, q1)));
  text << metrics_line("total",
                       metrics(build_two_step(layout, phases, {q1, q2})));
  return text.str();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Two-step quantum search for the traveling salesman problem"};
  app.require_subcommand(1, 1);
  Options o;

  auto* gen = app.add_subcommand("gen", "Generate a Gaussian phase dataset");
  gen->add_option("--n", o.n, "City count")->required();
  gen->add_option("--mu", o.mu, "Gaussian mean (radians)");
  gen->add_option("--sigma", o.sigma, "Gaussian standard deviation");
  gen->add_option("--seed", o.seed, "Random seed");
  gen->add_option("--out", o.out, "Output JSON path (stdout if omitted)");

  auto* run = app.add_subcommand("run", "Simulate the two-step search");
  auto* sweep_cmd =
      app.add_subcommand("sweep", "Success probability versus iteration");
  for (auto* sub : {run, sweep_cmd}) {
    sub->add_option("--n", o.n, "City count")->required();
    sub->add_option("--dataset", o.dataset, "'builtin' or a phase JSON path");
    sub->add_option("--mode", o.mode, "circuit or matrix")
        ->check(CLI::IsMember({"circuit", "matrix"}));
    sub->add_option("--q1", o.q1, "First-stage iterations");
    sub->add_option("--out", o.out, "Output path (stdout if omitted)");
  }
  run->add_option("--q2", o.q2, "Second-stage iterations");
  run->add_option("--shots", o.shots, "Measurement shots (0 disables)");
  run->add_option("--seed", o.seed, "Sampling seed");
  sweep_cmd->add_option("--t-max", o.t_max, "Last second-stage count");

  auto* inspect = app.add_subcommand("inspect", "Circuit width, depth, counts");
  inspect->add_option("--n", o.n, "City count")->required();
  inspect->add_option("--dataset", o.dataset, "'builtin' or a phase JSON path");
  inspect->add_option("--q1", o.q1, "First-stage iterations");
  inspect->add_option("--q2", o.q2, "Second-stage iterations");
  inspect->add_option("--out", o.out, "Summary path (stdout if omitted)");
  inspect->add_option("--dump", o.dump, "Write the full circuit as text");

  std::vector<const char*> argv{"twostep"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed()) {
      emit(phases_to_json(gen_gaussian_phases(o.n, o.mu, o.sigma, o.seed)),
           o.out, out);
    } else if (run->parsed() || sweep_cmd->parsed()) {
      const auto phases = load_dataset(o.n, o.dataset);
      const RunMode mode = parse_mode(o.mode);
      require_mode_capacity(o.n, mode);
      const Schedule defaults = default_schedule(o.n);
      const int q1 = o.q1.value_or(defaults.q1);
      if (run->parsed()) {
        const Schedule schedule{q1, o.q2.value_or(defaults.q2)};
        emit(report_to_json(
                 run_experiment(phases, mode, schedule, o.shots, o.seed)),
             o.out, out);
      } else {
        emit(series_to_csv(sweep(phases, mode, q1, o.t_max)), o.out, out);
      }
    } else if (inspect->parsed()) {
      const Schedule defaults = default_schedule(o.n);
      const int q1 = o.q1.value_or(defaults.q1);
      const int q2 = o.q2.value_or(defaults.q2);
      emit(inspect_summary(o.n, o.dataset, q1, q2), o.out, out);
      if (!o.dump.empty()) {
        const HoboLayout layout(o.n);
        emit(to_text(build_two_step(layout, load_dataset(o.n, o.dataset),
                                    {q1, q2})),
             o.dump, out);
      }
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitOk;
}

}  // namespace twostep::cli
