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

#include "twostep/statevector.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <utility>

#include "twostep/errors.hpp"

namespace twostep {

StateVector::StateVector(int width) : width_(width) {
  if (width < 1 || width > kMaxSimQubits) {
    throw CapacityError("state width " + std::to_string(width) +
                        " outside [1, " + std::to_string(kMaxSimQubits) + "]");
  }
  amps_.assign(std::size_t{1} << width, Amplitude{0.0, 0.0});
  amps_[0] = 1.0;
}

StateVector StateVector::basis(int width, std::uint64_t index) {
  StateVector s(width);
  if (index >= s.dimension()) throw ShapeError("basis index out of range");
  s.amps_[0] = 0.0;
  s.amps_[index] = 1.0;
  return s;
}

double StateVector::norm_squared() const {
  double total = 0.0;
  for (const auto& a : amps_) total += std::norm(a);
  return total;
}

void StateVector::apply(const Gate& gate) {
  if (gate.max_qubit() >= static_cast<Qubit>(width_)) {
    throw ShapeError("gate touches a qubit beyond the state width");
  }
  const std::uint64_t t = mask(gate.target());
  std::uint64_t cmask = 0;
  for (Qubit c : gate.controls()) cmask |= mask(c);
  const std::uint64_t dim = amps_.size();

  switch (gate.kind()) {
    case GateKind::Hadamard: {
      const double r = std::numbers::sqrt2 / 2.0;
      for (std::uint64_t i = 0; i < dim; ++i) {
        if (i & t) continue;
        const Amplitude a0 = amps_[i];
        const Amplitude a1 = amps_[i | t];
        amps_[i] = r * (a0 + a1);
        amps_[i | t] = r * (a0 - a1);
      }
      break;
    }
    case GateKind::NotGate:
    case GateKind::ControlledNot:
    case GateKind::MultiControlledNot:
      for (std::uint64_t i = 0; i < dim; ++i) {
        if ((i & t) == 0 && (i & cmask) == cmask) std::swap(amps_[i], amps_[i | t]);
      }
      break;
    case GateKind::MultiControlledPhase: {
      const Amplitude factor = std::polar(1.0, gate.phase());
      const std::uint64_t all = cmask | t;
      for (std::uint64_t i = 0; i < dim; ++i) {
        if ((i & all) == all) amps_[i] *= factor;
      }
      break;
    }
  }
}

void StateVector::apply(const Circuit& circuit) {
  if (circuit.width() != width_) {
    throw ShapeError("circuit width " + std::to_string(circuit.width()) +
                     " != state width " + std::to_string(width_));
  }
  for (const auto& g : circuit.gates()) apply(g);
}

StateVector new_state(int width) { return StateVector(width); }

StateVector apply_gate(StateVector state, const Gate& gate) {
  state.apply(gate);
  return state;
}

StateVector run(const Circuit& circuit, StateVector state) {
  state.apply(circuit);
  return state;
}

double Distribution::total() const {
  double s = 0.0;
  for (const auto& [bits, p] : probs) s += p;
  return s;
}

Distribution main_distribution(const StateVector& state,
                               const HoboLayout& layout) {
  if (state.width() != layout.width()) {
    throw ShapeError("state width does not match layout");
  }
  const int main = layout.main_qubits();
  const int shift = layout.width() - main;
  std::vector<double> mass(std::size_t{1} << main, 0.0);
  const auto amps = state.amplitudes();
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    mass[i >> shift] += std::norm(amps[i]);
  }
  Distribution d;
  for (std::uint64_t m = 0; m < mass.size(); ++m) {
    d.probs.emplace(index_to_bitstring(m, main), mass[m]);
  }
  return d;
}

std::map<Bitstring, int> sample(const Distribution& dist, int shots,
                                std::uint64_t seed) {
  if (shots < 1) throw DataError("shots must be >= 1");
  if (dist.probs.empty()) throw DataError("cannot sample an empty distribution");
  std::vector<const Bitstring*> labels;
  std::vector<double> weights;
  for (const auto& [bits, p] : dist.probs) {
    labels.push_back(&bits);
    weights.push_back(p);
  }
  std::mt19937_64 rng(seed);
  std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
  std::vector<int> counts(labels.size(), 0);
  for (int s = 0; s < shots; ++s) ++counts[pick(rng)];
  std::map<Bitstring, int> out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (counts[i] > 0) out.emplace(*labels[i], counts[i]);
  }
  return out;
}

double success_probability(const Distribution& dist,
                           const std::set<Bitstring>& targets) {
  if (targets.empty()) throw DataError("success probability needs targets");
  double p = 0.0;
  for (const auto& bits : targets) {
    auto it = dist.probs.find(bits);
    if (it != dist.probs.end()) p += it->second;
  }
  return p;
}

std::uint64_t full_index(const HoboLayout& layout, std::uint64_t main_index,
                         bool marker) {
  const int shift = layout.width() - layout.main_qubits();
  return (main_index << shift) | static_cast<std::uint64_t>(marker);
}

Eigen::MatrixXcd main_register_operator(const Circuit& circuit) {
  const auto& layout = circuit.layout();
  const std::uint64_t dim = std::uint64_t{1} << layout.main_qubits();
  const double r = std::numbers::sqrt2 / 2.0;
  Eigen::MatrixXcd op(static_cast<Eigen::Index>(dim),
                      static_cast<Eigen::Index>(dim));
  for (std::uint64_t in = 0; in < dim; ++in) {
    StateVector s(layout.width());
    s[0] = 0.0;
    s[full_index(layout, in, false)] = r;
    s[full_index(layout, in, true)] = -r;
    s.apply(circuit);
    for (std::uint64_t out = 0; out < dim; ++out) {
      op(static_cast<Eigen::Index>(out), static_cast<Eigen::Index>(in)) =
          r * (s[full_index(layout, out, false)] -
               s[full_index(layout, out, true)]);
    }
  }
  return op;
}

}  // namespace twostep
