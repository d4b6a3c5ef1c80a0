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

#include "twostep/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "twostep/errors.hpp"

namespace twostep {

std::string_view kind_name(GateKind kind) {
  switch (kind) {
    case GateKind::Hadamard:
      return "H";
    case GateKind::NotGate:
      return "X";
    case GateKind::ControlledNot:
      return "CX";
    case GateKind::MultiControlledNot:
      return "MCX";
    case GateKind::MultiControlledPhase:
      return "MCPHASE";
  }
  return "?";
}

Gate::Gate(GateKind kind, std::vector<Qubit> controls, Qubit target,
           double phase)
    : kind_(kind), controls_(std::move(controls)), target_(target),
      phase_(phase) {
  auto sorted = controls_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw DataError("gate controls must be distinct");
  }
  if (std::find(sorted.begin(), sorted.end(), target_) != sorted.end()) {
    throw DataError("gate target cannot also be a control");
  }
  constexpr double two_pi = 2 * std::numbers::pi;
  if (!(phase_ > -two_pi && phase_ <= two_pi)) {
    throw DataError("gate phase outside (-2pi, 2pi]");
  }
}

Gate Gate::h(Qubit target) { return {GateKind::Hadamard, {}, target, 0.0}; }

Gate Gate::x(Qubit target) { return {GateKind::NotGate, {}, target, 0.0}; }

Gate Gate::cx(Qubit control, Qubit target) {
  return {GateKind::ControlledNot, {control}, target, 0.0};
}

Gate Gate::mcx(std::vector<Qubit> controls, Qubit target) {
  return {GateKind::MultiControlledNot, std::move(controls), target, 0.0};
}

Gate Gate::mcphase(std::vector<Qubit> controls, Qubit target, double phase) {
  return {GateKind::MultiControlledPhase, std::move(controls), target, phase};
}

Qubit Gate::max_qubit() const {
  Qubit m = target_;
  for (Qubit c : controls_) m = std::max(m, c);
  return m;
}

Gate Gate::inverse() const {
  if (kind_ != GateKind::MultiControlledPhase) return *this;
  const double adjoint = phase_ == 2 * std::numbers::pi ? 0.0 : -phase_;
  return mcphase(controls_, target_, adjoint);
}

Circuit& Circuit::add(Gate gate) {
  if (gate.max_qubit() >= static_cast<Qubit>(layout_.width())) {
    throw ShapeError("gate touches qubit " + std::to_string(gate.max_qubit()) +
                     " beyond width " + std::to_string(layout_.width()));
  }
  gates_.push_back(std::move(gate));
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (!(other.layout_ == layout_)) {
    throw ShapeError("cannot append a circuit over a different layout");
  }
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
  return *this;
}

Circuit& Circuit::repeat_append(const Circuit& other, int times) {
  for (int i = 0; i < times; ++i) append(other);
  return *this;
}

Circuit invert_circuit(const Circuit& circuit) {
  Circuit out(circuit.layout());
  const auto& gates = circuit.gates();
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
    out.add(it->inverse());
  }
  return out;
}

CircuitMetrics metrics(const Circuit& circuit) {
  CircuitMetrics m;
  m.width = circuit.width();
  m.total_gates = circuit.size();
  std::vector<int> depth(static_cast<std::size_t>(circuit.width()), 0);
  for (const auto& g : circuit.gates()) {
    int level = depth[g.target()];
    for (Qubit c : g.controls()) level = std::max(level, depth[c]);
    ++level;
    depth[g.target()] = level;
    for (Qubit c : g.controls()) depth[c] = level;
    ++m.gate_counts[std::string(kind_name(g.kind()))];
  }
  m.unit_depth = depth.empty() ? 0 : *std::max_element(depth.begin(), depth.end());
  return m;
}

std::string to_text(const Circuit& circuit) {
  std::ostringstream out;
  const auto& layout = circuit.layout();
  out << "width=" << layout.width() << " n=" << layout.n()
      << " k=" << layout.k() << "\n";
  char phase[32];
  for (const auto& g : circuit.gates()) {
    out << kind_name(g.kind()) << " controls=[";
    for (std::size_t i = 0; i < g.controls().size(); ++i) {
      if (i) out << ",";
      out << g.controls()[i];
    }
    std::snprintf(phase, sizeof phase, "%.17g", g.phase());
    out << "] target=" << g.target() << " phase=" << phase << "\n";
  }
  return out.str();
}

}  // namespace twostep
