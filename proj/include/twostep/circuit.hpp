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

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "twostep/tsp.hpp"

namespace twostep {

enum class GateKind {
  Hadamard,
  NotGate,
  ControlledNot,
  MultiControlledNot,
  MultiControlledPhase,
};

std::string_view kind_name(GateKind kind);

/// A single gate. Controls are positive-polarity only; zero-controls are
/// spelled out with NotGate conjugation by the builders.
class Gate {
 public:
  static Gate h(Qubit target);
  static Gate x(Qubit target);
  static Gate cx(Qubit control, Qubit target);
  static Gate mcx(std::vector<Qubit> controls, Qubit target);
  /// Phase e^{i phase} on basis states where all controls and the target are 1.
  /// Requires phase in (-2pi, 2pi].
  static Gate mcphase(std::vector<Qubit> controls, Qubit target, double phase);

  GateKind kind() const { return kind_; }
  const std::vector<Qubit>& controls() const { return controls_; }
  Qubit target() const { return target_; }
  double phase() const { return phase_; }
  /// Largest qubit index touched.
  Qubit max_qubit() const;

  /// Adjoint gate. The phase -2pi (adjoint of 2pi) is stored as 0.
  Gate inverse() const;

  bool operator==(const Gate&) const = default;

 private:
  Gate(GateKind kind, std::vector<Qubit> controls, Qubit target, double phase);

  GateKind kind_;
  std::vector<Qubit> controls_;
  Qubit target_;
  double phase_;
};

/// Ordered gate list over a HOBO layout.
class Circuit {
 public:
  explicit Circuit(HoboLayout layout) : layout_(layout) {}

  const HoboLayout& layout() const { return layout_; }
  int width() const { return layout_.width(); }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  /// Throws ShapeError if the gate touches a qubit outside the layout.
  Circuit& add(Gate gate);
  /// Appends every gate of `other`, which must share this layout.
  Circuit& append(const Circuit& other);
  Circuit& repeat_append(const Circuit& other, int times);

  bool operator==(const Circuit&) const = default;

 private:
  HoboLayout layout_;
  std::vector<Gate> gates_;
};

Circuit invert_circuit(const Circuit& circuit);

struct CircuitMetrics {
  int width = 0;
  /// Longest chain of gates sharing a qubit, every gate counting 1.
  int unit_depth = 0;
  std::map<std::string, int> gate_counts;
  std::size_t total_gates = 0;
};

CircuitMetrics metrics(const Circuit& circuit);

/// One gate per line after a `width=<w> n=<n> k=<k>` header:
/// `<KIND> controls=[i,j,...] target=t phase=<radians>`.
std::string to_text(const Circuit& circuit);

}  // namespace twostep
