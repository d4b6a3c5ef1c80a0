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

#include "twostep/oracles.hpp"

#include <numbers>

#include "twostep/errors.hpp"

namespace twostep {

namespace {

void add_x_layer(Circuit& c, const std::vector<Qubit>& qubits) {
  for (Qubit q : qubits) c.add(Gate::x(q));
}

void add_h_layer(Circuit& c, const std::vector<Qubit>& qubits) {
  for (Qubit q : qubits) c.add(Gate::h(q));
}

// Phase on the single main-register basis state `pattern`.
void add_pattern_phase(Circuit& c, const std::vector<Qubit>& reg,
                       const Bitstring& pattern, double phase) {
  std::vector<Qubit> zeros;
  for (std::size_t i = 0; i < reg.size(); ++i) {
    if (pattern[i] == '0') zeros.push_back(reg[i]);
  }
  add_x_layer(c, zeros);
  std::vector<Qubit> controls(reg.begin(), reg.end() - 1);
  c.add(Gate::mcphase(std::move(controls), reg.back(), phase));
  add_x_layer(c, zeros);
}

// I - 2|0><0| on the main register.
void add_zero_reflection(Circuit& c, const HoboLayout& layout) {
  const auto reg = layout.main_register();
  add_pattern_phase(c, reg, Bitstring(reg.size(), '0'), std::numbers::pi);
}

void require_matching(const HoboLayout& layout, const PhaseAssignment& phases) {
  if (phases.n() != layout.n()) {
    throw ShapeError("phase assignment is for n = " +
                     std::to_string(phases.n()) + ", layout for n = " +
                     std::to_string(layout.n()));
  }
}

}  // namespace

Circuit build_validity_suboracle(const HoboLayout& layout) {
  Circuit c(layout);
  const int n = layout.n();
  const int k = layout.k();
  for (int slot = 0; slot < n; ++slot) {
    const auto bits = layout.slot_qubits(slot);
    for (int code = n; code < (1 << k); ++code) {
      std::vector<Qubit> zeros;
      for (int b = 0; b < k; ++b) {
        if (((code >> (k - 1 - b)) & 1) == 0) zeros.push_back(bits[b]);
      }
      add_x_layer(c, zeros);
      c.add(Gate::mcx(bits, layout.validity_ancilla(slot, code)));
      add_x_layer(c, zeros);
    }
  }
  return c;
}

Circuit build_uniqueness_suboracle(const HoboLayout& layout, int slot_a,
                                   int slot_b) {
  if (slot_a < 0 || slot_b >= layout.n() || slot_a >= slot_b) {
    throw DataError("uniqueness check needs 0 <= slot_a < slot_b < n");
  }
  Circuit c(layout);
  const auto a = layout.slot_qubits(slot_a);
  const auto b = layout.slot_qubits(slot_b);
  const Qubit pair = layout.uniqueness_ancilla(slot_a, slot_b);

  // slot_b ^= slot_a: all zero iff the codes agree.
  for (int i = 0; i < layout.k(); ++i) c.add(Gate::cx(a[i], b[i]));
  // OR of slot_b's bits into the pair ancilla.
  add_x_layer(c, b);
  c.add(Gate::mcx(b, pair));
  add_x_layer(c, b);
  c.add(Gate::x(pair));
  for (int i = 0; i < layout.k(); ++i) c.add(Gate::cx(a[i], b[i]));
  return c;
}

Circuit build_oracle_r1(const HoboLayout& layout) {
  Circuit checks(layout);
  checks.append(build_validity_suboracle(layout));
  for (int a = 0; a < layout.n(); ++a) {
    for (int b = a + 1; b < layout.n(); ++b) {
      checks.append(build_uniqueness_suboracle(layout, a, b));
    }
  }

  // Marker fires when every pair differs and no slot holds a bad code.
  const auto valid = layout.validity_register();
  std::vector<Qubit> controls = layout.uniqueness_register();
  controls.insert(controls.end(), valid.begin(), valid.end());

  Circuit c(layout);
  c.append(checks);
  add_x_layer(c, valid);
  c.add(Gate::mcx(std::move(controls), layout.marker()));
  add_x_layer(c, valid);
  c.append(invert_circuit(checks));
  return c;
}

Circuit build_diffusion_d1(const HoboLayout& layout) {
  const auto reg = layout.main_register();
  Circuit c(layout);
  add_h_layer(c, reg);
  add_zero_reflection(c, layout);
  add_h_layer(c, reg);
  return c;
}

Circuit build_g1(const HoboLayout& layout) {
  Circuit c(layout);
  c.append(build_oracle_r1(layout));
  c.append(build_diffusion_d1(layout));
  return c;
}

Circuit build_cost_oracle_r2(const HoboLayout& layout,
                             const PhaseAssignment& phases) {
  require_matching(layout, phases);
  const auto reg = layout.main_register();
  Circuit c(layout);
  for (const auto& [bits, w] : phases.phases()) {
    add_pattern_phase(c, reg, bits, w);
  }
  return c;
}

Circuit build_feasible_preparation(const HoboLayout& layout, int q1) {
  if (q1 < 0) throw DataError("q1 must be >= 0");
  Circuit c(layout);
  add_h_layer(c, layout.main_register());
  c.repeat_append(build_g1(layout), q1);
  return c;
}

Circuit build_d2(const HoboLayout& layout, int q1) {
  const Circuit prep = build_feasible_preparation(layout, q1);
  Circuit c(layout);
  c.append(invert_circuit(prep));
  add_zero_reflection(c, layout);
  c.append(prep);
  return c;
}

Circuit build_g2(const HoboLayout& layout, const PhaseAssignment& phases,
                 int q1) {
  Circuit c(layout);
  c.append(build_cost_oracle_r2(layout, phases));
  c.append(build_d2(layout, q1));
  return c;
}

Circuit build_two_step(const HoboLayout& layout, const PhaseAssignment& phases,
                       const Schedule& schedule) {
  require_matching(layout, phases);
  if (schedule.q1 < 0 || schedule.q2 < 0) {
    throw DataError("schedule counts must be >= 0");
  }
  Circuit c(layout);
  c.add(Gate::x(layout.marker()));
  c.add(Gate::h(layout.marker()));
  add_h_layer(c, layout.main_register());
  c.repeat_append(build_g1(layout), schedule.q1);
  c.repeat_append(build_g2(layout, phases, schedule.q1), schedule.q2);
  return c;
}

}  // namespace twostep
