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

#include "twostep/circuit.hpp"
#include "twostep/phases.hpp"
#include "twostep/tsp.hpp"

namespace twostep {

/// Flags every slot holding an out-of-range city code on its own ancilla.
/// Empty when n is a power of two.
Circuit build_validity_suboracle(const HoboLayout& layout);

/// Sets the (slot_a, slot_b) pair ancilla to 1 iff the two slots hold
/// different codes. The main register is restored afterwards.
Circuit build_uniqueness_suboracle(const HoboLayout& layout, int slot_a,
                                   int slot_b);

/// Feasibility oracle: phase -1 on every tour state by kickback onto the
/// marker, which must be held in |->. All check ancillas return to |0>.
Circuit build_oracle_r1(const HoboLayout& layout);

/// Inversion about the uniform superposition of the main register, up to a
/// global phase of -1.
Circuit build_diffusion_d1(const HoboLayout& layout);

/// One feasibility Grover iteration, R1 followed by D1.
Circuit build_g1(const HoboLayout& layout);

/// Diagonal e^{iW(T)} on every tour state, identity elsewhere.
Circuit build_cost_oracle_r2(const HoboLayout& layout,
                             const PhaseAssignment& phases);

/// State preparation A = G1^q1 H^main, applied to |0>.
Circuit build_feasible_preparation(const HoboLayout& layout, int q1);

/// Reflection about A|0> as A (2|0><0| - I) A^dagger, up to a global phase
/// of -1. Needs the marker held in |-> like R1.
Circuit build_d2(const HoboLayout& layout, int q1);

/// One cost-search iteration, R2 followed by D2.
Circuit build_g2(const HoboLayout& layout, const PhaseAssignment& phases,
                 int q1);

/// Marker preparation, Hadamard layer, q1 x G1, then q2 x G2.
Circuit build_two_step(const HoboLayout& layout, const PhaseAssignment& phases,
                       const Schedule& schedule);

}  // namespace twostep
