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

#include <complex>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "twostep/circuit.hpp"

namespace twostep {

using Amplitude = std::complex<double>;

/// Dense simulators are limited to this many qubits (64 MiB of amplitudes).
inline constexpr int kMaxSimQubits = 22;

/// Dense amplitude array. Qubit 0 is the most significant bit of the array
/// index, so printed basis labels read in layout order.
class StateVector {
 public:
  /// |0...0> over `width` qubits; throws CapacityError past kMaxSimQubits.
  explicit StateVector(int width);
  static StateVector basis(int width, std::uint64_t index);

  int width() const { return width_; }
  std::size_t dimension() const { return amps_.size(); }
  std::span<const Amplitude> amplitudes() const { return amps_; }
  std::span<Amplitude> amplitudes() { return amps_; }
  const Amplitude& operator[](std::uint64_t index) const { return amps_[index]; }
  Amplitude& operator[](std::uint64_t index) { return amps_[index]; }

  double norm_squared() const;
  void apply(const Gate& gate);
  void apply(const Circuit& circuit);

 private:
  std::uint64_t mask(Qubit q) const {
    return std::uint64_t{1} << (width_ - 1 - static_cast<int>(q));
  }

  int width_;
  std::vector<Amplitude> amps_;
};

StateVector new_state(int width);
StateVector apply_gate(StateVector state, const Gate& gate);
/// Throws ShapeError when the circuit and state widths differ.
StateVector run(const Circuit& circuit, StateVector state);

/// Main-register outcome probabilities, ancillas marginalized out.
struct Distribution {
  std::map<Bitstring, double> probs;

  double total() const;
  bool operator==(const Distribution&) const = default;
};

Distribution main_distribution(const StateVector& state,
                               const HoboLayout& layout);

/// Seeded multinomial draw; only outcomes with non-zero counts are listed.
std::map<Bitstring, int> sample(const Distribution& dist, int shots,
                                std::uint64_t seed);

double success_probability(const Distribution& dist,
                           const std::set<Bitstring>& targets);

/// Dense operator a circuit induces on the main register when all check
/// ancillas start in |0> and the marker in |->:
///   M[out][in] = <out, 0, -| C |in, 0, ->.
/// Unitary exactly when the circuit restores the ancillas.
Eigen::MatrixXcd main_register_operator(const Circuit& circuit);

/// Index of the full-width basis state with main register `main_index`,
/// check ancillas 0 and marker `marker`.
std::uint64_t full_index(const HoboLayout& layout, std::uint64_t main_index,
                         bool marker);

}  // namespace twostep
