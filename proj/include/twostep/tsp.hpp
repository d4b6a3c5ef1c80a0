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
#include <utility>
#include <vector>

namespace twostep {

/// Main-register basis label, qubit 0 leftmost.
using Bitstring = std::string;
using Qubit = unsigned;

/// Largest city count the enumerating routines accept (6! = 720 tours).
inline constexpr int kMaxCities = 6;

/// Cities plus an optional (possibly asymmetric) travel-cost matrix.
class TspInstance {
 public:
  explicit TspInstance(int n);
  TspInstance(int n, std::vector<std::vector<double>> cost_matrix);

  int n() const { return n_; }
  bool has_costs() const { return cost_matrix_.has_value(); }
  /// Cost of travelling from city `from` to city `to` (1-based labels).
  double cost(int from, int to) const;
  const std::optional<std::vector<std::vector<double>>>& cost_matrix() const {
    return cost_matrix_;
  }

 private:
  int n_;
  std::optional<std::vector<std::vector<double>>> cost_matrix_;
};

/// Visit order over cities 1..n.
class Tour {
 public:
  /// Throws InvalidTourError unless `order` is a permutation of 1..size.
  explicit Tour(std::vector<int> order);

  int size() const { return static_cast<int>(order_.size()); }
  const std::vector<int>& order() const { return order_; }
  int city(int slot) const { return order_[slot]; }

  bool operator==(const Tour&) const = default;

 private:
  std::vector<int> order_;
};

/// Qubit plan for the binary (HOBO) encoding.
///
/// Qubits are laid out as [main | validity ancillas | uniqueness ancillas |
/// marker]. Slot `s` occupies main qubits s*k .. s*k+k-1 with the most
/// significant bit of the city code first.
class HoboLayout {
 public:
  explicit HoboLayout(int n);

  int n() const { return n_; }
  int k() const { return k_; }
  int main_qubits() const { return n_ * k_; }
  /// One ancilla per (slot, unused code) pair.
  int valid_ancillas() const { return ((1 << k_) - n_) * n_; }
  /// One ancilla per unordered slot pair.
  int unique_ancillas() const { return n_ * (n_ - 1) / 2; }
  int marker_qubits() const { return 1; }
  int width() const {
    return main_qubits() + valid_ancillas() + unique_ancillas() +
           marker_qubits();
  }

  Qubit main_qubit(int slot, int bit) const;
  std::vector<Qubit> slot_qubits(int slot) const;
  std::vector<Qubit> main_register() const;
  /// Ancilla flagging that `slot` holds the out-of-range `code` (n <= code < 2^k).
  Qubit validity_ancilla(int slot, int code) const;
  std::vector<Qubit> validity_register() const;
  /// Ancilla holding the inequality of two slots, slot_a < slot_b.
  Qubit uniqueness_ancilla(int slot_a, int slot_b) const;
  std::vector<Qubit> uniqueness_register() const;
  Qubit marker() const { return static_cast<Qubit>(width() - 1); }

  bool operator==(const HoboLayout&) const = default;

 private:
  int n_;
  int k_;
};

/// Bits per city, ceil(log2 n).
int bits_per_city(int n);

Bitstring encode_tour(const Tour& tour, int n);
/// Returns std::nullopt for infeasible strings (out-of-range or repeated codes).
std::optional<Tour> decode_bitstring(const Bitstring& bits, int n);
/// All n! tour bitstrings in lexicographic order.
std::vector<Bitstring> enumerate_feasible(int n);
bool is_feasible(const Bitstring& bits, int n);

Bitstring index_to_bitstring(std::uint64_t index, int length);
std::uint64_t bitstring_to_index(const Bitstring& bits);

/// Closed-tour cost, including the leg from the last city back to the first.
double eval_tour_cost(const TspInstance& instance, const Tour& tour);

/// Row-major assignment x[time][city] of the one-hot encoding.
using AssignmentMatrix = std::vector<std::vector<int>>;

AssignmentMatrix one_hot_assignment(const Tour& tour);
/// Squared violations of the one-city-per-step and one-step-per-city rules.
std::pair<double, double> constraint_penalties(const AssignmentMatrix& x);

std::uint64_t factorial(int n);

struct Schedule {
  int q1 = 0;
  int q2 = 0;
  bool operator==(const Schedule&) const = default;
};

/// floor(pi/4 * sqrt(2^(nk) / n!)).
int optimal_q1(int n);
/// floor(pi/4 * sqrt(n! / m)).
int optimal_q2(int n, int m);

}  // namespace twostep
