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

#include "twostep/tsp.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "twostep/errors.hpp"

namespace twostep {

namespace {

constexpr int kMaxLayoutCities = 16;

void require_city_count(int n, int max) {
  if (n < 2 || n > max) {
    throw CapacityError(
        "city count " + std::to_string(n) + " outside [2, " +
        std::to_string(max) + "]");
  }
}

}  // namespace

TspInstance::TspInstance(int n) : n_(n) {
  if (n < 2) throw CapacityError("a TSP instance needs at least 2 cities");
}

TspInstance::TspInstance(int n, std::vector<std::vector<double>> cost_matrix)
    : TspInstance(n) {
  if (cost_matrix.size() != static_cast<std::size_t>(n)) {
    throw ShapeError("cost matrix must have n rows");
  }
  for (int i = 0; i < n; ++i) {
    const auto& row = cost_matrix[i];
    if (row.size() != static_cast<std::size_t>(n)) {
      throw ShapeError("cost matrix must be square");
    }
    for (int j = 0; j < n; ++j) {
      if (!(row[j] >= 0.0)) throw DataError("travel costs must be >= 0");
    }
    if (row[i] != 0.0) throw DataError("cost matrix diagonal must be zero");
  }
  cost_matrix_ = std::move(cost_matrix);
}

double TspInstance::cost(int from, int to) const {
  if (!cost_matrix_) throw MissingDataError("instance has no cost matrix");
  return (*cost_matrix_)[from - 1][to - 1];
}

Tour::Tour(std::vector<int> order) : order_(std::move(order)) {
  std::vector<bool> seen(order_.size() + 1, false);
  for (int c : order_) {
    if (c < 1 || c > static_cast<int>(order_.size()) || seen[c]) {
      throw InvalidTourError("tour is not a permutation of 1..n");
    }
    seen[c] = true;
  }
}

int bits_per_city(int n) {
  int k = 0;
  while ((1 << k) < n) ++k;
  return k;
}

HoboLayout::HoboLayout(int n) : n_(n), k_(0) {
  require_city_count(n, kMaxLayoutCities);
  k_ = bits_per_city(n);
}

Qubit HoboLayout::main_qubit(int slot, int bit) const {
  return static_cast<Qubit>(slot * k_ + bit);
}

std::vector<Qubit> HoboLayout::slot_qubits(int slot) const {
  std::vector<Qubit> qs;
  for (int b = 0; b < k_; ++b) qs.push_back(main_qubit(slot, b));
  return qs;
}

std::vector<Qubit> HoboLayout::main_register() const {
  std::vector<Qubit> qs(main_qubits());
  std::iota(qs.begin(), qs.end(), Qubit{0});
  return qs;
}

Qubit HoboLayout::validity_ancilla(int slot, int code) const {
  const int unused = (1 << k_) - n_;
  return static_cast<Qubit>(main_qubits() + slot * unused + (code - n_));
}

std::vector<Qubit> HoboLayout::validity_register() const {
  std::vector<Qubit> qs(valid_ancillas());
  std::iota(qs.begin(), qs.end(), static_cast<Qubit>(main_qubits()));
  return qs;
}

Qubit HoboLayout::uniqueness_ancilla(int slot_a, int slot_b) const {
  // Pairs are numbered lexicographically: (0,1), (0,2), ..., (n-2,n-1).
  const int before = slot_a * n_ - slot_a * (slot_a + 1) / 2;
  return static_cast<Qubit>(main_qubits() + valid_ancillas() + before +
                            (slot_b - slot_a - 1));
}

std::vector<Qubit> HoboLayout::uniqueness_register() const {
  std::vector<Qubit> qs(unique_ancillas());
  std::iota(qs.begin(), qs.end(),
            static_cast<Qubit>(main_qubits() + valid_ancillas()));
  return qs;
}

Bitstring encode_tour(const Tour& tour, int n) {
  if (tour.size() != n) {
    throw InvalidTourError("tour length does not match city count");
  }
  const int k = bits_per_city(n);
  Bitstring bits;
  bits.reserve(static_cast<std::size_t>(n * k));
  for (int city : tour.order()) {
    const int code = city - 1;
    for (int b = k - 1; b >= 0; --b) bits.push_back(((code >> b) & 1) ? '1' : '0');
  }
  return bits;
}

std::optional<Tour> decode_bitstring(const Bitstring& bits, int n) {
  const int k = bits_per_city(n);
  if (bits.size() != static_cast<std::size_t>(n * k)) {
    throw LengthError("bitstring length " + std::to_string(bits.size()) +
                      " != " + std::to_string(n * k));
  }
  std::vector<int> order;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int slot = 0; slot < n; ++slot) {
    int code = 0;
    for (int b = 0; b < k; ++b) {
      const char c = bits[slot * k + b];
      if (c != '0' && c != '1') throw DataError("bitstring must be binary");
      code = (code << 1) | (c == '1');
    }
    if (code >= n || seen[code]) return std::nullopt;
    seen[code] = true;
    order.push_back(code + 1);
  }
  return Tour(std::move(order));
}

bool is_feasible(const Bitstring& bits, int n) {
  return decode_bitstring(bits, n).has_value();
}

std::vector<Bitstring> enumerate_feasible(int n) {
  require_city_count(n, kMaxCities);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 1);
  std::vector<Bitstring> out;
  out.reserve(factorial(n));
  // Lexicographic permutations of fixed-width big-endian codes give
  // lexicographically sorted bitstrings.
  do {
    out.push_back(encode_tour(Tour(order), n));
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

Bitstring index_to_bitstring(std::uint64_t index, int length) {
  Bitstring bits(static_cast<std::size_t>(length), '0');
  for (int i = length - 1; i >= 0; --i, index >>= 1) {
    if (index & 1) bits[i] = '1';
  }
  return bits;
}

std::uint64_t bitstring_to_index(const Bitstring& bits) {
  std::uint64_t index = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw DataError("bitstring must be binary");
    index = (index << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return index;
}

double eval_tour_cost(const TspInstance& instance, const Tour& tour) {
  if (!instance.has_costs()) {
    throw MissingDataError("tour cost needs a cost matrix");
  }
  if (tour.size() != instance.n()) {
    throw InvalidTourError("tour length does not match city count");
  }
  double total = 0.0;
  for (int s = 0; s < tour.size(); ++s) {
    total += instance.cost(tour.city(s), tour.city((s + 1) % tour.size()));
  }
  return total;
}

AssignmentMatrix one_hot_assignment(const Tour& tour) {
  const auto n = static_cast<std::size_t>(tour.size());
  AssignmentMatrix x(n, std::vector<int>(n, 0));
  for (std::size_t t = 0; t < n; ++t) x[t][tour.order()[t] - 1] = 1;
  return x;
}

std::pair<double, double> constraint_penalties(const AssignmentMatrix& x) {
  const std::size_t n = x.size();
  double h1 = 0.0;
  double h2 = 0.0;
  for (std::size_t t = 0; t < n; ++t) {
    if (x[t].size() != n) throw ShapeError("assignment matrix must be square");
    const double row = std::accumulate(x[t].begin(), x[t].end(), 0.0);
    h1 += (1.0 - row) * (1.0 - row);
  }
  for (std::size_t i = 0; i < n; ++i) {
    double col = 0.0;
    for (std::size_t t = 0; t < n; ++t) col += x[t][i];
    h2 += (1.0 - col) * (1.0 - col);
  }
  return {h1, h2};
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

int optimal_q1(int n) {
  require_city_count(n, kMaxLayoutCities);
  const double space = std::ldexp(1.0, n * bits_per_city(n));
  const double feasible = static_cast<double>(factorial(n));
  return static_cast<int>(
      std::floor(std::numbers::pi / 4.0 * std::sqrt(space / feasible)));
}

int optimal_q2(int n, int m) {
  require_city_count(n, kMaxLayoutCities);
  if (m < 1) throw DataError("solution count m must be >= 1");
  const double feasible = static_cast<double>(factorial(n));
  return static_cast<int>(
      std::floor(std::numbers::pi / 4.0 * std::sqrt(feasible / m)));
}

}  // namespace twostep
