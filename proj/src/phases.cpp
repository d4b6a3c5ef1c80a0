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

#include "twostep/phases.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include <json.hpp>

#include "twostep/errors.hpp"

namespace twostep {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxRedraws = 1'000'000;

Bitstring identity_tour(int n) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 1);
  return encode_tour(Tour(order), n);
}

Bitstring reversed_tour(int n) {
  std::vector<int> order(n);
  std::iota(order.rbegin(), order.rend(), 1);
  return encode_tour(Tour(order), n);
}

// Table values as printed, lexicographic tour order. Only the pinned
// extremes are known beyond the printed digits.
const std::vector<double>& builtin_values(int n) {
  static const std::vector<double> n3 = {
      kPi / 2, 2.961, 3.685, 2.931, 3.501, 3 * kPi / 2,
  };
  static const std::vector<double> n4 = {
      kPi / 2, 2.961, 3.685, 2.931, 3.501, 3.351, 2.798, 4.169,
      3.304,   2.989, 3.372, 2.719, 3.584, 3.148, 3.194, 2.871,
      2.796,   2.673, 2.832, 3.217, 2.691, 3.548, 3.290, 3 * kPi / 2,
  };
  return n == 3 ? n3 : n4;
}

}  // namespace

PhaseAssignment::PhaseAssignment(int n, std::map<Bitstring, double> phases)
    : n_(n), phases_(std::move(phases)) {
  if (n < 2 || n > kMaxCities) {
    throw CapacityError("phase assignments support 2 <= n <= " +
                        std::to_string(kMaxCities));
  }
  const auto feasible = enumerate_feasible(n);
  if (phases_.size() != feasible.size()) {
    throw DataError("expected " + std::to_string(feasible.size()) +
                    " phases, got " + std::to_string(phases_.size()));
  }
  auto it = phases_.begin();
  for (const auto& bits : feasible) {
    if (it->first != bits) {
      throw DataError("phase key '" + it->first + "' is not a feasible tour");
    }
    if (!std::isfinite(it->second) || it->second <= 0.0 ||
        it->second >= 2 * kPi) {
      throw DataError("phase for '" + bits + "' outside (0, 2pi)");
    }
    ++it;
  }

  auto lo = phases_.begin();
  auto hi = phases_.begin();
  for (auto p = phases_.begin(); p != phases_.end(); ++p) {
    if (p->second < lo->second) lo = p;
    if (p->second > hi->second) hi = p;
  }
  int lo_count = 0;
  int hi_count = 0;
  for (const auto& [bits, w] : phases_) {
    lo_count += (w == lo->second);
    hi_count += (w == hi->second);
  }
  if (lo_count != 1 || hi_count != 1) {
    throw DataError("minimum and maximum phases must be unique");
  }
  min_tour_ = lo->first;
  max_tour_ = hi->first;
}

double PhaseAssignment::phase(const Bitstring& tour) const {
  auto it = phases_.find(tour);
  if (it == phases_.end()) throw DataError("no phase for '" + tour + "'");
  return it->second;
}

PhaseAssignment builtin_phases(int n) {
  if (n != 3 && n != 4) {
    throw NoBuiltinError("no builtin phase dataset for n = " +
                         std::to_string(n));
  }
  const auto tours = enumerate_feasible(n);
  const auto& values = builtin_values(n);
  std::map<Bitstring, double> phases;
  for (std::size_t i = 0; i < tours.size(); ++i) phases[tours[i]] = values[i];
  return PhaseAssignment(n, std::move(phases));
}

PhaseAssignment gen_gaussian_phases(int n, double mu, double sigma,
                                    std::uint64_t seed) {
  if (n < 2 || n > kMaxCities) {
    throw CapacityError("gaussian phases support 2 <= n <= " +
                        std::to_string(kMaxCities));
  }
  if (!(sigma > 0.0) || !std::isfinite(mu)) {
    throw DataError("gaussian phases need finite mu and sigma > 0");
  }
  const Bitstring lowest = identity_tour(n);
  const Bitstring highest = reversed_tour(n);

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(mu, sigma);
  std::map<Bitstring, double> phases;
  for (const auto& bits : enumerate_feasible(n)) {
    if (bits == lowest) {
      phases[bits] = kPi / 2;
    } else if (bits == highest) {
      phases[bits] = 3 * kPi / 2;
    } else {
      double w = normal(rng);
      int redraws = 0;
      while (!(w > kPi / 2 && w < 3 * kPi / 2)) {
        if (++redraws > kMaxRedraws) {
          throw DataError("gaussian draws never land inside (pi/2, 3pi/2)");
        }
        w = normal(rng);
      }
      phases[bits] = w;
    }
  }
  return PhaseAssignment(n, std::move(phases));
}

std::string phases_to_json(const PhaseAssignment& phases) {
  nlohmann::ordered_json doc;
  doc["n"] = phases.n();
  doc["phases"] = nlohmann::ordered_json::object();
  for (const auto& [bits, w] : phases.phases()) doc["phases"][bits] = w;
  return doc.dump(2) + "\n";
}

PhaseAssignment phases_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DataError(std::string("phase dataset is not valid JSON: ") +
                    e.what());
  }
  if (!doc.is_object() || !doc.contains("n") ||
      !doc["n"].is_number_integer() || !doc.contains("phases") ||
      !doc["phases"].is_object()) {
    throw DataError("phase dataset needs integer 'n' and object 'phases'");
  }
  std::map<Bitstring, double> phases;
  for (const auto& [bits, w] : doc["phases"].items()) {
    if (!w.is_number()) throw DataError("phase for '" + bits + "' not numeric");
    phases[bits] = w.get<double>();
  }
  const int n = doc["n"].get<int>();
  try {
    return PhaseAssignment(n, std::move(phases));
  } catch (const CapacityError& e) {
    throw DataError(e.what());
  }
}

}  // namespace twostep
