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
#include <map>
#include <string>

#include "twostep/tsp.hpp"

namespace twostep {

/// Cost phase (radians) of every feasible tour of an n-city instance.
///
/// Construction checks that the keys are exactly the n! feasible bitstrings,
/// that every phase lies in the open interval (0, 2*pi), and that the minimum
/// and maximum phases are each attained by a single tour.
class PhaseAssignment {
 public:
  PhaseAssignment(int n, std::map<Bitstring, double> phases);

  int n() const { return n_; }
  std::size_t size() const { return phases_.size(); }
  const std::map<Bitstring, double>& phases() const { return phases_; }
  double phase(const Bitstring& tour) const;
  const Bitstring& min_tour() const { return min_tour_; }
  const Bitstring& max_tour() const { return max_tour_; }

  bool operator==(const PhaseAssignment& o) const {
    return n_ == o.n_ && phases_ == o.phases_;
  }

 private:
  int n_;
  std::map<Bitstring, double> phases_;
  Bitstring min_tour_;
  Bitstring max_tour_;
};

/// Embedded cost-phase datasets for n = 3 and n = 4.
PhaseAssignment builtin_phases(int n);

/// Identity tour pinned to pi/2, reversed tour pinned to 3*pi/2, every other
/// tour drawn from N(mu, sigma^2) and redrawn until it lands strictly inside
/// (pi/2, 3*pi/2). Draws follow lexicographic tour order.
PhaseAssignment gen_gaussian_phases(int n, double mu, double sigma,
                                    std::uint64_t seed);

/// {"n": int, "phases": {"<bitstring>": radians, ...}}
std::string phases_to_json(const PhaseAssignment& phases);
/// Throws DataError on malformed documents or invalid assignments.
PhaseAssignment phases_from_json(const std::string& text);

}  // namespace twostep
