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
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "twostep/phases.hpp"
#include "twostep/statevector.hpp"

namespace twostep {

enum class SpaceMode { Subspace, Fullspace };

/// Basis in which the cost-phase search is modelled at operator level:
/// either the n! tour states, or every 2^(nk) main-register string.
class SearchSpace {
 public:
  static SearchSpace subspace(PhaseAssignment phases);
  /// Throws CapacityError for n > 4.
  static SearchSpace fullspace(PhaseAssignment phases);

  SpaceMode mode() const { return mode_; }
  const std::vector<Bitstring>& basis() const { return basis_; }
  const PhaseAssignment& phases() const { return phases_; }
  Eigen::Index dimension() const {
    return static_cast<Eigen::Index>(basis_.size());
  }
  Eigen::Index index_of(const Bitstring& bits) const;
  /// Uniform superposition over the tour states.
  Eigen::VectorXcd initial_state() const;

 private:
  SearchSpace(SpaceMode mode, std::vector<Bitstring> basis,
              PhaseAssignment phases);

  SpaceMode mode_;
  std::vector<Bitstring> basis_;
  PhaseAssignment phases_;
};

/// Diagonal of the cost oracle: e^{iW(T)} on tours, 1 on other strings.
Eigen::VectorXcd build_cost_operator(const SearchSpace& space);
/// 2|psi0><psi0| - I with psi0 uniform over the tours.
Eigen::MatrixXcd build_diffusion_operator(const SearchSpace& space);

struct ProbabilitySeries {
  std::vector<int> times;
  std::vector<double> p_min;
  std::vector<double> p_max;
  std::vector<double> p_combined;

  std::size_t size() const { return times.size(); }
  void push(int t, double lo, double hi) {
    times.push_back(t);
    p_min.push_back(lo);
    p_max.push_back(hi);
    p_combined.push_back(lo + hi);
  }
  bool operator==(const ProbabilitySeries&) const = default;
};

/// Iterates psi(t+1) = D R psi(t) from the uniform tour state for
/// t = 0..t_max and records the extreme-tour probabilities.
ProbabilitySeries evolve(const SearchSpace& space, int t_max);

/// Probability of every basis string after t iterations.
Distribution distribution_at(const SearchSpace& space, int t);

/// First interior t with values[t] >= both neighbours; global argmax when
/// there is none.
int first_peak(const std::vector<double>& values);

struct FiveCityResult {
  PhaseAssignment phases;
  ProbabilitySeries series;
  int peak_t = 0;
  Distribution at_peak;
};

/// Five-city Gaussian experiment: generate phases, evolve in the tour
/// subspace and report the distribution at the first p_combined peak.
FiveCityResult five_city_experiment(double mu, double sigma, std::uint64_t seed,
                                   int t_max);

/// Distribution entries ordered by ascending tour phase; strings without a
/// phase (infeasible) follow in lexicographic order.
std::vector<std::pair<Bitstring, double>> order_by_phase(
    const Distribution& dist, const PhaseAssignment& phases);

/// `t,p_min,p_max,p_combined` with a header line.
std::string series_to_csv(const ProbabilitySeries& series);

}  // namespace twostep
