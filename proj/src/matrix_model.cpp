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

#include "twostep/matrix_model.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "twostep/errors.hpp"

namespace twostep {

namespace {

constexpr int kFiveCities = 5;

}  // namespace

SearchSpace::SearchSpace(SpaceMode mode, std::vector<Bitstring> basis,
                         PhaseAssignment phases)
    : mode_(mode), basis_(std::move(basis)), phases_(std::move(phases)) {}

SearchSpace SearchSpace::subspace(PhaseAssignment phases) {
  auto basis = enumerate_feasible(phases.n());
  return SearchSpace(SpaceMode::Subspace, std::move(basis), std::move(phases));
}

SearchSpace SearchSpace::fullspace(PhaseAssignment phases) {
  if (phases.n() > 4) {
    throw CapacityError("full-space model supports n <= 4");
  }
  const int bits = phases.n() * bits_per_city(phases.n());
  std::vector<Bitstring> basis;
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << bits); ++i) {
    basis.push_back(index_to_bitstring(i, bits));
  }
  return SearchSpace(SpaceMode::Fullspace, std::move(basis), std::move(phases));
}

Eigen::Index SearchSpace::index_of(const Bitstring& bits) const {
  auto it = std::lower_bound(basis_.begin(), basis_.end(), bits);
  if (it == basis_.end() || *it != bits) {
    throw DataError("'" + bits + "' is not in the search space");
  }
  return static_cast<Eigen::Index>(it - basis_.begin());
}

Eigen::VectorXcd SearchSpace::initial_state() const {
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(dimension());
  const double amp = 1.0 / std::sqrt(static_cast<double>(phases_.size()));
  for (const auto& [bits, w] : phases_.phases()) psi(index_of(bits)) = amp;
  return psi;
}

Eigen::VectorXcd build_cost_operator(const SearchSpace& space) {
  Eigen::VectorXcd diag = Eigen::VectorXcd::Ones(space.dimension());
  for (const auto& [bits, w] : space.phases().phases()) {
    diag(space.index_of(bits)) = std::polar(1.0, w);
  }
  return diag;
}

Eigen::MatrixXcd build_diffusion_operator(const SearchSpace& space) {
  const Eigen::VectorXcd psi = space.initial_state();
  return 2.0 * psi * psi.adjoint() -
         Eigen::MatrixXcd::Identity(space.dimension(), space.dimension());
}

namespace {

template <typename Visit>
void iterate(const SearchSpace& space, int t_max, Visit&& visit) {
  if (t_max < 0) throw DataError("t_max must be >= 0");
  const Eigen::VectorXcd cost = build_cost_operator(space);
  const Eigen::MatrixXcd diffusion = build_diffusion_operator(space);
  Eigen::VectorXcd psi = space.initial_state();
  for (int t = 0; t <= t_max; ++t) {
    visit(t, psi);
    if (t < t_max) psi = diffusion * cost.cwiseProduct(psi);
  }
}

}  // namespace

ProbabilitySeries evolve(const SearchSpace& space, int t_max) {
  const Eigen::Index lo = space.index_of(space.phases().min_tour());
  const Eigen::Index hi = space.index_of(space.phases().max_tour());
  ProbabilitySeries series;
  iterate(space, t_max, [&](int t, const Eigen::VectorXcd& psi) {
    series.push(t, std::norm(psi(lo)), std::norm(psi(hi)));
  });
  return series;
}

Distribution distribution_at(const SearchSpace& space, int t) {
  Distribution d;
  iterate(space, t, [&](int step, const Eigen::VectorXcd& psi) {
    if (step != t) return;
    for (Eigen::Index i = 0; i < space.dimension(); ++i) {
      d.probs.emplace(space.basis()[static_cast<std::size_t>(i)],
                      std::norm(psi(i)));
    }
  });
  return d;
}

int first_peak(const std::vector<double>& values) {
  for (std::size_t t = 1; t + 1 < values.size(); ++t) {
    if (values[t] >= values[t - 1] && values[t] >= values[t + 1]) {
      return static_cast<int>(t);
    }
  }
  if (values.empty()) throw DataError("no values to search for a peak");
  return static_cast<int>(std::max_element(values.begin(), values.end()) -
                          values.begin());
}

FiveCityResult five_city_experiment(double mu, double sigma, std::uint64_t seed,
                                   int t_max) {
  auto phases = gen_gaussian_phases(kFiveCities, mu, sigma, seed);
  const auto space = SearchSpace::subspace(phases);
  FiveCityResult result{phases, evolve(space, t_max), 0, {}};
  result.peak_t = first_peak(result.series.p_combined);
  result.at_peak = distribution_at(space, result.peak_t);
  return result;
}

std::vector<std::pair<Bitstring, double>> order_by_phase(
    const Distribution& dist, const PhaseAssignment& phases) {
  std::vector<std::pair<Bitstring, double>> ranked(dist.probs.begin(),
                                                   dist.probs.end());
  const auto& table = phases.phases();
  std::stable_sort(ranked.begin(), ranked.end(),
                   [&](const auto& a, const auto& b) {
                     auto pa = table.find(a.first);
                     auto pb = table.find(b.first);
                     if (pa == table.end()) return false;
                     if (pb == table.end()) return true;
                     return pa->second < pb->second;
                   });
  return ranked;
}

std::string series_to_csv(const ProbabilitySeries& series) {
  std::ostringstream out;
  out << "t,p_min,p_max,p_combined\n";
  char line[128];
  for (std::size_t i = 0; i < series.size(); ++i) {
    std::snprintf(line, sizeof line, "%d,%.17g,%.17g,%.17g\n", series.times[i],
                  series.p_min[i], series.p_max[i], series.p_combined[i]);
    out << line;
  }
  return out.str();
}

}  // namespace twostep
