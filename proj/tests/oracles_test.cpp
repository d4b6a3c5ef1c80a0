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

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "gtest/gtest.h"
#include "twostep/errors.hpp"
#include "twostep/statevector.hpp"

using namespace twostep;

namespace {

constexpr double kPi = std::numbers::pi;
using Matrix = Eigen::MatrixXcd;

// Classical evaluation of X/CX/MCX-only circuits on a bit vector.
std::vector<bool> run_classical(const Circuit& c, std::vector<bool> bits) {
  for (const auto& g : c.gates()) {
    bool fire = true;
    for (Qubit q : g.controls()) fire = fire && bits[q];
    switch (g.kind()) {
      case GateKind::NotGate:
      case GateKind::ControlledNot:
      case GateKind::MultiControlledNot:
        if (fire) bits[g.target()] = !bits[g.target()];
        break;
      default:
        ADD_FAILURE() << "non-classical gate in reversible block";
    }
  }
  return bits;
}

std::vector<bool> with_main(const HoboLayout& l, std::uint64_t main) {
  std::vector<bool> bits(static_cast<std::size_t>(l.width()), false);
  const int m = l.main_qubits();
  for (int q = 0; q < m; ++q) bits[q] = (main >> (m - 1 - q)) & 1;
  return bits;
}

int slot_code(const HoboLayout& l, std::uint64_t main, int slot) {
  const int m = l.main_qubits();
  return static_cast<int>((main >> (m - (slot + 1) * l.k())) &
                          ((1u << l.k()) - 1));
}

// |main, 0..0, -> over the full layout.
StateVector marked_basis(const HoboLayout& l, std::uint64_t main) {
  StateVector s(l.width());
  s[0] = 0.0;
  s[full_index(l, main, false)] = std::numbers::sqrt2 / 2;
  s[full_index(l, main, true)] = -std::numbers::sqrt2 / 2;
  return s;
}

Eigen::VectorXcd main_amplitudes(const StateVector& s, const HoboLayout& l) {
  const std::uint64_t dim = std::uint64_t{1} << l.main_qubits();
  Eigen::VectorXcd v(static_cast<Eigen::Index>(dim));
  const double r = std::numbers::sqrt2 / 2;
  for (std::uint64_t m = 0; m < dim; ++m) {
    v(static_cast<Eigen::Index>(m)) =
        r * (s[full_index(l, m, false)] - s[full_index(l, m, true)]);
  }
  return v;
}

// Returns the phase c minimising |a - c b| and checks |c| = 1.
std::complex<double> global_phase(const Matrix& a, const Matrix& b) {
  const std::complex<double> overlap = (b.adjoint() * a).trace();
  return overlap / std::abs(overlap);
}

Matrix reflection(const Eigen::VectorXcd& axis) {
  return 2.0 * axis * axis.adjoint() -
         Matrix::Identity(axis.size(), axis.size());
}

}  // namespace

TEST(Validity, flags_out_of_range_codes) {
  for (int n : {3, 5}) {
    const HoboLayout l(n);
    const Circuit c = build_validity_suboracle(l);
    EXPECT_EQ(l.valid_ancillas(), ((1 << l.k()) - n) * n);
    for (std::uint64_t main = 0; main < (std::uint64_t{1} << l.main_qubits());
         ++main) {
      const auto out = run_classical(c, with_main(l, main));
      const auto in = with_main(l, main);
      for (int q = 0; q < l.main_qubits(); ++q) ASSERT_EQ(out[q], in[q]);
      for (int slot = 0; slot < n; ++slot) {
        for (int code = n; code < (1 << l.k()); ++code) {
          ASSERT_EQ(out[l.validity_ancilla(slot, code)],
                    slot_code(l, main, slot) == code);
        }
      }
    }
  }
}

TEST(Validity, three_cities_one_ancilla_per_slot) {
  const HoboLayout l(3);
  const Circuit c = build_validity_suboracle(l);
  int mcx = 0;
  for (const auto& g : c.gates()) mcx += g.kind() == GateKind::MultiControlledNot;
  EXPECT_EQ(mcx, 3);
  // Code "11" needs no NotGate conjugation.
  EXPECT_EQ(c.size(), 3u);
}

TEST(Validity, empty_for_power_of_two) {
  EXPECT_TRUE(build_validity_suboracle(HoboLayout(4)).empty());
  EXPECT_TRUE(build_validity_suboracle(HoboLayout(2)).empty());
}

TEST(Uniqueness, truth_table_four_cities) {
  const HoboLayout l(4);
  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) {
      const Circuit c = build_uniqueness_suboracle(l, a, b);
      for (std::uint64_t main = 0; main < 256; ++main) {
        const auto ca = slot_code(l, main, a);
        const auto cb = slot_code(l, main, b);
        const auto s = run(c, StateVector::basis(l.width(), main << 7));
        const std::uint64_t pair_bit =
            std::uint64_t{1} << (l.width() - 1 - l.uniqueness_ancilla(a, b));
        const std::uint64_t expected = (main << 7) | (ca != cb ? pair_bit : 0);
        ASSERT_NEAR(std::abs(s[expected]), 1.0, 1e-12)
            << "slots " << a << "," << b << " main " << main;
      }
    }
  }
}

TEST(Uniqueness, rejects_bad_slots) {
  const HoboLayout l(3);
  EXPECT_THROW(build_uniqueness_suboracle(l, 1, 1), DataError);
  EXPECT_THROW(build_uniqueness_suboracle(l, 2, 1), DataError);
  EXPECT_THROW(build_uniqueness_suboracle(l, 0, 3), DataError);
}

TEST(OracleR1, flips_exactly_feasible_and_restores_ancillas) {
  for (int n : {2, 3, 4}) {
    const HoboLayout l(n);
    const Circuit r1 = build_oracle_r1(l);
    int flipped = 0;
    for (std::uint64_t main = 0; main < (std::uint64_t{1} << l.main_qubits());
         ++main) {
      const auto s = run(r1, marked_basis(l, main));
      const double r = std::numbers::sqrt2 / 2;
      const auto a0 = s[full_index(l, main, false)];
      const auto a1 = s[full_index(l, main, true)];
      // Output must be +-|main, 0, ->.
      ASSERT_NEAR(std::norm(a0) + std::norm(a1), 1.0, 1e-10);
      ASSERT_NEAR(std::abs(a0 + a1), 0.0, 1e-10);
      const double sign = a0.real() / r;
      const bool feasible = is_feasible(index_to_bitstring(main, l.main_qubits()), n);
      ASSERT_NEAR(sign, feasible ? -1.0 : 1.0, 1e-10) << main;
      flipped += sign < 0;
    }
    EXPECT_EQ(static_cast<std::uint64_t>(flipped), factorial(n));
  }
}

TEST(OracleR1, direct_examples) {
  const HoboLayout l(3);
  const Circuit r1 = build_oracle_r1(l);
  const double r = std::numbers::sqrt2 / 2;
  auto feasible = run(r1, marked_basis(l, bitstring_to_index("000110")));
  EXPECT_NEAR(feasible[full_index(l, bitstring_to_index("000110"), false)].real(),
              -r, 1e-12);
  auto penalized = run(r1, marked_basis(l, bitstring_to_index("001111")));
  EXPECT_NEAR(penalized[full_index(l, bitstring_to_index("001111"), false)].real(),
              r, 1e-12);
}

TEST(DiffusionD1, reflects_about_uniform_state) {
  const HoboLayout l(3);
  const Matrix d1 = main_register_operator(build_diffusion_d1(l));
  const Eigen::VectorXcd s = Eigen::VectorXcd::Constant(64, 1.0 / 8.0);
  const Matrix expected = reflection(s);
  const auto phase = global_phase(d1, expected);
  EXPECT_NEAR(std::abs(phase - std::complex<double>(-1.0, 0.0)), 0.0, 1e-12);
  EXPECT_LT((d1 - phase * expected).norm(), 1e-10);

  // Uniform state fixed, orthogonal states negated (relative to each other).
  const Eigen::VectorXcd fixed = d1 * s;
  EXPECT_LT((fixed - phase * s).norm(), 1e-10);
  Eigen::VectorXcd orth = Eigen::VectorXcd::Zero(64);
  orth(0) = 1.0 / std::sqrt(2.0);
  orth(1) = -1.0 / std::sqrt(2.0);
  EXPECT_LT((d1 * orth + phase * orth).norm(), 1e-10);
}

TEST(G1, feasible_mass_follows_grover_rotation) {
  for (int n : {3, 4}) {
    const HoboLayout l(n);
    const double ratio =
        static_cast<double>(factorial(n)) / std::ldexp(1.0, l.main_qubits());
    const double theta = std::asin(std::sqrt(ratio));
    for (int q1 = 0; q1 <= 3; ++q1) {
      const auto s = run(build_two_step(l, builtin_phases(n), {q1, 0}),
                         StateVector(l.width()));
      const auto dist = main_distribution(s, l);
      std::set<Bitstring> feasible;
      for (const auto& b : enumerate_feasible(n)) feasible.insert(b);
      EXPECT_NEAR(success_probability(dist, feasible),
                  std::pow(std::sin((2 * q1 + 1) * theta), 2), 1e-10)
          << "n=" << n << " q1=" << q1;
    }
  }
}

TEST(G1, gate_counts_for_three_cities) {
  // Validity: 3 MCX. Each of 3 pairs: 4 CX, 5 X, 1 MCX. R1 computes,
  // conjugates 3 validity ancillas around the marker MCX, and uncomputes.
  // D1: 12 H, 12 X, 1 MCPHASE.
  const auto m = metrics(build_g1(HoboLayout(3)));
  EXPECT_EQ(m.gate_counts.at("CX"), 24);
  EXPECT_EQ(m.gate_counts.at("X"), 2 * 15 + 6 + 12);
  EXPECT_EQ(m.gate_counts.at("MCX"), 2 * 6 + 1);
  EXPECT_EQ(m.gate_counts.at("H"), 12);
  EXPECT_EQ(m.gate_counts.at("MCPHASE"), 1);
  EXPECT_EQ(m.total_gates, 98u);
}

TEST(CostOracleR2, single_tour_phase) {
  const HoboLayout l(4);
  const Matrix r2 = main_register_operator(build_cost_oracle_r2(l, builtin_phases(4)));
  const auto idx = static_cast<Eigen::Index>(bitstring_to_index("00011011"));
  EXPECT_LT(std::abs(r2(idx, idx) - std::polar(1.0, kPi / 2)), 1e-10);
}

TEST(CostOracleR2, dense_matrix_is_the_phase_diagonal) {
  const HoboLayout l(3);
  const auto phases = builtin_phases(3);
  const Matrix r2 = main_register_operator(build_cost_oracle_r2(l, phases));
  Matrix expected = Matrix::Identity(64, 64);
  for (const auto& [bits, w] : phases.phases()) {
    const auto i = static_cast<Eigen::Index>(bitstring_to_index(bits));
    expected(i, i) = std::polar(1.0, w);
  }
  EXPECT_LT((r2 - expected).norm(), 1e-10);
}

TEST(CostOracleR2, rejects_mismatched_phases) {
  EXPECT_THROW(build_cost_oracle_r2(HoboLayout(4), builtin_phases(3)),
               ShapeError);
}

TEST(DiffusionD2, reflects_about_prepared_state) {
  const HoboLayout l(3);
  const int q1 = 2;
  const auto prepared =
      main_amplitudes(run(build_feasible_preparation(l, q1), marked_basis(l, 0)), l);
  EXPECT_NEAR(prepared.norm(), 1.0, 1e-10);

  const Matrix d2 = main_register_operator(build_d2(l, q1));
  const Matrix expected = reflection(prepared);
  const auto phase = global_phase(d2, expected);
  EXPECT_NEAR(std::abs(phase - std::complex<double>(-1.0, 0.0)), 0.0, 1e-10);
  EXPECT_LT((d2 - phase * expected).norm(), 1e-10);
  EXPECT_LT((d2 * d2 - Matrix::Identity(64, 64)).norm(), 1e-9);

  EXPECT_LT((d2 * prepared - phase * prepared).norm(), 1e-10);
  Eigen::VectorXcd orth = Eigen::VectorXcd::Zero(64);
  orth(bitstring_to_index("001111")) = 1.0;
  orth -= prepared.dot(orth) * prepared;
  orth.normalize();
  EXPECT_LT((d2 * orth + phase * orth).norm(), 1e-10);
}

TEST(TwoStep, widths_and_uniform_start) {
  EXPECT_EQ(build_two_step(HoboLayout(3), builtin_phases(3), {2, 1}).width(), 13);
  EXPECT_EQ(build_two_step(HoboLayout(4), builtin_phases(4), {2, 2}).width(), 15);
  const HoboLayout l(3);
  const auto dist = main_distribution(
      run(build_two_step(l, builtin_phases(3), {0, 0}), StateVector(l.width())), l);
  ASSERT_EQ(dist.probs.size(), 64u);
  for (const auto& [bits, p] : dist.probs) EXPECT_NEAR(p, 1.0 / 64, 1e-12);
}

TEST(TwoStep, composes_published_builders) {
  for (int n : {3, 4}) {
    const HoboLayout l(n);
    const auto phases = builtin_phases(n);
    const Schedule sched{2, 2};
    Circuit expected(l);
    expected.add(Gate::x(l.marker())).add(Gate::h(l.marker()));
    for (Qubit q : l.main_register()) expected.add(Gate::h(q));
    for (int i = 0; i < sched.q1; ++i) {
      expected.append(build_oracle_r1(l)).append(build_diffusion_d1(l));
    }
    for (int i = 0; i < sched.q2; ++i) {
      expected.append(build_cost_oracle_r2(l, phases)).append(build_d2(l, sched.q1));
    }
    EXPECT_EQ(build_two_step(l, phases, sched), expected);
  }
}

TEST(TwoStep, every_builder_preserves_norm) {
  const HoboLayout l(3);
  const auto phases = builtin_phases(3);
  std::mt19937_64 rng(5);
  std::normal_distribution<double> g;
  StateVector s(l.width());
  for (auto& a : s.amplitudes()) a = {g(rng), g(rng)};
  const double norm = std::sqrt(s.norm_squared());
  for (auto& a : s.amplitudes()) a /= norm;
  for (const Circuit& c :
       {build_validity_suboracle(l), build_uniqueness_suboracle(l, 0, 2),
        build_oracle_r1(l), build_diffusion_d1(l), build_g1(l),
        build_cost_oracle_r2(l, phases), build_d2(l, 2),
        build_two_step(l, phases, {2, 1})}) {
    EXPECT_NEAR(run(c, s).norm_squared(), 1.0, 1e-10);
  }
}

TEST(TwoStep, rejects_negative_schedule) {
  EXPECT_THROW(build_two_step(HoboLayout(3), builtin_phases(3), {-1, 0}),
               DataError);
  EXPECT_THROW(build_d2(HoboLayout(3), -1), DataError);
}
