#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>

#include "qseal/error.hpp"
#include "qseal/states.hpp"
#include "test_support.hpp"

namespace qseal {
namespace {

constexpr Qubit kAll[] = {Qubit::zero(), Qubit::one(), Qubit::plus(), Qubit::minus()};
constexpr Axis kAxes[] = {Axis::kComputational, Axis::kDiagonal};

TEST(Measure, SameAxisIsDeterministicAndUndisturbing) {
  RandomSource rng(1);
  auto m = measure(Qubit::zero(), Axis::kComputational, rng);
  EXPECT_EQ(m.outcome, 0U);
  EXPECT_EQ(m.collapsed, Qubit::zero());

  m = measure(Qubit::plus(), Axis::kDiagonal, rng);
  EXPECT_EQ(m.outcome, 0U);
  EXPECT_EQ(m.collapsed, Qubit::plus());
}

TEST(Measure, CrossAxisOutcomeIsFair) {
  constexpr int kTrials = 100000;
  for (const Qubit q : kAll) {
    const Axis other = q.axis == Axis::kComputational ? Axis::kDiagonal : Axis::kComputational;
    RandomSource rng(42 + q.eigenbit + 2 * static_cast<unsigned>(q.axis));
    int ones = 0;
    for (int i = 0; i < kTrials; ++i) {
      const auto m = measure(q, other, rng);
      ones += static_cast<int>(m.outcome);
      ASSERT_EQ(m.collapsed, (Qubit{other, m.outcome}));
    }
    const double freq = static_cast<double>(ones) / kTrials;
    EXPECT_LE(std::abs(freq - 0.5), 3.0 * std::sqrt(kTrials / 4.0) / kTrials) << q.symbol();
  }
}

TEST(Measure, RepeatedSameAxisMeasurementIsIdempotent) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    RandomSource rng(seed);
    for (const Qubit q : kAll) {
      for (const Axis a : kAxes) {
        const auto first = measure(q, a, rng);
        const auto second = measure(first.collapsed, a, rng);
        EXPECT_EQ(first.outcome, second.outcome);
        EXPECT_EQ(first.collapsed, second.collapsed);
      }
    }
  }
}

TEST(Register, MeasureCollapsesInPlace) {
  auto reg = QubitRegister::from_string("0+-1");
  RandomSource rng(3);
  const unsigned o = reg.measure(2, Axis::kComputational, rng);
  EXPECT_EQ(reg.at(2), (Qubit{Axis::kComputational, o}));
  EXPECT_EQ(reg.to_string().size(), 4U);
  EXPECT_THROW(reg.at(0), Error);
  EXPECT_THROW(reg.at(5), Error);
}

TEST(Register, SymbolRoundTrip) {
  EXPECT_EQ(QubitRegister::from_string("01+-").to_string(), "01+-");
  EXPECT_THROW(QubitRegister::from_string("0x"), Error);
}

TEST(RegisterToDensity, SingleQubitCases) {
  const auto zero = register_to_density(QubitRegister::from_string("0"));
  EXPECT_EQ(zero(0, 0), Complex(1.0));
  EXPECT_EQ(zero(0, 1), Complex(0.0));
  EXPECT_EQ(zero(1, 1), Complex(0.0));

  const auto plus = register_to_density(QubitRegister::from_string("+"));
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) EXPECT_NEAR(std::abs(plus(r, c) - Complex(0.5)), 0.0, 1e-15);
}

TEST(RegisterToDensity, TwoQubitProductMatchesDirectKron) {
  const auto rho = register_to_density(QubitRegister::from_string("0-"));
  const auto expected = testing::kron(testing::single_projector(0), testing::single_projector(3));
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) EXPECT_NEAR(std::abs(rho(r, c) - expected[r][c]), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(rho.trace() - Complex(1.0)), 0.0, 1e-12);
  EXPECT_NEAR(rho.purity(), 1.0, 1e-12);
  EXPECT_TRUE(rho.is_valid_state());
}

TEST(RegisterToDensity, RespectsCap) {
  EXPECT_THROW(register_to_density(QubitRegister::from_string("0000"), 3), Error);
  try {
    register_to_density(QubitRegister::from_string("0000"), 3);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOracleCapExceeded);
  }
}

TEST(RegisterToDensity, CapReadsEnvironment) {
  ::setenv("QSEAL_ORACLE_CAP", "2", 1);
  EXPECT_EQ(oracle_cap(), 2U);
  EXPECT_THROW(register_to_density(QubitRegister::from_string("000")), Error);
  ::unsetenv("QSEAL_ORACLE_CAP");
  EXPECT_EQ(oracle_cap(), kDefaultOracleCap);
}

TEST(DenseBridge, BornProbabilitiesMatchSymbolicMeasurement) {
  for (const Qubit q : kAll) {
    const auto rho = register_to_density(QubitRegister({q}));
    for (const Axis a : kAxes) {
      for (unsigned outcome = 0; outcome < 2; ++outcome) {
        const double born = rho.expectation(QubitRegister({Qubit{a, outcome}}));
        const double symbolic = q.axis == a ? (q.eigenbit == outcome ? 1.0 : 0.0) : 0.5;
        EXPECT_NEAR(born, symbolic, 1e-15) << q.symbol() << " axis " << static_cast<int>(a);
      }
    }
  }
}

TEST(ApplyPauli, Examples) {
  const auto zero = PureState::basis(1, 0);
  EXPECT_NEAR(fidelity(apply_pauli(zero, 1, Pauli::kX), PureState::basis(1, 1)), 1.0, 1e-12);
  EXPECT_NEAR(fidelity(apply_pauli(zero, 1, Pauli::kI), zero), 1.0, 1e-12);

  const auto plus = PureState::from_qubit(Qubit::plus());
  const auto flipped = apply_pauli(plus, 1, Pauli::kZ);
  const auto minus = PureState::from_qubit(Qubit::minus());
  for (std::size_t i = 0; i < 2; ++i) EXPECT_NEAR(std::abs(flipped.amplitudes()[i] - minus.amplitudes()[i]), 0.0, 1e-15);
}

TEST(ApplyPauli, PositionOneIsMostSignificant) {
  // |00> with X on position 1 -> |10>, basis index 2.
  const auto out = apply_pauli(PureState::basis(2, 0), 1, Pauli::kX);
  EXPECT_NEAR(std::abs(out.amplitudes()[2]), 1.0, 1e-15);
  EXPECT_THROW(apply_pauli(PureState::basis(2, 0), 3, Pauli::kX), Error);
}

TEST(ApplyPauli, InvolutionAndNormPreservation) {
  RandomSource rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const auto psi = PureState::random(3, rng);
    for (Position p = 1; p <= 3; ++p) {
      for (Pauli s : {Pauli::kI, Pauli::kX, Pauli::kY, Pauli::kZ}) {
        const auto once = apply_pauli(psi, p, s);
        EXPECT_NEAR(once.norm_squared(), 1.0, 1e-12);
        EXPECT_NEAR(fidelity(apply_pauli(once, p, s), psi), 1.0, 1e-12);
      }
    }
  }
}

TEST(PureState, MeasurementCollapsesConsistently) {
  RandomSource rng(5);
  auto psi = PureState::random(3, rng);
  const unsigned o = psi.measure(2, rng);
  EXPECT_NEAR(psi.norm_squared(), 1.0, 1e-12);
  auto again = psi;
  EXPECT_EQ(again.measure(2, rng), o);
}

TEST(RandomSource, ReproducibleAndDerivedStreamsIndependentOfParentUse) {
  RandomSource a(77), b(77);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(a.next_u64(), b.next_u64());
  RandomSource fresh(77);
  auto c1 = a.child(5);
  auto c2 = fresh.child(5);
  EXPECT_EQ(c1.next_u64(), c2.next_u64());
  EXPECT_NE(RandomSource(77).child(4).next_u64(), RandomSource(77).child(5).next_u64());
}

TEST(RandomSource, BelowStaysInRangeAndCoversIt) {
  RandomSource rng(11);
  std::vector<int> seen(7);
  for (int i = 0; i < 7000; ++i) {
    const auto v = rng.below(7);
    ASSERT_LT(v, 7U);
    ++seen[v];
  }
  for (int count : seen) EXPECT_GT(count, 800);
}

}  // namespace
}  // namespace qseal
