#include <gtest/gtest.h>

#include <random>

#include "nctorus/phase_scalar.hpp"
#include "test_support.hpp"

namespace nctorus {
namespace {

PhaseScalar z(long p, unsigned long q) { return PhaseScalar::root(Rational(p, q)); }
const PhaseScalar Q = PhaseScalar::q_power(1);

TEST(PhaseScalar, MultiplicationExamples) {
  EXPECT_TRUE((Q * PhaseScalar::q_power(-1)).is_one());
  EXPECT_TRUE((z(1, 3) * z(1, 3) * z(1, 3)).is_one());
  // 1/2 + 1/3 = 5/6 and 1 + 2 = 3
  EXPECT_EQ((z(1, 2) * Q) * (z(1, 3) * PhaseScalar::q_power(2)), z(5, 6) * PhaseScalar::q_power(3));
}

TEST(PhaseScalar, AdditionRecognizesCyclotomicRelations) {
  EXPECT_TRUE((z(1, 3) + z(2, 3) + 1).is_zero());
  EXPECT_TRUE((Q + PhaseScalar(-1) * Q).is_zero());
  EXPECT_EQ(z(1, 4) + z(1, 4), PhaseScalar(2) * z(1, 4));
  EXPECT_EQ((z(1, 4) + z(1, 4)).str(), "2*z(1/4)");
  // sum of all 12th roots of unity vanishes, mixing conductors 12, 6, 4, 3, 2
  PhaseScalar s;
  for (long p = 0; p < 12; ++p) s += z(p, 12);
  EXPECT_TRUE(s.is_zero());
}

TEST(PhaseScalar, ZeroTest) {
  EXPECT_TRUE(scalar_is_zero(PhaseScalar()));
  EXPECT_TRUE(scalar_is_zero(z(1, 3) + z(2, 3) + 1));
  EXPECT_FALSE(scalar_is_zero(PhaseScalar(1) + Q));
  // distinct Q powers never cancel, even with cyclotomic coefficients
  EXPECT_FALSE(scalar_is_zero(z(1, 3) * Q + z(2, 3) * PhaseScalar::q_power(2) + 1));
}

TEST(PhaseScalar, CanonicalText) {
  EXPECT_EQ(PhaseScalar::term(Rational(3, 2), Rational(1, 6), 2).str(), "3/2*z(1/6)*Q^2");
  EXPECT_EQ((PhaseScalar(1) + PhaseScalar::q_power(-1)).str(), "1+Q^-1");
  EXPECT_EQ(PhaseScalar().str(), "0");
  EXPECT_EQ((-Q).str(), "-Q");
  // a rational multiple of one root is written with a positive factor
  EXPECT_EQ(z(5, 6).str(), "z(5/6)");
  EXPECT_EQ((-z(1, 3)).str(), "z(5/6)");
  EXPECT_EQ((z(1, 5) + z(2, 5)).str(), "z(1/5)+z(2/5)");
  EXPECT_EQ(z(1, 2).str(), "-1");
}

TEST(PhaseScalar, Conjugation) {
  EXPECT_EQ(Q.conj(), PhaseScalar::q_power(-1));
  EXPECT_EQ(z(1, 5).conj(), z(4, 5));
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const auto a = testing::random_scalar(rng);
    const auto b = testing::random_scalar(rng);
    EXPECT_EQ(a.conj().conj(), a);
    EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
  }
}

TEST(PhaseScalar, RingAxiomsOnRandomTriples) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const auto a = testing::random_scalar(rng);
    const auto b = testing::random_scalar(rng);
    const auto c = testing::random_scalar(rng);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(a + b, b + a);
    ASSERT_TRUE((a - a).is_zero());
  }
}

TEST(PhaseScalar, SingleTermInverse) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const auto a = testing::random_scalar(rng, 1);
    if (a.is_zero()) continue;
    EXPECT_TRUE((a * a.inverse()).is_one()) << a.str();
  }
  // a single Q-power with a non-trivial cyclotomic coefficient is still a unit
  const PhaseScalar c = (PhaseScalar(2) + z(1, 7)) * PhaseScalar::q_power(3);
  EXPECT_TRUE((c * c.inverse()).is_one());
  EXPECT_THROW((PhaseScalar(1) + Q).inverse(), std::domain_error);
  EXPECT_THROW(PhaseScalar().inverse(), std::domain_error);
}

TEST(PhaseScalar, NumericEmbeddingCommutesWithOperations) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> theta(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const auto a = testing::random_scalar(rng, 4, 3);
    const auto b = testing::random_scalar(rng, 4, 3);
    const double t = theta(rng);
    EXPECT_LT(std::abs((a * b).evaluate(t) - a.evaluate(t) * b.evaluate(t)), 1e-9);
    EXPECT_LT(std::abs((a + b).evaluate(t) - (a.evaluate(t) + b.evaluate(t))), 1e-9);
    EXPECT_LT(std::abs(a.conj().evaluate(t) - std::conj(a.evaluate(t))), 1e-9);
  }
}

TEST(PhaseScalar, SubstitutionsAndSpecialization) {
  EXPECT_EQ(Q.scale_q(6), PhaseScalar::q_power(6));
  EXPECT_EQ((PhaseScalar(1) + Q).scale_q(-2), PhaseScalar(1) + PhaseScalar::q_power(-2));
  // Q^3 = 1 turns 1 + Q + Q^2 into a vanishing character sum
  EXPECT_TRUE((PhaseScalar(1) + Q + PhaseScalar::q_power(2)).specialize_period(3).is_zero());
}

TEST(PhaseScalar, ConductorLimit) {
  const auto saved = conductor_limit();
  set_conductor_limit(30);
  EXPECT_THROW(z(1, 7) * z(1, 5), ConductorOverflow);
  EXPECT_NO_THROW(z(1, 5) * z(1, 6));
  EXPECT_THROW(z(1, 31), ConductorOverflow);
  set_conductor_limit(saved);
  EXPECT_THROW(set_conductor_limit(0), std::invalid_argument);
}

TEST(Cyclotomic, NormAndMinimization) {
  // N(1 + zeta_5) = Phi_5(-1) = 1
  EXPECT_EQ((Cyclotomic(Rational(1)) + Cyclotomic::root(Rational(1, 5))).norm(), 1);
  // 2 = N(1 - i) with i = zeta_4
  EXPECT_EQ((Cyclotomic(Rational(1)) - Cyclotomic::root(Rational(1, 4))).norm(), 2);
  const Cyclotomic promoted = Cyclotomic::root(Rational(1, 3)).promoted(12);
  EXPECT_EQ(promoted.conductor(), 12);
  EXPECT_EQ(promoted.minimized().conductor(), 3);
  EXPECT_EQ(Cyclotomic::root(Rational(1, 6)).minimized().conductor(), 3);
}

}  // namespace
}  // namespace nctorus
