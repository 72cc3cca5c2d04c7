#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

#include "nctorus/covering.hpp"
#include "oracle.hpp"
#include "test_support.hpp"

namespace nctorus {
namespace {

TorusElement cmono(const CoveringSpec& cov, std::int64_t i, std::int64_t j, const PhaseScalar& c = 1) {
  return TorusElement::monomial({i, j}, c, cov.cover);
}

TEST(MakeCovering, Parameters) {
  const auto id = make_covering(1, 1, 0);
  EXPECT_EQ(id.degree(), 1);
  EXPECT_EQ(id.cover, ThetaContext::base());
  EXPECT_DOUBLE_EQ(id.theta_prime(0.3), 0.3);

  const auto c = make_covering(2, 3, 1);
  const double theta = std::sqrt(2.0) - 1.0;
  EXPECT_NEAR(c.theta_prime(theta), (theta + 1.0) / 6.0, 1e-15);
  for (std::int64_t k = 0; k < 6; ++k) EXPECT_NO_THROW(make_covering(2, 3, k));
}

TEST(MakeCovering, RejectsBadParameters) {
  EXPECT_THROW(make_covering(2, 3, 6), std::invalid_argument);
  EXPECT_THROW(make_covering(2, 3, -1), std::invalid_argument);
  EXPECT_THROW(make_covering(0, 3, 0), std::invalid_argument);
  EXPECT_THROW(make_covering(2, -1, 0), std::invalid_argument);
}

TEST(MakeCovering, IteratedCoverContextsCompose) {
  const auto first = make_covering(2, 1, 1);
  const auto second = make_covering(1, 3, 2, first.cover);
  // ((theta + 1)/2 + 2)/3 = (theta + 5)/6, both measured from the root theta
  const double theta = 0.123456;
  EXPECT_NEAR(first.theta_prime(theta), (theta + 1.0) / 2.0, 1e-15);
  EXPECT_NEAR(second.theta_prime(theta), (first.theta_prime(theta) + 2.0) / 3.0, 1e-15);
  EXPECT_NEAR(second.theta_prime(theta), (theta + 5.0) / 6.0, 1e-15);
  EXPECT_EQ(second.cover, make_covering(2, 3, 5).cover);
}

TEST(Embed, Examples) {
  const auto cov = make_covering(2, 3, 1);
  EXPECT_EQ(embed(cov, TorusElement::u()), cmono(cov, 2, 0));
  EXPECT_EQ(embed(cov, TorusElement::u() * TorusElement::v()), cmono(cov, 2, 3));
  EXPECT_EQ(embed(cov, TorusElement(1)), TorusElement(1, cov.cover));
  const TorusElement vu = TorusElement::v() * TorusElement::u();
  EXPECT_EQ(embed(cov, TorusElement::u() * TorusElement::v()), embed(cov, TorusElement(PhaseScalar::q_power(1)) * vu));
  EXPECT_THROW(embed(cov, TorusElement::u(cov.cover)), ContextMismatch);
}

TEST(Embed, HomomorphismAndStarOnRandomInputs) {
  std::mt19937_64 rng(2);
  for (const auto& [m, n, k] : std::vector<std::tuple<int, int, int>>{{2, 3, 1}, {3, 1, 2}, {1, 4, 3}, {2, 2, 0}}) {
    const auto cov = make_covering(m, n, k);
    for (int i = 0; i < 25; ++i) {
      const auto a = testing::random_element(rng, 5, 3);
      const auto b = testing::random_element(rng, 5, 3);
      ASSERT_EQ(embed(cov, a * b), embed(cov, a) * embed(cov, b));
      ASSERT_EQ(embed(cov, star(a)), star(embed(cov, a)));
      ASSERT_EQ(embed(cov, a + b), embed(cov, a) + embed(cov, b));
      ASSERT_EQ(restrict_to_base(cov, embed(cov, a)), a);
    }
  }
}

TEST(Embed, InjectiveOnSupport) {
  const auto cov = make_covering(3, 2, 4);
  std::set<Bidegree> seen;
  for (std::int64_t i = -4; i <= 4; ++i)
    for (std::int64_t j = -4; j <= 4; ++j) {
      const auto img = embed(cov, TorusElement::monomial({i, j}));
      ASSERT_EQ(img.support_size(), 1u);
      EXPECT_TRUE(seen.insert(img.coeffs().begin()->first).second);
    }
}

TEST(DeckAct, Examples) {
  const auto cov = make_covering(3, 2, 0);
  const auto up = TorusElement::u(cov.cover);
  EXPECT_EQ(deck_act(deck_element(cov, 1, 0), up), PhaseScalar::root(Rational(1, 3)) * up);
  EXPECT_EQ(deck_act(deck_element(cov, 0, 1), TorusElement::v(cov.cover)), -TorusElement::v(cov.cover));
  std::mt19937_64 rng(8);
  for (int i = 0; i < 20; ++i) {
    const auto a = testing::random_element(rng, 5, 3);
    const auto x = testing::random_element(rng, 5, 3, cov.cover);
    EXPECT_EQ(deck_act(deck_element(cov, 0, 0), x), x);
    for (const auto& g : deck_group(cov)) EXPECT_EQ(deck_act(g, embed(cov, a)), embed(cov, a));
  }
}

TEST(DeckAct, AutomorphismLaws) {
  const auto cov = make_covering(2, 3, 5);
  std::mt19937_64 rng(9);
  for (int i = 0; i < 20; ++i) {
    const auto x = testing::random_element(rng, 5, 3, cov.cover);
    const auto y = testing::random_element(rng, 5, 3, cov.cover);
    for (const auto& g : deck_group(cov)) {
      ASSERT_EQ(deck_act(g, x * y), deck_act(g, x) * deck_act(g, y));
      ASSERT_EQ(deck_act(g, star(x)), star(deck_act(g, x)));
      for (const auto& h : deck_group(cov)) ASSERT_EQ(deck_act(g + h, x), deck_act(g, deck_act(h, x)));
    }
  }
}

TEST(DeckGroup, Structure) {
  const auto cov = make_covering(2, 3, 0);
  const auto g = deck_group(cov);
  ASSERT_EQ(g.size(), 6u);
  EXPECT_EQ(g.front(), DeckElement::make(0, 0, 2, 3));
  EXPECT_EQ(DeckElement::make(1, 2, 2, 3) + DeckElement::make(1, 2, 2, 3), DeckElement::make(0, 1, 2, 3));
  EXPECT_EQ(DeckElement::make(-1, 5, 2, 3), DeckElement::make(1, 2, 2, 3));
}

TEST(FixedPoints, ProjectionExamples) {
  const auto cov = make_covering(2, 3, 1);
  EXPECT_EQ(fixed_point_project(cov, cmono(cov, 2, 0)), cmono(cov, 2, 0));
  EXPECT_TRUE(fixed_point_project(cov, cmono(cov, 1, 0)).is_zero());
  EXPECT_EQ(fixed_point_project(cov, cmono(cov, 4, 3) + cmono(cov, 1, 0)), cmono(cov, 4, 3));
  // the unnormalized sum is |G| times the projection
  EXPECT_EQ(fixed_point_sum(cov, cmono(cov, 4, 3)), PhaseScalar(6) * cmono(cov, 4, 3));
}

TEST(FixedPoints, ProjectionIsIdempotentWithImageInEmbed) {
  std::mt19937_64 rng(12);
  const auto cov = make_covering(3, 2, 1);
  for (int i = 0; i < 30; ++i) {
    const auto x = testing::random_element(rng, 8, 6, cov.cover);
    const auto p = fixed_point_project(cov, x);
    ASSERT_EQ(fixed_point_project(cov, p), p);
    // the coefficient field of the base is the cover's restricted to Q'^{mn}; a generic
    // invariant may carry other Q' powers, so compare supports and use embed on unit monomials
    for (const auto& [d, c] : p.coeffs()) {
      ASSERT_EQ(d.r % 3, 0);
      ASSERT_EQ(d.s % 2, 0);
      ASSERT_EQ(embed(cov, TorusElement::monomial({d.r / 3, d.s / 2})), cmono(cov, d.r, d.s));
    }
  }
}

TEST(Basis, DecompositionExamples) {
  const auto cov = make_covering(2, 3, 1);
  EXPECT_EQ(basis_over_invariants(cov).size(), 6u);
  const auto parts = decompose_over_invariants(cov, cmono(cov, 3, 0));
  ASSERT_EQ(parts.size(), 1u);
  ASSERT_TRUE(parts.contains({1, 0}));
  EXPECT_EQ(restrict_to_base(cov, parts.at({1, 0})), TorusElement::u());

  const auto id = make_covering(1, 1, 0);
  EXPECT_EQ(basis_over_invariants(id), std::vector<Bidegree>{Bidegree{}});
  const auto x = TorusElement::u() + TorusElement::v() * TorusElement::u();
  const auto idparts = decompose_over_invariants(id, x);
  ASSERT_EQ(idparts.size(), 1u);
  EXPECT_EQ(idparts.at({0, 0}), x);
}

TEST(Basis, DecompositionIsExactAndUnique) {
  std::mt19937_64 rng(13);
  for (const auto& [m, n, k] : std::vector<std::tuple<int, int, int>>{{2, 3, 1}, {4, 1, 0}, {1, 3, 2}, {3, 3, 7}}) {
    const auto cov = make_covering(m, n, k);
    for (int i = 0; i < 30; ++i) {
      const auto x = testing::random_element(rng, 8, 7, cov.cover);
      const auto parts = decompose_over_invariants(cov, x);
      ASSERT_EQ(reassemble(cov, parts), x);
      for (const auto& [beta, c] : parts) {
        ASSERT_GE(beta.r, 0);
        ASSERT_LT(beta.r, m);
        ASSERT_GE(beta.s, 0);
        ASSERT_LT(beta.s, n);
        ASSERT_EQ(fixed_point_project(cov, c), c);
      }
    }
  }
}

TEST(Basis, RestrictRejectsNonInvariant) {
  const auto cov = make_covering(2, 1, 0);
  EXPECT_THROW(restrict_to_base(cov, cmono(cov, 1, 0)), std::domain_error);
  EXPECT_THROW(restrict_to_base(cov, cmono(cov, 2, 0, PhaseScalar::q_power(1))), std::domain_error);
}

TEST(Classify, SmallDegrees) {
  const auto one = classify_coverings(1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0], (CoveringDescriptor{CoveringKind::connected, 1, 1, 0, 1}));

  const auto two = classify_coverings(2);
  const std::vector<CoveringDescriptor> expected{
      {CoveringKind::connected, 1, 2, 0, 1},
      {CoveringKind::connected, 1, 2, 1, 1},
      {CoveringKind::connected, 2, 1, 0, 1},
      {CoveringKind::connected, 2, 1, 1, 1},
      {CoveringKind::disconnected, 1, 1, 0, 2},
  };
  EXPECT_EQ(two, expected);
  EXPECT_THROW(classify_coverings(0), std::invalid_argument);
}

TEST(Classify, CountsAndShape) {
  for (std::int64_t d = 1; d <= 12; ++d) {
    const auto all = classify_coverings(d);
    EXPECT_EQ(static_cast<std::int64_t>(all.size()), oracle::covering_count(d)) << "d = " << d;
    for (const auto& c : all) {
      EXPECT_EQ(c.d1 * c.m * c.n, d);
      EXPECT_GE(c.k, 0);
      EXPECT_LT(c.k, c.m * c.n);
      if (c.kind == CoveringKind::disconnected) {
        EXPECT_EQ(c.m * c.n, 1);
      }
      if (c.kind == CoveringKind::connected) {
        EXPECT_EQ(c.d1, 1);
        const auto cov = make_covering(c.m, c.n, c.k);
        EXPECT_NEAR(cov.theta_prime(0.3819660112501051), (0.3819660112501051 + static_cast<double>(c.k)) / static_cast<double>(d), 1e-14);
      }
    }
  }
}

}  // namespace
}  // namespace nctorus
