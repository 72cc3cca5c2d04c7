#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "nctorus/path_lift.hpp"

namespace nctorus {
namespace {

Rational q(long p, unsigned long d) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

TEST(LiftPath, ConstantPath) {
  ExactPath p;
  for (int i = 0; i < 5; ++i) p.samples.push_back({q(1, 3), q(1, 4)});
  const auto start = canonical_start(p, 2, 3);
  const auto l = lift_path(p, 2, 3, start);
  for (const auto& s : l.samples) {
    EXPECT_EQ(s.s, q(1, 6));
    EXPECT_EQ(s.t, q(1, 12));
  }
}

TEST(LiftPath, WindingLoopsExact) {
  const auto loop = winding_loop<Rational>(1, 0, 100);
  const auto l = lift_path(loop, 2, 3, {Rational(0), Rational(0)});
  EXPECT_EQ(l.samples.back().s, q(1, 2));
  EXPECT_EQ(l.samples.back().t, Rational(0));
  const auto l2 = lift_path(winding_loop<Rational>(0, 1, 100), 2, 3, {Rational(0), Rational(0)});
  EXPECT_EQ(l2.samples.back().s, Rational(0));
  EXPECT_EQ(l2.samples.back().t, q(1, 3));
}

TEST(LiftPath, WindingLoopReal) {
  const auto l = lift_path(winding_loop<double>(1, 0, 100), 2, 3, {0.0, 0.0});
  EXPECT_NEAR(l.samples.back().s, 0.5, 1e-9);
  EXPECT_NEAR(l.samples.back().t, 0.0, 1e-9);
}

TEST(LiftPath, ProjectionIsIdentity) {
  const auto base = winding_loop<Rational>(3, -2, 40);
  const auto l = lift_path(base, 3, 2, canonical_start(base, 3, 2));
  ASSERT_EQ(l.samples.size(), base.samples.size());
  for (std::size_t i = 0; i < base.samples.size(); ++i) {
    EXPECT_EQ(frac(3 * l.samples[i].s), base.samples[i].s);
    EXPECT_EQ(frac(2 * l.samples[i].t), base.samples[i].t);
  }
  const auto rb = winding_loop<double>(3, -2, 40);
  const auto rl = lift_path(rb, 3, 2, canonical_start(rb, 3, 2));
  for (std::size_t i = 0; i < rb.samples.size(); ++i) {
    EXPECT_TRUE(AngleOps<double>::same_point(3 * rl.samples[i].s, rb.samples[i].s));
    EXPECT_TRUE(AngleOps<double>::same_point(2 * rl.samples[i].t, rb.samples[i].t));
  }
}

TEST(LiftPath, UniqueUnderPerturbation) {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> eps(-1e-13, 1e-13);
  const auto base = winding_loop<double>(2, 5, 200);
  auto perturbed = base;
  for (auto& p : perturbed.samples) {
    p.s = AngleOps<double>::reduce(p.s + eps(rng));
    p.t = AngleOps<double>::reduce(p.t + eps(rng));
  }
  const auto a = lift_path(base, 2, 3, canonical_start(base, 2, 3));
  const auto b = lift_path(perturbed, 2, 3, canonical_start(base, 2, 3));
  for (std::size_t i = 0; i < a.samples.size(); ++i) {
    EXPECT_LT(std::abs(std::remainder(a.samples[i].t - b.samples[i].t, 1.0)), 1e-9);
    EXPECT_LT(std::abs(std::remainder(a.samples[i].s - b.samples[i].s, 1.0)), 1e-9);
  }
}

TEST(LiftPath, Errors) {
  // 5 samples over a full turn: steps of 1/4 exceed 1/(2*3)
  EXPECT_THROW(lift_path(winding_loop<Rational>(1, 0, 5), 3, 1, {Rational(0), Rational(0)}), LiftError);
  EXPECT_THROW(lift_path(winding_loop<Rational>(1, 0, 100), 2, 3, {q(1, 3), Rational(0)}), LiftError);
  EXPECT_THROW(lift_path(ExactPath{}, 2, 3, {Rational(0), Rational(0)}), LiftError);
  EXPECT_THROW(lift_path(winding_loop<Rational>(1, 0, 100), 0, 3, {Rational(0), Rational(0)}), std::invalid_argument);
  // step exactly at the bound is rejected
  ExactPath edge;
  edge.samples = {{Rational(0), Rational(0)}, {q(1, 4), Rational(0)}};
  EXPECT_THROW(lift_path(edge, 2, 1, {Rational(0), Rational(0)}), LiftError);
  EXPECT_NO_THROW(lift_path(edge, 1, 1, {Rational(0), Rational(0)}));
}

TEST(DeckOfLoop, Examples) {
  ExactPath trivial;
  trivial.samples = {{Rational(0), Rational(0)}, {Rational(0), Rational(0)}};
  EXPECT_EQ(deck_of_loop(trivial, 2, 3), DeckElement::make(0, 0, 2, 3));
  EXPECT_EQ(deck_of_loop(winding_loop<Rational>(1, 0, 100), 2, 3), DeckElement::make(1, 0, 2, 3));
  EXPECT_EQ(deck_of_loop(winding_loop<double>(1, 0, 100), 2, 3), DeckElement::make(1, 0, 2, 3));
  EXPECT_EQ(deck_of_loop(winding_loop<Rational>(2, 0, 100), 2, 1), DeckElement::make(0, 0, 2, 1));
  ExactPath open;
  open.samples = {{Rational(0), Rational(0)}, {q(1, 10), Rational(0)}};
  EXPECT_THROW(deck_of_loop(open, 2, 3), LiftError);
}

TEST(DeckOfLoop, WindingHomomorphismAndAdditivity) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> w(-3, 3);
  for (int it = 0; it < 20; ++it) {
    const int p1 = w(rng), q1 = w(rng), p2 = w(rng), q2 = w(rng);
    const auto a = winding_loop<Rational>(p1, q1, 64);
    const auto b = winding_loop<Rational>(p2, q2, 64);
    const auto ab = concatenate(a, b);
    for (const auto& [m, n] : std::vector<std::pair<int, int>>{{2, 3}, {4, 1}, {3, 3}}) {
      EXPECT_EQ(deck_of_loop(a, m, n), DeckElement::make(p1, q1, m, n));
      EXPECT_EQ(deck_of_loop(ab, m, n), deck_of_loop(a, m, n) + deck_of_loop(b, m, n));
    }
  }
}

TEST(AutomorphismLift, Examples) {
  const auto cov = make_covering(2, 3, 1);
  ExactPath idpath;
  idpath.samples = {{Rational(0), Rational(0)}, {Rational(0), Rational(0)}, {Rational(0), Rational(0)}};
  for (const auto& a : lift_automorphism_path(idpath, cov)) EXPECT_TRUE(a.is_identity());

  const auto loop = winding_loop<Rational>(1, 0, 100);
  const auto autos = lift_automorphism_path(loop, cov);
  ASSERT_EQ(autos.size(), loop.samples.size());
  EXPECT_TRUE(autos.front().is_identity());
  const auto up = TorusElement::u(cov.cover);
  const auto deck = deck_of_loop(loop, 2, 3);
  EXPECT_EQ(apply(autos.back(), up), deck_act(deck, up));
  EXPECT_EQ(apply(autos.back(), up), -up);

  const auto eu = embed(cov, TorusElement::u());
  const auto ev = embed(cov, TorusElement::v());
  for (std::size_t i = 0; i < autos.size(); ++i) {
    const auto& z = loop.samples[i];
    EXPECT_EQ(apply(autos[i], eu), PhaseScalar::root(z.s) * eu);
    EXPECT_EQ(apply(autos[i], ev), PhaseScalar::root(z.t) * ev);
    EXPECT_LT(std::abs(std::pow(autos[i].w1(), 2) - std::polar(1.0, 2 * M_PI * z.s.get_d())), 1e-9);
    EXPECT_LT(std::abs(std::pow(autos[i].w2(), 3) - std::polar(1.0, 2 * M_PI * z.t.get_d())), 1e-9);
  }
}

TEST(PathText, RoundTrip) {
  const std::string text = "# a path\n0 0\n1/10 1/3\n\n1/5 2/3  # trailing comment\n";
  EXPECT_TRUE(is_exact_path_text(text));
  const auto p = parse_exact_path(text);
  ASSERT_EQ(p.samples.size(), 3u);
  EXPECT_EQ(p.samples[1].t, q(1, 3));
  EXPECT_EQ(parse_exact_path(format_path(p)).samples.size(), 3u);
  EXPECT_EQ(parse_exact_path(format_path(p)).samples[2].s, q(1, 5));
  EXPECT_FALSE(is_exact_path_text("0.5 0.25\n"));
  const auto r = parse_real_path("0.5 0.25\n0.55 0.3\n");
  EXPECT_DOUBLE_EQ(r.samples[1].s, 0.55);
  EXPECT_THROW(parse_exact_path("1 2 3\n"), std::invalid_argument);
  EXPECT_THROW(parse_real_path("x y\n"), std::invalid_argument);
}

}  // namespace
}  // namespace nctorus
