#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "support/generators.hpp"
#include "symkin/finite_difference.hpp"
#include "symkin/jet.hpp"
#include "symkin/vec2.hpp"

using namespace symkin;
namespace ts = symkin::tsupport;
using ts::Rng;

TEST(Vec2, TildeOnBasisAndZero) {
  EXPECT_EQ(tilde(Vec2{1, 0}), (Vec2{0, 1}));
  EXPECT_EQ(tilde(tilde(Vec2{3, 4})), (Vec2{-3, -4}));
  EXPECT_EQ(tilde(Vec2{0, 0}), (Vec2{0, 0}));
}

TEST(Vec2, DotAndPerpDot) {
  EXPECT_EQ(dot({1, 2}, {3, 4}), 11);
  EXPECT_EQ(dot({1, 0}, {0, 1}), 0);
  EXPECT_EQ(dot(tilde(Vec2{2, 5}), tilde(Vec2{-1, 3})), 13);
  EXPECT_EQ(dot({2, 5}, {-1, 3}), 13);
  EXPECT_EQ(perp_dot({1, 0}, {0, 1}), 1);
  EXPECT_EQ(perp_dot({7, -2}, {7, -2}), 0);
  EXPECT_EQ(perp_dot({1, 2}, {3, 5}), -perp_dot({3, 5}, {1, 2}));
  EXPECT_EQ(perp_dot({1, 2}, {3, 5}), -1);
}

TEST(Vec2, Rotate) {
  EXPECT_EQ(rotate({1, 2}, 0.0), (Vec2{1, 2}));
  const Vec2 q = rotate({1, 0}, std::numbers::pi / 2);
  EXPECT_NEAR(q.x, 0.0, 1e-16);
  EXPECT_NEAR(q.y, 1.0, 1e-16);
  EXPECT_NEAR(dot(rotate({1, 2}, 0.7), rotate({3, 5}, 0.7)), 13.0, 1e-12);
}

TEST(Vec2, JPow) {
  EXPECT_EQ(j_pow(0, {2, 3}), (Vec2{2, 3}));
  EXPECT_EQ(j_pow(2, {2, 3}), (Vec2{-2, -3}));
  EXPECT_EQ(j_pow(5, {1, 0}), (Vec2{0, 1}));
  EXPECT_EQ(j_pow(-1, {1, 0}), (Vec2{0, -1}));
}

TEST(Vec2, AlgebraicIdentitiesOverRandomInputs) {
  Rng rng(11);
  for (int n = 0; n < 1000; ++n) {
    const Vec2 a = ts::random_vec(rng, -100, 100);
    const Vec2 b = ts::random_vec(rng, -100, 100);
    EXPECT_EQ(perp_dot(a, b), dot(tilde(a), b));
    EXPECT_EQ(perp_dot(a, b), -dot(a, tilde(b)));
    EXPECT_EQ(tilde(a + b), tilde(a) + tilde(b));
    Vec2 t = a;
    for (int k = 0; k <= 12; ++k) {
      EXPECT_EQ(j_pow(k, a), t);
      t = tilde(t);
    }
    const double t1 = ts::uniform(rng, -5, 5);
    const double t2 = ts::uniform(rng, -5, 5);
    const Vec2 once = rotate(a, t1 + t2);
    const Vec2 twice = rotate(rotate(a, t1), t2);
    EXPECT_LE(norm(once - twice), 1e-12 * norm(a));
  }
}

TEST(Jet, ConstantTimesJetScales) {
  const ScalarJet b{1, 2, 3, 4};
  const ScalarJet c = ScalarJet::constant(2.5, 3);
  const ScalarJet r = c * b;
  for (int i = 0; i <= 3; ++i) EXPECT_EQ(r[i], 2.5 * b[i]);
}

TEST(Jet, ProductOfPowers) {
  const ScalarJet t2{1, 2, 2, 0, 0, 0};
  const ScalarJet t3{1, 3, 6, 6, 0, 0};
  const ScalarJet r = jet_mul(t2, t3);
  const double want[] = {1, 5, 20, 60, 120, 120};
  for (int i = 0; i <= 5; ++i) EXPECT_EQ(r[i], want[i]);
}

TEST(Jet, ProductCommutesAndObeysLeibniz) {
  Rng rng(12);
  for (int n = 0; n < 200; ++n) {
    const int order = 1 + static_cast<int>(rng() % 11);
    const ScalarJet a = ts::random_scalar_jet(rng, order);
    const ScalarJet b = ts::random_scalar_jet(rng, order);
    const ScalarJet ab = jet_mul(a, b);
    const ScalarJet ba = jet_mul(b, a);
    const ScalarJet lhs = ab.derivative();
    const ScalarJet rhs = jet_mul(a.derivative(), b.truncated(order - 1)) +
                          jet_mul(a.truncated(order - 1), b.derivative());
    for (int i = 0; i <= order; ++i) EXPECT_NEAR(ab[i], ba[i], 1e-12 * (1 + std::abs(ab[i])));
    for (int i = 0; i < order; ++i) EXPECT_NEAR(lhs[i], rhs[i], 1e-9 * (1 + std::abs(lhs[i])));
  }
}

TEST(Jet, OrderMismatchIsAnError) {
  const ScalarJet a{1, 2};
  const ScalarJet b{1, 2, 3};
  try {
    (void)(a * b);
    FAIL() << "expected an error";
  } catch (const KinematicError& e) {
    EXPECT_EQ(e.reason(), Reason::OrderMismatch);
  }
  EXPECT_THROW((void)ScalarJet(13), KinematicError);
  EXPECT_THROW((void)a.at(2), KinematicError);
}

TEST(Jet, SinCosOfIdentity) {
  const ScalarJet theta{0, 1, 0, 0, 0, 0, 0};
  const auto [s, c] = jet_sin_cos(theta);
  const double ws[] = {0, 1, 0, -1, 0, 1, 0};
  const double wc[] = {1, 0, -1, 0, 1, 0, -1};
  for (int i = 0; i <= 6; ++i) {
    EXPECT_NEAR(s[i], ws[i], 1e-15);
    EXPECT_NEAR(c[i], wc[i], 1e-15);
  }
}

TEST(Jet, SinCosOfConstant) {
  const auto [s, c] = jet_sin_cos(ScalarJet::constant(0.4, 4));
  EXPECT_EQ(s[0], std::sin(0.4));
  EXPECT_EQ(c[0], std::cos(0.4));
  for (int i = 1; i <= 4; ++i) {
    EXPECT_EQ(s[i], 0.0);
    EXPECT_EQ(c[i], 0.0);
  }
}

TEST(Jet, SinCosMatchesFiniteDifferencesAndPythagoras) {
  Rng rng(13);
  for (int n = 0; n < 100; ++n) {
    const ScalarJet theta = ts::random_scalar_jet(rng, 6);
    const auto [s, c] = jet_sin_cos(theta);
    const ScalarJet one = jet_mul(s, s) + jet_mul(c, c);
    EXPECT_NEAR(one[0], 1.0, 1e-12);
    for (int i = 1; i <= 6; ++i) EXPECT_NEAR(one[i], 0.0, 1e-12);
    const auto f = [&](double t) { return std::sin(ts::taylor_value(theta, t)); };
    for (int k = 1; k <= 5; ++k) {
      const double fd = finite_difference(f, 0.0, k);
      EXPECT_NEAR(s[k], fd, 1e-6 * std::max(1.0, std::abs(fd))) << "k=" << k;
    }
  }
}

TEST(Jet, PlanarMapsCommuteWithDifferentiation) {
  const PlanarJet a{{1, 0}, {0, 1}};
  const PlanarJet t = jet_tilde(a);
  EXPECT_EQ(t[0], (Vec2{0, 1}));
  EXPECT_EQ(t[1], (Vec2{-1, 0}));
  const PlanarJet n = jet_j_pow(2, a);
  EXPECT_EQ(n[0], (Vec2{-1, 0}));
  EXPECT_EQ(n[1], (Vec2{0, -1}));
  Rng rng(14);
  const PlanarJet r = ts::random_planar_jet(rng, 7);
  EXPECT_EQ(jet_tilde(r).derivative(), jet_tilde(r.derivative()));
}

TEST(Jet, CompositionAndInversionRoundTrip) {
  Rng rng(15);
  for (int n = 0; n < 100; ++n) {
    ScalarJet g = ts::random_scalar_jet(rng, 8);
    g[1] = ts::signed_away_from_zero(rng, 0.5, 2.0);
    const ScalarJet inv = jet_invert(g, 0.3);
    EXPECT_EQ(inv[0], 0.3);
    // g(g^-1(s)) = s: jet (g0, 1, 0, ...)
    const ScalarJet id = jet_compose(g, inv);
    EXPECT_NEAR(id[0], g[0], 1e-15);
    EXPECT_NEAR(id[1], 1.0, 1e-12);
    for (int i = 2; i <= 8; ++i) EXPECT_NEAR(id[i], 0.0, 1e-8 * std::pow(10.0, i - 2)) << i;
  }
  ScalarJet flat{0, 0, 1};
  EXPECT_THROW((void)jet_invert(flat, 0.0), KinematicError);
}

TEST(Jet, CompositionMatchesFiniteDifferences) {
  Rng rng(16);
  for (int n = 0; n < 50; ++n) {
    const ScalarJet outer = ts::random_scalar_jet(rng, 6);
    ScalarJet inner = ts::random_scalar_jet(rng, 6);
    inner[0] = 0.0;
    const ScalarJet comp = jet_compose(outer, inner);
    const auto f = [&](double t) { return ts::taylor_value(outer, ts::taylor_value(inner, t)); };
    for (int k = 1; k <= 5; ++k) {
      const double fd = finite_difference(f, 0.0, k);
      EXPECT_NEAR(comp[k], fd, 1e-6 * std::max(1.0, std::abs(fd)));
    }
  }
}

TEST(FiniteDifference, PolynomialAndCircle) {
  const auto cube = [](double t) { return Vec2{t * t * t, 0}; };
  const Vec2 d3 = finite_difference(cube, 1.0, 3);
  EXPECT_NEAR(d3.x, 6.0, 1e-6);
  EXPECT_NEAR(d3.y, 0.0, 1e-6);
  const auto circle = [](double t) { return Vec2{std::cos(t), std::sin(t)}; };
  const Vec2 d2 = finite_difference(circle, 0.0, 2);
  EXPECT_NEAR(d2.x, -1.0, 1e-6);
  EXPECT_NEAR(d2.y, 0.0, 1e-6);
  const Vec2 d4 = finite_difference(circle, 0.3, 4);
  const auto [s, c] = jet_sin_cos(ScalarJet{0.3, 1, 0, 0, 0});
  EXPECT_NEAR(d4.x, c[4], 1e-6);
  EXPECT_NEAR(d4.y, s[4], 1e-6);
  EXPECT_THROW((void)finite_difference(circle, 0.0, 9), KinematicError);
}
