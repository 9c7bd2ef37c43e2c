#include "symkin/polodes.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "symkin/trajectory.hpp"

namespace symkin {

namespace {

constexpr int kMaxPascal = 20;

void require_order(const GeometricMotion& m, int order) {
  if (m.order() < order) {
    fail(Reason::InsufficientOrder, "geometric motion of order " + std::to_string(m.order()) +
                                        " needs order " + std::to_string(order));
  }
}

Vec2 first_derivative(const GeometricMotion& m) {
  require_order(m, 2);
  return m.o_jets[1] + tilde(m.o_jets[2]);
}

// p', rejected when the pole does not move and the tangent is undefined.
Vec2 tangent(const GeometricMotion& m) {
  const Vec2 d1 = first_derivative(m);
  const double scale = norm(m.o_jets[1]) + norm(m.o_jets[2]);
  if (!(norm(d1) > degeneracy_tolerance(scale) * std::max(scale, 1e-300))) {
    fail(Reason::StationaryPole, "pole tangent is undefined");
  }
  return d1;
}

void check_pascal_range(int i, int k) {
  if (i < 0 || k < i || k > kMaxPascal) {
    fail(Reason::OutOfRange, "pascal coefficient needs 0 <= i <= k <= 20");
  }
}

}  // namespace

GeometricMotion to_angle_parameter(const MotionState& state, double theta0) {
  const int n = state.omega.order() + 1;
  ScalarJet theta(n);
  theta[0] = theta0;
  for (int i = 1; i <= n; ++i) theta[i] = state.omega[i - 1];
  if (!(std::abs(state.omega[0]) > omega_tolerance(state))) {
    fail(Reason::PureTranslation, "angle cannot serve as parameter of a translation");
  }
  const ScalarJet t_of_theta = jet_invert(theta, 0.0);
  return {jet_compose(state.a_jets, t_of_theta), theta0};
}

Vec2 fixed_polode_point(const GeometricMotion& m) {
  require_order(m, 1);
  return m.o_jets[0] + tilde(m.o_jets[1]);
}

Vec2 moving_polode_point(const GeometricMotion& m) {
  require_order(m, 1);
  return rotate(tilde(m.o_jets[1]), -m.theta0);
}

PlanarJet fixed_polode_jets(const GeometricMotion& m) {
  require_order(m, 1);
  PlanarJet p(m.order() - 1);
  for (int i = 0; i < m.order(); ++i) p[i] = m.o_jets[i] + tilde(m.o_jets[i + 1]);
  return p;
}

Vec2 polode_derivative(const GeometricMotion& m, int k, PolodeSide side) {
  if (k < 1) fail(Reason::OutOfRange, "polode derivatives start at k = 1");
  require_order(m, k + 1);
  const PlanarJet p = fixed_polode_jets(m).truncated(k);
  if (side == PolodeSide::Fixed) return p[k];
  PlanarJet q = p.derivative();
  for (int step = 2; step <= k; ++step) {
    const PlanarJet dq = q.derivative();
    q = dq - jet_tilde(q.truncated(dq.order()));
  }
  return q[0];
}

Vec2 fixed_polode_curvature(const GeometricMotion& m) {
  require_order(m, 3);
  const Vec2 d1 = tangent(m);
  const Vec2 d2 = m.o_jets[2] + tilde(m.o_jets[3]);
  const double s2 = norm2(d1);
  const double den = dot(tilde(d1), d2);
  if (!(std::abs(den) > 1e-9 * s2)) fail(Reason::StraightPolode, "fixed polode is straight");
  return (s2 / den) * tilde(d1);
}

Vec2 moving_polode_curvature(const GeometricMotion& m) {
  require_order(m, 3);
  const Vec2 d1 = tangent(m);
  const Vec2 d2 = m.o_jets[2] + tilde(m.o_jets[3]);
  const double s2 = norm2(d1);
  const double den = dot(tilde(d1), d2) - s2;
  if (!(std::abs(den) > 1e-9 * s2)) fail(Reason::StraightPolode, "moving polode is straight");
  return (s2 / den) * tilde(d1);
}

PolodeCurvatures polode_curvatures(const GeometricMotion& m) {
  require_order(m, 3);
  (void)tangent(m);
  return {attempt([&] { return fixed_polode_curvature(m); }),
          attempt([&] { return moving_polode_curvature(m); })};
}

CanonicalForm canonicalize(const MotionState& state) {
  const GeometricMotion m = to_angle_parameter(state);
  require_order(m, 3);
  const Vec2 pole = velocity_pole(state);
  const Vec2 r_ap = pole - state.a_pos();
  const Vec2 d1 = tangent(m);
  const Vec2 ex = -d1 / norm(d1);
  const Vec2 ey = tilde(ex);

  // Body point at the pole, θ-derivatives o^(k) + J^k r_AP, in (ex, ey) coordinates.
  PlanarJet oc(m.order());
  for (int k = 1; k <= m.order(); ++k) {
    const Vec2 v = m.o_jets[k] + j_pow(k, r_ap);
    oc[k] = {dot(ex, v), dot(ey, v)};
  }

  CanonicalForm out{{oc, 0.0}, {}, pole, ex};
  out.invariants.b2 = oc[2].y;
  out.invariants.a3 = oc[3].x;
  out.invariants.b3 = oc[3].y;
  for (int k = 4; k <= m.order(); ++k) out.invariants.higher.emplace_back(oc[k].x, oc[k].y);
  return out;
}

std::uint64_t pascal_coefficient(int i, int k) {
  check_pascal_range(i, k);
  std::array<std::uint64_t, kMaxPascal + 1> row{};
  row[0] = 1;
  for (int n = 1; n <= k; ++n) {
    for (int j = n; j >= 1; --j) row[j] += row[j - 1];
  }
  return row[i];
}

std::uint64_t pascal_coefficient_factorial(int i, int k) {
  check_pascal_range(i, k);
  std::uint64_t f[kMaxPascal + 1];
  f[0] = 1;
  for (int n = 1; n <= kMaxPascal; ++n) f[n] = f[n - 1] * static_cast<std::uint64_t>(n);
  return f[k] / (f[i] * f[k - i]);
}

}  // namespace symkin
