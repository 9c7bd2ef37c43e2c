#include "symkin/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace symkin {

double degeneracy_tolerance(double scale) { return 1e-12 * std::max(1.0, scale); }

PolarComponents polar_components(const PolarState& state, int k) {
  state.r.require_same_order(state.phi);
  const int order = state.r.order();
  if (k < 0) fail(Reason::OutOfRange, "negative derivative order");
  if (k > order) {
    fail(Reason::InsufficientOrder,
         "polar component " + std::to_string(k) + " needs jets of order >= " + std::to_string(k));
  }
  if (state.r[0] < 0.0) fail(Reason::OutOfRange, "polar magnitude must be non-negative");

  ScalarJet par = state.r;
  ScalarJet perp(order);
  if (k == 0) return {par[0], perp[0]};

  const ScalarJet phi_dot = state.phi.derivative();
  for (int step = 0; step < k; ++step) {
    const int next = order - step - 1;
    const ScalarJet w = phi_dot.truncated(next);
    const ScalarJet par_t = par.truncated(next);
    const ScalarJet perp_t = perp.truncated(next);
    ScalarJet new_par = par.derivative() - w * perp_t;
    ScalarJet new_perp = perp.derivative() + w * par_t;
    par = std::move(new_par);
    perp = std::move(new_perp);
  }
  return {par[0], perp[0]};
}

FrenetBasis frenet(const Vec2& velocity) {
  const double speed = norm(velocity);
  if (!(speed > degeneracy_tolerance(speed))) fail(Reason::ZeroVelocity, "tangent undefined");
  const Vec2 t = velocity / speed;
  return {t, tilde(t)};
}

FrenetFrame frenet_kappa(const Vec2& velocity, const Vec2& acceleration) {
  const double speed = norm(velocity);
  if (!(speed > degeneracy_tolerance(std::max(speed, norm(acceleration))))) {
    fail(Reason::ZeroVelocity, "tangent undefined");
  }
  const FrenetBasis b = frenet(velocity);
  return {b.tangent, b.normal, perp_dot(velocity, acceleration) / (speed * speed * speed)};
}

Vec2 center_of_curvature(const Vec2& velocity, const Vec2& acceleration) {
  const double speed = norm(velocity);
  const double accel = norm(acceleration);
  const double tol = degeneracy_tolerance(std::max(speed, accel));
  if (!(speed > tol)) fail(Reason::ZeroVelocity, "centre of curvature undefined at rest");
  const Vec2 tv = tilde(velocity);
  const double normal_part = dot(tv, acceleration);
  if (!(std::abs(normal_part) > tol * speed * accel)) {
    fail(Reason::InfiniteCurvature, "velocity and acceleration are collinear");
  }
  return (norm2(velocity) / normal_part) * tv;
}

double arc_length(const CurveJetFn& curve, double t0, double t1) {
  if (!(t0 <= t1)) fail(Reason::OutOfRange, "arc_length needs t0 <= t1");
  if (t0 == t1) return 0.0;
  auto speed = [&](double t) {
    const PlanarJet j = curve(t);
    const double s = norm(j.at(1));
    if (!std::isfinite(s)) fail(Reason::NonFinite, "non-finite speed at t = " + std::to_string(t));
    return s;
  };
  double error = 0.0;
  const double length =
      boost::math::quadrature::gauss_kronrod<double, 31>::integrate(speed, t0, t1, 20, 1e-13, &error);
  if (!std::isfinite(length)) fail(Reason::NonFinite, "arc length diverged");
  return length;
}

}  // namespace symkin
