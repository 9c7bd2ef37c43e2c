#pragma once

#include <functional>

#include "symkin/jet.hpp"
#include "symkin/vec2.hpp"

namespace symkin {

/// Degeneracy threshold: 1e-12 times the largest operand magnitude (at least 1).
double degeneracy_tolerance(double scale);

/// Polar description r(t) = r e(phi(t)) of a moving point.
struct PolarState {
  ScalarJet r;    ///< magnitude and its derivatives, r[0] >= 0
  ScalarJet phi;  ///< polar angle (radians) and its derivatives
};

/// Coefficients of r^(k) in the moving basis {e, tilde(e)}.
struct PolarComponents {
  double parallel = 0.0;
  double perpendicular = 0.0;
};

/// Runs the parallel/orthogonal recurrence over jets, so the time derivatives
/// of the coefficient sequences are exact. Requires k <= state order.
PolarComponents polar_components(const PolarState& state, int k);

struct FrenetBasis {
  Vec2 tangent;
  Vec2 normal;  ///< always tilde(tangent)
};

struct FrenetFrame {
  Vec2 tangent;
  Vec2 normal;
  double kappa = 0.0;  ///< signed; positive when the path turns toward tilde(v)
};

FrenetBasis frenet(const Vec2& velocity);
FrenetFrame frenet_kappa(const Vec2& velocity, const Vec2& acceleration);

/// Vector from the moving point to the centre of curvature of its path:
/// (|v|^2 / (tilde(v) a)) tilde(v).
/// Throws ZeroVelocity or InfiniteCurvature (inflection / straight motion).
Vec2 center_of_curvature(const Vec2& velocity, const Vec2& acceleration);

/// Curve given as a jet-valued function of its parameter (order >= 1).
using CurveJetFn = std::function<PlanarJet(double)>;

/// Integral of |dr/dt| over [t0, t1] by adaptive Gauss-Kronrod quadrature,
/// relative accuracy ~1e-9 or better. Throws NonFinite on a bad integrand.
double arc_length(const CurveJetFn& curve, double t0, double t1);

}  // namespace symkin
