#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "symkin/error.hpp"
#include "symkin/jet.hpp"
#include "symkin/rigid_motion.hpp"
#include "symkin/vec2.hpp"

namespace symkin {

/// Motion described geometrically, with the rotation angle θ as parameter
/// (θ̇ = 1). o_jets holds the moving origin and its θ-derivatives o', o'', ...
struct GeometricMotion {
  PlanarJet o_jets;
  double theta0 = 0.0;

  int order() const { return o_jets.order(); }
};

enum class PolodeSide { Fixed, Moving };

/// Re-expresses a time-parametrized state with θ as parameter. Requires
/// ω ≠ 0 (throws PureTranslation). The result has order
/// min(a_jets.order(), omega.order() + 1).
GeometricMotion to_angle_parameter(const MotionState& state, double theta0 = 0.0);

/// p = o + tilde(o'), in fixed coordinates.
Vec2 fixed_polode_point(const GeometricMotion& m);

/// q = R(θ0)^T tilde(o'), in moving coordinates.
Vec2 moving_polode_point(const GeometricMotion& m);

/// Jet p, p', ..., p^(order-1) of the fixed polode.
PlanarJet fixed_polode_jets(const GeometricMotion& m);

/// k-th θ-derivative of a polode. Fixed: p^(k) = o^(k) + tilde(o^(k+1)).
/// Moving: R q^(k), expressed in the fixed frame, from the recursion
/// Q_1 = p', Q_k = Q'_{k-1} - tilde(Q_{k-1}).
/// Requires 1 <= k and order >= k + 1.
Vec2 polode_derivative(const GeometricMotion& m, int k, PolodeSide side);

/// Curvature radius vector of the fixed polode, from P to its curvature
/// centre: (|p'|²/(tilde(p')·p'')) tilde(p'). Throws StraightPolode, or
/// StationaryPole when p' vanishes.
Vec2 fixed_polode_curvature(const GeometricMotion& m);

/// Same for the moving polode, in the fixed frame:
/// (|p'|²/(tilde(p')·p'' - |p'|²)) tilde(p'). Throws like fixed_polode_curvature.
Vec2 moving_polode_curvature(const GeometricMotion& m);

struct PolodeCurvatures {
  Outcome<Vec2> fixed;
  Outcome<Vec2> moving;
};

/// Both radii; a straight polode only blanks its own side.
/// Throws StationaryPole when p' vanishes.
PolodeCurvatures polode_curvatures(const GeometricMotion& m);

struct BottemaInvariants {
  double b2 = 0.0;
  double a3 = 0.0;
  double b3 = 0.0;
  std::vector<std::pair<double, double>> higher;  ///< (a_k, b_k) for k = 4..order
};

/// Canonical description: origin at the pole, x axis along the common polode
/// tangent oriented so that p' = (-b2, 0) with b2 > 0, θ measured from now.
struct CanonicalForm {
  GeometricMotion motion;
  BottemaInvariants invariants;
  Vec2 origin;  ///< the velocity pole, fixed coordinates
  Vec2 x_axis;  ///< unit first axis, fixed coordinates
};

/// Throws PureTranslation, StationaryPole (pole tangent undefined) or
/// InsufficientOrder (order 3 is the minimum).
CanonicalForm canonicalize(const MotionState& state);

/// Binomial coefficient via Pascal's recurrence, 0 <= i <= k <= 20.
std::uint64_t pascal_coefficient(int i, int k);

/// Same value from k!/(i!(k-i)!).
std::uint64_t pascal_coefficient_factorial(int i, int k);

}  // namespace symkin
