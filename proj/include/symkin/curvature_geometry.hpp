#pragma once

#include "symkin/rigid_motion.hpp"
#include "symkin/vec2.hpp"

namespace symkin {

/// A moving point and the curvature centre of its path. P, A and A0 are
/// collinear (the pole ray of A).
struct ConjugatePair {
  Vec2 a;
  Vec2 a0;

  Vec2 ray() const { return a0 - a; }
};

/// Scalar Euler-Savary inputs. r is signed: positive when A lies on the side
/// of the pole tangent that contains the inflection pole W.
struct EulerSavaryScalarInput {
  double r = 0.0;
  double D = 0.0;
  double theta = 0.0;  ///< angle between pole ray and pole tangent, radians
};

/// Body point at absolute position `point` and its curvature centre.
/// Throws ZeroVelocity or InfiniteCurvature like center_of_curvature.
ConjugatePair conjugate_pair(const MotionState& state, const Vec2& point);

/// Velocity pole from two conjugate pairs. Throws ParallelRays.
Vec2 pole_from_conjugates(const ConjugatePair& pair1, const ConjugatePair& pair2);

/// r_AA0 = (|r_PA|² / (r_PW·r_PA - |r_PA|²)) r_PA. Throws OnInflectionCircle.
Vec2 euler_savary_vector(const Vec2& r_pa, const Vec2& r_pw);

/// ρ = r² / (D sinθ - r). Throws OnInflectionCircle.
double euler_savary_scalar(const EulerSavaryScalarInput& in);

/// Signed r, D and θ for a point at r_pa. The pole tangent is the direction
/// of u; when u vanishes θ is taken as π/2 (D is zero then, so θ is inert).
/// The curvature centre is recovered as A0 = A + ρ·r_pa/r.
EulerSavaryScalarInput euler_savary_scalar_input(const Vec2& r_pa, const Vec2& r_pw, const Vec2& u);

/// Inflection pole W from two conjugate pairs and the pole. Throws
/// CollinearInput when A, B and P are collinear, DegenerateHelper when a
/// pair has A0 = A.
Vec2 inflection_pole_from_conjugates(const ConjugatePair& pair1, const ConjugatePair& pair2,
                                     const Vec2& p);

/// Ball's point from the pole, inflection pole and two conjugate pairs whose
/// moving points lie on the cubic of stationary curvature (circling points).
/// For arbitrary pairs the helper construction does not yield U.
/// Throws ParallelRays or DegenerateHelper.
Vec2 balls_point_geometric(const Vec2& p, const Vec2& w, const ConjugatePair& pair1,
                           const ConjugatePair& pair2);

}  // namespace symkin
