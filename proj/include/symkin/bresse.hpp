#pragma once

#include <variant>

#include "symkin/rigid_motion.hpp"
#include "symkin/vec2.hpp"

namespace symkin {

/// Circle through the pole P with diameter vector d from P; membership of a
/// point at offset a from P is a² - d a = 0.
struct CircleThroughPole {
  Vec2 pole;
  Vec2 diameter;
};

/// Limit of a circle through P whose diameter grew without bound.
struct LineThroughPole {
  Vec2 pole;
  Vec2 direction;  ///< unit length
};

struct PointOnly {
  Vec2 pole;
};

/// Every point of the plane satisfies the condition.
struct Degenerate {};

using Locus = std::variant<CircleThroughPole, LineThroughPole, PointOnly, Degenerate>;

/// Bresse circles of acceleration order k (named "of order k-1" classically):
/// the loci of zero normal and zero tangential k-th acceleration.
struct BresseSet {
  int k = 0;
  Vec2 pole;
  Vec2 pole_derivative;  ///< p^(k), the k-th derivative of the body point at P
  double omega_r = 0.0;
  double omega_t = 0.0;
  Locus zero_normal;      ///< diameter p^(k)/Ω_r^(k)
  Locus zero_tangential;  ///< diameter tilde(p^(k))/Ω_t^(k)
};

/// Throws PureTranslation (no pole), InsufficientOrder, or OutOfRange for k < 2.
/// A vanishing Ω turns the corresponding circle into a LineThroughPole.
BresseSet bresse_set(const MotionState& state, int k);

/// Zero iff q lies on the locus. Circles: |a² - d a| / max(|d|², τ) with a = q - P.
double locus_residual(const Locus& locus, const Vec2& q);

/// Inflection pole W = P + p̈/ω², the point opposite P on the inflection circle.
Vec2 inflection_pole(const MotionState& state);

/// Acceleration pole P_k as the second intersection of the two Bresse circles
/// of the set. Throws DegenerateIntersection unless both loci are circles.
Vec2 pole_via_bresse(const BresseSet& set);

/// Ball's point: second intersection of the zero-normal loci of acceleration
/// orders 2 (inflection circle) and 3. Throws CoincidentCircles when the two
/// circles coincide and CoincidentDirection when they only touch at P.
Vec2 balls_point_bresse(const MotionState& state);

}  // namespace symkin
