#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "symkin/jet.hpp"
#include "symkin/vec2.hpp"

namespace symkin {

/// Instantaneous state of a moving plane.
///
/// `a_jets` holds the reference point A: entry 0 is its position, entry k its
/// k-th time derivative. `omega` holds the angular velocity and its
/// derivatives (omega[0] = ω, omega[1] = ω̇, ...). The orientation angle
/// itself is not needed by any instantaneous formula and is not stored.
struct MotionState {
  PlanarJet a_jets;
  ScalarJet omega;
  double char_length = 1.0;  ///< characteristic length for degeneracy thresholds

  const Vec2& a_pos() const { return a_jets[0]; }

  /// Highest k for which point_derivative is available.
  int max_order() const { return std::min(a_jets.order(), omega.order() + 1); }
};

/// Radial and tangential angular components of order k.
struct OmegaComponents {
  int k = 0;
  double omega_r = 0.0;
  double omega_t = 0.0;
};

/// (Ω_r^(k), Ω_t^(k)) via the recurrence
///   Ω_r^(k+1) = Ω̇_r^(k) + ω Ω_t^(k),  Ω_t^(k+1) = Ω̇_t^(k) - ω Ω_r^(k),
/// seeded with (-1, 0) and run over jets. Requires k <= omega.order() + 1.
OmegaComponents omega_components(const ScalarJet& omega, int k);

/// All components for k = 0..k_max in one pass.
std::vector<OmegaComponents> omega_table(const ScalarJet& omega, int k_max);

/// r_B^(k) = r_A^(k) - Ω_r^(k) r_AB + Ω_t^(k) tilde(r_AB)  (absolute position for k = 0).
Vec2 point_derivative(const MotionState& state, const Vec2& r_ab, int k);

/// Entries 0..k_max of the body point at offset r_ab from A.
PlanarJet point_jets(const MotionState& state, const Vec2& r_ab, int k_max);

/// Angular-velocity threshold below which the motion counts as a pure translation.
double omega_tolerance(const MotionState& state);

/// Absolute position of the instantaneous centre of velocity,
/// a_pos + tilde(ṙ_A)/ω. Throws PureTranslation.
Vec2 velocity_pole(const MotionState& state);

/// Derivatives of the body point currently at the velocity pole: entry 1 is
/// zero, entry 2 is the pole acceleration p̈.
PlanarJet pole_point_jets(const MotionState& state, int k_max);

/// Velocity of the pole locus (not of a body point): u = tilde(p̈)/ω.
Vec2 pole_displacement_velocity(const MotionState& state);

/// Absolute position of the point whose k-th derivative vanishes:
/// r_AP_k = (Ω_r r_A^(k) + Ω_t tilde(r_A^(k))) / (Ω_r² + Ω_t²).
/// Throws DegenerateAngularState when both components vanish.
Vec2 acceleration_pole(const MotionState& state, int k);

struct PoleReport {
  Vec2 p;
  PlanarJet p_jets;
  Vec2 u;
  std::vector<std::pair<int, Vec2>> higher_poles;  ///< only the poles that exist
};

PoleReport pole_report(const MotionState& state, int k_max);

}  // namespace symkin
