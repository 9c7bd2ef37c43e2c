#pragma once

#include "symkin/jet.hpp"
#include "symkin/vec2.hpp"

namespace symkin {

/// Motion of frame i relative to frame j, observed at a probe point A.
///
/// All relative velocities of one three-frame analysis must refer to the same
/// probe point A: the velocity closure v_ij + v_jk + v_ki = 0 holds pointwise.
struct FramePair {
  int i = 0;
  int j = 0;
  ScalarJet omega_ij;  ///< angular velocity of i relative to j, and derivatives
  Vec2 v_a_ij;         ///< velocity of A (fixed to i) relative to j

  /// Same relative motion seen from the other side: negated ω and v.
  FramePair swapped() const { return {j, i, -omega_ij, -v_a_ij}; }
};

/// ω_ki from ω_ij and ω_jk, such that the three jets sum to zero entrywise.
ScalarJet angular_chain(const ScalarJet& omega_ij, const ScalarJet& omega_jk);

/// v_ki = -(v_ij + v_jk). Velocities only; there is no acceleration analogue.
Vec2 velocity_chain(const Vec2& v_ij, const Vec2& v_jk);

/// Relative velocity pole P_ij = a_pos + tilde(v_A_ij)/ω_ij. Symmetric under
/// swapping i and j. Throws PureTranslation when ω_ij vanishes.
Vec2 relative_pole(const FramePair& pair, const Vec2& a_pos, double char_length = 1.0);

/// Collinearity residual of three relative poles:
/// |perp_dot(p_ki - p_ij, p_jk - p_ij)| / max(d², τ) with d the largest
/// pairwise distance. Zero iff collinear; dimensionless.
double aronhold_residual(const Vec2& p_ij, const Vec2& p_jk, const Vec2& p_ki);

}  // namespace symkin
