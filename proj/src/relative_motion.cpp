#include "symkin/relative_motion.hpp"

#include <algorithm>
#include <cmath>

#include "symkin/trajectory.hpp"

namespace symkin {

ScalarJet angular_chain(const ScalarJet& omega_ij, const ScalarJet& omega_jk) {
  return -(omega_ij + omega_jk);
}

Vec2 velocity_chain(const Vec2& v_ij, const Vec2& v_jk) { return -(v_ij + v_jk); }

Vec2 relative_pole(const FramePair& pair, const Vec2& a_pos, double char_length) {
  const double w = pair.omega_ij.value();
  const double tol = 1e-9 * (1.0 + norm(pair.v_a_ij) / char_length);
  if (!(std::abs(w) > tol)) {
    fail(Reason::PureTranslation, "frames translate relative to each other");
  }
  return a_pos + tilde(pair.v_a_ij) / w;
}

double aronhold_residual(const Vec2& p_ij, const Vec2& p_jk, const Vec2& p_ki) {
  const double d2 = std::max({norm2(p_jk - p_ij), norm2(p_ki - p_ij), norm2(p_ki - p_jk)});
  const double area2 = std::abs(perp_dot(p_ki - p_ij, p_jk - p_ij));
  return area2 / std::max(d2, degeneracy_tolerance(0.0));
}

}  // namespace symkin
