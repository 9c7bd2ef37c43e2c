#include "symkin/curvature_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "symkin/trajectory.hpp"

namespace symkin {

namespace {

// Inputs this close (relative) to a singular configuration are rejected.
constexpr double kGuard = 1e-7;

}  // namespace

ConjugatePair conjugate_pair(const MotionState& state, const Vec2& point) {
  const Vec2 r_ab = point - state.a_pos();
  const PlanarJet b = point_jets(state, r_ab, 2);
  return {point, point + center_of_curvature(b[1], b[2])};
}

Vec2 pole_from_conjugates(const ConjugatePair& pair1, const ConjugatePair& pair2) {
  const Vec2 r_aa0 = pair1.ray();
  const Vec2 r_bb0 = pair2.ray();
  const double den = perp_dot(r_aa0, r_bb0);
  if (!(std::abs(den) > kGuard * norm(r_aa0) * norm(r_bb0))) {
    fail(Reason::ParallelRays, "pole rays are parallel");
  }
  const Vec2 r_ab = pair2.a - pair1.a;
  return pair1.a + (perp_dot(r_ab, r_bb0) / den) * r_aa0;
}

Vec2 euler_savary_vector(const Vec2& r_pa, const Vec2& r_pw) {
  const double a2 = norm2(r_pa);
  const double den = dot(r_pw, r_pa) - a2;
  const double scale = std::max(norm(r_pa), norm(r_pw));
  if (!(std::abs(den) > kGuard * scale * scale)) {
    fail(Reason::OnInflectionCircle, "point lies on the inflection circle");
  }
  return (a2 / den) * r_pa;
}

double euler_savary_scalar(const EulerSavaryScalarInput& in) {
  const double den = in.D * std::sin(in.theta) - in.r;
  if (!(std::abs(den) > kGuard * std::max(std::abs(in.r), in.D))) {
    fail(Reason::OnInflectionCircle, "point lies on the inflection circle");
  }
  return in.r * in.r / den;
}

EulerSavaryScalarInput euler_savary_scalar_input(const Vec2& r_pa, const Vec2& r_pw,
                                                 const Vec2& u) {
  EulerSavaryScalarInput in;
  in.D = norm(r_pw);
  const double len = norm(r_pa);
  const double side = in.D > 0.0 ? dot(r_pa, r_pw) : 1.0;
  in.r = side < 0.0 ? -len : len;
  const double un = norm(u);
  if (un > 0.0 && len > 0.0) {
    const Vec2 e = r_pa / in.r;
    const Vec2 t = u / un;
    in.theta = std::atan2(std::abs(perp_dot(t, e)), dot(t, e));
  } else {
    in.theta = std::numbers::pi / 2;
  }
  return in;
}

Vec2 inflection_pole_from_conjugates(const ConjugatePair& pair1, const ConjugatePair& pair2,
                                     const Vec2& p) {
  const Vec2 r_pa = pair1.a - p;
  const Vec2 r_pb = pair2.a - p;
  const double den = perp_dot(r_pa, r_pb);
  if (!(std::abs(den) > kGuard * norm(r_pa) * norm(r_pb))) {
    fail(Reason::CollinearInput, "A, B and the pole are collinear");
  }
  const double pa2 = norm2(r_pa);
  const double pb2 = norm2(r_pb);
  const double ha = dot(pair1.ray(), r_pa);
  const double hb = dot(pair2.ray(), r_pb);
  if (!(std::abs(ha) > kGuard * pa2) || !(std::abs(hb) > kGuard * pb2)) {
    fail(Reason::DegenerateHelper, "a moving point coincides with its curvature centre");
  }
  const Vec2 r_pw = (pb2 * (pb2 / hb + 1.0) * tilde(r_pa) - pa2 * (pa2 / ha + 1.0) * tilde(r_pb)) / den;
  return p + r_pw;
}

Vec2 balls_point_geometric(const Vec2& p, const Vec2& w, const ConjugatePair& pair1,
                           const ConjugatePair& pair2) {
  const Vec2 r_pw = w - p;
  const Vec2 r_pa = pair1.a - p;
  const Vec2 r_pb = pair2.a - p;
  const Vec2 r_aa0 = pair1.ray();
  const Vec2 r_bb0 = pair2.ray();
  const double den = perp_dot(r_aa0, r_bb0);
  if (!(std::abs(den) > kGuard * norm(r_aa0) * norm(r_bb0))) {
    fail(Reason::ParallelRays, "pole rays are parallel");
  }
  const Vec2 r_ph = (perp_dot(r_pw, r_pa) * r_bb0 - perp_dot(r_pw, r_pb) * r_aa0) / den;
  const double scale = std::max({norm(r_pw), norm(r_pa), norm(r_pb)});
  if (!(norm(r_ph) > degeneracy_tolerance(scale) * scale)) {
    fail(Reason::DegenerateHelper, "helper point coincides with the pole");
  }
  return p + (dot(r_pw, r_ph) / norm2(r_ph)) * r_ph;
}

}  // namespace symkin
