#include "symkin/bresse.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "symkin/trajectory.hpp"

namespace symkin {

namespace {

constexpr double kRelative = 1e-9;

Vec2 unit(const Vec2& v) { return v / norm(v); }

}  // namespace

BresseSet bresse_set(const MotionState& state, int k) {
  if (k < 2) fail(Reason::OutOfRange, "Bresse circles are defined for k >= 2");
  const Vec2 p = velocity_pole(state);
  const Vec2 r_ap = p - state.a_pos();
  const PlanarJet pj = point_jets(state, r_ap, k);
  const OmegaComponents om = omega_components(state.omega, k);

  BresseSet set;
  set.k = k;
  set.pole = p;
  set.pole_derivative = pj[k];
  set.omega_r = om.omega_r;
  set.omega_t = om.omega_t;

  const double omega_scale = std::abs(om.omega_r) + std::abs(om.omega_t);
  const double pk_scale = norm(state.a_jets[k]) + omega_scale * norm(r_ap);
  const bool pk_vanishes = norm(pj[k]) <= kRelative * pk_scale;
  const bool r_vanishes = std::abs(om.omega_r) <= kRelative * omega_scale;
  const bool t_vanishes = std::abs(om.omega_t) <= kRelative * omega_scale;

  // zero normal: a·p^(k) - Ω_r a² = 0
  if (pk_vanishes) {
    set.zero_normal = r_vanishes ? Locus{Degenerate{}} : Locus{PointOnly{p}};
  } else if (r_vanishes) {
    set.zero_normal = LineThroughPole{p, unit(tilde(pj[k]))};
  } else {
    set.zero_normal = CircleThroughPole{p, pj[k] / om.omega_r};
  }

  // zero tangential: Ω_t a² - a·tilde(p^(k)) = 0
  if (pk_vanishes) {
    set.zero_tangential = t_vanishes ? Locus{Degenerate{}} : Locus{PointOnly{p}};
  } else if (t_vanishes) {
    set.zero_tangential = LineThroughPole{p, unit(pj[k])};
  } else {
    set.zero_tangential = CircleThroughPole{p, tilde(pj[k]) / om.omega_t};
  }
  return set;
}

double locus_residual(const Locus& locus, const Vec2& q) {
  const double tiny = degeneracy_tolerance(0.0);
  struct Visitor {
    const Vec2& q;
    double tiny;
    double operator()(const CircleThroughPole& c) const {
      const Vec2 a = q - c.pole;
      return std::abs(norm2(a) - dot(c.diameter, a)) / std::max(norm2(c.diameter), tiny);
    }
    double operator()(const LineThroughPole& l) const {
      const Vec2 a = q - l.pole;
      return std::abs(perp_dot(l.direction, a)) / std::max(norm(a), tiny);
    }
    double operator()(const PointOnly& pt) const {
      const double d = norm(q - pt.pole);
      return d / std::max(d, tiny);
    }
    double operator()(const Degenerate&) const { return 0.0; }
  };
  return std::visit(Visitor{q, tiny}, locus);
}

Vec2 inflection_pole(const MotionState& state) {
  const PlanarJet pj = pole_point_jets(state, 2);
  const double w = state.omega[0];
  return velocity_pole(state) + pj[2] / (w * w);
}

Vec2 pole_via_bresse(const BresseSet& set) {
  const auto* cn = std::get_if<CircleThroughPole>(&set.zero_normal);
  const auto* ct = std::get_if<CircleThroughPole>(&set.zero_tangential);
  if (cn == nullptr || ct == nullptr) {
    fail(Reason::DegenerateIntersection, "both Bresse loci must be circles");
  }
  // r_PP_k = λ (tilde(d_N) - tilde(d_T)), the foot of the perpendicular from P
  // onto the line through N and T.
  const Vec2 m = tilde(cn->diameter) - tilde(ct->diameter);
  const double scale = std::max(norm(cn->diameter), norm(ct->diameter));
  if (!(norm(m) > degeneracy_tolerance(scale) * scale)) {
    fail(Reason::DegenerateIntersection, "Bresse diameters coincide");
  }
  const double lambda = dot(ct->diameter, m) / norm2(m);
  return set.pole + lambda * m;
}

Vec2 balls_point_bresse(const MotionState& state) {
  const BresseSet s2 = bresse_set(state, 2);
  const BresseSet s3 = bresse_set(state, 3);
  const auto* inflection = std::get_if<CircleThroughPole>(&s2.zero_normal);
  if (inflection == nullptr) {
    fail(Reason::DegenerateIntersection, "inflection circle is degenerate");
  }
  const Vec2 d1 = inflection->diameter;

  if (const auto* c = std::get_if<CircleThroughPole>(&s3.zero_normal)) {
    const Vec2 d2 = c->diameter;
    const Vec2 diff = d1 - d2;
    const double scale = std::max(norm(d1), norm(d2));
    if (!(norm(diff) > kRelative * scale)) {
      fail(Reason::CoincidentCircles, "first and second zero-normal circles coincide");
    }
    const double cross = perp_dot(d1, d2);
    if (!(std::abs(cross) > kRelative * norm(d1) * norm(d2))) {
      fail(Reason::CoincidentDirection, "zero-normal circles touch only at the pole");
    }
    return s2.pole + (cross / norm2(diff)) * (tilde(d1) - tilde(d2));
  }
  if (const auto* l = std::get_if<LineThroughPole>(&s3.zero_normal)) {
    // Circle of infinite diameter: U is the second intersection of the line
    // with the inflection circle.
    const double s = dot(d1, l->direction);
    if (!(std::abs(s) > kRelative * norm(d1))) {
      fail(Reason::CoincidentDirection, "zero-normal line is tangent to the inflection circle");
    }
    return s2.pole + s * l->direction;
  }
  fail(Reason::DegenerateIntersection, "second-order zero-normal locus is degenerate");
}

}  // namespace symkin
