#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <utility>
#include <vector>

#include "symkin/jet.hpp"
#include "symkin/polodes.hpp"
#include "symkin/rigid_motion.hpp"
#include "symkin/trajectory.hpp"

// Independent routes to quantities the library computes, for cross-checks.
namespace symkin::tsupport {

/// Hand-expanded (Ω_r, Ω_t) for k = 0..5.
inline std::pair<double, double> omega_closed_form(const ScalarJet& w, int k) {
  const double w0 = w[0];
  const double w1 = w.order() >= 1 ? w[1] : 0.0;
  const double w2 = w.order() >= 2 ? w[2] : 0.0;
  const double w3 = w.order() >= 3 ? w[3] : 0.0;
  const double w4 = w.order() >= 4 ? w[4] : 0.0;
  switch (k) {
    case 0: return {-1.0, 0.0};
    case 1: return {0.0, w0};
    case 2: return {w0 * w0, w1};
    case 3: return {3 * w1 * w0, w2 - w0 * w0 * w0};
    case 4: return {4 * w2 * w0 + 3 * w1 * w1 - std::pow(w0, 4), w3 - 6 * w1 * w0 * w0};
    case 5:
      return {5 * w3 * w0 + 10 * w2 * w1 - 10 * w1 * std::pow(w0, 3),
              w4 - 10 * w2 * w0 * w0 - 15 * w1 * w1 * w0 + std::pow(w0, 5)};
    default: return {NAN, NAN};
  }
}

/// Hand-expanded (parallel, perpendicular) components of r^(k), k = 0..3.
inline std::pair<double, double> polar_closed_form(const ScalarJet& r, const ScalarJet& phi, int k) {
  const double p1 = phi[1];
  const double p2 = phi.order() >= 2 ? phi[2] : 0.0;
  const double p3 = phi.order() >= 3 ? phi[3] : 0.0;
  switch (k) {
    case 0: return {r[0], 0.0};
    case 1: return {r[1], p1 * r[0]};
    case 2: return {r[2] - p1 * p1 * r[0], 2 * p1 * r[1] + p2 * r[0]};
    case 3:
      return {r[3] - 3 * p1 * p1 * r[1] - 3 * p2 * p1 * r[0],
              3 * p1 * r[2] + 3 * p2 * r[1] + (p3 - p1 * p1 * p1) * r[0]};
    default: return {NAN, NAN};
  }
}

/// Point on the cubic of stationary curvature along unit direction e from
/// the pole, or nothing when the construction is ill-conditioned.
inline std::optional<Vec2> circling_point(const MotionState& s, const Vec2& e) {
  const PlanarJet pj = pole_point_jets(s, 3);
  const Vec2 et = tilde(e);
  const double w = s.omega[0];
  const double wd = s.omega[1];
  const double num = 3 * dot(e, pj[2]) * dot(et, pj[2]);
  const double den = w * dot(e, pj[3]) - 3 * wd * dot(e, pj[2]) + 3 * w * w * dot(et, pj[2]);
  const double scale = std::abs(w) * norm(pj[3]) + 3 * std::abs(wd) * norm(pj[2]) + 3 * w * w * norm(pj[2]);
  if (!(std::abs(den) > 1e-2 * scale)) return std::nullopt;
  const double dist = num / den;
  if (!(std::abs(dist) > 0.05 && std::abs(dist) < 20.0)) return std::nullopt;
  return velocity_pole(s) + dist * e;
}

/// Largest distance of the points from their total-least-squares line.
inline double line_fit_residual(const std::vector<Vec2>& pts) {
  Vec2 c{0, 0};
  for (const Vec2& p : pts) c += p;
  c = c / static_cast<double>(pts.size());
  double sxx = 0, sxy = 0, syy = 0;
  for (const Vec2& p : pts) {
    const Vec2 d = p - c;
    sxx += d.x * d.x;
    sxy += d.x * d.y;
    syy += d.y * d.y;
  }
  const double angle = 0.5 * std::atan2(2 * sxy, sxx - syy);
  const Vec2 dir{std::cos(angle), std::sin(angle)};
  double worst = 0;
  for (const Vec2& p : pts) worst = std::max(worst, std::abs(perp_dot(dir, p - c)));
  return worst;
}

struct CircleFit {
  Vec2 centre;
  double radius = 0;
  double residual = 0;  ///< largest | |p - centre| - radius |
};

/// Algebraic least-squares circle through the points.
inline CircleFit circle_fit(const std::vector<Vec2>& pts) {
  // Solve for (D, E, F) in x² + y² + D x + E y + F = 0 via normal equations,
  // after shifting to the centroid for conditioning.
  Vec2 c{0, 0};
  for (const Vec2& p : pts) c += p;
  c = c / static_cast<double>(pts.size());
  double a[3][4] = {};
  for (const Vec2& q : pts) {
    const Vec2 p = q - c;
    const double row[3] = {p.x, p.y, 1.0};
    const double rhs = -(p.x * p.x + p.y * p.y);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) a[i][j] += row[i] * row[j];
      a[i][3] += row[i] * rhs;
    }
  }
  for (int col = 0; col < 3; ++col) {
    int piv = col;
    for (int r = col + 1; r < 3; ++r) if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    for (int j = 0; j < 4; ++j) std::swap(a[col][j], a[piv][j]);
    for (int r = 0; r < 3; ++r) {
      if (r == col) continue;
      const double f = a[r][col] / a[col][col];
      for (int j = col; j < 4; ++j) a[r][j] -= f * a[col][j];
    }
  }
  const double D = a[0][3] / a[0][0];
  const double E = a[1][3] / a[1][1];
  const double F = a[2][3] / a[2][2];
  CircleFit fit;
  fit.centre = c + Vec2{-D / 2, -E / 2};
  fit.radius = std::sqrt(D * D / 4 + E * E / 4 - F);
  for (const Vec2& p : pts) fit.residual = std::max(fit.residual, std::abs(norm(p - fit.centre) - fit.radius));
  return fit;
}

/// R(θ0) q^(k) by differentiating q(θ) = R(θ)^T tilde(o'(θ)) as a jet,
/// bypassing the polode recursion.
inline Vec2 moving_polode_derivative_direct(const GeometricMotion& m, int k) {
  const PlanarJet o1 = m.o_jets.derivative();
  ScalarJet angle(o1.order());
  angle[0] = -m.theta0;
  if (angle.order() >= 1) angle[1] = -1.0;
  const PlanarJet q = jet_rotate(jet_tilde(o1), angle);
  return rotate(q[k], m.theta0);
}

/// Relative error against a reference, with an absolute floor of 1.
inline double rel_err(const Vec2& got, const Vec2& want) {
  return norm(got - want) / std::max(1.0, norm(want));
}
inline double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

}  // namespace symkin::tsupport
