#include "symkin/rigid_motion.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "symkin/trajectory.hpp"

namespace symkin {

namespace {

void require_order(const MotionState& state, int k) {
  if (k < 0) fail(Reason::OutOfRange, "negative derivative order");
  if (k > state.max_order()) {
    fail(Reason::InsufficientOrder, "derivative " + std::to_string(k) +
                                        " needs state jets of order " + std::to_string(k) +
                                        " (point) and " + std::to_string(k - 1) + " (omega)");
  }
}

}  // namespace

std::vector<OmegaComponents> omega_table(const ScalarJet& omega, int k_max) {
  if (k_max < 0) fail(Reason::OutOfRange, "negative derivative order");
  if (k_max > omega.order() + 1) {
    fail(Reason::InsufficientOrder, "Ω^(" + std::to_string(k_max) + ") needs an ω jet of order " +
                                        std::to_string(k_max - 1));
  }
  std::vector<OmegaComponents> table;
  table.reserve(k_max + 1);
  table.push_back({0, -1.0, 0.0});
  if (k_max == 0) return table;

  // Ω^(1) = (0, ω) as full jets; each further step consumes one order.
  ScalarJet radial(omega.order());
  ScalarJet tangential = omega;
  table.push_back({1, radial[0], tangential[0]});
  for (int k = 2; k <= k_max; ++k) {
    const int next = radial.order() - 1;
    const ScalarJet w = omega.truncated(next);
    ScalarJet r = radial.derivative() + w * tangential.truncated(next);
    ScalarJet t = tangential.derivative() - w * radial.truncated(next);
    radial = std::move(r);
    tangential = std::move(t);
    table.push_back({k, radial[0], tangential[0]});
  }
  return table;
}

OmegaComponents omega_components(const ScalarJet& omega, int k) { return omega_table(omega, k).back(); }

Vec2 point_derivative(const MotionState& state, const Vec2& r_ab, int k) {
  require_order(state, k);
  const OmegaComponents om = omega_components(state.omega, k);
  return state.a_jets[k] - om.omega_r * r_ab + om.omega_t * tilde(r_ab);
}

PlanarJet point_jets(const MotionState& state, const Vec2& r_ab, int k_max) {
  require_order(state, k_max);
  const auto table = omega_table(state.omega, k_max);
  PlanarJet out(k_max);
  const Vec2 t = tilde(r_ab);
  for (int k = 0; k <= k_max; ++k) {
    out[k] = state.a_jets[k] - table[k].omega_r * r_ab + table[k].omega_t * t;
  }
  return out;
}

double omega_tolerance(const MotionState& state) {
  const double speed = state.a_jets.order() >= 1 ? norm(state.a_jets[1]) : 0.0;
  return 1e-9 * (1.0 + speed / state.char_length);
}

Vec2 velocity_pole(const MotionState& state) {
  require_order(state, 1);
  const double w = state.omega[0];
  if (!(std::abs(w) > omega_tolerance(state))) {
    fail(Reason::PureTranslation, "angular velocity vanishes; the pole is at infinity");
  }
  return state.a_pos() + tilde(state.a_jets[1]) / w;
}

PlanarJet pole_point_jets(const MotionState& state, int k_max) {
  const Vec2 p = velocity_pole(state);
  return point_jets(state, p - state.a_pos(), k_max);
}

Vec2 pole_displacement_velocity(const MotionState& state) {
  const PlanarJet pj = pole_point_jets(state, 2);
  return tilde(pj[2]) / state.omega[0];
}

Vec2 acceleration_pole(const MotionState& state, int k) {
  if (k < 1) fail(Reason::OutOfRange, "acceleration poles start at k = 1");
  require_order(state, k);
  const OmegaComponents om = omega_components(state.omega, k);
  const Vec2& rk = state.a_jets[k];
  const double wr = om.omega_r;
  const double wt = om.omega_t;
  const double tol = degeneracy_tolerance(norm(rk) / state.char_length);
  if (!(wr * wr + wt * wt > tol * tol)) {
    fail(Reason::DegenerateAngularState,
         "Ω_r and Ω_t of order " + std::to_string(k) + " both vanish");
  }
  // Smith-style division (Ω_r v + Ω_t ṽ)/(Ω_r² + Ω_t²): avoids overflow and
  // reduces to tilde(ṙ_A)/ω exactly when Ω_r = 0.
  Vec2 r_ap;
  if (std::abs(wt) >= std::abs(wr)) {
    const double ratio = wr / wt;
    r_ap = (ratio * rk + tilde(rk)) / (wt + wr * ratio);
  } else {
    const double ratio = wt / wr;
    r_ap = (rk + ratio * tilde(rk)) / (wr + wt * ratio);
  }
  return state.a_pos() + r_ap;
}

PoleReport pole_report(const MotionState& state, int k_max) {
  const int top = std::min(k_max, state.max_order());
  PoleReport rep;
  rep.p = velocity_pole(state);
  rep.p_jets = point_jets(state, rep.p - state.a_pos(), std::max(top, 2));
  rep.u = tilde(rep.p_jets[2]) / state.omega[0];
  for (int k = 2; k <= top; ++k) {
    const auto pk = attempt([&] { return acceleration_pole(state, k); });
    if (pk) rep.higher_poles.emplace_back(k, *pk);
  }
  return rep;
}

}  // namespace symkin
