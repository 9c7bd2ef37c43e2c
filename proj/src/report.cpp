#include "symkin/report.hpp"

#include <cmath>
#include <exception>

#include "symkin/rigid_motion.hpp"

namespace symkin {

namespace {

Vec2 moving_pole_velocity(const MotionState& s) {
  if (pole_is_stationary(s)) fail(Reason::StationaryPole, "the pole does not move");
  return pole_displacement_velocity(s);
}

double inflection_diameter_of(const MotionState& s) {
  const Vec2 pdd = pole_point_jets(s, 2)[2];
  const double w = s.omega[0];
  return norm(pdd) / (w * w);
}

std::vector<BresseSet> bresse_sets(const MotionState& s, int order) {
  if (order < 2) fail(Reason::InsufficientOrder, "Bresse circles need order 2");
  std::vector<BresseSet> sets;
  for (int k = 2; k <= order; ++k) sets.push_back(bresse_set(s, k));
  return sets;
}

// Runs body(i) for every index; the first escaping exception is rethrown
// after the loop so that worker threads never unwind across the region.
template <class Body>
void parallel_for(int n, Body&& body) {
  std::exception_ptr first;
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) {
    try {
      body(i);
    } catch (...) {
#pragma omp critical(symkin_first_error)
      if (!first) first = std::current_exception();
    }
  }
  if (first) std::rethrow_exception(first);
}

void check_sweep_order(int order) {
  if (order < 0 || order > kMaxJetOrder) throw ValidationError("order", "must be between 0 and 12");
}

}  // namespace

bool pole_is_stationary(const MotionState& state) {
  const Vec2 r_ap = velocity_pole(state) - state.a_pos();
  const PlanarJet pj = point_jets(state, r_ap, 2);
  const OmegaComponents om = omega_components(state.omega, 2);
  const double scale = norm(state.a_jets[2]) + (std::abs(om.omega_r) + std::abs(om.omega_t)) * norm(r_ap);
  return norm(pj[2]) <= 1e-9 * scale;
}

KinematicReport analyze_instant(const MotionSpec& spec, double at, int order) {
  KinematicReport r;
  r.name = spec.name;
  r.at = at;
  r.order = order;
  r.theta = orientation(spec, at);
  const MotionState s = evaluate(spec, at, order);

  r.pole = attempt([&] { return velocity_pole(s); });
  r.pole_accel = attempt([&] { return pole_point_jets(s, 2)[2]; });
  r.u = attempt([&] { return moving_pole_velocity(s); });
  r.inflection_pole = attempt([&] { return inflection_pole(s); });
  r.inflection_diameter = attempt([&] { return inflection_diameter_of(s); });
  r.bresse = attempt([&] { return bresse_sets(s, order); });
  for (int k = 2; k <= order; ++k) {
    r.higher_poles.emplace_back(k, attempt([&] { return acceleration_pole(s, k); }));
  }
  r.balls_point = attempt([&] { return balls_point_bresse(s); });
  r.bottema = attempt([&] { return canonicalize(s).invariants; });
  const auto geometric = attempt([&] { return evaluate_geometric(spec, at, order); });
  if (geometric) {
    r.fixed_polode_radius = attempt([&] { return fixed_polode_curvature(*geometric); });
    r.moving_polode_radius = attempt([&] { return moving_polode_curvature(*geometric); });
  } else {
    r.fixed_polode_radius = geometric.reason();
    r.moving_polode_radius = geometric.reason();
  }
  return r;
}

std::vector<double> sample_grid(double from, double to, int steps) {
  if (steps < 2) throw ValidationError("steps", "must be at least 2");
  if (!std::isfinite(from) || !std::isfinite(to)) throw ValidationError("from", "bounds must be finite");
  if (!(from < to)) throw ValidationError("from", "must be less than 'to'");
  std::vector<double> grid(steps);
  const double span = to - from;
  for (int i = 0; i < steps; ++i) grid[i] = from + span * i / (steps - 1);
  grid.back() = to;
  return grid;
}

SweepRow sweep_row(const MotionSpec& spec, double param, int order) {
  const MotionState s = evaluate(spec, param, order);
  SweepRow row;
  row.param = param;
  row.pole = attempt([&] { return velocity_pole(s); });
  row.u_norm = attempt([&] { return norm(moving_pole_velocity(s)); });
  row.inflection_diameter = attempt([&] { return inflection_diameter_of(s); });
  row.p2 = attempt([&] { return acceleration_pole(s, 2); });
  row.ball = attempt([&] { return balls_point_bresse(s); });
  return row;
}

PolodeRow polode_row(const MotionSpec& spec, double param, double reference) {
  PolodeRow row;
  row.param = param;
  row.theta = orientation(spec, param);
  const auto g = attempt([&] { return evaluate_geometric(spec, param, 1); });
  if (!g) {
    row.fixed = row.moving = row.moving_in_fixed = g.reason();
    return row;
  }
  const Vec2 q = moving_polode_point(*g);
  const Vec2 o_ref{spec.o_x.jet(reference, 0)[0], spec.o_y.jet(reference, 0)[0]};
  row.fixed = fixed_polode_point(*g);
  row.moving = q;
  row.moving_in_fixed = o_ref + rotate(q, orientation(spec, reference));
  return row;
}

namespace kernels {

namespace serial {

std::vector<SweepRow> analyze_sweep(const MotionSpec& spec, const std::vector<double>& grid, int order) {
  check_sweep_order(order);
  std::vector<SweepRow> rows(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) rows[i] = sweep_row(spec, grid[i], order);
  return rows;
}

std::vector<PolodeRow> sample_polodes(const MotionSpec& spec, const std::vector<double>& grid,
                                      double reference) {
  std::vector<PolodeRow> rows(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) rows[i] = polode_row(spec, grid[i], reference);
  return rows;
}

}  // namespace serial

namespace omp {

std::vector<SweepRow> analyze_sweep(const MotionSpec& spec, const std::vector<double>& grid, int order) {
  check_sweep_order(order);
  std::vector<SweepRow> rows(grid.size());
  parallel_for(static_cast<int>(grid.size()), [&](int i) { rows[i] = sweep_row(spec, grid[i], order); });
  return rows;
}

std::vector<PolodeRow> sample_polodes(const MotionSpec& spec, const std::vector<double>& grid,
                                      double reference) {
  std::vector<PolodeRow> rows(grid.size());
  parallel_for(static_cast<int>(grid.size()),
               [&](int i) { rows[i] = polode_row(spec, grid[i], reference); });
  return rows;
}

}  // namespace omp

}  // namespace kernels

}  // namespace symkin
