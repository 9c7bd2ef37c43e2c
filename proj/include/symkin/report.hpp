#pragma once

#include <string>
#include <utility>
#include <vector>

#include "symkin/bresse.hpp"
#include "symkin/error.hpp"
#include "symkin/motion_spec.hpp"
#include "symkin/polodes.hpp"
#include "symkin/vec2.hpp"

namespace symkin {

/// Everything known about one instant. Absent quantities carry the reason.
struct KinematicReport {
  std::string name;
  double at = 0.0;
  int order = 0;
  double theta = 0.0;
  Outcome<Vec2> pole{Reason::InsufficientOrder};
  Outcome<Vec2> pole_accel{Reason::InsufficientOrder};  ///< p̈
  Outcome<Vec2> u{Reason::InsufficientOrder};
  Outcome<Vec2> inflection_pole{Reason::InsufficientOrder};
  Outcome<double> inflection_diameter{Reason::InsufficientOrder};
  Outcome<std::vector<BresseSet>> bresse{Reason::InsufficientOrder};  ///< k = 2..order
  std::vector<std::pair<int, Outcome<Vec2>>> higher_poles;           ///< k = 2..order
  Outcome<Vec2> balls_point{Reason::InsufficientOrder};
  Outcome<BottemaInvariants> bottema{Reason::InsufficientOrder};
  Outcome<Vec2> fixed_polode_radius{Reason::InsufficientOrder};
  Outcome<Vec2> moving_polode_radius{Reason::InsufficientOrder};
};

/// True when the pole acceleration is negligible against the terms it is
/// built from, i.e. the pole does not move.
bool pole_is_stationary(const MotionState& state);

KinematicReport analyze_instant(const MotionSpec& spec, double at, int order);

struct SweepRow {
  double param = 0.0;
  Outcome<Vec2> pole{Reason::InsufficientOrder};
  Outcome<double> u_norm{Reason::InsufficientOrder};
  Outcome<double> inflection_diameter{Reason::InsufficientOrder};
  Outcome<Vec2> p2{Reason::InsufficientOrder};
  Outcome<Vec2> ball{Reason::InsufficientOrder};
};

struct PolodeRow {
  double param = 0.0;
  double theta = 0.0;
  Outcome<Vec2> fixed{Reason::InsufficientOrder};
  Outcome<Vec2> moving{Reason::InsufficientOrder};           ///< moving-frame coordinates
  Outcome<Vec2> moving_in_fixed{Reason::InsufficientOrder};  ///< placed at the reference pose
};

/// Equally spaced samples from..to inclusive; steps >= 2.
std::vector<double> sample_grid(double from, double to, int steps);

SweepRow sweep_row(const MotionSpec& spec, double param, int order);

/// Moving polode point mapped into the fixed frame with the pose at `reference`.
PolodeRow polode_row(const MotionSpec& spec, double param, double reference);

namespace kernels {

namespace serial {
std::vector<SweepRow> analyze_sweep(const MotionSpec& spec, const std::vector<double>& grid, int order);
std::vector<PolodeRow> sample_polodes(const MotionSpec& spec, const std::vector<double>& grid,
                                      double reference);
}  // namespace serial

/// Same results as serial, bit for bit; rows are independent.
namespace omp {
std::vector<SweepRow> analyze_sweep(const MotionSpec& spec, const std::vector<double>& grid, int order);
std::vector<PolodeRow> sample_polodes(const MotionSpec& spec, const std::vector<double>& grid,
                                      double reference);
}  // namespace omp

}  // namespace kernels

}  // namespace symkin
