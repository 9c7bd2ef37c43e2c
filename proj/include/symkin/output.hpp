#pragma once

#include <string>
#include <vector>

#include "symkin/report.hpp"

namespace symkin {

/// Shortest decimal that reads back to the same double; locale independent.
std::string format_number(double v);

/// Pretty-printed JSON, newline terminated. Absent fields are null with a
/// sibling "<field>_reason" holding the reason code.
std::string report_json(const KinematicReport& report);

inline constexpr const char* kSweepHeader =
    "param,pole_x,pole_y,u_norm,inflection_diameter,p2_x,p2_y,ball_x,ball_y,reason";
inline constexpr const char* kPolodesHeader =
    "param,theta,fixed_x,fixed_y,moving_x,moving_y,moving_in_fixed_x,moving_in_fixed_y,reason";

/// CSV with CRLF line endings; absent values are empty cells and the last
/// column lists "field:reason-code" entries separated by ';'.
std::string sweep_csv(const std::vector<SweepRow>& rows);
std::string polodes_csv(const std::vector<PolodeRow>& rows);

/// Self-contained SVG 1.1 with layers fixed-polode, moving-polode, pole,
/// inflection-circle, bresse-circles and balls-point. `at` describes the
/// instant whose pole and circles are drawn.
std::string polodes_svg(const std::vector<PolodeRow>& rows, const KinematicReport& at);

}  // namespace symkin
