#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <type_traits>
#include <utility>

#include "symkin/error.hpp"
#include "symkin/jet.hpp"

namespace symkin {

namespace detail {

inline double fd_magnitude(double v) { return std::abs(v); }
inline double fd_magnitude(const Vec2& v) { return norm(v); }

// Ridders' method from one starting step: central differences on a shrinking
// step, Neville-extrapolated to h = 0. Returns the entry with the smallest
// internal error estimate together with that estimate.
template <class T, class F>
std::pair<T, double> ridders(F& f, double t0, int k, double h) {
  constexpr int kLevels = 10;
  constexpr double kShrink2 = 1.4 * 1.4;

  auto central = [&](double step) {
    T acc{};
    for (int j = 0; j <= k; ++j) {
      const double w = ((j % 2) ? -1.0 : 1.0) * binomial(k, j);
      acc += w * f(t0 + (0.5 * k - j) * step);
    }
    return acc / std::pow(step, k);
  };

  std::array<std::array<T, kLevels>, kLevels> a{};
  a[0][0] = central(h);
  std::pair<T, double> best{a[0][0], std::numeric_limits<double>::infinity()};
  for (int i = 1; i < kLevels; ++i) {
    h /= 1.4;
    a[0][i] = central(h);
    double fac = kShrink2;
    for (int j = 1; j <= i; ++j) {
      a[j][i] = (fac * a[j - 1][i] - a[j - 1][i - 1]) / (fac - 1.0);
      fac *= kShrink2;
      const double err = std::max(fd_magnitude(a[j][i] - a[j - 1][i]), fd_magnitude(a[j][i] - a[j - 1][i - 1]));
      if (err <= best.second) best = {a[j][i], err};
    }
    if (fd_magnitude(a[i][i] - a[i - 1][i - 1]) >= 2.0 * best.second) break;
  }
  return best;
}

}  // namespace detail

/// Estimate of f^(k)(t0) by Ridders' extrapolation, run from several starting
/// steps; the run with the smallest internal error estimate wins. Works for
/// callables returning double or Vec2.
///
/// Intended as an independent oracle for derivative claims, not as part of
/// any evaluation path. For smooth f the relative accuracy is about 1e-6 up
/// to k = 5 and 1e-4 for k = 6..8. It never aborts; a poor estimate shows up
/// as a large residual in the caller's comparison.
template <class F>
auto finite_difference(F&& f, double t0, int k) -> std::decay_t<decltype(f(t0))> {
  using T = std::decay_t<decltype(f(t0))>;
  if (k < 1 || k > 8) fail(Reason::OutOfRange, "finite_difference supports 1 <= k <= 8");

  const double scale = k * std::max(1.0, std::abs(t0));
  std::pair<T, double> best{T{}, std::numeric_limits<double>::infinity()};
  for (double h0 : {0.01, 0.02, 0.04, 0.08, 0.16}) {
    const auto run = detail::ridders<T>(f, t0, k, h0 * scale);
    if (run.second < best.second) best = run;
  }
  return best.first;
}

}  // namespace symkin
