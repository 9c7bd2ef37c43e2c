#pragma once

#include <cmath>

namespace symkin {

/// Free planar vector. No origin is stored; a point is represented by its
/// position vector from whatever origin the caller has chosen.
struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2& operator+=(const Vec2& o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  constexpr Vec2& operator-=(const Vec2& o) {
    x -= o.x;
    y -= o.y;
    return *this;
  }
  constexpr Vec2& operator*=(double s) {
    x *= s;
    y *= s;
    return *this;
  }

  friend constexpr bool operator==(const Vec2&, const Vec2&) = default;
};

constexpr Vec2 operator+(Vec2 a, const Vec2& b) { return a += b; }
constexpr Vec2 operator-(Vec2 a, const Vec2& b) { return a -= b; }
constexpr Vec2 operator-(const Vec2& a) { return {-a.x, -a.y}; }
constexpr Vec2 operator*(double s, const Vec2& a) { return {s * a.x, s * a.y}; }
constexpr Vec2 operator*(const Vec2& a, double s) { return {a.x * s, a.y * s}; }
constexpr Vec2 operator/(const Vec2& a, double s) { return {a.x / s, a.y / s}; }

/// Skew-orthogonal complement: `a` turned by +90 degrees (counter-clockwise).
constexpr Vec2 tilde(const Vec2& a) { return {-a.y, a.x}; }

constexpr double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

/// Skew-scalar product, the oriented area of the parallelogram spanned from
/// `a` to `b`. Identical to dot(tilde(a), b).
constexpr double perp_dot(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

constexpr double norm2(const Vec2& a) { return dot(a, a); }
inline double norm(const Vec2& a) { return std::hypot(a.x, a.y); }

inline bool isfinite(const Vec2& a) { return std::isfinite(a.x) && std::isfinite(a.y); }

/// cos(theta) a + sin(theta) tilde(a)
inline Vec2 rotate(const Vec2& a, double theta) {
  return std::cos(theta) * a + std::sin(theta) * tilde(a);
}

/// Power of the complex structure, reduced mod 4: I, J, -I, -J.
struct JPower {
  int k = 0;

  constexpr JPower() = default;
  constexpr explicit JPower(int power) : k(((power % 4) + 4) % 4) {}

  constexpr Vec2 operator()(const Vec2& a) const {
    switch (k) {
      case 0: return a;
      case 1: return tilde(a);
      case 2: return -a;
      default: return -tilde(a);
    }
  }
};

/// J^k applied to `a`; the cycle a, ã, -a, -ã repeats with period 4.
constexpr Vec2 j_pow(int k, const Vec2& a) { return JPower(k)(a); }

}  // namespace symkin
