#pragma once

#include <array>
#include <cassert>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>

#include "symkin/error.hpp"
#include "symkin/vec2.hpp"

namespace symkin {

inline constexpr int kMaxJetOrder = 12;

/// Binomial coefficient C(n, k) as a double, exact for n <= kMaxJetOrder + 1.
double binomial(int n, int k);

/// Value plus derivatives up to `order()` at a single evaluation point.
///
/// Entry i holds the i-th derivative itself, not the Taylor coefficient
/// (the i! factor is applied inside products and compositions). T is either
/// double (ScalarJet) or Vec2 (PlanarJet).
template <class T>
class Jet {
 public:
  Jet() = default;

  explicit Jet(int order) : order_(order) { check_order(order); }

  Jet(std::initializer_list<T> values) : order_(static_cast<int>(values.size()) - 1) {
    if (values.size() == 0) fail(Reason::OutOfRange, "jet needs at least one entry");
    check_order(order_);
    int i = 0;
    for (const T& v : values) d_[i++] = v;
  }

  static Jet constant(const T& value, int order) {
    Jet j(order);
    j.d_[0] = value;
    return j;
  }

  int order() const { return order_; }
  int size() const { return order_ + 1; }

  const T& operator[](int i) const {
    assert(i >= 0 && i <= order_);
    return d_[i];
  }
  T& operator[](int i) {
    assert(i >= 0 && i <= order_);
    return d_[i];
  }

  const T& at(int i) const {
    if (i < 0 || i > order_) {
      fail(Reason::InsufficientOrder,
           "derivative " + std::to_string(i) + " requested from a jet of order " +
               std::to_string(order_));
    }
    return d_[i];
  }

  const T& value() const { return d_[0]; }

  std::span<const T> derivatives() const { return {d_.data(), static_cast<std::size_t>(size())}; }

  /// Jet of the first derivative: entries shifted down by one.
  Jet derivative() const {
    if (order_ == 0) fail(Reason::InsufficientOrder, "cannot differentiate an order-0 jet");
    Jet r(order_ - 1);
    for (int i = 0; i < order_; ++i) r.d_[i] = d_[i + 1];
    return r;
  }

  Jet truncated(int order) const {
    if (order > order_) {
      fail(Reason::InsufficientOrder, "cannot extend a jet of order " + std::to_string(order_) +
                                          " to " + std::to_string(order));
    }
    Jet r(order);
    for (int i = 0; i <= order; ++i) r.d_[i] = d_[i];
    return r;
  }

  Jet& operator+=(const Jet& o) {
    require_same_order(o);
    for (int i = 0; i <= order_; ++i) d_[i] += o.d_[i];
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    require_same_order(o);
    for (int i = 0; i <= order_; ++i) d_[i] -= o.d_[i];
    return *this;
  }
  Jet& operator*=(double s) {
    for (int i = 0; i <= order_; ++i) d_[i] *= s;
    return *this;
  }

  friend bool operator==(const Jet& a, const Jet& b) {
    if (a.order_ != b.order_) return false;
    for (int i = 0; i <= a.order_; ++i) {
      if (!(a.d_[i] == b.d_[i])) return false;
    }
    return true;
  }

  void require_same_order(const Jet& o) const {
    if (o.order_ != order_) {
      fail(Reason::OrderMismatch, "jet orders " + std::to_string(order_) + " and " +
                                      std::to_string(o.order_) + " differ");
    }
  }

 private:
  static void check_order(int order) {
    if (order < 0 || order > kMaxJetOrder) {
      fail(Reason::OutOfRange, "jet order " + std::to_string(order) + " outside [0, " +
                                   std::to_string(kMaxJetOrder) + "]");
    }
  }

  int order_ = 0;
  std::array<T, kMaxJetOrder + 1> d_{};
};

using ScalarJet = Jet<double>;
using PlanarJet = Jet<Vec2>;

template <class T>
Jet<T> operator+(Jet<T> a, const Jet<T>& b) {
  return a += b;
}
template <class T>
Jet<T> operator-(Jet<T> a, const Jet<T>& b) {
  return a -= b;
}
template <class T>
Jet<T> operator-(Jet<T> a) {
  return a *= -1.0;
}
template <class T>
Jet<T> operator*(double s, Jet<T> a) {
  return a *= s;
}

/// Leibniz rule: (a b)^(k) = sum_i C(k,i) a^(i) b^(k-i).
template <class T>
Jet<T> operator*(const ScalarJet& a, const Jet<T>& b) {
  if (a.order() != b.order()) {
    fail(Reason::OrderMismatch, "jet orders " + std::to_string(a.order()) + " and " +
                                    std::to_string(b.order()) + " differ");
  }
  Jet<T> r(a.order());
  for (int k = 0; k <= a.order(); ++k) {
    T acc{};
    for (int i = 0; i <= k; ++i) acc += (binomial(k, i) * a[i]) * b[k - i];
    r[k] = acc;
  }
  return r;
}

inline ScalarJet jet_add(const ScalarJet& a, const ScalarJet& b) { return a + b; }
inline ScalarJet jet_mul(const ScalarJet& a, const ScalarJet& b) { return a * b; }

/// Jets of sin(theta(t)) and cos(theta(t)), in that order.
std::pair<ScalarJet, ScalarJet> jet_sin_cos(const ScalarJet& theta);

/// Applies tilde to every entry; tilde commutes with d/dt.
PlanarJet jet_tilde(const PlanarJet& a);

/// Applies J^k to every entry.
PlanarJet jet_j_pow(int k, const PlanarJet& a);

/// cos(angle) v + sin(angle) tilde(v), with both factors time-varying.
PlanarJet jet_rotate(const PlanarJet& v, const ScalarJet& angle);

/// Jet of f(g(s)) at s0, given the jet of f at g(s0) and the jet of g at s0.
/// The result has order min(outer.order(), inner.order()).
ScalarJet jet_compose(const ScalarJet& outer, const ScalarJet& inner);
PlanarJet jet_compose(const PlanarJet& outer, const ScalarJet& inner);

/// Jet of the inverse function g^-1 at g(s0), with value s0.
/// Throws PureTranslation if g'(s0) vanishes.
ScalarJet jet_invert(const ScalarJet& g, double s0);

}  // namespace symkin
