#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

namespace symkin {

/// Why a kinematic quantity could not be produced. The kebab-case code of each
/// value is part of the report formats and must stay stable.
enum class Reason {
  OrderMismatch,
  InsufficientOrder,
  NonFinite,
  OutOfRange,
  ZeroVelocity,
  InfiniteCurvature,
  PureTranslation,
  DegenerateAngularState,
  StationaryPole,
  DegenerateIntersection,
  CoincidentCircles,
  CoincidentDirection,
  ParallelRays,
  OnInflectionCircle,
  CollinearInput,
  DegenerateHelper,
  StraightPolode,
};

std::string_view reason_code(Reason reason);

class KinematicError : public std::runtime_error {
 public:
  KinematicError(Reason reason, const std::string& what)
      : std::runtime_error(std::string(reason_code(reason)) + ": " + what), reason_(reason) {}

  Reason reason() const noexcept { return reason_; }

 private:
  Reason reason_;
};

[[noreturn]] inline void fail(Reason reason, const std::string& what) {
  throw KinematicError(reason, what);
}

/// A value or the reason it is absent.
template <class T>
class Outcome {
 public:
  Outcome(T value) : v_(std::move(value)) {}
  Outcome(Reason reason) : v_(reason) {}

  bool ok() const { return std::holds_alternative<T>(v_); }
  explicit operator bool() const { return ok(); }
  const T& value() const { return std::get<T>(v_); }
  const T& operator*() const { return value(); }
  const T* operator->() const { return &value(); }
  Reason reason() const { return std::get<Reason>(v_); }

 private:
  std::variant<T, Reason> v_;
};

/// Runs `f` and captures a KinematicError as an absent Outcome.
template <class F>
auto attempt(F&& f) -> Outcome<decltype(f())> {
  try {
    return f();
  } catch (const KinematicError& e) {
    return e.reason();
  }
}

}  // namespace symkin
