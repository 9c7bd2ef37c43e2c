#include "symkin/error.hpp"

namespace symkin {

std::string_view reason_code(Reason reason) {
  switch (reason) {
    case Reason::OrderMismatch: return "order-mismatch";
    case Reason::InsufficientOrder: return "insufficient-order";
    case Reason::NonFinite: return "non-finite";
    case Reason::OutOfRange: return "out-of-range";
    case Reason::ZeroVelocity: return "zero-velocity";
    case Reason::InfiniteCurvature: return "infinite-curvature";
    case Reason::PureTranslation: return "pure-translation";
    case Reason::DegenerateAngularState: return "degenerate-angular-state";
    case Reason::StationaryPole: return "stationary-pole";
    case Reason::DegenerateIntersection: return "degenerate-intersection";
    case Reason::CoincidentCircles: return "coincident-circles";
    case Reason::CoincidentDirection: return "coincident-direction";
    case Reason::ParallelRays: return "parallel-rays";
    case Reason::OnInflectionCircle: return "on-inflection-circle";
    case Reason::CollinearInput: return "collinear-input";
    case Reason::DegenerateHelper: return "degenerate-helper";
    case Reason::StraightPolode: return "straight-polode";
  }
  return "unknown";
}

}  // namespace symkin
