#include "pascaline/device.hpp"

#include <algorithm>
#include <cmath>

#include "pascaline/errors.hpp"

namespace pascaline {

namespace {

/* Rate ignoring the rails; integrate_const clamps afterwards, which keeps a
 * device parked at a rail responsive to drives pointing back inward. */
double rate_unclipped(const MemristorParams& p, double v) {
  if (std::abs(v) <= p.v_threshold) return -p.alpha * v;
  return -p.beta * (v - std::copysign(p.v_threshold, v));
}

void check_voltage(double v) {
  if (!std::isfinite(v)) throw InputError("drive voltage must be finite");
}

}  // namespace

double dr_dt(const MemristorParams& p, const MemristorState& s, double v) {
  check_voltage(v);
  const double rate = rate_unclipped(p, v);
  if (s.resistance >= p.r_max && rate > 0) return 0.0;
  if (s.resistance <= p.r_min && rate < 0) return 0.0;
  return rate;
}

MemristorState integrate_const(const MemristorParams& p, MemristorState s, double v,
                               double duration) {
  check_voltage(v);
  if (!(duration >= 0)) throw InputError("duration must be non-negative");
  s.resistance = std::clamp(s.resistance + rate_unclipped(p, v) * duration, p.r_min, p.r_max);
  return s;
}

MemristorState step(const MemristorParams& p, MemristorState s, double v, double dt) {
  check_voltage(v);
  if (!(dt > 0)) throw InputError("dt must be positive");
  s.resistance = std::clamp(s.resistance + rate_unclipped(p, v) * dt, p.r_min, p.r_max);
  return s;
}

double current(const MemristorState& s, double v) {
  if (!(s.resistance > 0)) throw StateError("memristance must be positive");
  return v / s.resistance;
}

}  // namespace pascaline
