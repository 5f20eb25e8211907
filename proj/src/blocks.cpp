#include "pascaline/blocks.hpp"

#include "pascaline/errors.hpp"

namespace pascaline {

double readout_voltage(const DigitBlock& b) {
  if (b.generator.emitting || b.reset.firing)
    throw StateError("readout is undefined while the digit is driven");
  const double r = b.device.resistance;
  return kRailVoltage * r / (r + b.r_series);
}

double drive_voltage(const DigitBlock& b) {
  if (b.generator.emitting) return b.generator.pulse_amplitude;
  if (b.reset.firing) return b.reset.reset_amplitude;
  return 0.0;
}

bool reset_threshold_exceeded(const DigitBlock& b) { return readout_voltage(b) > b.reset.v_t; }

DigitBlock apply_program_pulse(DigitBlock b) {
  if (b.generator.emitting || b.reset.firing)
    throw StateError("pulse applied while the digit is driven");
  b.device = integrate_const(b.params, b.device, b.generator.pulse_amplitude,
                             b.generator.pulse_width);
  return b;
}

std::optional<CarrySignal> check_and_fire_reset(DigitBlock& b, double t) {
  if (b.generator.emitting)
    throw StateError("comparator is evaluated only with the generator idle");
  if (b.reset.firing || !reset_threshold_exceeded(b)) return std::nullopt;
  b.device = integrate_const(b.params, b.device, b.reset.reset_amplitude, b.reset.reset_width);
  return CarrySignal{t};
}

double reset_duration_required(const MemristorParams& p, double r_at_reset) {
  if (!(r_at_reset >= p.r_min)) throw InputError("resistance below r_min");
  return (r_at_reset - p.r_min) / (p.beta * (kRailVoltage - p.v_threshold));
}

}  // namespace pascaline
