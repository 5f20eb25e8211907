#pragma once

#include <optional>

#include "pascaline/device.hpp"

namespace pascaline {

/* One-shot pulse generator: emits a fixed-width pulse at -2.5 V per trigger
 * and is disconnected otherwise. Triggers arriving while the digit is busy
 * are queued, so a carry landing mid-reset is never lost. */
struct PulseGenerator {
  double pulse_width = 6e-3;  // s
  double pulse_amplitude = -kRailVoltage;
  bool emitting = false;
  double emit_end = 0.0;  // meaningful while emitting
  int pending_triggers = 0;
  bool start_scheduled = false;  // engine bookkeeping
};

/* Comparator plus monostable: when the readout crosses v_t it drives the
 * device at +2.5 V for reset_width seconds and raises the carry. */
struct ResetCircuit {
  double v_t = 0.9;            // comparator threshold (V)
  double reset_width = 0.1;    // s
  double reset_amplitude = kRailVoltage;
  bool firing = false;
  double fire_end = 0.0;  // meaningful while firing
};

/* One digit: the device, its series readout resistor to the +2.5 V rail,
 * the pulse generator and the reset circuit. */
struct DigitBlock {
  MemristorParams params;
  MemristorState device;
  double r_series = 10e3;  // ohm
  PulseGenerator generator;
  ResetCircuit reset;
  int radix = 10;
};

struct CarrySignal {
  double time = 0.0;
};

/* Divider voltage across the device while nothing drives it. */
double readout_voltage(const DigitBlock& block);

/* Voltage across the device right now; an active pulse or reset drive wins
 * over the readout divider, idle means no drive at all. */
double drive_voltage(const DigitBlock& block);

/* True when the comparator would fire, i.e. readout strictly above v_t. */
bool reset_threshold_exceeded(const DigitBlock& block);

/* One full programming pulse applied in place. */
DigitBlock apply_program_pulse(DigitBlock block);

/* Comparator evaluation at the end of a programming pulse. On a crossing the
 * device is driven back to r_min and the carry is reported. */
std::optional<CarrySignal> check_and_fire_reset(DigitBlock& block, double t);

/* Minimum reset width that returns the device from r_at_reset to r_min. */
double reset_duration_required(const MemristorParams& params, double r_at_reset);

}  // namespace pascaline
