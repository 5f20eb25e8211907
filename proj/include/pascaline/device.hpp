#pragma once

namespace pascaline {

/* Supply rail magnitude around the virtual ground. Programming pulses sit at
 * -kRailVoltage across the device, reset pulses at +kRailVoltage. */
inline constexpr double kRailVoltage = 2.5;

/* Constants of a threshold-type memristive device. The state equation is
 *
 *   dR/dt = -alpha * v                          for |v| <= v_threshold
 *   dR/dt = -beta * (v - v_threshold * sgn(v))  for |v| >  v_threshold
 *
 * with R hard-clipped to [r_min, r_max]. Negative drive raises the
 * memristance, positive drive lowers it; below the threshold the default
 * alpha = 0 leaves the state untouched, which is what makes a stored digit
 * non-volatile. */
struct MemristorParams {
  double alpha = 0.0;        // below-threshold rate coefficient (ohm / V s)
  double beta = 62e3;        // above-threshold rate coefficient (ohm / V s)
  double v_threshold = 1.2;  // activation threshold (V)
  double r_min = 1e3;        // lower memristance rail (ohm)
  double r_max = 10e3;       // upper memristance rail (ohm)
};

/* The single state variable: the memristance in ohms. */
struct MemristorState {
  double resistance = 1e3;
};

/* State-equation right-hand side. Rates that would push the state past a
 * rail are clipped to zero. */
double dr_dt(const MemristorParams& params, const MemristorState& state, double v);

/* Update for a constant drive held for `duration` seconds. The rate does not
 * depend on R on either side of the threshold, so the update is linear in
 * time with a final clamp and carries no discretization error. */
MemristorState integrate_const(const MemristorParams& params, MemristorState state, double v,
                               double duration);

/* Forward-Euler step for arbitrary waveforms sampled every dt seconds. */
MemristorState step(const MemristorParams& params, MemristorState state, double v, double dt);

/* Ohmic current through the device. */
double current(const MemristorState& state, double v);

}  // namespace pascaline
