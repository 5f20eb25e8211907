#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "pascaline/device.hpp"

namespace pascaline {

/* One AC sweep of a single device: drive voltage, current and memristance,
 * sampled on a uniform grid that divides the period exactly. */
struct IVTrace {
  struct Sample {
    double t = 0.0;
    double v = 0.0;
    double i = 0.0;
    double r = 0.0;
  };

  std::vector<Sample> samples;
  int samples_per_cycle = 0;
  int cycles_recorded = 0;
  double frequency = 0.0;
  double amplitude = 0.0;

  std::string to_csv() const;  // header t_s,v_V,i_A,r_ohm
};

/* Sinusoidal sweep v = amplitude * sin(2 pi f t) starting from the reset
 * state, forward-Euler at a fixed step. dt is an upper bound: the period is
 * subdivided evenly so every recorded cycle is whole, and dt must not exceed
 * one thousandth of the period. Warmup cycles run but are not recorded. */
IVTrace hysteresis_run(const MemristorParams& params, double amplitude, double frequency,
                       int cycles = 3, int warmup_cycles = 2, double dt = 0.0);

/* Enclosed area per cycle of the I-V loop. The pinched loop is split into
 * lobes at the zero crossings of the drive and the unsigned shoelace areas
 * of the lobes add. */
double loop_area(const IVTrace& trace);

/* Writes the canonical trace bundle as CSV files into dir and returns the
 * paths written: a base-5 pulse train with its reset, a four-digit addition,
 * a complement subtraction, and hysteresis sweeps at 5, 20 and 80 Hz. */
std::vector<std::filesystem::path> write_figures(const std::filesystem::path& dir);

}  // namespace pascaline
