#include "pascaline/analysis.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>

#include "pascaline/errors.hpp"
#include "pascaline/machine.hpp"

namespace pascaline {

namespace {

void append_g9(std::string& out, double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  out += buf;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

}  // namespace

std::string IVTrace::to_csv() const {
  std::string out = "t_s,v_V,i_A,r_ohm\n";
  for (const Sample& s : samples) {
    append_g9(out, s.t);
    out += ',';
    append_g9(out, s.v);
    out += ',';
    append_g9(out, s.i);
    out += ',';
    append_g9(out, s.r);
    out += '\n';
  }
  return out;
}

IVTrace hysteresis_run(const MemristorParams& params, double amplitude, double frequency,
                       int cycles, int warmup_cycles, double dt) {
  if (!(amplitude > 0)) throw InputError("amplitude must be positive");
  if (!(frequency > 0)) throw InputError("frequency must be positive");
  if (cycles < 1) throw InputError("need at least one recorded cycle");
  if (warmup_cycles < 0) throw InputError("warmup cycle count must be non-negative");

  const double period = 1.0 / frequency;
  if (dt == 0.0) dt = period / 1000.0;
  if (!(dt > 0)) throw InputError("dt must be positive");
  if (dt > period / 1000.0 * (1.0 + 1e-12))
    throw InputError("dt must not exceed one thousandth of the period");

  const int spc = static_cast<int>(std::ceil(period / dt - 1e-9));
  const double dt_eff = period / spc;

  IVTrace trace;
  trace.samples_per_cycle = spc;
  trace.cycles_recorded = cycles;
  trace.frequency = frequency;
  trace.amplitude = amplitude;
  trace.samples.reserve(static_cast<std::size_t>(cycles) * static_cast<std::size_t>(spc) + 1);

  MemristorState state{params.r_min};
  const long long first_recorded = static_cast<long long>(warmup_cycles) * spc;
  const long long last = static_cast<long long>(warmup_cycles + cycles) * spc;
  for (long long k = 0; k <= last; ++k) {
    /* Phase from the step index, not accumulated time, so every cycle sees
     * bitwise the same drive. */
    const double v =
        amplitude * std::sin(2.0 * std::numbers::pi * static_cast<double>(k % spc) / spc);
    if (k >= first_recorded)
      trace.samples.push_back({k * dt_eff, v, current(state, v), state.resistance});
    if (k < last) state = step(params, state, v, dt_eff);
  }
  return trace;
}

double loop_area(const IVTrace& trace) {
  if (trace.samples_per_cycle < 2 || trace.cycles_recorded < 1)
    throw InputError("trace does not describe whole cycles");
  const std::size_t expected = static_cast<std::size_t>(trace.samples_per_cycle) *
                                   static_cast<std::size_t>(trace.cycles_recorded) +
                               1;
  if (trace.samples.size() != expected)
    throw InputError("trace was truncated; loop area needs whole cycles");

  /* The loop pinches at the origin, so its two lobes carry opposite signed
   * areas; summing one signed shoelace over the whole curve would cancel
   * them. Each lobe is closed off where the drive crosses zero and the
   * unsigned lobe areas add up. */
  double twice_total = 0.0;
  double twice_lobe = 0.0;
  std::size_t lobe_start = 0;
  const std::size_t n = trace.samples.size();
  const auto close_lobe = [&](std::size_t end) {
    const IVTrace::Sample& first = trace.samples[lobe_start];
    const IVTrace::Sample& last = trace.samples[end];
    twice_lobe += last.v * first.i - first.v * last.i;
    twice_total += std::abs(twice_lobe);
    twice_lobe = 0.0;
    lobe_start = end;
  };
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const IVTrace::Sample& a = trace.samples[k];
    const IVTrace::Sample& b = trace.samples[k + 1];
    twice_lobe += a.v * b.i - b.v * a.i;
    if (b.v == 0.0 || a.v * b.v < 0.0) close_lobe(k + 1);
  }
  close_lobe(n - 1);
  return twice_total / 2.0 / trace.cycles_recorded;
}

std::vector<std::filesystem::path> write_figures(const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> written;

  {
    /* Single base-5 digit, 10 ms pulses, threshold 0.8 V: five presses climb
     * the ladder and the fifth trips the reset. */
    Machine machine(make_config(1, {5}, {10e-3}, std::vector<double>{0.8}), 1e-3);
    machine.press_digit(0, 5);
    const auto path = dir / "fig2d.csv";
    write_file(path, machine.trace().to_csv());
    written.push_back(path);
  }
  {
    Machine machine(default_config(), 5e-3);
    machine.add(parse_numeral(machine.config(), "1642"), parse_numeral(machine.config(), "373"));
    const auto path = dir / "fig3a.csv";
    write_file(path, machine.trace().to_csv());
    written.push_back(path);
  }
  {
    Machine machine(default_config(), 5e-3);
    machine.subtract(parse_numeral(machine.config(), "2015"),
                     parse_numeral(machine.config(), "373"));
    const auto path = dir / "fig3b.csv";
    write_file(path, machine.trace().to_csv());
    written.push_back(path);
  }
  for (const double freq : {5.0, 20.0, 80.0}) {
    const IVTrace trace = hysteresis_run({}, kRailVoltage, freq, 3, 2, 1.0 / freq / 2000.0);
    char name[32];
    std::snprintf(name, sizeof name, "fig2c_%gHz.csv", freq);
    const auto path = dir / name;
    write_file(path, trace.to_csv());
    written.push_back(path);
  }
  return written;
}

}  // namespace pascaline
