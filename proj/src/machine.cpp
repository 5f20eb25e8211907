#include "pascaline/machine.hpp"

#include <algorithm>
#include <string>

#include "pascaline/errors.hpp"

namespace pascaline {

namespace {

std::string join_violations(const std::vector<ConfigViolation>& violations) {
  std::string msg = "invalid machine configuration:";
  for (const ConfigViolation& v : violations) {
    msg += "\n  ";
    if (v.digit >= 0) msg += "digit " + std::to_string(v.digit) + ": ";
    msg += v.message;
  }
  return msg;
}

PascalineConfig checked(PascalineConfig cfg) {
  const auto violations = validate_config(cfg);
  if (!violations.empty()) throw ConfigError(join_violations(violations));
  return cfg;
}

}  // namespace

Machine::Machine(PascalineConfig cfg, std::optional<double> trace_sample_dt)
    : cfg_(checked(std::move(cfg))), engine_(cfg_, trace_sample_dt) {}

void Machine::clear() {
  engine_.run_to_quiescence();
  engine_.rearm_all();
}

double Machine::settle_bound() const {
  const double slowest_pulse = *std::max_element(cfg_.pulse_width.begin(), cfg_.pulse_width.end());
  const int widest_radix = *std::max_element(cfg_.radix.begin(), cfg_.radix.end());
  return cfg_.n_digits * (cfg_.reset_width + slowest_pulse) * widest_radix;
}

EntryReport Machine::schedule_and_settle(const std::vector<int>& presses) {
  const EngineStats& st = engine_.stats();
  const std::size_t resets_before = st.resets.size();
  const std::size_t carries_before = st.carries.size();
  const long long dropped_before = st.dropped_carries;

  const double t0 = engine_.now() > 0 ? engine_.now() + cfg_.inter_press_gap : 0.0;
  int longest = 0;
  for (int i = 0; i < cfg_.n_digits; ++i) {
    for (int k = 0; k < presses[static_cast<std::size_t>(i)]; ++k)
      engine_.press(i, t0 + k * cfg_.inter_press_gap);
    longest = std::max(longest, presses[static_cast<std::size_t>(i)]);
  }
  const double last_press = t0 + (longest > 0 ? (longest - 1) * cfg_.inter_press_gap : 0.0);
  engine_.run_to_quiescence(last_press + settle_bound());

  EntryReport report;
  report.dropped_carries = st.dropped_carries - dropped_before;
  report.resets.assign(st.resets.begin() + static_cast<std::ptrdiff_t>(resets_before),
                       st.resets.end());
  report.carries.assign(st.carries.begin() + static_cast<std::ptrdiff_t>(carries_before),
                        st.carries.end());
  return report;
}

EntryReport Machine::enter_number(const Numeral& n) {
  check_numeral(cfg_, n);
  return schedule_and_settle(n.digits);
}

EntryReport Machine::press_digit(int digit, int count) {
  if (digit < 0 || digit >= cfg_.n_digits) throw InputError("digit index out of range");
  if (count < 0) throw InputError("press count must be non-negative");
  std::vector<int> presses(static_cast<std::size_t>(cfg_.n_digits), 0);
  presses[static_cast<std::size_t>(digit)] = count;
  return schedule_and_settle(presses);
}

Numeral Machine::read() const {
  if (!engine_.quiescent()) throw StateError("cannot read while the machine is active");
  Numeral n;
  n.digits.reserve(static_cast<std::size_t>(cfg_.n_digits));
  for (int i = 0; i < cfg_.n_digits; ++i)
    n.digits.push_back(read_digit(cfg_, i, engine_.blocks()[static_cast<std::size_t>(i)].device.resistance));
  return n;
}

double Machine::digit_readout(int digit) const {
  if (digit < 0 || digit >= cfg_.n_digits) throw InputError("digit index out of range");
  return readout_voltage(engine_.blocks()[static_cast<std::size_t>(digit)]);
}

AddResult Machine::add(const Numeral& a, const Numeral& b) {
  check_numeral(cfg_, a);
  check_numeral(cfg_, b);
  clear();
  const EntryReport first = enter_number(a);
  const EntryReport second = enter_number(b);

  AddResult out;
  out.result = read();
  out.carry_out = first.dropped_carries + second.dropped_carries > 0;
  out.resets = first.resets;
  out.resets.insert(out.resets.end(), second.resets.begin(), second.resets.end());
  out.carries = first.carries;
  out.carries.insert(out.carries.end(), second.carries.begin(), second.carries.end());
  return out;
}

SubtractResult Machine::subtract(const Numeral& a, const Numeral& b) {
  check_numeral(cfg_, a);
  check_numeral(cfg_, b);
  SubtractResult out;
  out.minuend_complement = complement(cfg_, a);

  clear();
  const EntryReport first = enter_number(out.minuend_complement);
  const EntryReport second = enter_number(b);
  out.wrapped_sum = read();

  const bool wrapped = first.dropped_carries + second.dropped_carries > 0;
  out.negative = wrapped;
  out.result = wrapped ? increment(cfg_, out.wrapped_sum) : complement(cfg_, out.wrapped_sum);
  return out;
}

}  // namespace pascaline
