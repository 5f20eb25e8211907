#include "pascaline/config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "pascaline/blocks.hpp"
#include "pascaline/errors.hpp"

namespace pascaline {

namespace {

void check_digit_index(const PascalineConfig& cfg, int digit) {
  if (digit < 0 || digit >= cfg.n_digits) throw InputError("digit index out of range");
}

std::string fmt4(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  return buf;
}

std::string fmt_ms(double seconds) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", seconds * 1e3);
  return buf;
}

char digit_char(int d) { return static_cast<char>(d < 10 ? '0' + d : 'a' + (d - 10)); }

int char_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'z') return c - 'a' + 10;
  if (c >= 'A' && c <= 'Z') return c - 'A' + 10;
  return -1;
}

}  // namespace

double readout_for(double resistance, double r_series) {
  return kRailVoltage * resistance / (resistance + r_series);
}

double delta_r_per_pulse(const PascalineConfig& cfg, int digit) {
  check_digit_index(cfg, digit);
  return cfg.device.beta * cfg.pulse_width[digit] * (kRailVoltage - cfg.device.v_threshold);
}

int max_base(const PascalineConfig& cfg, int digit) {
  const double dr = delta_r_per_pulse(cfg, digit);
  if (!(dr > 0)) throw InputError("pulse produces no resistance change");
  return static_cast<int>(std::ceil((cfg.device.r_max - cfg.device.r_min) / dr));
}

double level_resistance(const PascalineConfig& cfg, int digit, int pulses) {
  if (pulses < 0) throw InputError("pulse count must be non-negative");
  const double r = cfg.device.r_min + delta_r_per_pulse(cfg, digit) * pulses;
  return std::min(r, cfg.device.r_max);
}

ThresholdRange admissible_threshold_range(const PascalineConfig& cfg, int digit) {
  check_digit_index(cfg, digit);
  const int n = cfg.radix[digit];
  if (n < 2) throw ConfigError("radix must be at least 2");
  if (n > max_base(cfg, digit))
    throw ConfigError("radix " + std::to_string(n) + " exceeds max_base " +
                      std::to_string(max_base(cfg, digit)) + ": threshold range is empty");
  return {readout_for(level_resistance(cfg, digit, n - 1), cfg.r_series),
          readout_for(level_resistance(cfg, digit, n), cfg.r_series)};
}

std::string format_threshold_range(const ThresholdRange& range) {
  return "(" + fmt4(range.low) + ", " + fmt4(range.high) + "]";
}

double digit_to_resistance(const PascalineConfig& cfg, int digit, int value) {
  check_digit_index(cfg, digit);
  if (value < 0 || value >= cfg.radix[digit]) throw InputError("digit value out of range");
  return cfg.device.r_min + delta_r_per_pulse(cfg, digit) * value;
}

int read_digit(const PascalineConfig& cfg, int digit, double resistance) {
  check_digit_index(cfg, digit);
  const double dr = delta_r_per_pulse(cfg, digit);
  const double raw = (resistance - cfg.device.r_min) / dr;
  const long level = std::lround(raw);
  const long clamped = std::clamp(level, 0L, static_cast<long>(cfg.radix[digit]) - 1);
  const double nominal = cfg.device.r_min + dr * static_cast<double>(clamped);
  if (std::abs(resistance - nominal) >= dr / 2)
    throw StateError("resistance " + std::to_string(resistance) +
                     " ohm does not sit on a digit level");
  return static_cast<int>(clamped);
}

Numeral complement(const PascalineConfig& cfg, const Numeral& n) {
  check_numeral(cfg, n);
  Numeral out = n;
  for (int i = 0; i < cfg.n_digits; ++i) out.digits[i] = cfg.radix[i] - 1 - n.digits[i];
  return out;
}

Numeral increment(const PascalineConfig& cfg, Numeral n) {
  check_numeral(cfg, n);
  for (int i = 0; i < cfg.n_digits; ++i) {
    if (++n.digits[i] < cfg.radix[i]) return n;
    n.digits[i] = 0;
  }
  return n;
}

unsigned long long capacity(const PascalineConfig& cfg) {
  unsigned long long cap = 1;
  for (int i = 0; i < cfg.n_digits; ++i) {
    const auto r = static_cast<unsigned long long>(cfg.radix[i]);
    if (cap > std::numeric_limits<unsigned long long>::max() / r)
      throw InputError("machine capacity exceeds 64 bits");
    cap *= r;
  }
  return cap;
}

unsigned long long numeral_value(const PascalineConfig& cfg, const Numeral& n) {
  check_numeral(cfg, n);
  unsigned long long value = 0, weight = 1;
  for (int i = 0; i < cfg.n_digits; ++i) {
    value += weight * static_cast<unsigned long long>(n.digits[i]);
    weight *= static_cast<unsigned long long>(cfg.radix[i]);
  }
  return value;
}

Numeral numeral_from_value(const PascalineConfig& cfg, unsigned long long value) {
  Numeral n;
  n.digits.resize(static_cast<std::size_t>(cfg.n_digits));
  for (int i = 0; i < cfg.n_digits; ++i) {
    const auto r = static_cast<unsigned long long>(cfg.radix[i]);
    n.digits[i] = static_cast<int>(value % r);
    value /= r;
  }
  return n;
}

std::string format_numeral(const PascalineConfig& cfg, const Numeral& n) {
  check_numeral(cfg, n);
  std::string out;
  out.reserve(n.digits.size());
  for (auto it = n.digits.rbegin(); it != n.digits.rend(); ++it) out.push_back(digit_char(*it));
  return out;
}

Numeral parse_numeral(const PascalineConfig& cfg, std::string_view text) {
  if (text.empty()) throw InputError("empty numeral");
  if (text.size() > static_cast<std::size_t>(cfg.n_digits))
    throw InputError("numeral has " + std::to_string(text.size()) + " digits; machine has " +
                     std::to_string(cfg.n_digits));
  Numeral n;
  n.digits.assign(static_cast<std::size_t>(cfg.n_digits), 0);
  for (std::size_t k = 0; k < text.size(); ++k) {
    const int pos = static_cast<int>(text.size() - 1 - k);
    const int d = char_digit(text[k]);
    if (d < 0) throw InputError(std::string("invalid character '") + text[k] + "' in numeral");
    if (d >= cfg.radix[pos])
      throw InputError(std::string("digit '") + text[k] + "' invalid for radix " +
                       std::to_string(cfg.radix[pos]));
    n.digits[static_cast<std::size_t>(pos)] = d;
  }
  return n;
}

void check_numeral(const PascalineConfig& cfg, const Numeral& n) {
  if (n.digits.size() != static_cast<std::size_t>(cfg.n_digits))
    throw InputError("numeral has " + std::to_string(n.digits.size()) + " digits; machine has " +
                     std::to_string(cfg.n_digits));
  for (int i = 0; i < cfg.n_digits; ++i)
    if (n.digits[i] < 0 || n.digits[i] >= cfg.radix[i])
      throw InputError("digit " + std::to_string(i) + " is " + std::to_string(n.digits[i]) +
                       "; radix is " + std::to_string(cfg.radix[i]));
}

std::vector<ConfigViolation> validate_config(const PascalineConfig& cfg) {
  std::vector<ConfigViolation> out;
  auto flag = [&out](int digit, const char* rule, std::string message) {
    out.push_back({digit, rule, std::move(message)});
  };

  if (cfg.n_digits < 1) {
    flag(-1, "digits", "machine needs at least one digit");
    return out;
  }
  const auto n = static_cast<std::size_t>(cfg.n_digits);
  if (cfg.radix.size() != n || cfg.pulse_width.size() != n || cfg.v_t.size() != n) {
    flag(-1, "digits", "radix, pulse_width and v_t must each have one entry per digit");
    return out;
  }

  const MemristorParams& d = cfg.device;
  if (!(d.r_min > 0)) flag(-1, "device", "r_min must be positive");
  if (!(d.r_max > d.r_min)) flag(-1, "device", "r_max must exceed r_min");
  if (!(d.v_threshold > 0)) flag(-1, "device", "v_threshold must be positive");
  if (!(d.v_threshold < kRailVoltage))
    flag(-1, "device", "v_threshold must stay below the 2.5 V drive amplitude");
  if (!(d.beta > 0)) flag(-1, "device", "beta must be positive");
  if (!(d.alpha >= 0)) flag(-1, "device", "alpha must be non-negative");
  if (!(cfg.r_series > 0)) flag(-1, "r_series", "r_series must be positive");
  if (!(cfg.reset_width > 0)) flag(-1, "reset_width", "reset_width must be positive");
  if (!(cfg.inter_press_gap >= 0)) flag(-1, "inter_press_gap", "inter_press_gap must be non-negative");
  if (!out.empty()) return out;

  for (int i = 0; i < cfg.n_digits; ++i) {
    if (!(cfg.pulse_width[i] > 0)) {
      flag(i, "pulse_width", "pulse_width must be positive");
      continue;
    }
    if (cfg.radix[i] < 2) {
      flag(i, "radix", "radix must be at least 2");
      continue;
    }
    const int mb = max_base(cfg, i);
    if (cfg.radix[i] > mb) {
      flag(i, "radix",
           "radix " + std::to_string(cfg.radix[i]) + " exceeds max_base " + std::to_string(mb) +
               " for a " + fmt_ms(cfg.pulse_width[i]) + " ms pulse");
      continue;
    }

    const ThresholdRange range = admissible_threshold_range(cfg, i);
    const double vt = cfg.v_t[i];
    if (!(vt > range.low && vt < range.high)) {
      std::string detail;
      if (vt <= range.low) {
        int k = 1;
        while (k < cfg.radix[i] && !(readout_for(level_resistance(cfg, i, k), cfg.r_series) > vt))
          ++k;
        detail = "reset would fire on pulse " + std::to_string(k);
      } else {
        detail = "reset would not fire by pulse " + std::to_string(cfg.radix[i]);
      }
      flag(i, "v_t",
           "v_t " + fmt4(vt) + " V outside admissible range " + format_threshold_range(range) +
               " for radix " + std::to_string(cfg.radix[i]) + ": " + detail);
    }

    const double required =
        reset_duration_required(cfg.device, level_resistance(cfg, i, cfg.radix[i]));
    if (cfg.reset_width < required)
      flag(i, "reset_width",
           "reset_width " + fmt_ms(cfg.reset_width) + " ms cannot finish a reset from the firing level; " +
               fmt_ms(required) + " ms needed");
  }
  return out;
}

PascalineConfig make_config(int n_digits, std::vector<int> radices,
                            std::vector<double> pulse_widths,
                            std::optional<std::vector<double>> v_ts, MemristorParams device,
                            double r_series, double reset_width, double inter_press_gap) {
  if (n_digits < 1) throw InputError("machine needs at least one digit");
  const auto n = static_cast<std::size_t>(n_digits);
  auto broadcast = [n](auto& vec, const char* name) {
    if (vec.size() == 1 && n > 1) vec.assign(n, vec[0]);
    if (vec.size() != n)
      throw InputError(std::string(name) + " needs one entry per digit or a single entry");
  };
  if (radices.empty() || pulse_widths.empty())
    throw InputError("radix and pulse_width lists must not be empty");
  broadcast(radices, "radix list");
  broadcast(pulse_widths, "pulse_width list");

  PascalineConfig cfg;
  cfg.device = device;
  cfg.n_digits = n_digits;
  cfg.radix = std::move(radices);
  cfg.pulse_width = std::move(pulse_widths);
  cfg.r_series = r_series;
  cfg.reset_width = reset_width;
  cfg.inter_press_gap = inter_press_gap;

  if (v_ts) {
    broadcast(*v_ts, "v_t list");
    cfg.v_t = std::move(*v_ts);
  } else {
    cfg.v_t.assign(n, 0.0);
    for (int i = 0; i < n_digits; ++i) {
      if (cfg.radix[i] < 2 || !(cfg.pulse_width[i] > 0)) continue;
      if (cfg.radix[i] > max_base(cfg, i)) continue;
      const ThresholdRange range = admissible_threshold_range(cfg, i);
      cfg.v_t[i] = (range.low + range.high) / 2;
    }
  }
  return cfg;
}

PascalineConfig default_config(int n_digits, int base, double pulse_width) {
  return make_config(n_digits, {base}, {pulse_width});
}

}  // namespace pascaline
