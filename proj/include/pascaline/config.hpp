#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pascaline/device.hpp"

namespace pascaline {

/* Full machine description. Per-digit vectors are indexed little-endian:
 * entry 0 is the least significant digit. */
struct PascalineConfig {
  MemristorParams device;
  int n_digits = 4;
  std::vector<int> radix;
  std::vector<double> pulse_width;  // s
  std::vector<double> v_t;          // V
  double r_series = 10e3;           // ohm
  double reset_width = 0.1;         // s
  double inter_press_gap = 0.15;    // s between keystrokes on entry
};

/* Little-endian digit vector; digits[i] must stay below radix[i]. */
struct Numeral {
  std::vector<int> digits;
};

/* Comparator thresholds that make a digit of radix N wrap exactly on its
 * N-th pulse: low is the readout after N-1 pulses, high after N. */
struct ThresholdRange {
  double low = 0.0;
  double high = 0.0;
};

struct ConfigViolation {
  int digit = -1;  // -1 for machine-wide rules
  std::string rule;
  std::string message;
};

/* Divider voltage for a device of the given resistance. */
double readout_for(double resistance, double r_series);

/* Memristance gained per programming pulse on the given digit. */
double delta_r_per_pulse(const PascalineConfig& cfg, int digit);

/* Largest radix the digit can hold before levels saturate at r_max. */
int max_base(const PascalineConfig& cfg, int digit);

/* Resistance after `pulses` programming pulses from reset, clipped at r_max. */
double level_resistance(const PascalineConfig& cfg, int digit, int pulses);

ThresholdRange admissible_threshold_range(const PascalineConfig& cfg, int digit);
std::string format_threshold_range(const ThresholdRange& range);  // "(0.8716, 0.9213]"

double digit_to_resistance(const PascalineConfig& cfg, int digit, int value);
int read_digit(const PascalineConfig& cfg, int digit, double resistance);

/* Digit-wise (radix-1)-complement. */
Numeral complement(const PascalineConfig& cfg, const Numeral& n);

/* Adds one, wrapping silently at machine capacity. */
Numeral increment(const PascalineConfig& cfg, Numeral n);

unsigned long long capacity(const PascalineConfig& cfg);
unsigned long long numeral_value(const PascalineConfig& cfg, const Numeral& n);
Numeral numeral_from_value(const PascalineConfig& cfg, unsigned long long value);

/* Zero-padded text form, most significant digit first, digits 0-9 then a-z. */
std::string format_numeral(const PascalineConfig& cfg, const Numeral& n);
Numeral parse_numeral(const PascalineConfig& cfg, std::string_view text);

/* Throws InputError when a digit is missing or out of range. */
void check_numeral(const PascalineConfig& cfg, const Numeral& n);

std::vector<ConfigViolation> validate_config(const PascalineConfig& cfg);

/* Builds a config from per-digit lists; a length-1 list broadcasts to all
 * digits. Unset v_t entries default to the midpoint of the digit's
 * admissible threshold range. */
PascalineConfig make_config(int n_digits, std::vector<int> radices,
                            std::vector<double> pulse_widths,
                            std::optional<std::vector<double>> v_ts = std::nullopt,
                            MemristorParams device = {}, double r_series = 10e3,
                            double reset_width = 0.1, double inter_press_gap = 0.15);

/* The decimal machine: four digits of base 10 with 6 ms pulses. */
PascalineConfig default_config(int n_digits = 4, int base = 10, double pulse_width = 6e-3);

}  // namespace pascaline
