#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pascaline/config.hpp"

namespace pascaline {

/* Partial machine description; unset fields fall back to defaults when the
 * config is built. Widths and gaps are in milliseconds here because that is
 * the natural unit at the command line. */
struct ConfigValues {
  std::optional<int> digits;
  std::optional<std::vector<int>> bases;
  std::optional<std::vector<double>> pulse_width_ms;
  std::optional<std::vector<double>> v_t;
  std::optional<double> beta;
  std::optional<double> v_threshold;
  std::optional<double> r_min;
  std::optional<double> r_max;
  std::optional<double> r_series;
  std::optional<double> reset_width_ms;
  std::optional<double> inter_press_gap_ms;

  /* Fields set in `over` replace this object's. */
  void overlay(const ConfigValues& over);
};

/* Parses "key = value" lines; '#' starts a comment, blank lines are skipped,
 * lists are comma-separated. Unknown keys and malformed values raise
 * InputError naming the line. */
ConfigValues parse_config_text(std::string_view text);
ConfigValues load_config_file(const std::filesystem::path& path);

/* Applies defaults (four digits of base 10, 6 ms pulses, midpoint v_t) and
 * broadcasts single-entry lists across digits. */
PascalineConfig build_config(const ConfigValues& values);

/* Round-trippable "key = value" rendering of a full config. */
std::string config_text(const PascalineConfig& cfg);

}  // namespace pascaline
