#include "pascaline/config_file.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "pascaline/errors.hpp"

namespace pascaline {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail(int line, const std::string& what) {
  throw InputError("config line " + std::to_string(line) + ": " + what);
}

double parse_double(std::string_view s, int line) {
  const std::string text(trim(s));
  if (text.empty()) fail(line, "missing value");
  std::size_t used = 0;
  double value = 0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    fail(line, "'" + text + "' is not a number");
  }
  if (used != text.size()) fail(line, "'" + text + "' is not a number");
  return value;
}

int parse_int(std::string_view s, int line) {
  const std::string text(trim(s));
  int value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size())
    fail(line, "'" + text + "' is not an integer");
  return value;
}

template <typename T, typename Parse>
std::vector<T> parse_list(std::string_view s, int line, Parse parse) {
  std::vector<T> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = s.find(',', start);
    const std::string_view item =
        comma == std::string_view::npos ? s.substr(start) : s.substr(start, comma - start);
    out.push_back(parse(item, line));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

void append_num(std::string& out, double x) {
  // shortest decimal form that parses back to the same double
  char buf[40];
  const auto result = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::fixed);
  out.append(buf, result.ptr);
}

}  // namespace

void ConfigValues::overlay(const ConfigValues& over) {
  if (over.digits) digits = over.digits;
  if (over.bases) bases = over.bases;
  if (over.pulse_width_ms) pulse_width_ms = over.pulse_width_ms;
  if (over.v_t) v_t = over.v_t;
  if (over.beta) beta = over.beta;
  if (over.v_threshold) v_threshold = over.v_threshold;
  if (over.r_min) r_min = over.r_min;
  if (over.r_max) r_max = over.r_max;
  if (over.r_series) r_series = over.r_series;
  if (over.reset_width_ms) reset_width_ms = over.reset_width_ms;
  if (over.inter_press_gap_ms) inter_press_gap_ms = over.inter_press_gap_ms;
}

ConfigValues parse_config_text(std::string_view text) {
  ConfigValues values;
  std::istringstream stream{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(stream, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) fail(line_no, "expected 'key = value'");
    const std::string key{trim(line.substr(0, eq))};
    const std::string_view value = trim(line.substr(eq + 1));

    if (key == "digits") {
      values.digits = parse_int(value, line_no);
    } else if (key == "bases") {
      values.bases = parse_list<int>(value, line_no, parse_int);
    } else if (key == "pulse_width_ms") {
      values.pulse_width_ms = parse_list<double>(value, line_no, parse_double);
    } else if (key == "v_t") {
      values.v_t = parse_list<double>(value, line_no, parse_double);
    } else if (key == "beta") {
      values.beta = parse_double(value, line_no);
    } else if (key == "v_threshold") {
      values.v_threshold = parse_double(value, line_no);
    } else if (key == "r_min") {
      values.r_min = parse_double(value, line_no);
    } else if (key == "r_max") {
      values.r_max = parse_double(value, line_no);
    } else if (key == "r_series") {
      values.r_series = parse_double(value, line_no);
    } else if (key == "reset_width_ms") {
      values.reset_width_ms = parse_double(value, line_no);
    } else if (key == "inter_press_gap_ms") {
      values.inter_press_gap_ms = parse_double(value, line_no);
    } else {
      fail(line_no, "unknown key '" + key + "'");
    }
  }
  return values;
}

ConfigValues load_config_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open config file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str());
}

PascalineConfig build_config(const ConfigValues& values) {
  std::vector<int> bases = values.bases.value_or(std::vector<int>{10});
  std::vector<double> pulse_ms = values.pulse_width_ms.value_or(std::vector<double>{6.0});

  int digits = 4;
  if (values.digits)
    digits = *values.digits;
  else if (bases.size() > 1)
    digits = static_cast<int>(bases.size());
  else if (pulse_ms.size() > 1)
    digits = static_cast<int>(pulse_ms.size());
  else if (values.v_t && values.v_t->size() > 1)
    digits = static_cast<int>(values.v_t->size());
  if (digits < 1) throw InputError("machine needs at least one digit");

  std::vector<double> pulse_s;
  pulse_s.reserve(pulse_ms.size());
  for (const double ms : pulse_ms) pulse_s.push_back(ms * 1e-3);

  MemristorParams device;
  if (values.beta) device.beta = *values.beta;
  if (values.v_threshold) device.v_threshold = *values.v_threshold;
  if (values.r_min) device.r_min = *values.r_min;
  if (values.r_max) device.r_max = *values.r_max;

  return make_config(digits, std::move(bases), std::move(pulse_s), values.v_t, device,
                     values.r_series.value_or(10e3), values.reset_width_ms.value_or(100.0) * 1e-3,
                     values.inter_press_gap_ms.value_or(150.0) * 1e-3);
}

std::string config_text(const PascalineConfig& cfg) {
  std::string out;
  out += "digits = " + std::to_string(cfg.n_digits) + "\n";
  const auto join = [&out](const char* key, const auto& list, auto one) {
    out += key;
    out += " = ";
    bool first = true;
    for (const auto& item : list) {
      if (!first) out += ",";
      one(item);
      first = false;
    }
    out += "\n";
  };
  join("bases", cfg.radix, [&out](int b) { out += std::to_string(b); });
  join("pulse_width_ms", cfg.pulse_width, [&out](double w) { append_num(out, w * 1e3); });
  join("v_t", cfg.v_t, [&out](double v) { append_num(out, v); });
  out += "beta = ";
  append_num(out, cfg.device.beta);
  out += "\nv_threshold = ";
  append_num(out, cfg.device.v_threshold);
  out += "\nr_min = ";
  append_num(out, cfg.device.r_min);
  out += "\nr_max = ";
  append_num(out, cfg.device.r_max);
  out += "\nr_series = ";
  append_num(out, cfg.r_series);
  out += "\nreset_width_ms = ";
  append_num(out, cfg.reset_width * 1e3);
  out += "\ninter_press_gap_ms = ";
  append_num(out, cfg.inter_press_gap * 1e3);
  out += "\n";
  return out;
}

}  // namespace pascaline
