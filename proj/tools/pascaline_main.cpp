#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pascaline/analysis.hpp"
#include "pascaline/config_file.hpp"
#include "pascaline/errors.hpp"
#include "pascaline/eval.hpp"
#include "pascaline/expression.hpp"
#include "pascaline/machine.hpp"

namespace {

using namespace pascaline;

struct GlobalOptions {
  std::string config_path;
  int digits = 0;
  std::vector<int> bases;
  std::vector<double> pulse_width_ms;
  std::vector<double> v_t;
  bool verbose = false;

  CLI::Option* digits_opt = nullptr;
  CLI::Option* bases_opt = nullptr;
  CLI::Option* pulse_opt = nullptr;
  CLI::Option* v_t_opt = nullptr;
};

/* Defaults, then the config file, then flags; the later layers win. */
PascalineConfig resolve_config(const GlobalOptions& opts) {
  ConfigValues values;
  if (!opts.config_path.empty()) values = load_config_file(opts.config_path);

  ConfigValues flags;
  if (opts.digits_opt->count() > 0) flags.digits = opts.digits;
  if (opts.bases_opt->count() > 0) flags.bases = opts.bases;
  if (opts.pulse_opt->count() > 0) flags.pulse_width_ms = opts.pulse_width_ms;
  if (opts.v_t_opt->count() > 0) flags.v_t = opts.v_t;
  values.overlay(flags);

  return build_config(values);
}

void echo_config(const GlobalOptions& opts, const PascalineConfig& cfg) {
  if (opts.verbose) std::cerr << "effective config:\n" << config_text(cfg);
}

int report_violations(const std::vector<ConfigViolation>& violations, std::ostream& out) {
  for (const ConfigViolation& v : violations) {
    if (v.digit >= 0)
      out << "digit " << v.digit << ": " << v.message << "\n";
    else
      out << v.message << "\n";
  }
  return violations.empty() ? 0 : 2;
}

PascalineConfig resolve_valid_config(const GlobalOptions& opts) {
  PascalineConfig cfg = resolve_config(opts);
  const auto violations = validate_config(cfg);
  if (!violations.empty()) {
    report_violations(violations, std::cerr);
    throw ConfigError("configuration rejected");
  }
  echo_config(opts, cfg);
  return cfg;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
  if (!out) throw std::runtime_error("cannot write " + path);
}

int run_eval(const GlobalOptions& opts, const std::string& expr_text,
             const std::string& trace_path) {
  const PascalineConfig cfg = resolve_valid_config(opts);
  const Expression expr = parse_expression(expr_text, cfg);
  Machine machine(cfg);
  const EvalResult result = evaluate(machine, expr);
  std::cout << result.formatted(cfg) << "\n";
  if (!trace_path.empty()) write_output(trace_path, machine.trace().to_csv());
  return 0;
}

int run_validate(const GlobalOptions& opts) {
  const PascalineConfig cfg = resolve_config(opts);
  const auto violations = validate_config(cfg);
  if (violations.empty()) {
    echo_config(opts, cfg);
    std::cout << "ok\n";
    return 0;
  }
  return report_violations(violations, std::cout);
}

int run_pulse_train(const GlobalOptions& opts, int digit, int count, const std::string& out_path,
                    double sample_ms) {
  const PascalineConfig cfg = resolve_valid_config(opts);
  if (digit < 1 || digit > cfg.n_digits)
    throw InputError("--digit must be between 1 and " + std::to_string(cfg.n_digits));
  Machine machine(cfg, sample_ms > 0 ? std::optional<double>(sample_ms * 1e-3) : std::nullopt);
  const EntryReport report = machine.press_digit(digit - 1, count);
  std::cerr << "resets: " << report.resets.size()
            << ", carries: " << report.carries.size() << "\n";
  write_output(out_path, machine.trace().to_csv());
  return 0;
}

int run_hysteresis(const GlobalOptions& opts, double amplitude, double freq, int cycles,
                   int warmup, double dt, const std::string& out_path) {
  const PascalineConfig cfg = resolve_config(opts);
  std::vector<ConfigViolation> device_rules;
  for (const ConfigViolation& v : validate_config(cfg))
    if (v.digit < 0 && v.rule == "device") device_rules.push_back(v);
  if (!device_rules.empty()) {
    report_violations(device_rules, std::cerr);
    throw ConfigError("device parameters rejected");
  }
  echo_config(opts, cfg);
  const IVTrace trace = hysteresis_run(cfg.device, amplitude, freq, cycles, warmup, dt);
  std::cerr << "loop area per cycle: " << loop_area(trace) << " V*A\n";
  write_output(out_path, trace.to_csv());
  return 0;
}

int run_figures(const std::string& out_dir) {
  for (const auto& path : write_figures(out_dir)) std::cout << path.string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simulator of a multi-digit adding machine built on memristive digits"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions opts;
  app.add_option("--config", opts.config_path, "Config file with key = value lines");
  opts.digits_opt = app.add_option("--digits", opts.digits, "Number of digits");
  opts.bases_opt = app.add_option("--base,--bases", opts.bases,
                                  "Radix, one value or a comma-separated list per digit")
                       ->delimiter(',');
  opts.pulse_opt = app.add_option("--pulse-width", opts.pulse_width_ms,
                                  "Programming pulse width in ms, one value or a list")
                       ->delimiter(',');
  opts.v_t_opt = app.add_option("--v-t", opts.v_t,
                                "Reset comparator threshold in V, one value or a list")
                     ->delimiter(',');
  app.add_flag("--verbose", opts.verbose, "Echo the effective config to stderr");

  std::string expr_text, trace_path;
  CLI::App* eval_cmd = app.add_subcommand("eval", "Evaluate a chain of additions and subtractions");
  eval_cmd->add_option("expression", expr_text, "Expression like \"1642 + 373\"")->required();
  eval_cmd->add_option("--trace", trace_path, "Write the session trace CSV to this file");

  double amplitude = 0, freq = 0, dt = 0;
  int cycles = 3, warmup = 2;
  std::string hyst_out;
  CLI::App* hyst_cmd = app.add_subcommand("hysteresis", "Sweep one device with a sine drive");
  hyst_cmd->add_option("--amplitude", amplitude, "Drive amplitude in V")->required();
  hyst_cmd->add_option("--freq", freq, "Drive frequency in Hz")->required();
  hyst_cmd->add_option("--cycles", cycles, "Recorded cycles");
  hyst_cmd->add_option("--warmup", warmup, "Unrecorded warmup cycles");
  hyst_cmd->add_option("--dt", dt, "Step in s, at most a thousandth of the period");
  hyst_cmd->add_option("--out", hyst_out, "Output CSV path (default stdout)");

  int train_digit = 0, train_count = 0;
  double train_sample_ms = 1.0;
  std::string train_out;
  CLI::App* train_cmd = app.add_subcommand("pulse-train", "Press one digit repeatedly");
  train_cmd->add_option("--digit", train_digit, "Digit position, 1 = least significant")->required();
  train_cmd->add_option("--count", train_count, "Number of presses")->required();
  train_cmd->add_option("--sample-ms", train_sample_ms, "Trace sampling interval in ms, 0 = events only");
  train_cmd->add_option("--out", train_out, "Output CSV path (default stdout)");

  std::string figures_dir;
  CLI::App* figures_cmd =
      app.add_subcommand("figures", "Write the canonical trace bundle as CSV files");
  figures_cmd->add_option("--out", figures_dir, "Output directory")->required();

  CLI::App* validate_cmd =
      app.add_subcommand("validate-config", "Check the config and report violations");

  CLI11_PARSE(app, argc, argv);

  try {
    if (eval_cmd->parsed()) return run_eval(opts, expr_text, trace_path);
    if (hyst_cmd->parsed()) return run_hysteresis(opts, amplitude, freq, cycles, warmup, dt, hyst_out);
    if (train_cmd->parsed())
      return run_pulse_train(opts, train_digit, train_count, train_out, train_sample_ms);
    if (figures_cmd->parsed()) return run_figures(figures_dir);
    if (validate_cmd->parsed()) return run_validate(opts);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnsettledError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
