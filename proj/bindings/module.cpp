#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <optional>
#include <string>
#include <vector>

#include "pascaline/analysis.hpp"
#include "pascaline/config.hpp"
#include "pascaline/device.hpp"
#include "pascaline/eval.hpp"
#include "pascaline/expression.hpp"
#include "pascaline/machine.hpp"

namespace py = pybind11;
using namespace pascaline;

namespace {

std::vector<std::string> violation_messages(const PascalineConfig& cfg) {
  std::vector<std::string> out;
  for (const ConfigViolation& v : validate_config(cfg)) {
    if (v.digit >= 0)
      out.push_back("digit " + std::to_string(v.digit) + ": " + v.message);
    else
      out.push_back(v.message);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Simulator of a multi-digit adding machine built on memristive digits";

  py::class_<MemristorParams>(m, "MemristorParams")
      .def(py::init([](double alpha, double beta, double v_threshold, double r_min, double r_max) {
             return MemristorParams{alpha, beta, v_threshold, r_min, r_max};
           }),
           py::arg("alpha") = 0.0, py::arg("beta") = 62e3, py::arg("v_threshold") = 1.2,
           py::arg("r_min") = 1e3, py::arg("r_max") = 10e3)
      .def_readwrite("alpha", &MemristorParams::alpha)
      .def_readwrite("beta", &MemristorParams::beta)
      .def_readwrite("v_threshold", &MemristorParams::v_threshold)
      .def_readwrite("r_min", &MemristorParams::r_min)
      .def_readwrite("r_max", &MemristorParams::r_max);

  m.def(
      "dr_dt",
      [](const MemristorParams& p, double resistance, double v) {
        return dr_dt(p, MemristorState{resistance}, v);
      },
      py::arg("params"), py::arg("resistance"), py::arg("v"),
      "State-equation rate in ohm/s, clipped at the rails");
  m.def(
      "integrate_const",
      [](const MemristorParams& p, double resistance, double v, double duration) {
        return integrate_const(p, MemristorState{resistance}, v, duration).resistance;
      },
      py::arg("params"), py::arg("resistance"), py::arg("v"), py::arg("duration"),
      "Resistance after holding a constant drive; exact for this device");
  m.def(
      "euler_step",
      [](const MemristorParams& p, double resistance, double v, double dt) {
        return step(p, MemristorState{resistance}, v, dt).resistance;
      },
      py::arg("params"), py::arg("resistance"), py::arg("v"), py::arg("dt"));
  m.def(
      "device_current",
      [](double resistance, double v) { return current(MemristorState{resistance}, v); },
      py::arg("resistance"), py::arg("v"));

  py::class_<PascalineConfig>(m, "Config")
      .def_readonly("n_digits", &PascalineConfig::n_digits)
      .def_readonly("radix", &PascalineConfig::radix)
      .def_readonly("pulse_width", &PascalineConfig::pulse_width)
      .def_readonly("v_t", &PascalineConfig::v_t)
      .def_readonly("r_series", &PascalineConfig::r_series)
      .def_readonly("reset_width", &PascalineConfig::reset_width)
      .def_readonly("device", &PascalineConfig::device)
      .def("validate", &violation_messages,
           "Violation messages; an empty list means the config is usable")
      .def("max_base", [](const PascalineConfig& c, int digit) { return max_base(c, digit); },
           py::arg("digit"))
      .def(
          "delta_r_per_pulse",
          [](const PascalineConfig& c, int digit) { return delta_r_per_pulse(c, digit); },
          py::arg("digit"))
      .def(
          "threshold_range",
          [](const PascalineConfig& c, int digit) {
            const ThresholdRange r = admissible_threshold_range(c, digit);
            return py::make_tuple(r.low, r.high);
          },
          py::arg("digit"), "Comparator thresholds (low, high] that wrap on the radix-th pulse");

  m.def("make_config", &make_config, py::arg("n_digits"), py::arg("radices"),
        py::arg("pulse_widths"), py::arg("v_ts") = std::nullopt,
        py::arg("device") = MemristorParams{}, py::arg("r_series") = 10e3,
        py::arg("reset_width") = 0.1, py::arg("inter_press_gap") = 0.15,
        "Per-digit lists broadcast from length 1; times in seconds");
  m.def("default_config", &default_config, py::arg("n_digits") = 4, py::arg("base") = 10,
        py::arg("pulse_width") = 6e-3);

  m.def(
      "complement",
      [](const PascalineConfig& cfg, const std::string& text) {
        return format_numeral(cfg, complement(cfg, parse_numeral(cfg, text)));
      },
      py::arg("config"), py::arg("numeral"), "Digit-wise (radix-1)-complement of a numeral");

  py::class_<Machine>(m, "Machine")
      .def(py::init<PascalineConfig, std::optional<double>>(), py::arg("config"),
           py::arg("trace_sample_dt") = std::nullopt)
      .def("clear", &Machine::clear)
      .def(
          "enter",
          [](Machine& m_, const std::string& text) {
            m_.enter_number(parse_numeral(m_.config(), text));
          },
          py::arg("numeral"))
      .def("read", [](const Machine& m_) { return format_numeral(m_.config(), m_.read()); })
      .def(
          "add",
          [](Machine& m_, const std::string& a, const std::string& b) {
            const AddResult r = m_.add(parse_numeral(m_.config(), a), parse_numeral(m_.config(), b));
            return py::make_tuple(format_numeral(m_.config(), r.result), r.carry_out);
          },
          py::arg("a"), py::arg("b"), "Returns (sum, carry_out)")
      .def(
          "subtract",
          [](Machine& m_, const std::string& a, const std::string& b) {
            const SubtractResult r =
                m_.subtract(parse_numeral(m_.config(), a), parse_numeral(m_.config(), b));
            return py::make_tuple(format_numeral(m_.config(), r.result), r.negative,
                                  format_numeral(m_.config(), r.minuend_complement),
                                  format_numeral(m_.config(), r.wrapped_sum));
          },
          py::arg("a"), py::arg("b"),
          "Returns (difference or magnitude, negative, entered complement, wrapped sum)")
      .def(
          "eval",
          [](Machine& m_, const std::string& text) {
            const Expression expr = parse_expression(text, m_.config());
            return evaluate(m_, expr).formatted(m_.config());
          },
          py::arg("expression"), "Evaluate a chain like '2015 - 373' and format the outcome")
      .def(
          "pulse_train",
          [](Machine& m_, int digit, int count) {
            const EntryReport r = m_.press_digit(digit, count);
            return py::make_tuple(r.resets.size(), r.carries.size());
          },
          py::arg("digit"), py::arg("count"), "Returns (resets, carries); digit 0 is least significant")
      .def("digit_readout", &Machine::digit_readout, py::arg("digit"))
      .def("trace_csv", [](const Machine& m_) { return m_.trace().to_csv(); })
      .def("now", &Machine::now)
      .def_property_readonly("config", &Machine::config);

  py::class_<IVTrace>(m, "IVTrace")
      .def_readonly("samples_per_cycle", &IVTrace::samples_per_cycle)
      .def_readonly("cycles_recorded", &IVTrace::cycles_recorded)
      .def_readonly("frequency", &IVTrace::frequency)
      .def_readonly("amplitude", &IVTrace::amplitude)
      .def_property_readonly("t",
                             [](const IVTrace& tr) {
                               std::vector<double> out;
                               for (const auto& s : tr.samples) out.push_back(s.t);
                               return out;
                             })
      .def_property_readonly("v",
                             [](const IVTrace& tr) {
                               std::vector<double> out;
                               for (const auto& s : tr.samples) out.push_back(s.v);
                               return out;
                             })
      .def_property_readonly("i",
                             [](const IVTrace& tr) {
                               std::vector<double> out;
                               for (const auto& s : tr.samples) out.push_back(s.i);
                               return out;
                             })
      .def_property_readonly("r",
                             [](const IVTrace& tr) {
                               std::vector<double> out;
                               for (const auto& s : tr.samples) out.push_back(s.r);
                               return out;
                             })
      .def("to_csv", &IVTrace::to_csv);

  m.def("hysteresis", &hysteresis_run, py::arg("params"), py::arg("amplitude"),
        py::arg("frequency"), py::arg("cycles") = 3, py::arg("warmup_cycles") = 2,
        py::arg("dt") = 0.0, "Sine sweep from the reset state; dt 0 picks period/1000");
  m.def("loop_area", &loop_area, py::arg("trace"), "Unsigned I-V loop area per cycle");
  m.def("write_figures", &write_figures, py::arg("dir"),
        "Write the canonical trace bundle; returns the paths written");

#ifdef PASCALINE_VERSION
  m.attr("__version__") = PASCALINE_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}
