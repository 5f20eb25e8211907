#include "pascaline/eval.hpp"

namespace pascaline {

std::string EvalResult::formatted(const PascalineConfig& cfg) const {
  std::string out = format_numeral(cfg, value);
  if (negative) out += " [negative]";
  if (carry_out) out += " [carry out]";
  if (!complement_steps.empty()) {
    out += " (complements: ";
    bool first = true;
    for (const auto& [entered, wrapped] : complement_steps) {
      if (!first) out += ", ";
      out += format_numeral(cfg, entered) + ", " + format_numeral(cfg, wrapped);
      first = false;
    }
    out += ")";
  }
  return out;
}

EvalResult evaluate(Machine& machine, const Expression& expr) {
  EvalResult result;

  machine.clear();
  machine.enter_number(expr.operands[0]);
  result.value = machine.read();

  /* True while the devices already hold the running value, letting pure
   * addition chains stay in memory instead of being re-keyed. */
  bool machine_holds_value = true;

  for (std::size_t k = 0; k < expr.ops.size(); ++k) {
    const Numeral& operand = expr.operands[k + 1];
    const bool adding = expr.ops[k] == '+';

    if (!result.negative && adding) {
      if (machine_holds_value) {
        const EntryReport report = machine.enter_number(operand);
        result.carry_out = result.carry_out || report.dropped_carries > 0;
        result.value = machine.read();
      } else {
        const AddResult sum = machine.add(result.value, operand);
        result.carry_out = result.carry_out || sum.carry_out;
        result.value = sum.result;
        machine_holds_value = true;
      }
    } else if (!result.negative) {
      const SubtractResult diff = machine.subtract(result.value, operand);
      result.complement_steps.emplace_back(diff.minuend_complement, diff.wrapped_sum);
      result.value = diff.result;
      result.negative = diff.negative;
      machine_holds_value = false;
    } else if (adding) {
      /* -|value| + operand. */
      const SubtractResult diff = machine.subtract(operand, result.value);
      result.complement_steps.emplace_back(diff.minuend_complement, diff.wrapped_sum);
      result.value = diff.result;
      result.negative = diff.negative;
      machine_holds_value = false;
    } else {
      /* -|value| - operand: the magnitude grows. */
      const AddResult sum = machine.add(result.value, operand);
      result.carry_out = result.carry_out || sum.carry_out;
      result.value = sum.result;
      machine_holds_value = false;
    }
  }
  return result;
}

}  // namespace pascaline
