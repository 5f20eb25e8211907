#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pascaline/expression.hpp"
#include "pascaline/machine.hpp"

namespace pascaline {

struct EvalResult {
  Numeral value;  // the magnitude when negative is set
  bool negative = false;
  bool carry_out = false;  // some addition overflowed the most significant digit
  /* One entry per subtraction: the complement entered for the minuend and
   * the machine state read back before the final complement. */
  std::vector<std::pair<Numeral, Numeral>> complement_steps;

  /* "1642 (complements: 7984, 8357)", with [negative] and [carry out]
   * markers after the numeral when they apply. */
  std::string formatted(const PascalineConfig& cfg) const;
};

/* Evaluates the chain left to right. Runs of additions accumulate in the
 * device states without re-entry; every subtraction runs the complement
 * procedure. A negative running value is held as a magnitude and the
 * operand roles swap accordingly. */
EvalResult evaluate(Machine& machine, const Expression& expr);

}  // namespace pascaline
