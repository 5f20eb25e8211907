#pragma once

#include <string_view>
#include <vector>

#include "pascaline/config.hpp"

namespace pascaline {

/* Left-associative chain of additions and subtractions over numerals;
 * ops[k] sits between operands[k] and operands[k+1]. */
struct Expression {
  std::vector<Numeral> operands;
  std::vector<char> ops;
};

/* Grammar: expr := term (("+" | "-") term)*, where a term is a run of digit
 * characters (0-9, then a-z for radices above ten) no longer than the
 * machine. Whitespace between tokens is ignored. Throws ParseError with the
 * byte position of the offending character. */
Expression parse_expression(std::string_view text, const PascalineConfig& cfg);

}  // namespace pascaline
