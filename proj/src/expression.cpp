#include "pascaline/expression.hpp"

#include <cctype>

#include "pascaline/errors.hpp"

namespace pascaline {

namespace {

bool is_term_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }

int char_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'z') return c - 'a' + 10;
  if (c >= 'A' && c <= 'Z') return c - 'A' + 10;
  return -1;
}

}  // namespace

Expression parse_expression(std::string_view text, const PascalineConfig& cfg) {
  std::size_t pos = 0;
  const auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };

  const auto parse_term = [&]() -> Numeral {
    const std::size_t start = pos;
    while (pos < text.size() && is_term_char(text[pos])) ++pos;
    const std::string_view term = text.substr(start, pos - start);
    if (term.empty()) {
      if (pos == text.size()) throw ParseError(pos, "expected an operand");
      throw ParseError(pos, std::string("unexpected character '") + text[pos] + "'");
    }
    if (term.size() > static_cast<std::size_t>(cfg.n_digits))
      throw ParseError(start, "operand has " + std::to_string(term.size()) +
                                  " digits; the machine has " + std::to_string(cfg.n_digits));
    Numeral n;
    n.digits.assign(static_cast<std::size_t>(cfg.n_digits), 0);
    for (std::size_t k = 0; k < term.size(); ++k) {
      const int digit_pos = static_cast<int>(term.size() - 1 - k);
      const int d = char_digit(term[k]);
      if (d < 0 || d >= cfg.radix[static_cast<std::size_t>(digit_pos)])
        throw ParseError(start + k, std::string("digit '") + term[k] + "' invalid for radix " +
                                        std::to_string(cfg.radix[static_cast<std::size_t>(digit_pos)]));
      n.digits[static_cast<std::size_t>(digit_pos)] = d;
    }
    return n;
  };

  Expression expr;
  skip_ws();
  if (pos == text.size()) throw ParseError(pos, "empty expression");
  expr.operands.push_back(parse_term());
  skip_ws();
  while (pos < text.size()) {
    const char op = text[pos];
    if (op != '+' && op != '-')
      throw ParseError(pos, std::string("expected '+' or '-', got '") + op + "'");
    ++pos;
    skip_ws();
    expr.ops.push_back(op);
    expr.operands.push_back(parse_term());
    skip_ws();
  }
  return expr;
}

}  // namespace pascaline
