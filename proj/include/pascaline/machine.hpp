#pragma once

#include <optional>
#include <vector>

#include "pascaline/config.hpp"
#include "pascaline/engine.hpp"

namespace pascaline {

/* What happened while one entry settled. */
struct EntryReport {
  long long dropped_carries = 0;
  std::vector<EngineStats::Edge> resets;
  std::vector<EngineStats::Edge> carries;
};

struct AddResult {
  Numeral result;
  bool carry_out = false;
  std::vector<EngineStats::Edge> resets;
  std::vector<EngineStats::Edge> carries;
};

struct SubtractResult {
  Numeral result;  // the magnitude when negative is set
  bool negative = false;
  Numeral minuend_complement;  // entered in place of the minuend
  Numeral wrapped_sum;         // machine state before the final complement
};

/* The multi-digit machine: one block per digit plus the entry protocol.
 * Numbers are entered as per-digit button presses; carries ripple through
 * the reset circuits on their own. The clock never rewinds, so a session's
 * trace is one strictly increasing record. */
class Machine {
 public:
  explicit Machine(PascalineConfig cfg, std::optional<double> trace_sample_dt = std::nullopt);

  const PascalineConfig& config() const { return cfg_; }
  const Trace& trace() const { return engine_.trace(); }
  const EngineStats& stats() const { return engine_.stats(); }
  const std::vector<DigitBlock>& blocks() const { return engine_.blocks(); }
  double now() const { return engine_.now(); }

  /* Returns every digit to zero. */
  void clear();

  /* Presses each digit's button digit-value times and waits for quiescence. */
  EntryReport enter_number(const Numeral& n);

  /* `count` presses on one digit, same spacing as number entry. */
  EntryReport press_digit(int digit, int count);

  Numeral read() const;
  double digit_readout(int digit) const;

  /* clear, enter a, enter b on top, read. */
  AddResult add(const Numeral& a, const Numeral& b);

  /* a - b by complement addition: enter the complement of a, add b. No wrap
   * means a non-negative difference equal to the complement of the machine
   * state; a wrap (dropped carry) means the difference is negative with
   * magnitude state + 1. */
  SubtractResult subtract(const Numeral& a, const Numeral& b);

 private:
  EntryReport schedule_and_settle(const std::vector<int>& presses);
  double settle_bound() const;

  PascalineConfig cfg_;
  Engine engine_;
};

}  // namespace pascaline
