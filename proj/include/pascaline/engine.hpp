#pragma once

#include <cstdint>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "pascaline/blocks.hpp"
#include "pascaline/config.hpp"

namespace pascaline {

enum class EventKind : int {
  button_trigger = 0,
  pulse_start = 1,
  pulse_end = 2,
  reset_start = 3,
  reset_end = 4,
  carry_trigger = 5,
};

struct Event {
  double time = 0.0;
  int digit = 0;
  EventKind kind = EventKind::button_trigger;
  std::uint64_t seq = 0;  // FIFO tie-break after (time, digit, kind)
};

/* Machine observables over time: one row per event boundary, plus uniform
 * samples when a sampling interval is set. */
struct Trace {
  struct Sample {
    double v_m = 0.0;
    double resistance = 0.0;
    bool pulse = false;
    bool reset = false;
  };
  struct Row {
    double t = 0.0;
    std::vector<Sample> digits;
  };

  int n_digits = 0;
  std::vector<Row> rows;

  /* Header t_s,v_m_1,r_1,pulse_1,reset_1,... with digit columns repeating;
   * floats carry nine significant digits so replays compare byte-for-byte. */
  std::string to_csv() const;
};

struct EngineStats {
  struct Edge {
    double time = 0.0;
    int digit = 0;
  };
  std::vector<Edge> resets;   // reset rising edges
  std::vector<Edge> carries;  // carry triggers delivered; digit is the receiver
  long long dropped_carries = 0;  // carries past the most significant digit
  std::vector<long long> button_presses;
  std::vector<long long> pulse_starts;
};

/* Deterministic event-driven transient simulation of one machine. Devices
 * advance between events by the exact constant-drive solution; simultaneous
 * events process in (time, digit, kind, insertion) order, so replays of the
 * same schedule are identical down to the last bit. */
class Engine {
 public:
  explicit Engine(const PascalineConfig& cfg, std::optional<double> sample_dt = std::nullopt);

  /* Schedules a button trigger; time must not precede the current time. */
  void press(int digit, double time);

  /* Drains the queue. Throws UnsettledError if activity persists past the
   * deadline. */
  void run_to_quiescence(std::optional<double> deadline = std::nullopt);

  /* Processes events up to t_end and advances the clock there, extending the
   * trace even when nothing is scheduled. */
  void run_until(double t_end);

  double now() const { return now_; }
  bool quiescent() const { return queue_.empty(); }
  int n_digits() const { return static_cast<int>(blocks_.size()); }

  const std::vector<DigitBlock>& blocks() const { return blocks_; }
  const Trace& trace() const { return trace_; }
  const EngineStats& stats() const { return stats_; }

  /* Returns every digit to the reset state with generators idle. The queue
   * must already be quiescent; the clock keeps running. */
  void rearm_all();

 private:
  struct LaterEvent {
    bool operator()(const Event& a, const Event& b) const;
  };

  void push(double t, int digit, EventKind kind);
  void handle(const Event& e);
  void try_start_pulse(int digit);
  void drain_batch(double t);
  void advance_to(double t);
  void record_row(double t);

  std::vector<DigitBlock> blocks_;
  std::optional<double> sample_dt_;
  double now_ = 0.0;
  std::uint64_t seq_ = 0;
  std::priority_queue<Event, std::vector<Event>, LaterEvent> queue_;
  Trace trace_;
  EngineStats stats_;
};

}  // namespace pascaline
