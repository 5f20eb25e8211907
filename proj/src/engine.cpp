#include "pascaline/engine.hpp"

#include <cmath>
#include <cstdio>
#include <tuple>

#include "pascaline/errors.hpp"

namespace pascaline {

namespace {

void append_g9(std::string& out, double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  out += buf;
}

}  // namespace

std::string Trace::to_csv() const {
  std::string out = "t_s";
  for (int i = 1; i <= n_digits; ++i) {
    const std::string k = std::to_string(i);
    out += ",v_m_" + k + ",r_" + k + ",pulse_" + k + ",reset_" + k;
  }
  out += '\n';
  for (const Row& row : rows) {
    append_g9(out, row.t);
    for (const Sample& s : row.digits) {
      out += ',';
      append_g9(out, s.v_m);
      out += ',';
      append_g9(out, s.resistance);
      out += s.pulse ? ",1" : ",0";
      out += s.reset ? ",1" : ",0";
    }
    out += '\n';
  }
  return out;
}

bool Engine::LaterEvent::operator()(const Event& a, const Event& b) const {
  return std::tie(a.time, a.digit, a.kind, a.seq) > std::tie(b.time, b.digit, b.kind, b.seq);
}

Engine::Engine(const PascalineConfig& cfg, std::optional<double> sample_dt)
    : sample_dt_(sample_dt) {
  if (sample_dt_ && !(*sample_dt_ > 0)) throw InputError("sample interval must be positive");
  blocks_.reserve(static_cast<std::size_t>(cfg.n_digits));
  for (int i = 0; i < cfg.n_digits; ++i) {
    DigitBlock b;
    b.params = cfg.device;
    b.device.resistance = cfg.device.r_min;
    b.r_series = cfg.r_series;
    b.generator.pulse_width = cfg.pulse_width[static_cast<std::size_t>(i)];
    b.reset.v_t = cfg.v_t[static_cast<std::size_t>(i)];
    b.reset.reset_width = cfg.reset_width;
    b.radix = cfg.radix[static_cast<std::size_t>(i)];
    blocks_.push_back(b);
  }
  trace_.n_digits = cfg.n_digits;
  stats_.button_presses.assign(static_cast<std::size_t>(cfg.n_digits), 0);
  stats_.pulse_starts.assign(static_cast<std::size_t>(cfg.n_digits), 0);
  record_row(0.0);
}

void Engine::push(double t, int digit, EventKind kind) { queue_.push({t, digit, kind, seq_++}); }

void Engine::press(int digit, double time) {
  if (digit < 0 || digit >= n_digits()) throw InputError("digit index out of range");
  if (time < now_) throw InputError("cannot schedule a press in the past");
  push(time, digit, EventKind::button_trigger);
}

void Engine::run_to_quiescence(std::optional<double> deadline) {
  while (!queue_.empty()) {
    const double t = queue_.top().time;
    if (deadline && t > *deadline)
      throw UnsettledError("machine still active at t=" + std::to_string(t) +
                           " s, past the settle deadline");
    advance_to(t);
    drain_batch(t);
    record_row(t);
  }
}

void Engine::run_until(double t_end) {
  if (t_end < now_) throw InputError("cannot run backwards");
  while (!queue_.empty() && queue_.top().time <= t_end) {
    const double t = queue_.top().time;
    advance_to(t);
    drain_batch(t);
    record_row(t);
  }
  advance_to(t_end);
  record_row(t_end);
}

void Engine::rearm_all() {
  if (!queue_.empty()) throw StateError("cannot rearm while events are pending");
  for (DigitBlock& b : blocks_) {
    b.device.resistance = b.params.r_min;
    b.generator.emitting = false;
    b.generator.pending_triggers = 0;
    b.generator.start_scheduled = false;
    b.reset.firing = false;
  }
  record_row(now_);
}

void Engine::drain_batch(double t) {
  while (!queue_.empty() && queue_.top().time == t) {
    const Event e = queue_.top();
    queue_.pop();
    handle(e);
  }
}

void Engine::try_start_pulse(int digit) {
  DigitBlock& b = blocks_[static_cast<std::size_t>(digit)];
  if (b.generator.emitting || b.reset.firing || b.generator.start_scheduled) return;
  if (b.generator.pending_triggers <= 0) return;
  b.generator.start_scheduled = true;
  push(now_, digit, EventKind::pulse_start);
}

void Engine::handle(const Event& e) {
  DigitBlock& b = blocks_[static_cast<std::size_t>(e.digit)];
  switch (e.kind) {
    case EventKind::button_trigger:
    case EventKind::carry_trigger:
      b.generator.pending_triggers++;
      if (e.kind == EventKind::button_trigger)
        stats_.button_presses[static_cast<std::size_t>(e.digit)]++;
      else
        stats_.carries.push_back({now_, e.digit});
      try_start_pulse(e.digit);
      break;

    case EventKind::pulse_start:
      b.generator.start_scheduled = false;
      b.generator.pending_triggers--;
      b.generator.emitting = true;
      b.generator.emit_end = now_ + b.generator.pulse_width;
      stats_.pulse_starts[static_cast<std::size_t>(e.digit)]++;
      push(b.generator.emit_end, e.digit, EventKind::pulse_end);
      break;

    case EventKind::pulse_end:
      b.generator.emitting = false;
      if (reset_threshold_exceeded(b)) {
        b.reset.firing = true;
        b.reset.fire_end = now_ + b.reset.reset_width;
        push(now_, e.digit, EventKind::reset_start);
        push(b.reset.fire_end, e.digit, EventKind::reset_end);
        if (e.digit + 1 < n_digits())
          push(now_, e.digit + 1, EventKind::carry_trigger);
        else
          stats_.dropped_carries++;
      }
      try_start_pulse(e.digit);
      break;

    case EventKind::reset_start:
      stats_.resets.push_back({now_, e.digit});
      break;

    case EventKind::reset_end:
      b.reset.firing = false;
      try_start_pulse(e.digit);
      break;
  }
}

void Engine::advance_to(double t) {
  if (t <= now_) return;
  if (sample_dt_) {
    /* Sample rows are computed from the segment start without touching the
     * device states, so the choice of sampling interval cannot perturb the
     * simulation. */
    const double dt = *sample_dt_;
    for (auto k = static_cast<long long>(std::floor(now_ / dt)) + 1; k * dt < t; ++k) {
      const double ts = k * dt;
      if (ts <= now_) continue;
      Trace::Row row;
      row.t = ts;
      row.digits.reserve(blocks_.size());
      for (const DigitBlock& b : blocks_) {
        const double drive = drive_voltage(b);
        const double r = integrate_const(b.params, b.device, drive, ts - now_).resistance;
        Trace::Sample s;
        s.resistance = r;
        s.pulse = b.generator.emitting;
        s.reset = b.reset.firing;
        s.v_m = (s.pulse || s.reset) ? drive : readout_for(r, b.r_series);
        row.digits.push_back(s);
      }
      if (!trace_.rows.empty() && trace_.rows.back().t == ts)
        trace_.rows.back() = std::move(row);
      else
        trace_.rows.push_back(std::move(row));
    }
  }
  for (DigitBlock& b : blocks_)
    b.device = integrate_const(b.params, b.device, drive_voltage(b), t - now_);
  now_ = t;
}

void Engine::record_row(double t) {
  Trace::Row row;
  row.t = t;
  row.digits.reserve(blocks_.size());
  for (const DigitBlock& b : blocks_) {
    Trace::Sample s;
    s.resistance = b.device.resistance;
    s.pulse = b.generator.emitting;
    s.reset = b.reset.firing;
    s.v_m = (s.pulse || s.reset) ? drive_voltage(b) : readout_for(b.device.resistance, b.r_series);
    row.digits.push_back(s);
  }
  if (!trace_.rows.empty() && trace_.rows.back().t == t)
    trace_.rows.back() = std::move(row);
  else
    trace_.rows.push_back(std::move(row));
}

}  // namespace pascaline
