#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "pascaline/engine.hpp"
#include "pascaline/errors.hpp"

using namespace pascaline;

namespace {

PascalineConfig base5_config() { return make_config(1, {5}, {10e-3}, std::vector<double>{0.8}); }

}  // namespace

TEST_CASE("an empty schedule leaves a constant trace") {
  Engine engine(default_config());
  engine.run_until(1.0);
  CHECK(engine.quiescent());
  REQUIRE(engine.trace().rows.size() == 2);
  CHECK(engine.trace().rows.front().t == 0.0);
  CHECK(engine.trace().rows.back().t == 1.0);
  for (const auto& row : engine.trace().rows)
    for (const auto& s : row.digits) {
      CHECK(s.resistance == 1000.0);
      CHECK(s.v_m == doctest::Approx(2.5 / 11.0));
      CHECK_FALSE(s.pulse);
      CHECK_FALSE(s.reset);
    }
}

TEST_CASE("one press climbs one level") {
  Engine engine(default_config());
  engine.press(0, 0.0);
  engine.run_to_quiescence();
  CHECK(engine.blocks()[0].device.resistance == doctest::Approx(1483.6).epsilon(1e-12));
  CHECK(engine.now() == doctest::Approx(6e-3));
  CHECK(engine.stats().pulse_starts[0] == 1);
  CHECK(engine.stats().resets.empty());
}

TEST_CASE("base-5 pulse train resets exactly on the fifth press") {
  Engine engine(base5_config());
  const double gap = 0.15;
  for (int k = 0; k < 5; ++k) engine.press(0, k * gap);
  engine.run_to_quiescence();

  const EngineStats& st = engine.stats();
  CHECK(st.pulse_starts[0] == 5);
  REQUIRE(st.resets.size() == 1);
  // the reset rising edge sits at the end of the fifth pulse
  CHECK(st.resets[0].time == doctest::Approx(4 * gap + 10e-3).epsilon(1e-12));
  CHECK(st.dropped_carries == 1);  // one digit: the carry has nowhere to go
  CHECK(engine.blocks()[0].device.resistance == 1000.0);
}

TEST_CASE("plateau readouts climb the five-level ladder") {
  Engine engine(base5_config());
  const std::vector<double> expected{0.3824326613586312, 0.5177608626704726,
                                     0.6368311223729319, 0.7424071991001124};
  for (int k = 0; k < 4; ++k) {
    engine.press(0, engine.now() + 0.15);
    engine.run_to_quiescence();
    CHECK(readout_voltage(engine.blocks()[0]) == doctest::Approx(expected[k]).epsilon(1e-9));
  }
}

TEST_CASE("triggers queue while the digit is busy") {
  // both presses at the same instant: the second pulse must wait for the first
  Engine engine(default_config());
  engine.press(0, 0.0);
  engine.press(0, 0.0);
  engine.run_to_quiescence();
  CHECK(engine.stats().pulse_starts[0] == 2);
  CHECK(engine.now() == doctest::Approx(12e-3));
  CHECK(engine.blocks()[0].device.resistance == doctest::Approx(1967.2).epsilon(1e-9));
}

TEST_CASE("carry pulses the next digit while the wrapped digit resets") {
  PascalineConfig cfg = default_config(2);
  Engine engine(cfg);
  for (int k = 0; k < 10; ++k) engine.press(0, k * 0.15);
  engine.run_to_quiescence();

  const EngineStats& st = engine.stats();
  REQUIRE(st.resets.size() == 1);
  REQUIRE(st.carries.size() == 1);
  CHECK(st.carries[0].digit == 1);
  CHECK(st.carries[0].time == st.resets[0].time);
  CHECK(st.dropped_carries == 0);
  CHECK(engine.blocks()[0].device.resistance == 1000.0);
  CHECK(engine.blocks()[1].device.resistance == doctest::Approx(1483.6).epsilon(1e-9));
}

TEST_CASE("every pulse start is accounted for by a button or a carry") {
  Engine engine(default_config());
  for (int digit = 0; digit < 4; ++digit)
    for (int k = 0; k < 3 * (digit + 1); ++k) engine.press(digit, k * 0.15 + digit * 0.05);
  engine.run_to_quiescence();

  const EngineStats& st = engine.stats();
  std::vector<long long> carries_received(4, 0);
  for (const auto& c : st.carries) carries_received[static_cast<std::size_t>(c.digit)]++;
  for (int digit = 0; digit < 4; ++digit)
    CHECK(st.pulse_starts[digit] ==
          st.button_presses[digit] + carries_received[static_cast<std::size_t>(digit)]);
}

TEST_CASE("every carry coincides with a reset edge one digit below") {
  Engine engine(default_config());
  for (int k = 0; k < 23; ++k) engine.press(0, k * 0.15);
  for (int k = 0; k < 11; ++k) engine.press(1, k * 0.15);
  engine.run_to_quiescence();

  const EngineStats& st = engine.stats();
  CHECK(!st.carries.empty());
  for (const auto& carry : st.carries) {
    const bool matched = std::any_of(st.resets.begin(), st.resets.end(),
                                     [&](const EngineStats::Edge& reset) {
                                       return reset.time == carry.time &&
                                              reset.digit == carry.digit - 1;
                                     });
    CHECK(matched);
  }
}

TEST_CASE("reset brings the digit to the bottom rail exactly") {
  Engine engine(base5_config());
  for (int k = 0; k < 5; ++k) engine.press(0, k * 0.15);
  engine.run_to_quiescence();
  CHECK(engine.blocks()[0].device.resistance == 1000.0);

  // quiescent state holds: nothing drives the device afterwards
  engine.run_until(engine.now() + 10.0);
  CHECK(engine.blocks()[0].device.resistance == 1000.0);
}

TEST_CASE("trace rows are strictly increasing and flag the phases") {
  Engine engine(base5_config());
  for (int k = 0; k < 5; ++k) engine.press(0, k * 0.15);
  engine.run_to_quiescence();

  const Trace& trace = engine.trace();
  bool saw_pulse = false, saw_reset = false;
  for (std::size_t k = 1; k < trace.rows.size(); ++k)
    CHECK(trace.rows[k].t > trace.rows[k - 1].t);
  for (const auto& row : trace.rows) {
    saw_pulse = saw_pulse || row.digits[0].pulse;
    saw_reset = saw_reset || row.digits[0].reset;
    if (row.digits[0].pulse) CHECK(row.digits[0].v_m == -2.5);
    if (row.digits[0].reset) CHECK(row.digits[0].v_m == 2.5);
  }
  CHECK(saw_pulse);
  CHECK(saw_reset);
}

TEST_CASE("uniform sampling never perturbs the simulation") {
  Engine plain(base5_config());
  Engine sampled(base5_config(), 1e-3);
  for (int k = 0; k < 5; ++k) {
    plain.press(0, k * 0.15);
    sampled.press(0, k * 0.15);
  }
  plain.run_to_quiescence();
  sampled.run_to_quiescence();
  CHECK(plain.blocks()[0].device.resistance == sampled.blocks()[0].device.resistance);
  CHECK(plain.now() == sampled.now());
  CHECK(sampled.trace().rows.size() > plain.trace().rows.size());
}

TEST_CASE("replays are identical byte for byte") {
  const auto run_once = [] {
    Engine engine(default_config(), 2e-3);
    for (int k = 0; k < 10; ++k) engine.press(0, k * 0.15);
    for (int k = 0; k < 7; ++k) engine.press(2, k * 0.15);
    engine.run_to_quiescence();
    return engine.trace().to_csv();
  };
  CHECK(run_once() == run_once());
}

TEST_CASE("simultaneous events on different digits are ordered by digit") {
  // identical schedules issued in different order must land identically
  Engine a(default_config());
  Engine b(default_config());
  a.press(0, 0.0);
  a.press(3, 0.0);
  a.press(1, 0.0);
  b.press(3, 0.0);
  b.press(1, 0.0);
  b.press(0, 0.0);
  a.run_to_quiescence();
  b.run_to_quiescence();
  CHECK(a.trace().to_csv() == b.trace().to_csv());
}

TEST_CASE("csv header names every digit column") {
  Engine engine(default_config(2));
  engine.run_until(0.01);
  const std::string csv = engine.trace().to_csv();
  CHECK(csv.rfind("t_s,v_m_1,r_1,pulse_1,reset_1,v_m_2,r_2,pulse_2,reset_2\n", 0) == 0);
}

TEST_CASE("settle deadline raises when activity persists") {
  Engine engine(default_config());
  engine.press(0, 5.0);
  CHECK_THROWS_AS(engine.run_to_quiescence(1.0), UnsettledError);
}

TEST_CASE("presses cannot rewind the clock") {
  Engine engine(default_config());
  engine.press(0, 0.0);
  engine.run_to_quiescence();
  CHECK_THROWS_AS(engine.press(0, engine.now() - 1e-3), InputError);
  CHECK_THROWS_AS(engine.press(4, 0.0), InputError);
}

TEST_CASE("rearm returns every digit to the bottom rail") {
  Engine engine(default_config());
  for (int k = 0; k < 3; ++k) engine.press(1, k * 0.15);
  engine.run_to_quiescence();
  const double t = engine.now();
  engine.rearm_all();
  CHECK(engine.now() == t);
  for (const auto& block : engine.blocks()) CHECK(block.device.resistance == 1000.0);
}
