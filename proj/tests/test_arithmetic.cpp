#include <doctest.h>

#include <random>
#include <vector>

#include "pascaline/errors.hpp"
#include "pascaline/machine.hpp"

using namespace pascaline;

namespace {

Numeral num(const Machine& m, const std::string& text) { return parse_numeral(m.config(), text); }

std::string txt(const Machine& m, const Numeral& n) { return format_numeral(m.config(), n); }

}  // namespace

TEST_CASE("entering a number stores its digits") {
  Machine m(default_config());
  m.enter_number(num(m, "1642"));
  CHECK(txt(m, m.read()) == "1642");
  // entry of a digit never wraps it, so no resets fire
  CHECK(m.stats().resets.empty());
}

TEST_CASE("entering on top accumulates") {
  Machine m(default_config());
  m.enter_number(num(m, "1642"));
  m.enter_number(num(m, "373"));
  CHECK(txt(m, m.read()) == "2015");
}

TEST_CASE("addition examples") {
  Machine m(default_config());
  const AddResult r = m.add(num(m, "1642"), num(m, "373"));
  CHECK(txt(m, r.result) == "2015");
  CHECK_FALSE(r.carry_out);

  const AddResult zero = m.add(num(m, "0"), num(m, "0"));
  CHECK(txt(m, zero.result) == "0000");
  CHECK_FALSE(zero.carry_out);
  CHECK(zero.resets.empty());
}

TEST_CASE("carry cascade through three digits") {
  Machine m(default_config());
  const AddResult r = m.add(num(m, "0999"), num(m, "1"));
  CHECK(txt(m, r.result) == "1000");
  CHECK_FALSE(r.carry_out);
  REQUIRE(r.resets.size() == 3);
  REQUIRE(r.carries.size() == 3);
  CHECK(r.resets[0].digit == 0);
  CHECK(r.resets[1].digit == 1);
  CHECK(r.resets[2].digit == 2);
  CHECK(r.resets[0].time < r.resets[1].time);
  CHECK(r.resets[1].time < r.resets[2].time);
  CHECK(r.carries[0].time == r.resets[0].time);
  CHECK(r.carries[1].time == r.resets[1].time);
  CHECK(r.carries[2].time == r.resets[2].time);
}

TEST_CASE("overflow wraps and reports the carry") {
  Machine m(default_config());
  const AddResult r = m.add(num(m, "9999"), num(m, "1"));
  CHECK(txt(m, r.result) == "0000");
  CHECK(r.carry_out);
  CHECK(r.resets.size() == 4);
}

TEST_CASE("subtraction examples") {
  Machine m(default_config());
  const SubtractResult r = m.subtract(num(m, "2015"), num(m, "373"));
  CHECK(txt(m, r.result) == "1642");
  CHECK_FALSE(r.negative);
  CHECK(txt(m, r.minuend_complement) == "7984");
  CHECK(txt(m, r.wrapped_sum) == "8357");
}

TEST_CASE("subtraction crossing zero") {
  Machine m(default_config());
  const SubtractResult r = m.subtract(num(m, "373"), num(m, "2015"));
  CHECK(r.negative);
  CHECK(txt(m, r.result) == "1642");
  CHECK(txt(m, r.minuend_complement) == "9626");
  CHECK(txt(m, r.wrapped_sum) == "1641");
}

TEST_CASE("subtracting a number from itself") {
  Machine m(default_config());
  const SubtractResult r = m.subtract(num(m, "4815"), num(m, "4815"));
  CHECK(txt(m, r.result) == "0000");
  CHECK_FALSE(r.negative);
}

TEST_CASE("clear puts every digit back to zero") {
  Machine m(default_config());
  m.enter_number(num(m, "8357"));
  m.clear();
  CHECK(txt(m, m.read()) == "0000");
  const double t = m.now();
  m.enter_number(num(m, "42"));
  CHECK(txt(m, m.read()) == "0042");
  CHECK(m.now() > t);  // the session clock keeps running
}

TEST_CASE("invalid numerals are rejected before anything runs") {
  Machine m(default_config());
  Numeral wide;
  wide.digits = {0, 0, 0, 0, 0};
  CHECK_THROWS_AS(m.enter_number(wide), InputError);
  Numeral hot;
  hot.digits = {10, 0, 0, 0};
  CHECK_THROWS_AS(m.enter_number(hot), InputError);
  CHECK_THROWS_AS(m.press_digit(4, 1), InputError);
  CHECK_THROWS_AS(m.press_digit(0, -1), InputError);
}

TEST_CASE("machine construction rejects invalid configs") {
  CHECK_THROWS_AS(Machine(make_config(4, {10}, {6e-3}, std::vector<double>{0.8})), ConfigError);
  PascalineConfig lopsided = default_config();
  lopsided.radix.pop_back();
  CHECK_THROWS_AS(Machine{lopsided}, ConfigError);
}

TEST_CASE("addition matches integer arithmetic across radices") {
  std::mt19937 rng(2024);
  int cases = 0;
  for (int base = 2; base <= 12; ++base) {
    for (int digits = 1; digits <= 4; ++digits) {
      const PascalineConfig cfg = make_config(digits, {base}, {6e-3});
      Machine m(cfg);
      const unsigned long long cap = capacity(cfg);
      std::uniform_int_distribution<unsigned long long> pick(0, cap - 1);
      for (int k = 0; k < 12; ++k) {
        const unsigned long long va = pick(rng), vb = pick(rng);
        const AddResult r = m.add(numeral_from_value(cfg, va), numeral_from_value(cfg, vb));
        CHECK(numeral_value(cfg, r.result) == (va + vb) % cap);
        CHECK(r.carry_out == (va + vb >= cap));
        ++cases;
      }
    }
  }
  CHECK(cases >= 500);
}

TEST_CASE("subtraction matches integer arithmetic across radices") {
  std::mt19937 rng(777);
  for (int base = 2; base <= 12; ++base) {
    for (int digits = 1; digits <= 4; ++digits) {
      const PascalineConfig cfg = make_config(digits, {base}, {6e-3});
      Machine m(cfg);
      const unsigned long long cap = capacity(cfg);
      std::uniform_int_distribution<unsigned long long> pick(0, cap - 1);
      for (int k = 0; k < 12; ++k) {
        const unsigned long long va = pick(rng), vb = pick(rng);
        const SubtractResult r = m.subtract(numeral_from_value(cfg, va), numeral_from_value(cfg, vb));
        CHECK(r.negative == (vb > va));
        const unsigned long long expected = va >= vb ? va - vb : vb - va;
        CHECK(numeral_value(cfg, r.result) == expected);
      }
    }
  }
}

TEST_CASE("arithmetic holds when every digit has its own radix") {
  std::mt19937 rng(31337);
  std::uniform_int_distribution<int> radix_pick(2, 12);
  std::uniform_int_distribution<int> digit_pick(1, 4);
  const std::vector<double> widths{5e-3, 6e-3, 8e-3};
  for (int trial = 0; trial < 60; ++trial) {
    const int digits = digit_pick(rng);
    std::vector<int> radices;
    std::vector<double> pulse;
    for (int i = 0; i < digits; ++i) {
      radices.push_back(radix_pick(rng));
      pulse.push_back(widths[static_cast<std::size_t>(
          std::uniform_int_distribution<int>(0, 2)(rng))]);
    }
    const PascalineConfig cfg = make_config(digits, radices, pulse);
    REQUIRE(validate_config(cfg).empty());
    Machine m(cfg);
    const unsigned long long cap = capacity(cfg);
    std::uniform_int_distribution<unsigned long long> pick(0, cap - 1);

    const unsigned long long va = pick(rng), vb = pick(rng);
    const AddResult sum = m.add(numeral_from_value(cfg, va), numeral_from_value(cfg, vb));
    CHECK(numeral_value(cfg, sum.result) == (va + vb) % cap);
    CHECK(sum.carry_out == (va + vb >= cap));

    const SubtractResult diff = m.subtract(numeral_from_value(cfg, va), numeral_from_value(cfg, vb));
    CHECK(diff.negative == (vb > va));
    CHECK(numeral_value(cfg, diff.result) == (va >= vb ? va - vb : vb - va));
  }
}

TEST_CASE("any threshold inside the admissible range wraps on the radix-th press") {
  for (int base = 2; base <= 12; ++base) {
    const PascalineConfig probe = make_config(1, {base}, {6e-3});
    const ThresholdRange range = admissible_threshold_range(probe, 0);
    const double span = range.high - range.low;
    for (const double frac : {0.05, 0.5, 0.95}) {
      const PascalineConfig cfg =
          make_config(1, {base}, {6e-3}, std::vector<double>{range.low + frac * span});
      Machine m(cfg);
      m.press_digit(0, base - 1);
      CHECK(m.stats().resets.empty());
      const EntryReport last = m.press_digit(0, 1);
      CHECK(last.resets.size() == 1);
      CHECK(txt(m, m.read()) == "0");
    }
  }
}
