#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "pascaline/analysis.hpp"
#include "pascaline/errors.hpp"

using namespace pascaline;

namespace {

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::filesystem::path fresh_dir(const char* tag) {
  static std::mt19937_64 rng(std::random_device{}());
  const auto dir = std::filesystem::temp_directory_path() /
                   (std::string("pascaline_") + tag + "_" + std::to_string(rng()));
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("hysteresis trace covers whole cycles from the reset state") {
  const IVTrace trace = hysteresis_run({}, 2.5, 20.0, 3, 2);
  CHECK(trace.samples_per_cycle == 1000);
  CHECK(trace.cycles_recorded == 3);
  REQUIRE(trace.samples.size() == 3001);
  CHECK(trace.samples.front().v == doctest::Approx(0.0));
  for (const auto& s : trace.samples) {
    CHECK(s.r >= 1000.0);
    CHECK(s.r <= 10000.0);
  }
}

TEST_CASE("loops are pinched at the origin") {
  for (const double freq : {5.0, 20.0, 80.0}) {
    const IVTrace trace = hysteresis_run({}, 2.5, freq);
    for (const auto& s : trace.samples)
      if (std::abs(s.v) < 1e-12) CHECK(std::abs(s.i) < 1e-12);
  }
}

TEST_CASE("loop area shrinks with frequency") {
  const double a5 = loop_area(hysteresis_run({}, 2.5, 5.0));
  const double a20 = loop_area(hysteresis_run({}, 2.5, 20.0));
  const double a80 = loop_area(hysteresis_run({}, 2.5, 80.0));
  CHECK(a5 > a20);
  CHECK(a20 > a80);
  CHECK(a80 > 0.0);
}

TEST_CASE("sub-threshold drive draws a zero-area line") {
  const IVTrace trace = hysteresis_run({}, 1.0, 20.0);
  CHECK(loop_area(trace) < 1e-12);
  for (const auto& s : trace.samples) {
    CHECK(s.r == 1000.0);
    CHECK(s.i == s.v / 1000.0);
  }
}

TEST_CASE("recorded cycles repeat once warmed up") {
  const IVTrace trace = hysteresis_run({}, 2.5, 20.0, 2, 2);
  const int spc = trace.samples_per_cycle;
  for (int k = 0; k < spc; ++k) {
    const auto& a = trace.samples[static_cast<std::size_t>(k)];
    const auto& b = trace.samples[static_cast<std::size_t>(k + spc)];
    CHECK(a.v == b.v);
    CHECK(a.r == doctest::Approx(b.r).epsilon(1e-9));
  }
}

TEST_CASE("halving the step barely moves the loop area") {
  const double period = 1.0 / 20.0;
  const double coarse = loop_area(hysteresis_run({}, 2.5, 20.0, 3, 2, period / 1000.0));
  const double fine = loop_area(hysteresis_run({}, 2.5, 20.0, 3, 2, period / 2000.0));
  CHECK(std::abs(coarse - fine) / fine < 0.01);
}

TEST_CASE("hysteresis input checks") {
  CHECK_THROWS_AS(hysteresis_run({}, 0.0, 20.0), InputError);
  CHECK_THROWS_AS(hysteresis_run({}, 2.5, 0.0), InputError);
  CHECK_THROWS_AS(hysteresis_run({}, 2.5, 20.0, 0, 2), InputError);
  CHECK_THROWS_AS(hysteresis_run({}, 2.5, 20.0, 3, -1), InputError);
  // dt coarser than a thousandth of the period
  CHECK_THROWS_AS(hysteresis_run({}, 2.5, 20.0, 3, 2, 1.0 / 20.0 / 500.0), InputError);
}

TEST_CASE("loop area rejects truncated traces") {
  IVTrace trace = hysteresis_run({}, 2.5, 20.0, 1, 1);
  trace.samples.pop_back();
  trace.samples.pop_back();
  CHECK_THROWS_AS(loop_area(trace), InputError);
}

TEST_CASE("iv csv shape") {
  const IVTrace trace = hysteresis_run({}, 2.5, 20.0, 1, 0);
  const std::string csv = trace.to_csv();
  CHECK(csv.rfind("t_s,v_V,i_A,r_ohm\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 1002);
}

TEST_CASE("figure bundle writes the six canonical files") {
  const auto dir = fresh_dir("figs");
  const auto written = write_figures(dir);
  REQUIRE(written.size() == 6);
  for (const auto& path : written) {
    CHECK(std::filesystem::exists(path));
    CHECK(std::filesystem::file_size(path) > 100);
  }
  CHECK(std::filesystem::exists(dir / "fig2d.csv"));
  CHECK(std::filesystem::exists(dir / "fig3a.csv"));
  CHECK(std::filesystem::exists(dir / "fig3b.csv"));
  CHECK(std::filesystem::exists(dir / "fig2c_5Hz.csv"));
  CHECK(std::filesystem::exists(dir / "fig2c_20Hz.csv"));
  CHECK(std::filesystem::exists(dir / "fig2c_80Hz.csv"));

  // the pulse-train figure must show the fifth-press reset
  const std::string train = slurp(dir / "fig2d.csv");
  CHECK(train.find(",1\n") != std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST_CASE("figure bundle is reproducible byte for byte") {
  const auto dir_a = fresh_dir("figs_a");
  const auto dir_b = fresh_dir("figs_b");
  write_figures(dir_a);
  write_figures(dir_b);
  for (const char* name : {"fig2d.csv", "fig3a.csv", "fig3b.csv", "fig2c_5Hz.csv"})
    CHECK(slurp(dir_a / name) == slurp(dir_b / name));
  std::filesystem::remove_all(dir_a);
  std::filesystem::remove_all(dir_b);
}
