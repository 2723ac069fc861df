#include <doctest.h>

#include <filesystem>
#include <random>

#include "support/random_states.hpp"
#include "xdiscord/curve.hpp"
#include "xdiscord/error.hpp"
#include "xdiscord/io.hpp"

using namespace xdiscord;

TEST_CASE("state JSON: canonical and raw forms") {
  const auto canonical = state_from_json(json::parse(R"({"a":0.5,"b":0,"c":0,"d":0.5,"alpha":0.5,"beta":0})"));
  CHECK(canonical.alpha_mod == 0.5);
  CHECK(canonical.alpha_phase == 0.0);

  const auto raw = state_from_json(
      json::parse(R"({"a":0.5,"b":0,"c":0,"d":0.5,"alpha":0.5,"beta":0,"alpha_phase":1.25,"beta_phase":-2})"));
  CHECK(raw.alpha_phase == 1.25);
  CHECK(raw.beta_phase == -2.0);

  const auto minimal = state_from_json(json::parse(R"({"a":1,"b":0,"c":0,"d":0})"));
  CHECK(minimal.alpha_mod == 0.0);

  CHECK_THROWS_AS(state_from_json(json::parse(R"({"a":1,"b":0,"c":0})")), Error);
  CHECK_THROWS_AS(state_from_json(json::parse(R"({"a":"1","b":0,"c":0,"d":0})")), Error);
  CHECK_THROWS_AS(state_from_json(json::parse("[1,2]")), Error);
}

TEST_CASE("property: state JSON round-trips bit-for-bit") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 500; ++trial) {
    const auto s = xdiscord::testing::random_xstate(rng);
    const auto text = state_to_json(s).dump();
    CHECK(canonicalize(state_from_json(json::parse(text))) == s);
  }
}

TEST_CASE("sweep report JSON round-trips") {
  SweepConfig config;
  config.coarse_steps = 5;
  config.refine_levels = 1;
  config.refine_top_k = 3;
  config.refine_steps = 3;
  const auto report = run_sweep(config);
  const json j = to_json(report);
  CHECK(to_json(sweep_report_from_json(json::parse(j.dump()))) == j);
  CHECK(j["histogram"][0]["lo"].is_null());
  CHECK(j["histogram"].back()["hi"].is_null());
}

TEST_CASE("CSV formatting") {
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(2.0 / 3.0) == "0.666666666667");
  CHECK(format_number(0.00204645121276489) == "0.00204645121276");

  SweepCell cell;
  cell.a = 0.25;
  cell.b = 0.125;
  cell.c = 0.125;
  cell.d = 0.5;
  cell.s = 1.0 / 3.0;
  cell.gap = 1e-4;
  cell.theta_opt = 0.5;
  CHECK(cells_csv({cell}) == "a,b,c,d,s,gap,theta_opt\n0.25,0.125,0.125,0.5,0.333333333333,0.0001,0.5\n");
}

TEST_CASE("curve CSV") {
  const auto bell = canonicalize({0.5, 0, 0, 0.5, 0.5, 0, 0, 0});
  const auto rows = theta_curve(bell, 5);
  REQUIRE(rows.size() == 5);
  for (const auto& r : rows) CHECK(std::abs(r.s_cond) <= 1e-12);
  CHECK(rows[0].mark.find("sigma_z") != std::string::npos);
  CHECK(rows[2].mark.find("sigma_x") != std::string::npos);

  const auto csv = curve_csv(rows);
  CHECK(csv.rfind("theta,phi,s_cond,discord_value,mark\n", 0) == 0);
  CHECK(csv.find('\r') == std::string::npos);

  CHECK(theta_curve(bell, 4, 3).size() == 12);
  CHECK_THROWS_AS(theta_curve(bell, 1), Error);
  CHECK_THROWS_AS(theta_curve(bell, 4, 0), Error);

  const auto product = canonicalize({0.6, 0.1, 0.1, 0.2, 0, 0, 0, 0});
  const auto flat = theta_curve(product, 11);
  auto best = flat.begin();
  for (auto it = flat.begin(); it != flat.end(); ++it) {
    if (it->s_cond < best->s_cond) best = it;
  }
  CHECK(best->theta == 0.0);
}

TEST_CASE("atomic_write replaces the file and leaves no temporary") {
  const auto dir = std::filesystem::temp_directory_path() / "xdiscord_io_test";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "out.txt").string();
  atomic_write(path, "first\n");
  atomic_write(path, "second\n");
  CHECK(read_file(path) == "second\n");
  CHECK_FALSE(std::filesystem::exists(path + ".tmp"));
  CHECK_THROWS_AS(atomic_write((dir / "missing" / "x.txt").string(), "x"), Error);
  std::filesystem::remove_all(dir);
}
