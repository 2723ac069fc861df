// xdiscord: quantum discord of two-qubit X states.
//
//   xdiscord compute --a 0.5 --d 0.5 --alpha 0.5
//   xdiscord sweep --mode symmetric --coarse-steps 12 --out report.json
//   xdiscord verify
//   xdiscord curve --state state.json --points 1001 > curve.csv
//
// Exit codes: 0 success, 2 input or configuration error, 3 assertion or
// verification failure.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "xdiscord/curve.hpp"
#include "xdiscord/discord.hpp"
#include "xdiscord/error.hpp"
#include "xdiscord/io.hpp"
#include "xdiscord/kernels.hpp"
#include "xdiscord/sweep.hpp"

namespace {

using namespace xdiscord;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitFailed = 3;

struct StateSource {
  std::string path;
  XStateRaw inline_state;

  void add_options(CLI::App& cmd) {
    auto* file = cmd.add_option("--state", path, "State JSON file");
    for (auto [flag, field] : {std::pair{"--a", &inline_state.a},
                               {"--b", &inline_state.b},
                               {"--c", &inline_state.c},
                               {"--d", &inline_state.d},
                               {"--alpha", &inline_state.alpha_mod},
                               {"--beta", &inline_state.beta_mod}}) {
      cmd.add_option(flag, *field)->excludes(file);
    }
  }

  XState load() const {
    if (path.empty()) return canonicalize(inline_state);
    try {
      return canonicalize(state_from_json(json::parse(read_file(path))));
    } catch (const json::exception& e) {
      throw Error(ErrorKind::Parse, path + ": " + e.what());
    }
  }
};

// Discord-type quantities are nonnegative; round-off below zero is shown as 0.
double shown(double value) { return value < 0.0 && value >= -1e-9 ? 0.0 : value; }

json compute_json(const XState& s, bool bits) {
  const auto r = minimize_theta(s);
  const double mi = mutual_information(s);
  const double scale = bits ? kNatsToBits : 1.0;
  return json{{"state", state_to_json(s)},
              {"units", bits ? "bits" : "nats"},
              {"discord_exact", shown(r.discord_exact) * scale},
              {"theta_opt", r.theta_opt},
              {"d_sigma_x", shown(r.d_sigma_x) * scale},
              {"d_sigma_z", shown(r.d_sigma_z) * scale},
              {"discord_ara", shown(r.discord_ara) * scale},
              {"ara_branch", r.ara_branch == AraBranch::SigmaZ ? "sigma_z" : "sigma_x"},
              {"gap", shown(r.gap) * scale},
              {"mutual_information", shown(mi) * scale},
              {"classical_correlation", shown(mi - r.discord_exact) * scale},
              {"evaluations", r.evaluations}};
}

int run_compute(const StateSource& source, bool as_json, bool bits) {
  const XState s = source.load();
  const json out = compute_json(s, bits);
  if (as_json) {
    std::cout << out.dump(2) << '\n';
    return kExitOk;
  }
  const std::string unit = out["units"].get<std::string>();
  std::printf("state                  a=%s b=%s c=%s d=%s alpha=%s beta=%s\n", format_number(s.a()).c_str(),
              format_number(s.b()).c_str(), format_number(s.c()).c_str(), format_number(s.d()).c_str(),
              format_number(s.alpha()).c_str(), format_number(s.beta()).c_str());
  for (const char* key : {"discord_exact", "d_sigma_x", "d_sigma_z", "discord_ara", "gap", "mutual_information",
                          "classical_correlation"}) {
    std::printf("%-22s %s %s\n", key, format_number(out[key].get<double>()).c_str(), unit.c_str());
  }
  std::printf("%-22s %s rad\n", "theta_opt", format_number(out["theta_opt"].get<double>()).c_str());
  std::printf("%-22s %s\n", "ara_branch", out["ara_branch"].get<std::string>().c_str());
  return kExitOk;
}

int default_workers() {
  if (const char* env = std::getenv("DISCORD_WORKERS")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidConfig, std::string("DISCORD_WORKERS='") + env + "' is not an integer");
    }
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

struct SweepArgs {
  std::string mode = "general";
  SweepConfig config;
  std::optional<int> workers;
  std::string out_path;
  std::string csv_path;
  std::string checkpoint_path;
  std::optional<double> assert_bound;
  bool quiet = false;
};

int run_sweep_cmd(SweepArgs args) {
  args.config.mode = parse_sweep_mode(args.mode);
  args.config.workers = args.workers ? *args.workers : default_workers();
  args.config.validate();

  SweepOptions options;
  if (!args.checkpoint_path.empty()) options.checkpoint_path = args.checkpoint_path;
  if (!args.quiet) {
    options.on_level = [](const LevelSummary& l) {
      std::fprintf(stderr, "level %d: %zu cells, level max %s, running max %s\n", l.level, l.cells,
                   format_number(l.level_max_gap).c_str(), format_number(l.running_max_gap).c_str());
    };
  }
  const SweepReport report = run_sweep(args.config, options);

  if (!args.out_path.empty()) atomic_write(args.out_path, to_json(report).dump(2) + "\n");
  if (!args.csv_path.empty()) atomic_write(args.csv_path, cells_csv(report.retained));

  const auto& w = report.witness;
  std::printf("mode            %s\n", to_string(args.config.mode).c_str());
  std::printf("cells_evaluated %zu\n", report.cells_evaluated);
  std::printf("max_gap         %s\n", format_number(report.max_gap).c_str());
  std::printf("witness         a=%s b=%s c=%s d=%s s=%s theta_opt=%s\n", format_number(w.a).c_str(),
              format_number(w.b).c_str(), format_number(w.c).c_str(), format_number(w.d).c_str(),
              format_number(w.s).c_str(), format_number(w.theta_opt).c_str());

  if (args.assert_bound && report.max_gap >= *args.assert_bound) {
    std::printf("assertion failed: max_gap %s >= bound %s\n", format_number(report.max_gap).c_str(),
                format_number(*args.assert_bound).c_str());
    return kExitFailed;
  }
  return kExitOk;
}

int run_verify(double gap_tolerance, double theta_tolerance) {
  const auto report = verify_counterexamples(published_fixtures(), gap_tolerance, theta_tolerance);
  for (const auto& c : report.checks) {
    std::printf("%-10s %s  gap %s (expected %s +/- %s)  theta %s (expected %s +/- %s)\n", c.fixture.name.c_str(),
                c.passed ? "PASS" : "FAIL", format_number(c.measured_gap).c_str(),
                format_number(c.fixture.expected_gap).c_str(), format_number(gap_tolerance).c_str(),
                format_number(c.measured_theta).c_str(), format_number(c.fixture.expected_theta).c_str(),
                format_number(theta_tolerance).c_str());
  }
  return report.passed() ? kExitOk : kExitFailed;
}

int run_curve(const StateSource& source, std::size_t points, std::size_t phi_grid, const std::string& out_path,
              bool bits) {
  const XState s = source.load();
  const std::string csv = curve_csv(theta_curve(s, points, phi_grid), bits ? kNatsToBits : 1.0);
  if (out_path.empty()) {
    std::cout << csv;
  } else {
    atomic_write(out_path, csv);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum discord of two-qubit X states"};
  app.require_subcommand(1);

  auto* compute = app.add_subcommand("compute", "Exact and analytical-formula discord of one state");
  StateSource compute_source;
  compute_source.add_options(*compute);
  bool compute_json_flag = false;
  bool compute_bits = false;
  compute->add_flag("--json", compute_json_flag, "Machine-readable output");
  compute->add_flag("--bits", compute_bits, "Report entropic quantities in bits");

  auto* sweep = app.add_subcommand("sweep", "Worst-case search for the analytical-formula gap");
  SweepArgs sweep_args;
  sweep->add_option("--mode", sweep_args.mode, "general | symmetric")->check(CLI::IsMember({"general", "symmetric"}));
  sweep->add_option("--coarse-steps", sweep_args.config.coarse_steps, "Level-0 points per axis (>= 4)");
  sweep->add_option("--refine-levels", sweep_args.config.refine_levels);
  sweep->add_option("--refine-top-k", sweep_args.config.refine_top_k);
  sweep->add_option("--refine-shrink", sweep_args.config.refine_shrink);
  sweep->add_option("--refine-steps", sweep_args.config.refine_steps);
  sweep->add_option("--seed", sweep_args.config.seed);
  sweep->add_option("--workers", sweep_args.workers, "Threads (default: DISCORD_WORKERS or all cores)");
  sweep->add_option("--out", sweep_args.out_path, "JSON report path");
  sweep->add_option("--csv", sweep_args.csv_path, "CSV of retained cells");
  sweep->add_option("--checkpoint", sweep_args.checkpoint_path, "Checkpoint file, resumed if present");
  sweep->add_option("--assert-bound", sweep_args.assert_bound, "Exit 3 if max_gap >= bound");
  sweep->add_flag("--quiet", sweep_args.quiet, "No per-level progress on stderr");

  auto* verify = app.add_subcommand("verify", "Check the embedded worst-case states");
  double gap_tolerance = 5e-5;
  double theta_tolerance = 5e-3;
  verify->add_option("--tolerance", gap_tolerance, "Gap tolerance (nats)");
  verify->add_option("--theta-tolerance", theta_tolerance, "theta_opt tolerance (rad)");

  auto* curve = app.add_subcommand("curve", "CSV of the conditional entropy over theta (and phi)");
  StateSource curve_source;
  curve_source.add_options(*curve);
  std::size_t points = 181;
  std::size_t phi_grid = 1;
  std::string curve_out;
  bool curve_bits = false;
  curve->add_option("--points", points, "theta samples over [0, pi] (>= 2)");
  curve->add_option("--phi-grid", phi_grid, "phi samples over [0, pi)");
  curve->add_option("--out", curve_out, "Output path (default: stdout)");
  curve->add_flag("--bits", curve_bits, "Report entropic quantities in bits");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*compute) return run_compute(compute_source, compute_json_flag, compute_bits);
    if (*sweep) return run_sweep_cmd(sweep_args);
    if (*verify) return run_verify(gap_tolerance, theta_tolerance);
    if (*curve) return run_curve(curve_source, points, phi_grid, curve_out, curve_bits);
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return e.kind() == ErrorKind::VerificationFailed ? kExitFailed : kExitInput;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInput;
  }
  return kExitInput;
}
