#include "xdiscord/discord.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "xdiscord/error.hpp"
#include "xdiscord/golden.hpp"
#include "xdiscord/kernels.hpp"

namespace xdiscord {
namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

// Grid tables are reused across calls on the same thread.
struct GridTables {
  std::size_t points = 0;
  std::vector<double> theta;
  std::vector<double> cos_theta;
  std::vector<double> sin2_theta;
  std::vector<double> values;

  void ensure(std::size_t n) {
    if (points == n) return;
    points = n;
    theta.resize(n);
    cos_theta.resize(n);
    sin2_theta.resize(n);
    values.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      theta[i] = kHalfPi * static_cast<double>(i) / static_cast<double>(n - 1);
      cos_theta[i] = std::cos(theta[i]);
      const double s = std::sin(theta[i]);
      sin2_theta[i] = s * s;
    }
  }
};

GridTables& tables() {
  thread_local GridTables t;
  return t;
}

}  // namespace

double discord_for_measurement(const XState& s, MeasurementAngles angles) {
  return conditional_entropy_measured(s, angles) - conditional_entropy_unmeasured(s);
}

AraDiscord ara_discord(const XState& s) {
  AraDiscord out;
  out.d_sigma_z = discord_for_measurement(s, {0.0, 0.0});
  out.d_sigma_x = discord_for_measurement(s, {kHalfPi, 0.0});
  if (out.d_sigma_x < out.d_sigma_z) {
    out.discord_ara = out.d_sigma_x;
    out.branch = AraBranch::SigmaX;
  } else {
    out.discord_ara = out.d_sigma_z;
    out.branch = AraBranch::SigmaZ;
  }
  return out;
}

DiscordResult minimize_theta(const XState& s, const MinimizeOptions& options) {
  const std::size_t n = options.grid_points;
  if (n < 3) throw Error(ErrorKind::InvalidConfig, "minimize_theta needs at least 3 grid points");

  const double unmeasured = conditional_entropy_unmeasured(s);
  auto objective = [&s](double theta) { return conditional_entropy_measured(s, {theta, 0.0}); };

  DiscordResult result;
  const double cond_z = objective(0.0);
  const double cond_x = objective(kHalfPi);
  result.d_sigma_z = cond_z - unmeasured;
  result.d_sigma_x = cond_x - unmeasured;
  if (result.d_sigma_x < result.d_sigma_z) {
    result.discord_ara = result.d_sigma_x;
    result.ara_branch = AraBranch::SigmaX;
  } else {
    result.discord_ara = result.d_sigma_z;
    result.ara_branch = AraBranch::SigmaZ;
  }

  double best_theta = 0.0;
  double best = cond_z;
  if (cond_x < best) {
    best = cond_x;
    best_theta = kHalfPi;
  }
  std::size_t evaluations = 2;

  auto& t = tables();
  t.ensure(n);
  conditional_entropy_grid(ThetaObjective::from_state(s), ThetaGrid{t.cos_theta, t.sin2_theta}, t.values);
  evaluations += n;

  const auto& f = t.values;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (!(f[i] < f[i - 1] && f[i] <= f[i + 1])) continue;
    const auto polished = golden_section_minimize(objective, t.theta[i - 1], t.theta[i + 1], options.theta_tolerance);
    evaluations += polished.evaluations;
    if (polished.value < best) {
      best = polished.value;
      best_theta = polished.x;
    }
  }

  result.theta_opt = best_theta;
  result.discord_exact = best - unmeasured;
  result.gap = result.discord_ara - result.discord_exact;
  result.evaluations = evaluations;
  return result;
}

OracleResult oracle_discord_2d(const XState& s, std::size_t grid_theta, std::size_t grid_phi) {
  if (grid_theta < 2 || grid_phi < 2) {
    throw Error(ErrorKind::InvalidConfig, "oracle grid counts must be at least 2");
  }
  // Replace only on a clear improvement so that exact and round-off ties
  // keep the first (smallest theta, phi) grid point.
  constexpr double kTie = 1e-14;

  const double unmeasured = conditional_entropy_unmeasured(s);
  OracleResult best{std::numeric_limits<double>::infinity(), {}};
  for (std::size_t i = 0; i < grid_theta; ++i) {
    const double theta = std::numbers::pi * static_cast<double>(i) / static_cast<double>(grid_theta - 1);
    for (std::size_t j = 0; j < grid_phi; ++j) {
      const double phi = std::numbers::pi * static_cast<double>(j) / static_cast<double>(grid_phi);
      const double value = conditional_entropy_measured(s, {theta, phi}) - unmeasured;
      if (value < best.min_value - kTie) best = OracleResult{value, {theta, phi}};
    }
  }
  return best;
}

double mutual_information(const XState& s) {
  return von_neumann_entropy(reduce_a(s)) + von_neumann_entropy(reduce_b(s)) -
         von_neumann_entropy(xstate_spectrum(s));
}

double classical_correlation(const XState& s) { return mutual_information(s) - minimize_theta(s).discord_exact; }

}  // namespace xdiscord
