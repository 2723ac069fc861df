#pragma once

#include <cstddef>

#include "xdiscord/entropy.hpp"
#include "xdiscord/xstate.hpp"

namespace xdiscord {

/// Which of the two fixed measurements the analytical formula picks.
/// Ties go to sigma_z.
enum class AraBranch { SigmaZ, SigmaX };

struct AraDiscord {
  double d_sigma_x = 0.0;
  double d_sigma_z = 0.0;
  double discord_ara = 0.0;
  AraBranch branch = AraBranch::SigmaZ;
};

struct DiscordResult {
  double discord_exact = 0.0;  ///< min over theta in [0, pi/2] at phi = 0
  double theta_opt = 0.0;
  double d_sigma_x = 0.0;
  double d_sigma_z = 0.0;
  double discord_ara = 0.0;  ///< min(d_sigma_x, d_sigma_z)
  double gap = 0.0;          ///< discord_ara - discord_exact
  AraBranch ara_branch = AraBranch::SigmaZ;
  std::size_t evaluations = 0;
};

struct MinimizeOptions {
  std::size_t grid_points = 2001;
  double theta_tolerance = 1e-10;
};

/// I(rho_AB) - J_{Pi}(rho_AB) for the measurement given by `angles`.
double discord_for_measurement(const XState& s, MeasurementAngles angles);

/// The two-candidate analytical formula: sigma_z (theta = 0) vs
/// sigma_x (theta = pi/2, phi = 0).
AraDiscord ara_discord(const XState& s);

/// Exact discord of an X state.
///
/// phi is fixed at 0, where the conditional entropy is minimal for every
/// theta. The objective is tabulated on a uniform grid over [0, pi/2]
/// (both endpoints included) and every strict local minimum of the table is
/// polished by golden-section search over its two neighbouring cells. The
/// grid only locates brackets; every reported value comes from the scalar
/// closed form, so discord_exact <= discord_ara holds exactly.
DiscordResult minimize_theta(const XState& s, const MinimizeOptions& options = {});

struct OracleResult {
  double min_value = 0.0;
  MeasurementAngles argmin;
};

/// Exhaustive (theta, phi) grid over [0, pi] x [0, pi). Test oracle only.
OracleResult oracle_discord_2d(const XState& s, std::size_t grid_theta, std::size_t grid_phi);

double mutual_information(const XState& s);

double classical_correlation(const XState& s);

}  // namespace xdiscord
