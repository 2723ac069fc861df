#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "xdiscord/xstate.hpp"

namespace xdiscord {

/// One point of the measured conditional entropy and discord as a function
/// of the measurement angles, for plotting.
struct CurveSample {
  double theta = 0.0;
  double phi = 0.0;
  double s_cond = 0.0;
  double discord_value = 0.0;
  std::string mark;  ///< "sigma_z", "sigma_x", "theta_opt" (';'-joined), or empty
};

/// theta on `points` uniform values over [0, pi], phi on `phi_grid` values
/// j*pi/phi_grid. Marks are placed on the phi = 0 rows only: theta = 0, the
/// row nearest pi/2 and the row nearest the optimal theta.
/// Throws Error{InvalidConfig} if points < 2 or phi_grid < 1.
std::vector<CurveSample> theta_curve(const XState& s, std::size_t points, std::size_t phi_grid = 1);

/// theta,phi,s_cond,discord_value,mark with a header row; 12 significant digits.
/// `scale` multiplies the entropic columns (1 for nats).
std::string curve_csv(const std::vector<CurveSample>& samples, double scale = 1.0);

}  // namespace xdiscord
