#include "xdiscord/curve.hpp"

#include <cmath>
#include <numbers>

#include "xdiscord/discord.hpp"
#include "xdiscord/error.hpp"
#include "xdiscord/io.hpp"

namespace xdiscord {
namespace {

std::size_t nearest_row(double theta, std::size_t points) {
  const double step = std::numbers::pi / static_cast<double>(points - 1);
  return static_cast<std::size_t>(std::llround(theta / step));
}

void add_mark(std::string& marks, const char* mark) {
  if (!marks.empty()) marks += ';';
  marks += mark;
}

}  // namespace

std::vector<CurveSample> theta_curve(const XState& s, std::size_t points, std::size_t phi_grid) {
  if (points < 2) throw Error(ErrorKind::InvalidConfig, "curve needs at least 2 theta points");
  if (phi_grid < 1) throw Error(ErrorKind::InvalidConfig, "phi grid needs at least 1 value");

  const double unmeasured = conditional_entropy_unmeasured(s);
  const auto optimum = minimize_theta(s);
  const std::size_t sigma_x_row = nearest_row(std::numbers::pi / 2.0, points);
  const std::size_t opt_row = nearest_row(optimum.theta_opt, points);

  std::vector<CurveSample> out;
  out.reserve(points * phi_grid);
  for (std::size_t i = 0; i < points; ++i) {
    const double theta = std::numbers::pi * static_cast<double>(i) / static_cast<double>(points - 1);
    for (std::size_t j = 0; j < phi_grid; ++j) {
      const double phi = std::numbers::pi * static_cast<double>(j) / static_cast<double>(phi_grid);
      CurveSample sample;
      sample.theta = theta;
      sample.phi = phi;
      sample.s_cond = conditional_entropy_measured(s, {theta, phi});
      sample.discord_value = sample.s_cond - unmeasured;
      if (j == 0) {
        if (i == 0) add_mark(sample.mark, "sigma_z");
        if (i == sigma_x_row) add_mark(sample.mark, "sigma_x");
        if (i == opt_row) add_mark(sample.mark, "theta_opt");
      }
      out.push_back(std::move(sample));
    }
  }
  return out;
}

std::string curve_csv(const std::vector<CurveSample>& samples, double scale) {
  std::string out = "theta,phi,s_cond,discord_value,mark\n";
  for (const auto& r : samples) {
    out += format_number(r.theta) + ',' + format_number(r.phi) + ',' + format_number(r.s_cond * scale) + ',' +
           format_number(r.discord_value * scale) + ',' + r.mark + '\n';
  }
  return out;
}

}  // namespace xdiscord
