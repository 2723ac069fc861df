#include <algorithm>
#include <cmath>

#include "xdiscord/kernels.hpp"

namespace xdiscord::kernels {
namespace {

inline double xlogx(double x) noexcept { return x > 0.0 ? x * std::log(x) : 0.0; }

}  // namespace

void conditional_entropy_grid_scalar(const ThetaObjective& objective, const double* cos_theta,
                                     const double* sin2_theta, std::size_t n, double* out) noexcept {
  for (std::size_t i = 0; i < n; ++i) {
    const double z = objective.z * cos_theta[i];
    const double v = objective.v * cos_theta[i];
    const double coh = objective.coherence * sin2_theta[i];
    const double p = objective.u + v;
    const double m = objective.u - v;
    const double r12 = std::sqrt(std::max(0.0, p * p + coh));
    const double r34 = std::sqrt(std::max(0.0, m * m + coh));

    const double joint = xlogx((1.0 + z + r12) * 0.25) + xlogx((1.0 + z - r12) * 0.25) +
                         xlogx((1.0 - z + r34) * 0.25) + xlogx((1.0 - z - r34) * 0.25);
    const double measured = xlogx((1.0 + z) * 0.5) + xlogx((1.0 - z) * 0.5);
    out[i] = measured - joint;
  }
}

}  // namespace xdiscord::kernels
