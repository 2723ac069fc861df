#pragma once

// Batched evaluation of the post-measurement conditional entropy along a
// grid of theta values at fixed phi. This is the inner loop of the discord
// minimizer and of every sweep cell, so it exists in a scalar reference form
// and in SIMD variants selected at runtime.

#include <cstddef>
#include <span>
#include <string_view>

#include "xdiscord/entropy.hpp"

namespace xdiscord {

/// Per-state constants of S(rho'_AB) - S(rho'_B) at fixed phi.
struct ThetaObjective {
  double z = 0.0;          // a - b + c - d
  double u = 0.0;          // a + b - c - d
  double v = 0.0;          // a - b - c + d
  double coherence = 0.0;  // 4 (alpha^2 + beta^2 + 2 alpha beta cos 2phi)

  static ThetaObjective from_state(const XState& s, double phi = 0.0) noexcept;
};

/// Precomputed cos(theta) and sin^2(theta) for a uniform grid.
struct ThetaGrid {
  std::span<const double> cos_theta;
  std::span<const double> sin2_theta;

  std::size_t size() const noexcept { return cos_theta.size(); }
};

enum class KernelIsa { Scalar, Avx2 };

std::string_view to_string(KernelIsa isa);

bool kernel_available(KernelIsa isa) noexcept;

/// Kernel in use. Chosen once from CPU features; the XDISCORD_KERNEL
/// environment variable ("scalar" or "avx2") overrides the choice.
KernelIsa active_kernel() noexcept;

/// Forces a kernel (tests and benchmarks). Returns false if unavailable.
bool set_active_kernel(KernelIsa isa) noexcept;

/// out[i] = S(rho'_AB) - S(rho'_B) at theta_i. Negative eigenvalues from
/// round-off are clamped to zero; no validation happens here.
void conditional_entropy_grid(const ThetaObjective& objective, const ThetaGrid& grid, std::span<double> out);

namespace kernels {

void conditional_entropy_grid_scalar(const ThetaObjective& objective, const double* cos_theta,
                                     const double* sin2_theta, std::size_t n, double* out) noexcept;

#if defined(XDISCORD_HAVE_AVX2)
void conditional_entropy_grid_avx2(const ThetaObjective& objective, const double* cos_theta,
                                   const double* sin2_theta, std::size_t n, double* out) noexcept;
#endif

}  // namespace kernels
}  // namespace xdiscord
