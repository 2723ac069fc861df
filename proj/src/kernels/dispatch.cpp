#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <string>

#include "xdiscord/kernels.hpp"

namespace xdiscord {
namespace {

KernelIsa detect() noexcept {
  if (const char* env = std::getenv("XDISCORD_KERNEL")) {
    const std::string requested(env);
    if (requested == "scalar") return KernelIsa::Scalar;
    if (requested == "avx2" && kernel_available(KernelIsa::Avx2)) return KernelIsa::Avx2;
  }
  return kernel_available(KernelIsa::Avx2) ? KernelIsa::Avx2 : KernelIsa::Scalar;
}

std::atomic<KernelIsa>& active() noexcept {
  static std::atomic<KernelIsa> isa{detect()};
  return isa;
}

}  // namespace

ThetaObjective ThetaObjective::from_state(const XState& s, double phi) noexcept {
  const double a = s.a(), b = s.b(), c = s.c(), d = s.d();
  const double alpha = s.alpha(), beta = s.beta();
  return ThetaObjective{
      a - b + c - d,
      a + b - c - d,
      a - b - c + d,
      4.0 * (alpha * alpha + beta * beta + 2.0 * alpha * beta * std::cos(2.0 * phi)),
  };
}

std::string_view to_string(KernelIsa isa) {
  switch (isa) {
    case KernelIsa::Scalar: return "scalar";
    case KernelIsa::Avx2: return "avx2";
  }
  return "unknown";
}

bool kernel_available(KernelIsa isa) noexcept {
  switch (isa) {
    case KernelIsa::Scalar: return true;
    case KernelIsa::Avx2:
#if defined(XDISCORD_HAVE_AVX2)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
  }
  return false;
}

KernelIsa active_kernel() noexcept { return active().load(std::memory_order_relaxed); }

bool set_active_kernel(KernelIsa isa) noexcept {
  if (!kernel_available(isa)) return false;
  active().store(isa, std::memory_order_relaxed);
  return true;
}

void conditional_entropy_grid(const ThetaObjective& objective, const ThetaGrid& grid, std::span<double> out) {
  const std::size_t n = std::min(grid.size(), out.size());
#if defined(XDISCORD_HAVE_AVX2)
  if (active_kernel() == KernelIsa::Avx2) {
    kernels::conditional_entropy_grid_avx2(objective, grid.cos_theta.data(), grid.sin2_theta.data(), n, out.data());
    return;
  }
#endif
  kernels::conditional_entropy_grid_scalar(objective, grid.cos_theta.data(), grid.sin2_theta.data(), n, out.data());
}

}  // namespace xdiscord
