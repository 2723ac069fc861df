#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "support/random_states.hpp"
#include "xdiscord/discord.hpp"
#include "xdiscord/kernels.hpp"

using namespace xdiscord;
using namespace xdiscord::testing;

namespace {

struct Grid {
  std::vector<double> theta, cos_t, sin2_t;

  explicit Grid(std::size_t n, double hi = std::numbers::pi / 2) {
    for (std::size_t i = 0; i < n; ++i) {
      const double t = hi * static_cast<double>(i) / static_cast<double>(n - 1);
      theta.push_back(t);
      cos_t.push_back(std::cos(t));
      sin2_t.push_back(std::sin(t) * std::sin(t));
    }
  }
  ThetaGrid view() const { return ThetaGrid{cos_t, sin2_t}; }
};

// Restores the dispatch choice on scope exit.
struct KernelGuard {
  KernelIsa saved = active_kernel();
  ~KernelGuard() { set_active_kernel(saved); }
};

}  // namespace

TEST_CASE("scalar kernel agrees with the closed form") {
  std::mt19937_64 rng(21);
  const Grid grid(37);
  std::vector<double> out(grid.theta.size());
  for (int trial = 0; trial < 200; ++trial) {
    const auto s = random_xstate(rng);
    kernels::conditional_entropy_grid_scalar(ThetaObjective::from_state(s), grid.cos_t.data(), grid.sin2_t.data(),
                                             out.size(), out.data());
    for (std::size_t i = 0; i < out.size(); ++i) {
      REQUIRE(std::abs(out[i] - conditional_entropy_measured(s, {grid.theta[i], 0.0})) <= 1e-13);
    }
  }
}

TEST_CASE("scalar kernel handles pure and classical states") {
  const Grid grid(9);
  std::vector<double> out(9);
  kernels::conditional_entropy_grid_scalar(ThetaObjective::from_state(bell_state()), grid.cos_t.data(),
                                           grid.sin2_t.data(), 9, out.data());
  for (double v : out) CHECK(std::abs(v) <= 1e-12);

  const auto product = canonicalize({1, 0, 0, 0, 0, 0, 0, 0});
  kernels::conditional_entropy_grid_scalar(ThetaObjective::from_state(product), grid.cos_t.data(),
                                           grid.sin2_t.data(), 9, out.data());
  for (double v : out) CHECK(std::isfinite(v));
}

#if defined(XDISCORD_HAVE_AVX2)
TEST_CASE("avx2 kernel is equivalent to the scalar reference") {
  if (!kernel_available(KernelIsa::Avx2)) {
    MESSAGE("AVX2 not supported on this CPU; skipping");
    return;
  }
  std::mt19937_64 rng(22);
  // Sizes cover full vectors and every tail length.
  for (std::size_t n : {1u, 2u, 3u, 4u, 5u, 7u, 8u, 63u, 2001u}) {
    const Grid grid(std::max<std::size_t>(n, 2), std::numbers::pi);
    const std::size_t m = n;
    std::vector<double> ref(m), vec(m);
    for (int trial = 0; trial < 200; ++trial) {
      const auto s = trial == 0 ? bell_state() : trial == 1 ? maximally_mixed() : random_xstate(rng);
      const auto obj = ThetaObjective::from_state(s, 0.7 * trial);
      kernels::conditional_entropy_grid_scalar(obj, grid.cos_t.data(), grid.sin2_t.data(), m, ref.data());
      kernels::conditional_entropy_grid_avx2(obj, grid.cos_t.data(), grid.sin2_t.data(), m, vec.data());
      for (std::size_t i = 0; i < m; ++i) REQUIRE(std::abs(ref[i] - vec[i]) <= 1e-13);
    }
  }
}

TEST_CASE("avx2 log covers extreme magnitudes") {
  if (!kernel_available(KernelIsa::Avx2)) return;
  // Eigenvalues spanning many decades: a nearly pure state with tiny b, c.
  const auto s = canonicalize({1e-300, 1e-200, 1e-15, 1.0 - 1e-15, 0.0, 0.0, 0.0, 0.0});
  const Grid grid(17, std::numbers::pi);
  std::vector<double> ref(17), vec(17);
  const auto obj = ThetaObjective::from_state(s);
  kernels::conditional_entropy_grid_scalar(obj, grid.cos_t.data(), grid.sin2_t.data(), 17, ref.data());
  kernels::conditional_entropy_grid_avx2(obj, grid.cos_t.data(), grid.sin2_t.data(), 17, vec.data());
  for (std::size_t i = 0; i < 17; ++i) CHECK(std::abs(ref[i] - vec[i]) <= 1e-13);
}

TEST_CASE("minimize_theta does not depend on the active kernel") {
  if (!kernel_available(KernelIsa::Avx2)) return;
  KernelGuard guard;
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const auto s = random_xstate(rng);
    REQUIRE(set_active_kernel(KernelIsa::Scalar));
    const auto scalar = minimize_theta(s);
    REQUIRE(set_active_kernel(KernelIsa::Avx2));
    const auto simd = minimize_theta(s);
    CHECK(std::abs(scalar.discord_exact - simd.discord_exact) <= 1e-12);
    CHECK(scalar.discord_ara == simd.discord_ara);
  }
}
#endif

TEST_CASE("dispatch") {
  CHECK(kernel_available(KernelIsa::Scalar));
  KernelGuard guard;
  CHECK(set_active_kernel(KernelIsa::Scalar));
  CHECK(active_kernel() == KernelIsa::Scalar);
  CHECK(to_string(KernelIsa::Avx2) == "avx2");
}
