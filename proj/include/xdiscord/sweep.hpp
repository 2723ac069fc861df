#pragma once

// Worst-case search for the gap between the two-candidate analytical
// discord formula and the exact discord.
//
// Only the combination s = alpha + beta enters the gap, and qubit flips map
// any X state into the region a + b <= c + d, a >= b. The search runs in a
// unit cube of coordinates that covers that region exactly:
//
//   general  (u_a, v, u_c, f):  a = u_a^2 / (2 (1 + v)),  b = a v,
//                               c = (1 - a - b) u_c^2,     d = 1 - a - b - c
//   symmetric (u_a, v, f):      a = u_a^2 / (2 (1 + v)),  b = c = a v,
//                               d = 1 - a - 2 b
//   both:                       s = f (sqrt(a d) + sqrt(b c))
//
// The squares put more grid points near small a and c, where the gap lives.
// Level 0 is a uniform grid in the cube; every later level re-grids a box
// around each of the refine_top_k best cells of the previous level.

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "xdiscord/discord.hpp"

namespace xdiscord {

enum class SweepMode { General, Symmetric };

std::string to_string(SweepMode mode);
SweepMode parse_sweep_mode(const std::string& text);

struct SweepConfig {
  SweepMode mode = SweepMode::General;
  int coarse_steps = 12;   ///< level-0 points per axis
  int refine_levels = 4;
  int refine_top_k = 32;
  double refine_shrink = 0.5;  ///< box half-width factor per level
  int refine_steps = 5;        ///< points per axis inside a refinement box
  std::uint64_t seed = 0;      ///< nonzero jitters the level-0 grid
  int workers = 1;

  /// Throws Error{InvalidConfig}.
  void validate() const;

  /// Equal in every field that affects results (workers excluded).
  bool same_search(const SweepConfig& other) const noexcept;
};

struct SweepCell {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
  double s = 0.0;  ///< alpha + beta
  double gap = 0.0;
  double theta_opt = 0.0;

  std::array<double, 4> unit{};  ///< cube coordinates (last unused in symmetric mode)
  double half_width = 0.0;       ///< refinement box half-width in the cube
  int level = 0;
};

struct GapResult {
  double gap = 0.0;
  double theta_opt = 0.0;
};

/// Gap of the state with diagonal (a, b, c, d) and alpha + beta = s.
/// Throws Error{InfeasibleS} if s > sqrt(a d) + sqrt(b c) + 1e-12.
GapResult gap_at(double a, double b, double c, double d, double s);

/// Maps cube coordinates to a cell (gap not evaluated).
SweepCell cell_from_unit(SweepMode mode, const std::array<double, 4>& unit);

struct HistogramBucket {
  double lo = 0.0;
  double hi = 0.0;
  std::size_t count = 0;
};

struct LevelSummary {
  int level = 0;
  std::size_t cells = 0;
  double level_max_gap = 0.0;
  double running_max_gap = 0.0;
};

struct SweepReport {
  SweepConfig config;
  std::size_t cells_evaluated = 0;
  double max_gap = 0.0;
  SweepCell witness;
  std::vector<HistogramBucket> histogram;
  std::vector<LevelSummary> levels;
  std::vector<SweepCell> retained;  ///< cells with gap above kRetainGap
  std::vector<SweepCell> frontier;  ///< top cells of the last completed level
  double wall_time = 0.0;
};

inline constexpr double kRetainGap = 1e-12;

/// Gap histogram edges (nats); the first bucket is open below, the last open above.
std::vector<HistogramBucket> empty_histogram();

struct SweepOptions {
  /// Checkpoint written after each level; an existing checkpoint for the same
  /// search is resumed from its last completed level.
  std::optional<std::string> checkpoint_path;
  std::function<void(const LevelSummary&)> on_level;
};

SweepReport run_sweep(const SweepConfig& config, const SweepOptions& options = {});

/// Published worst-case state for one of the two searches.
struct Fixture {
  std::string name;
  double a, b, c, d, s;
  double expected_gap;
  double expected_theta;
};

std::vector<Fixture> published_fixtures();

struct FixtureCheck {
  Fixture fixture;
  double measured_gap = 0.0;
  double measured_theta = 0.0;
  bool passed = false;
};

struct VerificationReport {
  double gap_tolerance = 5e-5;
  double theta_tolerance = 5e-3;
  std::vector<FixtureCheck> checks;

  bool passed() const noexcept;
  /// Throws Error{VerificationFailed} listing measured values.
  void require_passed() const;
};

VerificationReport verify_counterexamples(const std::vector<Fixture>& fixtures = published_fixtures(),
                                          double gap_tolerance = 5e-5, double theta_tolerance = 5e-3);

}  // namespace xdiscord
