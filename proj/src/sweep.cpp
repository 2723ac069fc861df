#include "xdiscord/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "xdiscord/error.hpp"
#include "xdiscord/io.hpp"

namespace xdiscord {
namespace {

constexpr double kFeasibilityTolerance = 1e-12;

int dimensions(SweepMode mode) { return mode == SweepMode::General ? 4 : 3; }

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Evaluates gaps for cells[begin, end) in place. Each cell is independent, so
// any partition of the index range produces the same values.
void evaluate_range(std::vector<SweepCell>& cells, std::size_t begin, std::size_t end) {
  for (std::size_t i = begin; i < end; ++i) {
    auto& cell = cells[i];
    const auto r = gap_at(cell.a, cell.b, cell.c, cell.d, cell.s);
    cell.gap = r.gap;
    cell.theta_opt = r.theta_opt;
  }
}

void evaluate_parallel(std::vector<SweepCell>& cells, int workers) {
  const std::size_t n = cells.size();
  const std::size_t w = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(workers, 1)), 1, std::max<std::size_t>(n, 1));
  if (w == 1) {
    evaluate_range(cells, 0, n);
    return;
  }
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(w);
  threads.reserve(w);
  for (std::size_t k = 0; k < w; ++k) {
    const std::size_t begin = n * k / w;
    const std::size_t end = n * (k + 1) / w;
    threads.emplace_back([&cells, &errors, k, begin, end] {
      try {
        evaluate_range(cells, begin, end);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::vector<SweepCell> level_zero(const SweepConfig& config) {
  const int dims = dimensions(config.mode);
  const int n = config.coarse_steps;
  const double spacing = 1.0 / (n - 1);
  std::size_t total = 1;
  for (int k = 0; k < dims; ++k) total *= static_cast<std::size_t>(n);

  std::vector<SweepCell> cells;
  cells.reserve(total);
  for (std::size_t index = 0; index < total; ++index) {
    std::array<double, 4> unit{};
    std::size_t rest = index;
    for (int k = dims - 1; k >= 0; --k) {
      unit[k] = static_cast<double>(rest % n) * spacing;
      rest /= n;
    }
    if (config.seed != 0) {
      std::mt19937_64 rng(splitmix64(config.seed ^ splitmix64(index)));
      std::uniform_real_distribution<double> offset(-0.5 * spacing, 0.5 * spacing);
      for (int k = 0; k < dims; ++k) unit[k] = std::clamp(unit[k] + offset(rng), 0.0, 1.0);
    }
    SweepCell cell = cell_from_unit(config.mode, unit);
    cell.half_width = spacing;
    cell.level = 0;
    cells.push_back(cell);
  }
  return cells;
}

std::vector<SweepCell> refine(const SweepConfig& config, const std::vector<SweepCell>& frontier, int level) {
  const int dims = dimensions(config.mode);
  const int m = config.refine_steps;
  std::size_t per_box = 1;
  for (int k = 0; k < dims; ++k) per_box *= static_cast<std::size_t>(m);

  // Boxes around neighbouring parents overlap; drop repeated grid points.
  std::set<std::array<long long, 4>> seen;
  std::vector<SweepCell> cells;
  for (const auto& parent : frontier) {
    std::array<double, 4> lo{}, hi{};
    for (int k = 0; k < dims; ++k) {
      lo[k] = std::clamp(parent.unit[k] - parent.half_width, 0.0, 1.0);
      hi[k] = std::clamp(parent.unit[k] + parent.half_width, 0.0, 1.0);
    }
    for (std::size_t index = 0; index < per_box; ++index) {
      std::array<double, 4> unit{};
      std::size_t rest = index;
      for (int k = dims - 1; k >= 0; --k) {
        const auto step = static_cast<double>(rest % m);
        rest /= m;
        unit[k] = lo[k] + (hi[k] - lo[k]) * step / (m - 1);
      }
      std::array<long long, 4> key{};
      for (int k = 0; k < 4; ++k) key[k] = std::llround(unit[k] * 1e12);
      if (!seen.insert(key).second) continue;

      SweepCell cell = cell_from_unit(config.mode, unit);
      cell.half_width = parent.half_width * config.refine_shrink;
      cell.level = level;
      cells.push_back(cell);
    }
  }
  return cells;
}

std::vector<SweepCell> top_cells(const std::vector<SweepCell>& cells, int k) {
  std::vector<std::size_t> order(cells.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  const std::size_t keep = std::min(order.size(), static_cast<std::size_t>(k));
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(keep), order.end(),
                    [&cells](std::size_t x, std::size_t y) {
                      if (cells[x].gap != cells[y].gap) return cells[x].gap > cells[y].gap;
                      return x < y;
                    });
  std::vector<SweepCell> out;
  out.reserve(keep);
  for (std::size_t i = 0; i < keep; ++i) out.push_back(cells[order[i]]);
  return out;
}

void absorb(SweepReport& report, const std::vector<SweepCell>& cells, int level) {
  LevelSummary summary;
  summary.level = level;
  summary.cells = cells.size();
  summary.level_max_gap = cells.empty() ? 0.0 : cells.front().gap;

  for (const auto& cell : cells) {
    summary.level_max_gap = std::max(summary.level_max_gap, cell.gap);
    for (auto& bucket : report.histogram) {
      if (cell.gap >= bucket.lo && cell.gap < bucket.hi) {
        ++bucket.count;
        break;
      }
    }
    if (cell.gap > kRetainGap) report.retained.push_back(cell);
    if (report.cells_evaluated == 0 || cell.gap > report.max_gap) {
      report.max_gap = cell.gap;
      report.witness = cell;
    }
    ++report.cells_evaluated;
  }
  summary.running_max_gap = report.max_gap;
  report.levels.push_back(summary);
}

}  // namespace

std::string to_string(SweepMode mode) { return mode == SweepMode::General ? "general" : "symmetric"; }

SweepMode parse_sweep_mode(const std::string& text) {
  if (text == "general") return SweepMode::General;
  if (text == "symmetric") return SweepMode::Symmetric;
  throw Error(ErrorKind::InvalidConfig, "unknown sweep mode '" + text + "'");
}

void SweepConfig::validate() const {
  auto fail = [](const std::string& what) { throw Error(ErrorKind::InvalidConfig, what); };
  if (coarse_steps < 4) fail("coarse_steps must be >= 4");
  if (refine_levels < 0) fail("refine_levels must be >= 0");
  if (refine_top_k < 1) fail("refine_top_k must be >= 1");
  if (!(refine_shrink > 0.0 && refine_shrink < 1.0)) fail("refine_shrink must lie in (0, 1)");
  if (refine_steps < 2) fail("refine_steps must be >= 2");
  if (workers < 1) fail("workers must be >= 1");
}

bool SweepConfig::same_search(const SweepConfig& other) const noexcept {
  return mode == other.mode && coarse_steps == other.coarse_steps && refine_levels == other.refine_levels &&
         refine_top_k == other.refine_top_k && refine_shrink == other.refine_shrink &&
         refine_steps == other.refine_steps && seed == other.seed;
}

GapResult gap_at(double a, double b, double c, double d, double s) {
  if (!(s >= 0.0)) throw Error(ErrorKind::InfeasibleS, "s must be nonnegative");
  const double a_part = std::sqrt(std::max(a, 0.0) * std::max(d, 0.0));
  const double b_part = std::sqrt(std::max(b, 0.0) * std::max(c, 0.0));
  if (s > a_part + b_part + kFeasibilityTolerance) {
    std::ostringstream os;
    os.precision(17);
    os << "s = " << s << " exceeds sqrt(ad) + sqrt(bc) = " << a_part + b_part;
    throw Error(ErrorKind::InfeasibleS, os.str());
  }
  const double alpha = std::min(s, a_part);
  const double beta = std::min(s - alpha, b_part);
  const auto r = minimize_theta(XState::from_canonical(a, b, c, d, alpha, beta));
  return GapResult{r.gap, r.theta_opt};
}

SweepCell cell_from_unit(SweepMode mode, const std::array<double, 4>& unit) {
  SweepCell cell;
  cell.unit = unit;
  const double ua = unit[0];
  const double v = unit[1];
  cell.a = ua * ua / (2.0 * (1.0 + v));
  cell.b = cell.a * v;
  double f = 0.0;
  if (mode == SweepMode::General) {
    const double uc = unit[2];
    cell.c = (1.0 - cell.a - cell.b) * uc * uc;
    f = unit[3];
  } else {
    cell.c = cell.b;
    cell.unit[3] = 0.0;
    f = unit[2];
  }
  cell.d = std::max(0.0, 1.0 - cell.a - cell.b - cell.c);
  cell.s = f * (std::sqrt(cell.a * cell.d) + std::sqrt(cell.b * cell.c));
  return cell;
}

std::vector<HistogramBucket> empty_histogram() {
  const double inf = std::numeric_limits<double>::infinity();
  const double edges[] = {-inf, 1e-12, 1e-6, 1e-5, 1e-4, 5e-4, 1e-3, 1.5e-3, 2.1e-3, inf};
  std::vector<HistogramBucket> out;
  for (std::size_t i = 0; i + 1 < std::size(edges); ++i) out.push_back({edges[i], edges[i + 1], 0});
  return out;
}

SweepReport run_sweep(const SweepConfig& config, const SweepOptions& options) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();

  SweepReport report;
  report.config = config;
  report.histogram = empty_histogram();

  int next_level = 0;
  if (options.checkpoint_path && std::filesystem::exists(*options.checkpoint_path)) {
    SweepReport saved = load_checkpoint(*options.checkpoint_path);
    if (!saved.config.same_search(config)) {
      throw Error(ErrorKind::InvalidConfig,
                  "checkpoint " + *options.checkpoint_path + " was written for a different sweep configuration");
    }
    report = std::move(saved);
    report.config = config;
    next_level = static_cast<int>(report.levels.size());
  }

  for (int level = next_level; level <= config.refine_levels; ++level) {
    auto cells = level == 0 ? level_zero(config) : refine(config, report.frontier, level);
    evaluate_parallel(cells, config.workers);
    absorb(report, cells, level);
    report.frontier = top_cells(cells, config.refine_top_k);

    if (options.checkpoint_path) save_checkpoint(*options.checkpoint_path, report);
    if (options.on_level) options.on_level(report.levels.back());
  }

  report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<Fixture> published_fixtures() {
  return {
      Fixture{"general", 0.027180, 0.000224, 0.027327, 0.945269, 0.141651, 0.002047, 0.607573},
      Fixture{"symmetric", 0.021726, 0.010288, 0.010288, 0.957698, 0.128057, 0.000573, 0.477918},
  };
}

bool VerificationReport::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const FixtureCheck& c) { return c.passed; });
}

void VerificationReport::require_passed() const {
  if (passed()) return;
  std::ostringstream os;
  os.precision(9);
  for (const auto& c : checks) {
    if (c.passed) continue;
    os << c.fixture.name << ": gap " << c.measured_gap << " (expected " << c.fixture.expected_gap << "), theta "
       << c.measured_theta << " (expected " << c.fixture.expected_theta << "); ";
  }
  throw Error(ErrorKind::VerificationFailed, os.str());
}

VerificationReport verify_counterexamples(const std::vector<Fixture>& fixtures, double gap_tolerance,
                                          double theta_tolerance) {
  VerificationReport report;
  report.gap_tolerance = gap_tolerance;
  report.theta_tolerance = theta_tolerance;
  for (const auto& fixture : fixtures) {
    FixtureCheck check{fixture, std::nan(""), std::nan(""), false};
    try {
      const auto r = gap_at(fixture.a, fixture.b, fixture.c, fixture.d, fixture.s);
      check.measured_gap = r.gap;
      check.measured_theta = r.theta_opt;
      check.passed = std::abs(r.gap - fixture.expected_gap) <= gap_tolerance &&
                     std::abs(r.theta_opt - fixture.expected_theta) <= theta_tolerance;
    } catch (const Error&) {
      check.passed = false;
    }
    report.checks.push_back(check);
  }
  return report;
}

}  // namespace xdiscord
