#include <cmath>
#include <limits>

#include "xdiscord/error.hpp"
#include "xdiscord/io.hpp"

namespace xdiscord {
namespace {

constexpr int kCheckpointVersion = 1;

json edge(double x) { return std::isinf(x) ? json(nullptr) : json(x); }

double edge_from(const json& j, double unbounded) { return j.is_null() ? unbounded : j.get<double>(); }

}  // namespace

json to_json(const SweepConfig& c) {
  return json{{"mode", to_string(c.mode)},
              {"coarse_steps", c.coarse_steps},
              {"refine_levels", c.refine_levels},
              {"refine_top_k", c.refine_top_k},
              {"refine_shrink", c.refine_shrink},
              {"refine_steps", c.refine_steps},
              {"seed", c.seed},
              {"workers", c.workers}};
}

SweepConfig sweep_config_from_json(const json& j) {
  SweepConfig c;
  c.mode = parse_sweep_mode(j.at("mode").get<std::string>());
  c.coarse_steps = j.at("coarse_steps").get<int>();
  c.refine_levels = j.at("refine_levels").get<int>();
  c.refine_top_k = j.at("refine_top_k").get<int>();
  c.refine_shrink = j.at("refine_shrink").get<double>();
  c.refine_steps = j.at("refine_steps").get<int>();
  c.seed = j.at("seed").get<std::uint64_t>();
  c.workers = j.at("workers").get<int>();
  return c;
}

json to_json(const SweepCell& cell) {
  return json{{"a", cell.a},
              {"b", cell.b},
              {"c", cell.c},
              {"d", cell.d},
              {"s", cell.s},
              {"gap", cell.gap},
              {"theta_opt", cell.theta_opt},
              {"unit", cell.unit},
              {"half_width", cell.half_width},
              {"level", cell.level}};
}

SweepCell sweep_cell_from_json(const json& j) {
  SweepCell cell;
  cell.a = j.at("a").get<double>();
  cell.b = j.at("b").get<double>();
  cell.c = j.at("c").get<double>();
  cell.d = j.at("d").get<double>();
  cell.s = j.at("s").get<double>();
  cell.gap = j.at("gap").get<double>();
  cell.theta_opt = j.at("theta_opt").get<double>();
  cell.unit = j.at("unit").get<std::array<double, 4>>();
  cell.half_width = j.at("half_width").get<double>();
  cell.level = j.at("level").get<int>();
  return cell;
}

json to_json(const SweepReport& r) {
  json histogram = json::array();
  for (const auto& b : r.histogram) histogram.push_back({{"lo", edge(b.lo)}, {"hi", edge(b.hi)}, {"count", b.count}});
  json levels = json::array();
  for (const auto& l : r.levels) {
    levels.push_back({{"level", l.level},
                      {"cells", l.cells},
                      {"level_max_gap", l.level_max_gap},
                      {"running_max_gap", l.running_max_gap}});
  }
  json retained = json::array();
  for (const auto& c : r.retained) retained.push_back(to_json(c));
  json frontier = json::array();
  for (const auto& c : r.frontier) frontier.push_back(to_json(c));

  return json{{"config", to_json(r.config)},
              {"cells_evaluated", r.cells_evaluated},
              {"max_gap", r.max_gap},
              {"witness", to_json(r.witness)},
              {"histogram", histogram},
              {"levels", levels},
              {"retained", retained},
              {"frontier", frontier},
              {"wall_time", r.wall_time}};
}

SweepReport sweep_report_from_json(const json& j) {
  SweepReport r;
  r.config = sweep_config_from_json(j.at("config"));
  r.cells_evaluated = j.at("cells_evaluated").get<std::size_t>();
  r.max_gap = j.at("max_gap").get<double>();
  r.witness = sweep_cell_from_json(j.at("witness"));
  const double inf = std::numeric_limits<double>::infinity();
  for (const auto& b : j.at("histogram")) {
    r.histogram.push_back({edge_from(b.at("lo"), -inf), edge_from(b.at("hi"), inf), b.at("count").get<std::size_t>()});
  }
  for (const auto& l : j.at("levels")) {
    r.levels.push_back({l.at("level").get<int>(), l.at("cells").get<std::size_t>(),
                        l.at("level_max_gap").get<double>(), l.at("running_max_gap").get<double>()});
  }
  for (const auto& c : j.at("retained")) r.retained.push_back(sweep_cell_from_json(c));
  for (const auto& c : j.at("frontier")) r.frontier.push_back(sweep_cell_from_json(c));
  r.wall_time = j.value("wall_time", 0.0);
  return r;
}

void save_checkpoint(const std::string& path, const SweepReport& report) {
  json j = to_json(report);
  j["checkpoint_version"] = kCheckpointVersion;
  atomic_write(path, j.dump() + "\n");
}

SweepReport load_checkpoint(const std::string& path) {
  try {
    const json j = json::parse(read_file(path));
    if (j.value("checkpoint_version", 0) != kCheckpointVersion) {
      throw Error(ErrorKind::Parse, "unsupported checkpoint version in " + path);
    }
    return sweep_report_from_json(j);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, path + ": " + e.what());
  }
}

std::string cells_csv(const std::vector<SweepCell>& cells) {
  std::string out = "a,b,c,d,s,gap,theta_opt\n";
  for (const auto& c : cells) {
    out += format_number(c.a) + ',' + format_number(c.b) + ',' + format_number(c.c) + ',' + format_number(c.d) +
           ',' + format_number(c.s) + ',' + format_number(c.gap) + ',' + format_number(c.theta_opt) + '\n';
  }
  return out;
}

}  // namespace xdiscord
