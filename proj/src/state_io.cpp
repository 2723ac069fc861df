#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "xdiscord/error.hpp"
#include "xdiscord/io.hpp"

namespace xdiscord {
namespace {

double number_field(const json& j, const char* key, bool required, double fallback = 0.0) {
  const auto it = j.find(key);
  if (it == j.end()) {
    if (required) throw Error(ErrorKind::Parse, std::string("missing key \"") + key + "\"");
    return fallback;
  }
  if (!it->is_number()) throw Error(ErrorKind::Parse, std::string("key \"") + key + "\" is not a number");
  return it->get<double>();
}

}  // namespace

XStateRaw state_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorKind::Parse, "state must be a JSON object");
  XStateRaw raw;
  raw.a = number_field(j, "a", true);
  raw.b = number_field(j, "b", true);
  raw.c = number_field(j, "c", true);
  raw.d = number_field(j, "d", true);
  raw.alpha_mod = number_field(j, "alpha", false);
  raw.beta_mod = number_field(j, "beta", false);
  raw.alpha_phase = number_field(j, "alpha_phase", false);
  raw.beta_phase = number_field(j, "beta_phase", false);
  return raw;
}

json state_to_json(const XState& s) {
  return json{{"a", s.a()}, {"b", s.b()}, {"c", s.c()}, {"d", s.d()}, {"alpha", s.alpha()}, {"beta", s.beta()}};
}

json state_to_json(const XStateRaw& raw) {
  return json{{"a", raw.a},
              {"b", raw.b},
              {"c", raw.c},
              {"d", raw.d},
              {"alpha", raw.alpha_mod},
              {"beta", raw.beta_mod},
              {"alpha_phase", raw.alpha_phase},
              {"beta_phase", raw.beta_phase}};
}

json to_json(const DiscordResult& r) {
  return json{{"discord_exact", r.discord_exact},
              {"theta_opt", r.theta_opt},
              {"d_sigma_x", r.d_sigma_x},
              {"d_sigma_z", r.d_sigma_z},
              {"discord_ara", r.discord_ara},
              {"gap", r.gap},
              {"ara_branch", r.ara_branch == AraBranch::SigmaZ ? "sigma_z" : "sigma_x"},
              {"evaluations", r.evaluations}};
}

std::string format_number(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

void atomic_write(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::Io, "cannot open " + tmp.string() + " for writing");
    out << contents;
    out.flush();
    if (!out) throw Error(ErrorKind::Io, "write to " + tmp.string() + " failed");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error(ErrorKind::Io, "cannot rename onto " + path);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace xdiscord
