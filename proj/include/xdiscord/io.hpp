#pragma once

// JSON and CSV encodings shared by the CLI, sweep reports and checkpoints.
//
// State JSON: {"a","b","c","d","alpha","beta"} in canonical form, or with
// "alpha_phase" and "beta_phase" added for the raw form (alpha and beta are
// then moduli). Numbers are written with round-trip precision.

#include <string>
#include <vector>

#include <json.hpp>

#include "xdiscord/discord.hpp"
#include "xdiscord/sweep.hpp"
#include "xdiscord/xstate.hpp"

namespace xdiscord {

using json = nlohmann::json;

/// Throws Error{Parse} for missing or non-numeric keys.
XStateRaw state_from_json(const json& j);
json state_to_json(const XState& s);
json state_to_json(const XStateRaw& raw);

json to_json(const DiscordResult& r);

json to_json(const SweepConfig& config);
SweepConfig sweep_config_from_json(const json& j);
json to_json(const SweepCell& cell);
SweepCell sweep_cell_from_json(const json& j);
json to_json(const SweepReport& report);
SweepReport sweep_report_from_json(const json& j);

void save_checkpoint(const std::string& path, const SweepReport& report);
SweepReport load_checkpoint(const std::string& path);

/// 12 significant digits, as used by every CSV output.
std::string format_number(double value);

/// a,b,c,d,s,gap,theta_opt with a header row and LF line endings.
std::string cells_csv(const std::vector<SweepCell>& cells);

/// Writes to a sibling temporary file, then renames over `path`.
/// Throws Error{Io}.
void atomic_write(const std::string& path, const std::string& contents);

std::string read_file(const std::string& path);

}  // namespace xdiscord
