#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "lethargy/scheme.hpp"

namespace lethargy {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerification = 2;

struct RunOutcome {
    nlohmann::json report;
    int exit_code = kExitOk;
    std::vector<std::string> files;
};

nlohmann::json load_config(const std::string& path);
// "a.b=value"; value is parsed as JSON when possible, else kept as a string.
void apply_override(nlohmann::json& config, const std::string& assignment);
// FNV-1a 64 of the canonical dump, hex.
std::string config_hash(const nlohmann::json& config);

// Element descriptors: {"fn": ...}, {"values": [...]}, {"sequence": ...},
// {"matrix": [[...]]}, {"identity": scale}, {"random": seed}, {"witness": {...}}, {"payload": ...}.
Element element_from_config(const ApproximationScheme& s, const nlohmann::json& j);

// Runs the task and builds the report; writes files when out_dir is non-empty.
RunOutcome run_experiment(const nlohmann::json& config, const std::string& out_dir = "");

// Re-executes the report's config and checks every recorded claim against
// the recomputed values. Throws IncompatibleVersion on a version mismatch.
int replay_report(const nlohmann::json& report, nlohmann::json* details = nullptr);

nlohmann::json list_schemes();

}  // namespace lethargy
