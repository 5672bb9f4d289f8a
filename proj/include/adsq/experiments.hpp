#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace adsq {

using json = nlohmann::json;

inline constexpr const char* kVersion = "0.1.0";

std::vector<std::string> preset_names();

// Fully resolved config for a named preset; throws on unknown name.
json preset_config(const std::string& name);

struct RunOutput {
    std::vector<std::filesystem::path> files;
    json metadata;
};

// Executes one experiment config: writes CSV(s), a JSON metadata sidecar and
// optional SVG renders into outdir. Unknown/invalid keys raise with the key name.
RunOutput run_experiment(json config, const std::filesystem::path& outdir, int threads = 1);

// Invariant suite; prints one line per check, returns the number of failures.
int run_validation(bool quick);

}  // namespace adsq
