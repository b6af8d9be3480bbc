#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "gup/modification.hpp"

namespace gup {

/// JSON form of a modification:
/// {"kind": "kmm"|"cosh"|"quartic"|"poly", "beta": number,
///  "coefficients": [number, ...]}.
nlohmann::json modification_to_json(const Modification& mod);
Modification modification_from_json(const nlohmann::json& j);

/// Full run configuration shared by all commands; fields a command
/// does not use are carried along untouched so configs round-trip.
struct RunConfig {
    Modification modification = Modification::kmm(1.0);
    int lambda_grid = 64;
    std::string gamma_grid = "0.01:5:64";
    int states = 10000;
    int modes = 12;
    std::uint64_t seed = 42;
    std::string units = "nats";
    std::string output_path;
};

nlohmann::json run_config_to_json(const RunConfig& cfg);
RunConfig run_config_from_json(const nlohmann::json& j);
RunConfig load_run_config(const std::string& path);

/// Expand a "lo:hi:count" grid specification into `count` evenly
/// spaced values from lo to hi inclusive (a single value when
/// count = 1 and lo = hi).
std::vector<double> parse_gamma_grid(const std::string& spec);

}  // namespace gup
