#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "spinflux/analysis.hpp"
#include "spinflux/homogeneous.hpp"

namespace spinflux::app {

using nlohmann::json;

struct OmegaGrid {
    std::vector<double> values;  // explicit list wins over the range
    double lo = 0.0;             // 0: derived from the spectrum
    double hi = 0.0;
    int points = 100;
};

struct PlaneConfig {
    double D = 1.0;
    double gamma_bar = 1e-6;
    bool average_interference = true;
};

struct RunConfig {
    EnsembleConfig ensemble;  // instance, M, seed, grid, broadening, window
    std::vector<double> temperatures{6.0, 12.0, 24.0};
    OmegaGrid omega;
    std::string engine = "exact";
    PlaneConfig plane;
    double omega_ref = 0.1;
    double T_ref = 10.0;
};

RunConfig default_config();

// Strict parse: unknown keys and wrong types are config errors naming the key.
RunConfig parse_config(const json& j);

// Canonical JSON with every default filled in.
json to_json(const RunConfig& c);

// Applies "a.b.c=value" overrides to a raw config document.
void apply_override(json& doc, const std::string& assignment);

// FNV-1a over the canonical dump.
std::string config_hash(const RunConfig& c);

}  // namespace spinflux::app
