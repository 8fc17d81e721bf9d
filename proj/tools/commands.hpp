#pragma once

#include <string>
#include <vector>

#include "config.hpp"

namespace spinflux::app {

struct RunOptions {
    std::string out_dir = "out";
    int threads = 1;
    bool export_matrices = false;
};

struct CheckResult {
    std::string name;
    double value = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string detail;
};

int cmd_run(const RunConfig& c, const RunOptions& o);
int cmd_ensemble(const RunConfig& c, const RunOptions& o);
int cmd_sweep(const RunConfig& c, const RunOptions& o);
int cmd_ha(const RunConfig& c, const RunOptions& o);
int cmd_plane(const RunConfig& c, const RunOptions& o);
int cmd_fit(const RunConfig& c, const RunOptions& o, const std::string& csv_path, const std::string& xcol,
            const std::string& ycol);
int cmd_validate(const RunConfig& c, const RunOptions& o);

std::vector<CheckResult> validation_checks(const RunConfig& c);

}  // namespace spinflux::app
