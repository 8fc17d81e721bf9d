#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.hpp"
#include "spinflux/error.hpp"
#include "spinflux/io.hpp"

using namespace spinflux;
using namespace spinflux::app;

namespace {

struct Common {
    std::string config_path;
    std::vector<std::string> sets;
    long long seed = -1;
    RunOptions options;
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("-c,--config", c.config_path, "JSON config file");
    sub->add_option("--set", c.sets, "override a config key, e.g. --set ensemble.M=64")->take_all();
    sub->add_option("--seed", c.seed, "master seed (overrides ensemble.master_seed)");
    sub->add_option("-o,--out-dir", c.options.out_dir, "output directory");
    sub->add_option("-j,--threads", c.options.threads, "worker threads for ensembles")->check(CLI::PositiveNumber);
}

RunConfig load(const Common& c) {
    json doc = json::object();
    if (!c.config_path.empty()) {
        const std::string text = read_file(c.config_path);
        try {
            doc = json::parse(text);
        } catch (const json::exception& e) {
            throw config_error(c.config_path + ": " + e.what());
        }
    }
    for (const auto& s : c.sets) apply_override(doc, s);
    if (c.seed >= 0) apply_override(doc, "ensemble.master_seed=" + std::to_string(c.seed));
    return parse_config(doc);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spinflux: flux noise from disordered interacting spin lattices"};
    app.require_subcommand(1);
    Common common;
    bool export_matrices = false;
    std::string fit_in, fit_x = "gamma", fit_y = "rho_phi";

    auto* run = app.add_subcommand("run", "single disorder instance: spectrum, density, noise, fit");
    add_common(run, common);
    run->add_flag("--export-matrices", export_matrices, "also write J, D, chi0 and A");
    auto* ensemble = app.add_subcommand("ensemble", "M-instance ensemble average");
    add_common(ensemble, common);
    auto* sweep = app.add_subcommand("sweep", "ensemble exponents and amplitude over the temperature list");
    add_common(sweep, common);
    auto* ha = app.add_subcommand("ha", "homogeneous approximation");
    add_common(ha, common);
    auto* plane = app.add_subcommand("plane", "infinite-plane closed form");
    add_common(plane, common);
    auto* fit = app.add_subcommand("fit", "log-log power-law fit of two CSV columns");
    add_common(fit, common);
    fit->add_option("--in", fit_in, "input CSV")->required();
    fit->add_option("--x", fit_x, "abscissa column");
    fit->add_option("--y", fit_y, "ordinate column");
    auto* validate = app.add_subcommand("validate", "oracle checks; exit 1 on any failure");
    add_common(validate, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        const RunConfig cfg = load(common);
        RunOptions o = common.options;
        o.export_matrices = export_matrices;
        if (run->parsed()) return cmd_run(cfg, o);
        if (ensemble->parsed()) return cmd_ensemble(cfg, o);
        if (sweep->parsed()) return cmd_sweep(cfg, o);
        if (ha->parsed()) return cmd_ha(cfg, o);
        if (plane->parsed()) return cmd_plane(cfg, o);
        if (fit->parsed()) return cmd_fit(cfg, o, fit_in, fit_x, fit_y);
        if (validate->parsed()) return cmd_validate(cfg, o);
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return static_cast<int>(e.kind());
    } catch (const std::exception& e) {
        std::fprintf(stderr, "unexpected error: %s\n", e.what());
        return 7;
    }
    return 7;
}
