#include <filesystem>

#include "commands.hpp"
#include "config.hpp"
#include "doctest.h"
#include "spinflux/error.hpp"
#include "spinflux/io.hpp"

using namespace spinflux;
using namespace spinflux::app;

namespace {

ErrorKind kind_of(const json& j) {
    try {
        parse_config(j);
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected a config error");
    return ErrorKind::config;
}

std::string message_of(const json& j) {
    try {
        parse_config(j);
    } catch (const Error& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("defaults") {
    const auto c = parse_config(json::object());
    CHECK(c.ensemble.instance.nx == 20);
    CHECK(c.ensemble.instance.ny == 20);
    CHECK(c.ensemble.instance.bc_x == Boundary::open);
    CHECK(c.ensemble.instance.bc_y == Boundary::periodic);
    CHECK(c.ensemble.broadening_frac == 0.1);
    CHECK(c.ensemble.instance.relaxation.lambda_max == 20.0);
    CHECK(c.ensemble.M == 512);
}

TEST_CASE("unknown keys are named") {
    CHECK(message_of(json{{"gama", 1}}).find("'gama'") != std::string::npos);
    CHECK(message_of(json{{"relaxation", {{"gama", 1}}}}).find("'relaxation.gama'") != std::string::npos);
    CHECK(kind_of(json{{"gama", 1}}) == ErrorKind::config);
    CHECK(message_of(json{{"sigma", "high"}}).find("'sigma'") != std::string::npos);
    CHECK(kind_of(json{{"sigma", 1.5}}) == ErrorKind::config);
}

TEST_CASE("overrides and hash") {
    json doc = json::object();
    apply_override(doc, "relaxation.kind=spin_1f");
    apply_override(doc, "ensemble.M=64");
    apply_override(doc, "coupling.J=-1");
    const auto c = parse_config(doc);
    CHECK(c.ensemble.instance.relaxation.kind == RelaxationKind::spin_1f);
    CHECK(c.ensemble.M == 64);
    CHECK(c.ensemble.instance.J == -1.0);
    CHECK_THROWS(apply_override(doc, "novalue"));

    const auto base = default_config();
    CHECK(config_hash(base) == config_hash(parse_config(to_json(base))));
    auto changed = base;
    changed.ensemble.instance.T = 12.5;
    CHECK(config_hash(changed) != config_hash(base));
}

TEST_CASE("run writes csv and manifest atomically") {
    const auto dir = std::filesystem::temp_directory_path() / "spinflux_cli_test";
    std::filesystem::remove_all(dir);
    json doc = {{"lattice", {{"nx", 8}, {"ny", 8}}}};
    RunOptions o;
    o.out_dir = dir.string();
    CHECK(cmd_run(parse_config(doc), o) == 0);
    for (const char* f : {"rho.csv", "noise.csv", "fit.csv", "spectrum.csv", "mask.txt", "manifest.json"})
        CHECK(std::filesystem::exists(dir / f));
    for (const auto& e : std::filesystem::directory_iterator(dir)) CHECK(e.path().extension() != ".partial");
    const auto manifest = json::parse(read_file((dir / "manifest.json").string()));
    CHECK(manifest.contains("config_hash"));
    CHECK(manifest["seeds"]["master_seed"] == 1);
    CHECK(read_file((dir / "rho.csv").string()).rfind("gamma,rho_phi,source\n", 0) == 0);
    std::filesystem::remove_all(dir);
}

TEST_CASE("validate passes on the periodic uniform lattice") {
    json doc = {{"lattice", {{"bc_x", "periodic"}}},
                {"relaxation", {{"kind", "uniform"}, {"gamma_bar", 0.5}}}};
    for (const auto& ch : validation_checks(parse_config(doc))) {
        INFO(ch.name);
        CHECK(ch.pass);
    }
}
