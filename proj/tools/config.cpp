#include "config.hpp"

#include <cstdio>
#include <set>

#include "spinflux/error.hpp"

namespace spinflux::app {

namespace {

void check_keys(const json& obj, const std::string& where, const std::set<std::string>& allowed) {
    if (!obj.is_object()) throw config_error("'" + where + "' must be an object");
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (!allowed.count(it.key())) {
            const std::string path = where.empty() ? it.key() : where + "." + it.key();
            throw config_error("unknown config key '" + path + "'");
        }
    }
}

std::string join(const std::string& where, const std::string& key) {
    return where.empty() ? key : where + "." + key;
}

template <class T>
void read(const json& obj, const std::string& where, const std::string& key, T& out) {
    if (!obj.contains(key)) return;
    try {
        out = obj.at(key).get<T>();
    } catch (const json::exception&) {
        throw config_error("config key '" + join(where, key) + "' has the wrong type");
    }
}

void read_u64(const json& obj, const std::string& where, const std::string& key, std::uint64_t& out) {
    if (!obj.contains(key)) return;
    const auto& v = obj.at(key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
        throw config_error("config key '" + join(where, key) + "' must be a non-negative integer");
    out = v.get<std::uint64_t>();
}

void require(bool ok, const std::string& msg) {
    if (!ok) throw config_error(msg);
}

}  // namespace

RunConfig default_config() {
    RunConfig c;
    c.ensemble.M = 512;
    c.ensemble.master_seed = 1;
    c.ensemble.grid_points = 400;
    c.ensemble.broadening_frac = 0.1;
    return c;
}

RunConfig parse_config(const json& j) {
    RunConfig c = default_config();
    auto& inst = c.ensemble.instance;
    check_keys(j, "", {"lattice", "sigma", "coupling", "relaxation", "temperature", "temperatures", "flux",
                       "grids", "broadening_frac", "ensemble", "engine", "fit", "solver", "plane", "amplitude"});

    if (j.contains("lattice")) {
        const auto& l = j.at("lattice");
        check_keys(l, "lattice", {"nx", "ny", "bc_x", "bc_y", "a0"});
        read(l, "lattice", "nx", inst.nx);
        read(l, "lattice", "ny", inst.ny);
        read(l, "lattice", "a0", inst.a0);
        std::string bx = to_string(inst.bc_x), by = to_string(inst.bc_y);
        read(l, "lattice", "bc_x", bx);
        read(l, "lattice", "bc_y", by);
        inst.bc_x = parse_boundary(bx);
        inst.bc_y = parse_boundary(by);
    }
    read(j, "", "sigma", inst.sigma);
    if (j.contains("coupling")) {
        const auto& cp = j.at("coupling");
        check_keys(cp, "coupling", {"J"});
        read(cp, "coupling", "J", inst.J);
    }
    if (j.contains("relaxation")) {
        const auto& r = j.at("relaxation");
        check_keys(r, "relaxation", {"kind", "gamma_bar", "gamma_max", "lambda_max"});
        std::string kind = to_string(inst.relaxation.kind);
        read(r, "relaxation", "kind", kind);
        inst.relaxation.kind = parse_relaxation(kind);
        read(r, "relaxation", "gamma_bar", inst.relaxation.gamma_bar);
        read(r, "relaxation", "gamma_max", inst.relaxation.gamma_max);
        read(r, "relaxation", "lambda_max", inst.relaxation.lambda_max);
    }
    read(j, "", "temperature", inst.T);
    read(j, "", "temperatures", c.temperatures);
    if (j.contains("flux")) {
        const auto& f = j.at("flux");
        check_keys(f, "flux", {"model", "F0"});
        std::string model = "edge";
        read(f, "flux", "model", model);
        require(model == "edge", "flux.model: only 'edge' is supported from config files");
        read(f, "flux", "F0", inst.F0);
    }
    if (j.contains("grids")) {
        const auto& g = j.at("grids");
        check_keys(g, "grids", {"gamma_points", "omega"});
        read(g, "grids", "gamma_points", c.ensemble.grid_points);
        if (g.contains("omega")) {
            const auto& o = g.at("omega");
            if (o.is_array()) {
                read(g, "grids", "omega", c.omega.values);
            } else {
                check_keys(o, "grids.omega", {"min", "max", "points"});
                read(o, "grids.omega", "min", c.omega.lo);
                read(o, "grids.omega", "max", c.omega.hi);
                read(o, "grids.omega", "points", c.omega.points);
            }
        }
    }
    read(j, "", "broadening_frac", c.ensemble.broadening_frac);
    if (j.contains("ensemble")) {
        const auto& e = j.at("ensemble");
        check_keys(e, "ensemble", {"M", "master_seed"});
        read(e, "ensemble", "M", c.ensemble.M);
        read_u64(e, "ensemble", "master_seed", c.ensemble.master_seed);
    }
    read(j, "", "engine", c.engine);
    if (j.contains("fit")) {
        const auto& f = j.at("fit");
        check_keys(f, "fit", {"window", "decades", "lo", "hi"});
        std::string kind = "central";
        read(f, "fit", "window", kind);
        if (kind == "central") {
            double dec = 2.0;
            read(f, "fit", "decades", dec);
            c.ensemble.window = FitWindow::central(dec);
        } else if (kind == "explicit") {
            double lo = 0, hi = 0;
            read(f, "fit", "lo", lo);
            read(f, "fit", "hi", hi);
            c.ensemble.window = FitWindow::range(lo, hi);
        } else {
            throw config_error("fit.window must be 'central' or 'explicit'");
        }
    }
    if (j.contains("solver")) {
        std::string s;
        read(j, "", "solver", s);
        if (s == "automatic") inst.path = SolverPath::automatic;
        else if (s == "symmetrized") inst.path = SolverPath::symmetrized;
        else if (s == "general") inst.path = SolverPath::general;
        else throw config_error("solver must be automatic, symmetrized or general");
    }
    if (j.contains("plane")) {
        const auto& p = j.at("plane");
        check_keys(p, "plane", {"D", "gamma_bar", "average_interference"});
        read(p, "plane", "D", c.plane.D);
        read(p, "plane", "gamma_bar", c.plane.gamma_bar);
        read(p, "plane", "average_interference", c.plane.average_interference);
    }
    if (j.contains("amplitude")) {
        const auto& a = j.at("amplitude");
        check_keys(a, "amplitude", {"omega_ref", "T_ref"});
        read(a, "amplitude", "omega_ref", c.omega_ref);
        read(a, "amplitude", "T_ref", c.T_ref);
    }

    require(inst.nx >= 1 && inst.ny >= 1, "lattice.nx and lattice.ny must be positive");
    require(inst.a0 > 0, "lattice.a0 must be positive");
    require(inst.sigma >= 0 && inst.sigma <= 1, "sigma must lie in [0, 1]");
    require(inst.T > 0, "temperature must be positive");
    for (double t : c.temperatures) require(t > 0, "temperatures must be positive");
    require(c.ensemble.M >= 1, "ensemble.M must be at least 1");
    require(c.ensemble.grid_points >= 2, "grids.gamma_points must be at least 2");
    require(c.ensemble.broadening_frac > 0, "broadening_frac must be positive");
    require(c.omega.points >= 2, "grids.omega.points must be at least 2");
    require(c.engine == "exact" || c.engine == "ha" || c.engine == "plane",
            "engine must be exact, ha or plane");
    require(inst.relaxation.gamma_bar >= 0, "relaxation.gamma_bar must be non-negative");
    require(inst.relaxation.gamma_max > 0 && inst.relaxation.lambda_max > 0,
            "relaxation.gamma_max and relaxation.lambda_max must be positive");
    require(c.plane.D > 0 && c.plane.gamma_bar >= 0, "plane.D must be positive, plane.gamma_bar non-negative");
    require(c.omega_ref > 0 && c.T_ref > 0, "amplitude.omega_ref and amplitude.T_ref must be positive");
    return c;
}

json to_json(const RunConfig& c) {
    const auto& inst = c.ensemble.instance;
    json j;
    j["lattice"] = {{"nx", inst.nx}, {"ny", inst.ny}, {"bc_x", to_string(inst.bc_x)},
                    {"bc_y", to_string(inst.bc_y)}, {"a0", inst.a0}};
    j["sigma"] = inst.sigma;
    j["coupling"] = {{"J", inst.J}};
    j["relaxation"] = {{"kind", to_string(inst.relaxation.kind)},
                       {"gamma_bar", inst.relaxation.gamma_bar},
                       {"gamma_max", inst.relaxation.gamma_max},
                       {"lambda_max", inst.relaxation.lambda_max}};
    j["temperature"] = inst.T;
    j["temperatures"] = c.temperatures;
    j["flux"] = {{"model", "edge"}, {"F0", inst.F0}};
    json omega;
    if (!c.omega.values.empty()) omega = c.omega.values;
    else omega = {{"min", c.omega.lo}, {"max", c.omega.hi}, {"points", c.omega.points}};
    j["grids"] = {{"gamma_points", c.ensemble.grid_points}, {"omega", omega}};
    j["broadening_frac"] = c.ensemble.broadening_frac;
    j["ensemble"] = {{"M", c.ensemble.M}, {"master_seed", c.ensemble.master_seed}};
    j["engine"] = c.engine;
    if (c.ensemble.window.kind == FitWindow::Kind::central)
        j["fit"] = {{"window", "central"}, {"decades", c.ensemble.window.decades}};
    else
        j["fit"] = {{"window", "explicit"}, {"lo", c.ensemble.window.lo}, {"hi", c.ensemble.window.hi}};
    j["solver"] = to_string(inst.path);
    j["plane"] = {{"D", c.plane.D}, {"gamma_bar", c.plane.gamma_bar},
                  {"average_interference", c.plane.average_interference}};
    j["amplitude"] = {{"omega_ref", c.omega_ref}, {"T_ref", c.T_ref}};
    return j;
}

void apply_override(json& doc, const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos || eq == 0) throw config_error("override '" + assignment + "' is not key=value");
    const std::string path = assignment.substr(0, eq);
    const std::string text = assignment.substr(eq + 1);
    json value;
    try {
        value = json::parse(text);
    } catch (const json::exception&) {
        value = text;  // bare strings such as open or spin_1f
    }
    json* node = &doc;
    std::size_t start = 0;
    while (true) {
        const auto dot = path.find('.', start);
        const std::string key = path.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
        if (key.empty()) throw config_error("override '" + assignment + "' has an empty key");
        if (!node->is_object()) *node = json::object();
        if (dot == std::string::npos) {
            (*node)[key] = value;
            break;
        }
        node = &(*node)[key];
        start = dot + 1;
    }
}

std::string config_hash(const RunConfig& c) {
    const std::string text = to_json(c).dump();
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace spinflux::app
