#include "commands.hpp"

#include <Eigen/Core>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "spinflux/spinflux.hpp"

namespace spinflux::app {

namespace {

using Clock = std::chrono::steady_clock;

std::string path_in(const RunOptions& o, const std::string& name) {
    return (std::filesystem::path(o.out_dir) / name).string();
}

void ensure_dir(const RunOptions& o) {
    std::error_code ec;
    std::filesystem::create_directories(o.out_dir, ec);
    if (ec) throw io_error("cannot create output directory " + o.out_dir + ": " + ec.message());
}

json versions() {
    json v;
    v["spinflux"] = "0.1.0";
    v["eigen"] = std::to_string(EIGEN_WORLD_VERSION) + "." + std::to_string(EIGEN_MAJOR_VERSION) + "." +
                 std::to_string(EIGEN_MINOR_VERSION);
#if defined(__clang__)
    v["compiler"] = "clang " __clang_version__;
#elif defined(__GNUC__)
    v["compiler"] = "gcc " __VERSION__;
#endif
    return v;
}

json fit_json(const PowerLawFit& f) {
    return {{"estimator", f.estimator}, {"alpha", f.alpha},     {"C", f.C},
            {"alpha_stderr", f.alpha_stderr}, {"R2", f.r2},     {"window", {f.lo, f.hi}},
            {"points", f.points}};
}

void write_manifest(const RunOptions& o, const std::string& command, const RunConfig& c, json derived,
                    std::vector<std::string> outputs, Clock::time_point t0, json seeds = json::object()) {
    json m;
    m["command"] = command;
    m["config"] = to_json(c);
    m["config_hash"] = config_hash(c);
    m["engine"] = command == "ha" || command == "plane" ? command : c.engine;
    m["units"] = UnitSystem::note();
    m["seeds"] = std::move(seeds);
    m["versions"] = versions();
    m["derived"] = std::move(derived);
    m["notes"] = json::array({
        "occupied sites N_s = round(sigma * N)",
        "edge flux width W = (nx - 1) a0",
        "rates scale with d0(T), which is set to 1",
        "broadened densities use sigma_gamma = broadening_frac * gamma_max of each instance; "
        "instances are broadened first, then averaged",
        "alpha (mode_spacing) is fit to an equal-count adaptive histogram of the pooled modes; "
        "alpha (lorentz_sum) is fit to sum_m w_m gamma_m/(omega^2+gamma_m^2)",
    });
    outputs.push_back("manifest.json");
    m["outputs"] = outputs;
    m["wall_time_s"] = std::chrono::duration<double>(Clock::now() - t0).count();
    write_atomic(path_in(o, "manifest.json"), m.dump(2) + "\n");
}

std::vector<double> omega_grid(const RunConfig& c, double gmin, double gmax) {
    if (!c.omega.values.empty()) return c.omega.values;
    const double lo = c.omega.lo > 0 ? c.omega.lo : gmin / 10.0;
    const double hi = c.omega.hi > 0 ? c.omega.hi : gmax * 10.0;
    return log_grid(lo, hi, c.omega.points);
}

std::string modes_csv(const ModeList& m) {
    std::string out = "gamma,weight\n";
    char buf[80];
    for (std::size_t k = 0; k < m.gamma.size(); ++k) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", m.gamma[k], m.w[k]);
        out += buf;
    }
    return out;
}

PowerLawFit safe_fit(const char* estimator, auto&& fn) {
    try {
        return fn();
    } catch (const Error& e) {
        std::cerr << "warning: " << estimator << " fit failed: " << e.what() << "\n";
        PowerLawFit f;
        f.alpha = std::nan("");
        f.estimator = estimator;
        return f;
    }
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace

int cmd_run(const RunConfig& c, const RunOptions& o) {
    const auto t0 = Clock::now();
    ensure_dir(o);
    const auto& ic = c.ensemble.instance;
    const std::uint64_t seed = derive_seed(c.ensemble.master_seed, 0);
    const auto lat = instance_lattice(ic, seed);
    CouplingModel coupling;
    coupling.J = ic.J;
    const auto m = assemble_P(lat, coupling, instance_relaxation(ic, seed), ic.T);
    const auto s = diagonalize(m, ic.path);
    const auto f = edge_flux_vector(lat, ic.F0);
    const auto mw = mode_weights(s, m, f);
    const auto modes = contributing_modes(mw);

    std::vector<std::string> outputs{"mask.txt", "spectrum.csv", "modes.csv", "rho.csv", "noise.csv", "fit.csv"};
    write_atomic(path_in(o, "mask.txt"), mask_text(lat));
    write_atomic(path_in(o, "spectrum.csv"), spectrum_csv(s));
    write_atomic(path_in(o, "modes.csv"), modes_csv(modes));
    const auto dens = flux_density(modes, default_gamma_grid(modes.gamma_max, c.ensemble.grid_points),
                                   c.ensemble.broadening_frac);
    write_atomic(path_in(o, "rho.csv"), density_csv(dens, "exact"));
    const auto pool = ModePool::merge({modes});
    const auto omega = omega_grid(c, pool.gamma_min() > 0 ? pool.gamma_min() : 1e-3, modes.gamma_max);
    write_atomic(path_in(o, "noise.csv"), noise_csv(flux_noise(modes, ic.T, omega), "exact"));
    const auto fr = safe_fit("mode_spacing", [&] { return fit_density_exponent(pool, c.ensemble.window); });
    const auto fn = safe_fit("lorentz_sum", [&] { return fit_noise_exponent(pool, c.ensemble.window); });
    write_atomic(path_in(o, "fit.csv"), fit_csv({{"rho", fr}, {"noise", fn}}));
    if (o.export_matrices) {
        for (const auto& [name, mat] : {std::pair<std::string, const Eigen::MatrixXd*>{"J.txt", &m.J},
                                        {"D.txt", &m.D}, {"chi0.txt", &m.chi0}, {"A.txt", &m.A}}) {
            write_atomic(path_in(o, name), matrix_text(*mat));
            outputs.push_back(name);
        }
    }

    json derived;
    derived["occupied_sites"] = m.size();
    derived["clusters"] = m.clusters.count();
    derived["goldstone_modes"] = s.goldstone_count();
    derived["solver_path"] = to_string(s.path);
    derived["biorthogonality_residual"] = s.biorthogonality;
    derived["T_CW_estimate"] = critical_temperature(m.J);
    derived["gamma_max"] = modes.gamma_max;
    derived["sigma_gamma"] = dens.sigma_gamma;
    derived["W"] = f.width;
    derived["sum_weight"] = mw.total();
    derived["isothermal_weight"] = isothermal_weight(m, f);
    derived["conserved_weight"] = conserved_weight(m, f);
    derived["fit_rho"] = fit_json(fr);
    derived["fit_noise"] = fit_json(fn);
    write_manifest(o, "run", c, derived, outputs, t0, {{"master_seed", c.ensemble.master_seed}, {"instance_seed", seed}});
    std::printf("alpha(rho) = %.4f  alpha(S) = %.4f  gamma_max = %.6g  modes = %zu\n", fr.alpha, fn.alpha,
                modes.gamma_max, modes.gamma.size());
    return 0;
}

int cmd_ensemble(const RunConfig& c, const RunOptions& o) {
    const auto t0 = Clock::now();
    ensure_dir(o);
    EnsembleConfig ec = c.ensemble;
    ec.threads = o.threads;
    if (!c.omega.values.empty()) ec.omega = c.omega.values;
    else if (c.omega.lo > 0 && c.omega.hi > 0) ec.omega = log_grid(c.omega.lo, c.omega.hi, c.omega.points);
    const auto r = ensemble_run(ec);

    write_atomic(path_in(o, "rho.csv"), ensemble_density_csv(r));
    write_atomic(path_in(o, "noise.csv"), noise_csv(r.noise, "exact"));
    write_atomic(path_in(o, "fit.csv"), fit_csv({{"rho", r.fit_rho}, {"noise", r.fit_noise}}));

    json derived;
    derived["M"] = r.M;
    derived["gamma_max"] = r.gamma_max;
    derived["sigma_gamma"] = r.rho.sigma_gamma;
    derived["pooled_modes"] = r.pool.gamma.size();
    derived["fit_rho"] = fit_json(r.fit_rho);
    derived["fit_noise"] = fit_json(r.fit_noise);
    derived["alpha_per_instance_mean"] = r.alpha_mean;
    derived["alpha_per_instance_spread"] = r.alpha_spread;
    json seeds{{"master_seed", r.master_seed}, {"instance_seeds", r.seeds}, {"derivation", "splitmix64(master, k)"}};
    write_manifest(o, "ensemble", c, derived, {"rho.csv", "noise.csv", "fit.csv"}, t0, seeds);
    std::printf("M = %d  alpha(rho) = %.4f (R2 %.4f)  alpha(S) = %.4f (R2 %.4f)\n", r.M, r.fit_rho.alpha,
                r.fit_rho.r2, r.fit_noise.alpha, r.fit_noise.r2);
    return 0;
}

int cmd_sweep(const RunConfig& c, const RunOptions& o) {
    const auto t0 = Clock::now();
    ensure_dir(o);
    EnsembleConfig ec = c.ensemble;
    ec.threads = o.threads;
    const auto rows = temperature_sweep(ec, c.temperatures, c.omega_ref, c.T_ref);
    write_atomic(path_in(o, "sweep.csv"), sweep_csv(rows, false));
    write_atomic(path_in(o, "sweep_noise.csv"), sweep_csv(rows, true));
    json derived = json::array();
    for (const auto& r : rows)
        derived.push_back({{"T", r.T}, {"amplitude", r.amplitude}, {"fit_rho", fit_json(r.fit_rho)},
                           {"fit_noise", fit_json(r.fit_noise)}});
    write_manifest(o, "sweep", c, {{"rows", derived}, {"omega_ref", c.omega_ref}, {"T_ref", c.T_ref}},
                   {"sweep.csv", "sweep_noise.csv"}, t0, {{"master_seed", c.ensemble.master_seed}});
    for (const auto& r : rows)
        std::printf("T = %-8g alpha(rho) = %.4f  alpha(S) = %.4f  amplitude = %.4f\n", r.T, r.fit_rho.alpha,
                    r.fit_noise.alpha, r.amplitude);
    return 0;
}

int cmd_ha(const RunConfig& c, const RunOptions& o) {
    const auto t0 = Clock::now();
    ensure_dir(o);
    const auto& ic = c.ensemble.instance;
    const std::uint64_t seed = derive_seed(c.ensemble.master_seed, 0);
    const auto lat = instance_lattice(ic, seed);
    CouplingModel coupling;
    coupling.J = ic.J;
    auto p = ha_from_instance(lat, coupling, instance_relaxation(ic, seed).site_rates(lat));
    p.F0 = ic.F0;

    std::string rates = "qx,qy,gamma_q,source\n";
    const int nsy = std::max(1, static_cast<int>(std::lround(p.nsy)));
    double gmin = 0, gmax = 0;
    char buf[128];
    for (int my = 0; my < nsy; ++my)
        for (int mx = 0; mx < p.nsx; ++mx) {
            const double qx = 2 * M_PI * mx / (p.nsx * p.a0), qy = 2 * M_PI * my / (nsy * p.a0);
            const double g = ha_gamma_q(p, qx, qy, ic.T);
            if (g > 0 && (gmin == 0 || g < gmin)) gmin = g;
            gmax = std::max(gmax, g);
            std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,ha\n", qx, qy, g);
            rates += buf;
        }
    const auto omega = omega_grid(c, gmin > 0 ? gmin : 1e-3, gmax);
    NoiseSpectrum n;
    n.T = ic.T;
    n.omega = omega;
    for (double w : omega) {
        const double sp = ha_flux_noise(p, w, ic.T);
        n.S.push_back(sp);
        n.S_minus.push_back(sp - ha_flux_noise(p, -w, ic.T));
    }
    write_atomic(path_in(o, "rates.csv"), rates);
    write_atomic(path_in(o, "noise.csv"), noise_csv(n, "ha"));
    json derived{{"sigma", p.sigma},         {"jbar_x", p.jbar_x}, {"jbar_y", p.jbar_y},
                 {"gamma_bar", p.gamma_bar}, {"nsx", p.nsx},       {"nsy", p.nsy},
                 {"W", p.W},                 {"T_CW_q0", ha_tcw(p, 0, 0)}};
    write_manifest(o, "ha", c, derived, {"rates.csv", "noise.csv"}, t0);
    std::printf("HA: sigma = %.4f  Jbar = %.4f  Gamma_bar = %.4g  T_CW(0) = %.4f\n", p.sigma, p.jbar(), p.gamma_bar,
                ha_tcw(p, 0, 0));
    return 0;
}

int cmd_plane(const RunConfig& c, const RunOptions& o) {
    const auto t0 = Clock::now();
    ensure_dir(o);
    const auto& ic = c.ensemble.instance;
    InfinitePlaneModel pm;
    pm.D = c.plane.D;
    pm.gamma_bar = c.plane.gamma_bar;
    pm.a0 = ic.a0;
    pm.W = (ic.nx - 1) * ic.a0;
    pm.F0 = ic.F0;
    pm.nsy = ic.ny;
    pm.T = ic.T;
    pm.J = ic.J;
    pm.average_interference = c.plane.average_interference;

    const double gmin = pm.gamma_min() > 0 ? pm.gamma_min() : pm.gamma_max() * 1e-8;
    const auto grid = log_grid(gmin * (1 + 1e-9), pm.gamma_max(), c.ensemble.grid_points);
    FluxDensity d;
    d.gamma = grid;
    for (double g : grid) d.rho.push_back(infinite_plane_rho(pm, g));
    const auto [lo, hi] = c.ensemble.window.resolve(gmin, pm.gamma_max());
    const auto fit = safe_fit("plane_density", [&] {
        auto f = fit_power_law(d.gamma, d.rho, lo, hi);
        f.estimator = "plane_density";
        return f;
    });

    const auto omega = omega_grid(c, gmin, pm.gamma_max());
    NoiseSpectrum n;
    n.T = ic.T;
    n.omega = omega;
    for (double w : omega) {
        const double sp = sphi_closed_form(fit.C, fit.alpha, pm.gamma_min(), pm.gamma_max(), ic.T, w);
        n.S.push_back(sp);
        n.S_minus.push_back(sp - sphi_closed_form(fit.C, fit.alpha, pm.gamma_min(), pm.gamma_max(), ic.T, -w));
    }
    write_atomic(path_in(o, "rho.csv"), density_csv(d, "plane"));
    write_atomic(path_in(o, "noise.csv"), noise_csv(n, "plane"));
    write_atomic(path_in(o, "fit.csv"), fit_csv({{"rho", fit}}));
    json derived{{"gamma_min", pm.gamma_min()}, {"gamma_max", pm.gamma_max()}, {"W", pm.W}, {"fit", fit_json(fit)}};
    write_manifest(o, "plane", c, derived, {"rho.csv", "noise.csv", "fit.csv"}, t0);
    std::printf("plane: alpha = %.4f  C = %.6g  R2 = %.6f\n", fit.alpha, fit.C, fit.r2);
    return 0;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) out.push_back(cell);
    return out;
}

}  // namespace

int cmd_fit(const RunConfig& c, const RunOptions& o, const std::string& csv_path, const std::string& xcol,
            const std::string& ycol) {
    const auto t0 = Clock::now();
    ensure_dir(o);
    std::stringstream in(read_file(csv_path));
    std::string line;
    if (!std::getline(in, line)) throw io_error(csv_path + " is empty");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto header = split_csv_line(line);
    auto column = [&](const std::string& name) {
        for (std::size_t k = 0; k < header.size(); ++k)
            if (header[k] == name) return k;
        throw config_error("column '" + name + "' not found in " + csv_path);
    };
    const auto ix = column(xcol), iy = column(ycol);
    std::vector<double> x, y;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto cells = split_csv_line(line);
        if (cells.size() <= std::max(ix, iy)) throw io_error("short row in " + csv_path);
        const double xv = std::stod(cells[ix]), yv = std::stod(cells[iy]);
        if (xv > 0 && yv > 0) {
            x.push_back(xv);
            y.push_back(yv);
        }
    }
    if (x.empty()) throw domain_error("no positive points in " + csv_path);
    const auto [lo, hi] = c.ensemble.window.resolve(*std::min_element(x.begin(), x.end()),
                                                    *std::max_element(x.begin(), x.end()));
    auto f = fit_power_law(x, y, lo, hi);
    f.estimator = "direct";
    write_atomic(path_in(o, "fit.csv"), fit_csv({{ycol, f}}));
    write_manifest(o, "fit", c, {{"input", csv_path}, {"x", xcol}, {"y", ycol}, {"fit", fit_json(f)}}, {"fit.csv"},
                   t0);
    std::printf("alpha = %.6f  C = %.6g  R2 = %.6f  points = %d\n", f.alpha, f.C, f.r2, f.points);
    return 0;
}

std::vector<CheckResult> validation_checks(const RunConfig& c) {
    std::vector<CheckResult> out;
    auto add = [&](std::string name, double value, double tol, std::string detail = "") {
        out.push_back({std::move(name), value, tol, value <= tol, std::move(detail)});
    };
    const auto& ic = c.ensemble.instance;
    const std::uint64_t seed = derive_seed(c.ensemble.master_seed, 0);
    const auto lat = instance_lattice(ic, seed);
    CouplingModel coupling;
    coupling.J = ic.J;
    const auto m = assemble_P(lat, coupling, instance_relaxation(ic, seed), ic.T);
    const auto s = diagonalize(m, ic.path);
    const auto f = edge_flux_vector(lat, ic.F0);
    const auto mw = mode_weights(s, m, f);
    const auto modes = contributing_modes(mw);
    const double gmax = s.gamma_max();

    add("biorthogonality", s.biorthogonality, kBiorthTolerance);
    if (s.path == SolverPath::general) add("spectrum_realness", s.max_imag / std::max(gmax, 1e-300), kImagTolerance);

    double dev = 0.0;
    const double w_lo = std::max(gmax * 1e-4, 1e-6);
    for (double w : log_grid(w_lo, 10 * std::max(gmax, 1.0), 20))
        dev = std::max(dev, max_abs_diff(susceptibility_eigen(s, w), susceptibility_resolvent(m, w)));
    add("eigen_vs_resolvent", dev, 1e-9);

    bool all_relax = true;
    {
        std::vector<bool> relaxing(static_cast<std::size_t>(m.clusters.count()), false);
        for (int k = 0; k < m.size(); ++k)
            if (m.gamma(k) != 0) relaxing[m.clusters.cluster_of[k]] = true;
        for (bool r : relaxing) all_relax = all_relax && r;
    }
    if (all_relax) {
        const auto chi = susceptibility_eigen(s, 0.0);
        const double rel = (chi.real() - m.chi0).cwiseAbs().maxCoeff() / m.chi0.cwiseAbs().maxCoeff();
        add("static_limit_chi0", rel, 1e-10);
    } else {
        int frozen = 0;
        std::vector<bool> relaxing(static_cast<std::size_t>(m.clusters.count()), false);
        for (int k = 0; k < m.size(); ++k)
            if (m.gamma(k) != 0) relaxing[m.clusters.cluster_of[k]] = true;
        for (bool r : relaxing) frozen += r ? 0 : 1;
        bool weights_ok = true;
        for (int k = 0; k < s.size(); ++k)
            if (s.goldstone[k] && s.weight_norm(k) >= kGoldstoneWeight) weights_ok = false;
        add("goldstone_count", std::abs(s.goldstone_count() - frozen), 0.0,
            std::to_string(s.goldstone_count()) + " zero modes, " + std::to_string(frozen) + " frozen clusters");
        add("goldstone_weight", weights_ok ? 0.0 : 1.0, 0.0);
    }

    const double iso = isothermal_weight(m, f);
    const double cons = conserved_weight(m, f);
    add("sum_rule", std::abs(mw.total() + cons - iso) / iso, 1e-9,
        "sum w = " + std::to_string(mw.total()) + ", conserved = " + std::to_string(cons));

    double db = 0.0;
    if (!modes.gamma.empty()) {
        for (double w : log_grid(std::max(modes.gamma.front() * 0.1, 1e-8), 10 * gmax, 30)) {
            const double sp = flux_noise_at(modes, ic.T, w), sm = flux_noise_at(modes, ic.T, -w);
            db = std::max(db, std::abs(sm - std::exp(-w / ic.T) * sp) / sp);
        }
    }
    add("detailed_balance", db, 1e-10);

    if (gmax > 0) {
        const double w = 100 * gmax;
        const double bound = high_freq_bound(m, f, ic.T, w);
        add("high_freq_bound", std::abs(flux_noise_at(modes, ic.T, w) / bound - 1.0), 0.01);
    }

    // exact engine against the closed form on the periodic, fully occupied analogue
    if (ic.nx >= 3 && ic.ny >= 3) {
        InstanceConfig pc = ic;
        pc.bc_x = pc.bc_y = Boundary::periodic;
        pc.sigma = 1.0;
        if (pc.relaxation.kind == RelaxationKind::spin_1f) pc.relaxation.kind = RelaxationKind::zero;
        const auto plat = instance_lattice(pc, seed);
        const auto pm = assemble_P(plat, coupling, pc.relaxation, pc.T);
        const auto ps = diagonalize(pm, SolverPath::symmetrized);
        auto hp = ha_from_instance(plat, coupling, pc.relaxation.site_rates(plat));
        hp.F0 = pc.F0;
        const auto hr = ha_rates(hp, pc.ny, pc.T);
        double rdev = 0.0;
        const double hmax = hr.back();
        for (int k = 0; k < ps.size(); ++k) {
            const double ref = std::abs(hr[k]) > 1e-12 * hmax ? std::abs(hr[k]) : hmax;
            rdev = std::max(rdev, std::abs(ps.gamma(k) - hr[k]) / ref);
        }
        add("exact_vs_ha_rates", rdev, 1e-10);
        const auto pmodes = contributing_modes(mode_weights(ps, pm, edge_flux_vector(plat, pc.F0)));
        double sdev = 0.0;
        for (double w : log_grid(hmax * 1e-3, hmax * 10, 30)) {
            const double e = flux_noise_at(pmodes, pc.T, w), h = ha_flux_noise(hp, w, pc.T);
            sdev = std::max(sdev, std::abs(e - h) / std::abs(h));
        }
        add("exact_vs_ha_noise", sdev, 1e-9);
    }
    return out;
}

int cmd_validate(const RunConfig& c, const RunOptions& o) {
    const auto t0 = Clock::now();
    ensure_dir(o);
    const auto checks = validation_checks(c);
    json report = json::array();
    bool ok = true;
    for (const auto& ch : checks) {
        ok = ok && ch.pass;
        std::printf("%-22s %s  value %.3e  tol %.1e  %s\n", ch.name.c_str(), ch.pass ? "PASS" : "FAIL", ch.value,
                    ch.tolerance, ch.detail.c_str());
        report.push_back({{"name", ch.name}, {"value", ch.value}, {"tolerance", ch.tolerance}, {"pass", ch.pass},
                          {"detail", ch.detail}});
    }
    write_atomic(path_in(o, "validate.json"), json{{"checks", report}, {"pass", ok}}.dump(2) + "\n");
    write_manifest(o, "validate", c, {{"pass", ok}}, {"validate.json"}, t0);
    return ok ? 0 : 1;
}

}  // namespace spinflux::app
