// One PASS/FAIL line per acceptance criterion. Thresholds are fixed here.

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "spinflux/spinflux.hpp"

using namespace spinflux;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Verdict {
    bool pass = true;
    std::string summary;
    std::vector<std::string> details;

    void require(bool ok, const std::string& what) {
        pass = pass && ok;
        details.push_back(std::string(ok ? "ok    " : "FAILED") + "  " + what);
    }
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

int failures = 0;
std::vector<std::string> only;  // criterion names from the command line; empty runs all

void report(const std::string& name, const std::function<Verdict()>& body) {
    if (!only.empty() && std::find(only.begin(), only.end(), name) == only.end()) return;
    const auto t0 = Clock::now();
    Verdict v;
    try {
        v = body();
    } catch (const std::exception& e) {
        v.pass = false;
        v.details.push_back(std::string("exception: ") + e.what());
    }
    if (!v.pass) ++failures;
    std::printf("%s  %-26s %s (%.1f s)\n", v.pass ? "PASS" : "FAIL", name.c_str(), v.summary.c_str(),
                seconds_since(t0));
    for (const auto& d : v.details) std::printf("        %s\n", d.c_str());
    std::fflush(stdout);
}

int workers() { return std::max(1, static_cast<int>(std::thread::hardware_concurrency())); }

InstanceConfig landmark(double J, double T = 12.0) {
    InstanceConfig c;  // 20x20, open x, periodic y, sigma = 1, Gamma = 0, edge flux
    c.J = J;
    c.T = T;
    return c;
}

// Ensembles shared by several criteria, computed once.
std::map<std::string, EnsembleResult> cache;

const EnsembleResult& ensemble(const std::string& key, const EnsembleConfig& c) {
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, ensemble_run(c)).first;
    return it->second;
}

EnsembleConfig desk_ensemble(InstanceConfig inst, int M = 64) {
    EnsembleConfig c;
    c.instance = inst;
    c.M = M;
    c.master_seed = 2024;
    c.threads = workers();
    return c;
}

Verdict oracle_equivalence() {
    Verdict v;
    const auto t0 = Clock::now();
    const auto lat = build_lattice(20, 20, Boundary::periodic, Boundary::periodic);
    const double T = 12.0;
    double rate_err = 0, noise_err = 0;
    for (double gb : {0.0, 0.5}) {
        RelaxationModel r;
        r.kind = RelaxationKind::uniform;
        r.gamma_bar = gb;
        const auto m = assemble_P(lat, {}, r, T);
        const auto s = diagonalize(m);
        // closed-form rates over the Brillouin zone, computed here from the dispersion
        std::vector<double> ref;
        for (int my = 0; my < 20; ++my)
            for (int mx = 0; mx < 20; ++mx) {
                const double qx = 2 * M_PI * mx / 20, qy = 2 * M_PI * my / 20;
                const double dq = -(std::pow(std::sin(qx / 2), 2) + std::pow(std::sin(qy / 2), 2));
                const double jq = 2.0 * (std::cos(qx) + std::cos(qy));
                ref.push_back(-dq * (4 * T - jq) + gb);
            }
        std::sort(ref.begin(), ref.end());
        const double gmax = ref.back();
        for (int k = 0; k < s.size(); ++k) {
            const double den = std::abs(ref[k]) > 1e-12 * gmax ? std::abs(ref[k]) : gmax;
            rate_err = std::max(rate_err, std::abs(s.gamma(k) - ref[k]) / den);
        }
        const auto modes = contributing_modes(mode_weights(s, m, edge_flux_vector(lat)));
        HAParameters p;
        p.gamma_bar = gb;
        for (double w : log_grid(1e-3, 1e3, 30)) {
            const double h = ha_flux_noise(p, w, T);
            noise_err = std::max(noise_err, std::abs(flux_noise_at(modes, T, w) - h) / h);
        }
    }
    const double dt = seconds_since(t0);
    v.require(rate_err < 1e-10, fmt("max relative rate error %.2e < 1e-10", rate_err));
    v.require(noise_err < 1e-9, fmt("max relative S_phi error %.2e < 1e-9 on 30 log-spaced omega", noise_err));
    v.require(dt < 10.0, fmt("runtime %.2f s < 10 s", dt));
    v.summary = fmt("rates %.1e, noise %.1e", rate_err, noise_err);
    return v;
}

Verdict susceptibility_oracle() {
    Verdict v;
    const auto t0 = Clock::now();
    Stream rng(31337);
    double worst = 0;
    int max_ns = 0;
    for (int inst = 0; inst < 20; ++inst) {
        const double sigma = 0.5 + 0.5 * rng.uniform();
        const auto lat = sample_vacancies(build_lattice(7, 7, Boundary::open, Boundary::periodic), sigma, rng.next());
        CouplingModel c;
        c.J = rng.uniform() < 0.5 ? 1.0 : -1.0;
        RelaxationModel r;
        r.kind = inst % 3 == 0 ? RelaxationKind::uniform : RelaxationKind::spin_1f;
        r.gamma_bar = 0.1 + rng.uniform();
        r.seed = rng.next();
        const double T = 1.5 + 10 * rng.uniform();
        const auto m = assemble_P(lat, c, r, T);
        max_ns = std::max(max_ns, m.size());
        const auto s = diagonalize(m);
        for (int k = 0; k < 20; ++k) {
            const double w = s.gamma_max() * std::pow(10.0, -4.0 + 5.0 * rng.uniform());
            worst = std::max(worst, (susceptibility_eigen(s, w) - susceptibility_resolvent(m, w)).cwiseAbs().maxCoeff());
        }
    }
    const double dt = seconds_since(t0);
    v.require(max_ns <= 50, fmt("largest instance N_s = %d <= 50", max_ns));
    v.require(worst < 1e-9, fmt("max elementwise |chi_eigen - chi_resolvent| = %.2e < 1e-9", worst));
    v.require(dt < 5.0, fmt("runtime %.2f s < 5 s", dt));
    v.summary = fmt("max deviation %.1e over 20 x 20", worst);
    return v;
}

Verdict goldstone() {
    Verdict v;
    Stream rng(4242);
    int bad_count = 0, bad_weight = 0, bad_span = 0, clusters = 0;
    for (int inst = 0; inst < 50; ++inst) {
        const double sigma = 0.45 + 0.5 * rng.uniform();
        const auto lat = sample_vacancies(build_lattice(20, 20, Boundary::open, Boundary::periodic), sigma, rng.next());
        CouplingModel c;
        c.J = inst % 2 ? 1.0 : -1.0;
        const auto m = assemble_P(lat, c, {}, 2.0 + 10 * rng.uniform());
        const auto s = diagonalize(m);
        const int nc = m.clusters.count();
        clusters += nc;
        int zero = 0;
        std::vector<int> idx;
        for (int k = 0; k < s.size(); ++k)
            if (std::abs(s.gamma(k)) < 1e-10 * s.gamma_max()) {
                ++zero;
                idx.push_back(k);
                if (s.weight_norm(k) >= 1e-12) ++bad_weight;
            }
        if (zero != nc || s.goldstone_count() != nc) ++bad_count;
        // zero modes satisfy (4T - J) v in span{1_c}: one per cluster
        Eigen::MatrixXd K(m.size(), static_cast<Eigen::Index>(idx.size()));
        for (std::size_t j = 0; j < idx.size(); ++j) K.col(static_cast<Eigen::Index>(j)) = m.S2 * s.right.col(idx[j]);
        Eigen::MatrixXd ind = Eigen::MatrixXd::Zero(m.size(), nc);
        for (int i = 0; i < m.size(); ++i) ind(i, m.clusters.cluster_of[i]) = 1.0;
        const Eigen::MatrixXd coef = K.colPivHouseholderQr().solve(ind);
        if ((K * coef - ind).cwiseAbs().maxCoeff() > 1e-8) ++bad_span;
    }
    v.require(bad_count == 0, fmt("instances with #zero modes != #clusters: %d of 50", bad_count));
    v.require(bad_weight == 0, fmt("zero modes with weight norm >= 1e-12: %d", bad_weight));
    v.require(bad_span == 0, fmt("instances whose zero modes miss a cluster magnetization: %d", bad_span));
    v.summary = fmt("%d clusters over 50 vacancy instances", clusters);
    return v;
}

// Instances of every ensemble built so far plus the landmark runs.
Verdict sum_rule() {
    Verdict v;
    double worst = 0, worst_plain = 0;
    int n = 0, n_plain = 0;
    for (const auto& [key, r] : cache)
        for (const auto& inst : r.instances) {
            ++n;
            worst = std::max(worst, std::abs(inst.sum_weight + inst.conserved - inst.isothermal) / inst.isothermal);
            if (inst.conserved == 0.0) {
                ++n_plain;
                worst_plain = std::max(worst_plain, std::abs(inst.sum_weight - inst.isothermal) / inst.isothermal);
            }
        }
    for (double J : {1.0, -1.0}) {
        const auto inst = run_instance(landmark(J), 0);
        ++n;
        ++n_plain;
        worst_plain = std::max(worst_plain, std::abs(inst.sum_weight - inst.isothermal) / inst.isothermal);
    }
    v.require(n_plain > 0 && worst_plain < 1e-9,
              fmt("sum w = sum F chi0 F on %d instances without frozen clusters: max rel %.2e < 1e-9", n_plain,
                  worst_plain));
    v.require(worst < 1e-9,
              fmt("sum w + frozen-cluster weight = sum F chi0 F on all %d ensemble instances: max rel %.2e < 1e-9", n,
                  worst));
    v.summary = fmt("max relative residual %.1e", std::max(worst, worst_plain));
    return v;
}

Verdict detailed_balance() {
    Verdict v;
    // (i) every exact spectrum
    double db = 0;
    int spectra = 0;
    for (const auto& [key, r] : cache) {
        const double T = r.noise.T;
        for (std::size_t k = 0; k < r.instances.size(); k += 8) {
            const auto& modes = r.instances[k].modes;
            if (modes.gamma.empty()) continue;
            ++spectra;
            for (double w : log_grid(1e-3, 10 * modes.gamma_max, 25)) {
                const double sp = flux_noise_at(modes, T, w), sm = flux_noise_at(modes, T, -w);
                db = std::max(db, std::abs(sm - std::exp(-w / T) * sp) / sp);
            }
        }
    }
    v.require(db < 1e-10, fmt("S(-w) = exp(-w/T) S(w) on %d spectra: max rel %.2e < 1e-10", spectra, db));

    // (ii) exact antisymmetric part against the homogeneous engine on the full torus
    const auto lat = build_lattice(20, 20, Boundary::periodic, Boundary::periodic);
    RelaxationModel r;
    r.kind = RelaxationKind::uniform;
    r.gamma_bar = 0.5;
    double am = 0;
    for (double J : {1.0, -1.0}) {
        CouplingModel c;
        c.J = J;
        const double T = 6.0;
        const auto m = assemble_P(lat, c, r, T);
        const auto modes = contributing_modes(mode_weights(diagonalize(m), m, edge_flux_vector(lat)));
        HAParameters p;
        p.jbar_x = p.jbar_y = J;
        p.gamma_bar = 0.5;
        for (double w : log_grid(1e-3, 1e3, 30)) {
            const double exact = flux_noise(modes, T, {w}).S_minus[0];
            const double ha = ha_flux_noise(p, w, T) - ha_flux_noise(p, -w, T);
            am = std::max(am, std::abs(exact - ha) / std::abs(ha));
        }
    }
    v.require(am < 1e-9, fmt("exact S- vs homogeneous S- on the torus: max rel %.2e < 1e-9", am));

    // (iii) closed-form S- for a power-law density against direct quadrature
    const AntisymmetricInputs in{0.975, 40.0, 1e-4, 100.0};
    boost::math::quadrature::tanh_sinh<double> ts;
    double cf = 0;
    for (double alpha : {0.5, 0.7, 0.9})
        for (double T : {3.0, 12.0})
            for (double w : {1e-3, 0.1, 5.0}) {
                const double C = sum_rule_amplitude(in.sigma_jbar, in.sigma_sum_f2, alpha, in.gamma_max, T);
                const auto f = [&](double u) {
                    const double g = std::exp(u);
                    return C * std::pow(g, -alpha) * g / (w * w + g * g) * g;
                };
                const double direct = 2 * w * ts.integrate(f, std::log(in.gamma_min), std::log(in.gamma_max), 1e-14);
                const double closed = antisymmetric_noise_ha(in, alpha, w, T);
                cf = std::max(cf, std::abs(closed - direct) / direct);
            }
    v.require(cf < 1e-9, fmt("closed-form S- vs 2w * quadrature of rho gamma/(w^2+gamma^2): max rel %.2e < 1e-9", cf));
    v.summary = fmt("balance %.1e, torus %.1e, closed form %.1e", db, am, cf);
    return v;
}

Verdict infinite_plane() {
    Verdict v;
    const auto t0 = Clock::now();
    InfinitePlaneModel pm;  // D = 1, a0 = 1, W = 19
    pm.gamma_bar = 1e-20;   // gamma_min far below the band
    const double gmax = pm.gamma_max();
    const auto [lo, hi] = FitWindow::central(2.0).resolve(1e-6, gmax);
    const auto x = log_grid(lo, hi, 200);
    std::vector<double> y;
    for (double g : x) y.push_back(infinite_plane_rho(pm, g));
    const auto fit = fit_power_law(x, y, lo, hi);
    const double mid = std::sqrt(pm.gamma_bar * gmax);
    const double b = b_alpha(0.5, pm.gamma_bar, gmax, mid);
    const double dt = seconds_since(t0);
    v.require(std::abs(fit.alpha - 0.5) <= 0.01, fmt("fitted alpha %.6f = 0.50 +- 0.01", fit.alpha));
    v.require(std::abs(b - M_PI / std::sqrt(2.0)) <= 1e-4,
              fmt("b_1/2 at mid-band omega %.2e = %.6f, pi/sqrt2 = %.6f +- 1e-4", mid, b, M_PI / std::sqrt(2.0)));
    v.require(dt < 1.0, fmt("runtime %.3f s < 1 s", dt));
    v.summary = fmt("alpha %.4f, b_1/2 %.5f", fit.alpha, b);
    return v;
}

Verdict landmark_alpha() {
    Verdict v;
    for (double J : {1.0, -1.0}) {
        const auto t0 = Clock::now();
        const auto inst = run_instance(landmark(J), 0);
        const auto fit = fit_density_exponent(ModePool::merge({inst.modes}), FitWindow::central());
        const double dt = seconds_since(t0);
        const char* name = J > 0 ? "FM" : "AFM";
        v.require(std::abs(fit.alpha - 0.70) <= 0.05, fmt("%s alpha %.4f = 0.70 +- 0.05 (R2 %.4f)", name, fit.alpha, fit.r2));
        v.require(dt < 30.0, fmt("%s runtime %.2f s < 30 s", name, dt));
        v.summary += fmt("%s %.3f ", name, fit.alpha);
    }
    return v;
}

Verdict disorder_trends() {
    Verdict v;
    const auto t0 = Clock::now();
    // (a) vacancies
    for (double sigma : {1.0, 0.75, 0.5}) {
        auto inst = landmark(1.0);
        inst.sigma = sigma;
        const auto& r = ensemble(fmt("sigma=%.2f", sigma), desk_ensemble(inst));
        v.require(r.fit_rho.r2 > 0.98 && r.fit_rho.alpha > 0.5,
                  fmt("(a) sigma %.2f: alpha %.4f > 0.5, R2 %.4f > 0.98", sigma, r.fit_rho.alpha, r.fit_rho.r2));
    }
    // (b) temperature trends on the full lattice
    const std::vector<double> temps{6.0, 12.0, 24.0};
    for (double J : {1.0, -1.0}) {
        std::vector<PowerLawFit> fits;
        for (double T : temps)
            fits.push_back(ensemble(fmt("J=%g,T=%g", J, T), desk_ensemble(landmark(J, T))).fit_rho);
        bool mono = true;
        for (std::size_t k = 1; k < fits.size(); ++k) {
            const double step = (J > 0 ? -1 : 1) * (fits[k].alpha - fits[k - 1].alpha);
            const double se = std::max(fits[k].alpha_stderr, fits[k - 1].alpha_stderr);
            mono = mono && step > -se;
        }
        const double total = (J > 0 ? -1 : 1) * (fits.back().alpha - fits.front().alpha);
        v.require(mono && total > 0, fmt("(b) %s alpha(T=6,12,24) = %.4f, %.4f, %.4f %s", J > 0 ? "FM" : "AFM",
                                         fits[0].alpha, fits[1].alpha, fits[2].alpha,
                                         J > 0 ? "decreasing" : "increasing"));
    }
    // (c) spin-1/f without exchange; the exponent of 1/f noise is read from the Lorentzian sum
    {
        auto inst = landmark(0.0);
        inst.relaxation.kind = RelaxationKind::spin_1f;
        auto c = desk_ensemble(inst);
        const double gmin = inst.relaxation.gamma_min(), gmax = inst.relaxation.gamma_max;
        c.window = FitWindow::range(10 * gmin, gmax / 10);
        const auto& r = ensemble("spin_1f,J=0", c);
        v.require(std::abs(r.fit_noise.alpha - 1.0) <= 0.03,
                  fmt("(c) J = 0: alpha %.4f = 1.00 +- 0.03 over [%.2e, %.2e]", r.fit_noise.alpha, 10 * gmin, gmax / 10));
    }
    // (d) spin-1/f with exchange against Gamma = 0, same estimator and window rule on both sides
    {
        std::vector<double> diff;
        for (double T : {6.0, 24.0}) {
            const auto& ref = ensemble(fmt("J=%g,T=%g", 1.0, T), desk_ensemble(landmark(1.0, T)));
            auto inst = landmark(1.0, T);
            inst.relaxation.kind = RelaxationKind::spin_1f;
            const auto& r = ensemble(fmt("spin_1f,J=1,T=%g", T), desk_ensemble(inst));
            diff.push_back(r.fit_noise.alpha - ref.fit_noise.alpha);
            v.details.push_back(fmt("        T = %g: alpha %.4f with spin-1/f, %.4f with Gamma = 0", T,
                                    r.fit_noise.alpha, ref.fit_noise.alpha));
        }
        v.require(diff[0] > 0, fmt("(d) spin-1/f raises alpha at T = 6 by %.4f", diff[0]));
        v.require(std::abs(diff[1]) < std::abs(diff[0]),
                  fmt("(d) shift shrinks toward the Gamma = 0 value at T = 24: |%.4f| < |%.4f|", diff[1], diff[0]));
    }
    const double dt = seconds_since(t0);
    v.require(dt < 600.0, fmt("runtime %.1f s < 600 s on %d workers", dt, workers()));
    v.summary = "M = 64";
    return v;
}

Verdict amplitude_ratio_check() {
    Verdict v;
    // homogeneous engine: sum-rule amplitude in the power-law noise, T against T -> infinity
    double ha_err = 0;
    const double w = 1e-8, gmax = 50.0, gmin = 1e-6;
    for (double sj : {0.975, -0.975})
        for (double T : {2.0, 3.0, 5.0, 10.0, 40.0}) {
            const double alpha = 0.8, Tinf = 1e9;
            const auto s = [&](double t) {
                return sphi_closed_form(sum_rule_amplitude(sj, 40.0, alpha, gmax, t), alpha, gmin, gmax, t, w);
            };
            ha_err = std::max(ha_err, std::abs(s(T) / s(Tinf) / amplitude_ratio(sj, T) - 1.0));
        }
    v.require(ha_err < 1e-6, fmt("homogeneous engine reproduces T/(T - sigma J) to %.1e < 1e-6", ha_err));

    // exact engine, Gamma = 0, d0 = 1, T_ref = 10, omega_ref = 0.1
    const double T_ref = 10.0, w_ref = 0.1;
    const std::vector<double> temps{2.0, 3.0, 4.0, 6.0, 8.0};
    for (double J : {1.0, -1.0}) {
        const auto lat = instance_lattice(landmark(J), 0);
        CouplingModel cm;
        cm.J = J;
        const auto hp = ha_from_instance(lat, cm, {});
        const double sj = hp.sigma * hp.jbar();
        const auto s_at = [&](double T) { return flux_noise_at(run_instance(landmark(J, T), 0).modes, T, w_ref); };
        const double s_ref = s_at(T_ref);
        std::vector<double> ratios;
        double worst = 0;
        std::string row;
        for (double T : temps) {
            const double ratio = s_at(T) / s_ref;
            ratios.push_back(ratio);
            const double dev = std::abs(ratio / amplitude_ratio(sj, T) - 1.0);
            if (T >= 2 * std::abs(sj)) worst = std::max(worst, dev);
            row += fmt(" T=%g: %.3f (%.3f)", T, ratio, amplitude_ratio(sj, T));
        }
        v.details.push_back(fmt("        %s ratio S(T)/S(T_ref), T/(T - sigma J) in parentheses:%s", J > 0 ? "FM" : "AFM", row.c_str()));
        if (J > 0) {
            bool growing = true;
            for (std::size_t k = 1; k < ratios.size(); ++k) growing = growing && ratios[k] < ratios[k - 1];
            v.require(ratios.back() > 1.0 && growing, "FM ratio > 1 and growing as T approaches T_c from above");
        } else {
            bool below = true;
            for (double r : ratios) below = below && r < 1.0;
            v.require(below, "AFM ratio < 1");
        }
        v.require(worst <= 0.15, fmt("%s within 15%% of T/(T - sigma J) for T >= 2|J|: worst %.1f%%",
                                     J > 0 ? "FM" : "AFM", 100 * worst));
    }
    v.summary = "T_ref = 10, omega_ref = 0.1";
    return v;
}

Verdict high_frequency() {
    Verdict v;
    double worst = 0;
    int n = 0;
    std::vector<InstanceConfig> configs{landmark(1.0), landmark(-1.0)};
    for (double sigma : {0.75, 0.5}) {
        auto c = landmark(1.0, 6.0);
        c.sigma = sigma;
        c.relaxation.kind = RelaxationKind::spin_1f;
        configs.push_back(c);
    }
    for (const auto& c : configs) {
        const auto lat = instance_lattice(c, 7);
        CouplingModel cm;
        cm.J = c.J;
        const auto m = assemble_P(lat, cm, instance_relaxation(c, 7), c.T);
        const auto s = diagonalize(m);
        const auto f = edge_flux_vector(lat);
        const auto modes = contributing_modes(mode_weights(s, m, f));
        const double w = 100 * s.gamma_max();
        worst = std::max(worst, std::abs(flux_noise_at(modes, c.T, w) / high_freq_bound(m, f, c.T, w) - 1.0));
        ++n;
    }
    v.require(worst < 0.01, fmt("S(100 gamma_max) vs high-frequency bound on %d instances: worst %.2e < 1e-2", n, worst));
    v.summary = fmt("worst %.1e", worst);
    return v;
}

Verdict determinism() {
    Verdict v;
    auto inst = landmark(1.0, 6.0);
    inst.sigma = 0.75;
    inst.relaxation.kind = RelaxationKind::spin_1f;
    auto c = desk_ensemble(inst, 16);
    std::string first;
    for (int threads : {1, 3, 8}) {
        c.threads = threads;
        const auto r = ensemble_run(c);
        std::string out = ensemble_density_csv(r) + noise_csv(r.noise, "exact") +
                          fit_csv({{"rho", r.fit_rho}, {"noise", r.fit_noise}});
        if (first.empty()) first = out;
        v.require(out == first, fmt("%d workers: outputs bitwise identical to 1 worker", threads));
    }
    v.summary = "M = 16, workers 1/3/8";
    return v;
}

}  // namespace

int main(int argc, char** argv) {
    only.assign(argv + 1, argv + argc);
    std::printf("acceptance: %d hardware workers\n", workers());
    report("oracle_equivalence", oracle_equivalence);
    report("susceptibility_oracle", susceptibility_oracle);
    report("goldstone_conservation", goldstone);
    report("infinite_plane_exponent", infinite_plane);
    report("landmark_alpha", landmark_alpha);
    report("disorder_trends", disorder_trends);
    report("sum_rule", sum_rule);
    report("detailed_balance", detailed_balance);
    report("amplitude_ratio", amplitude_ratio_check);
    report("high_frequency_bound", high_frequency);
    report("determinism", determinism);
    std::printf("%d of 11 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
