#include "spinflux/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>

#include "spinflux/error.hpp"
#include "spinflux/rng.hpp"

namespace spinflux {

PowerLawFit fit_power_law(const std::vector<double>& x, const std::vector<double>& y, double lo, double hi) {
    if (x.size() != y.size()) throw domain_error("fit: abscissa and values differ in length");
    const double slack = 1e-12;
    std::vector<double> lx, ly;
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (x[k] < lo * (1 - slack) || x[k] > hi * (1 + slack)) continue;
        if (!(x[k] > 0) || !(y[k] > 0)) throw domain_error("fit: non-positive value inside the window");
        lx.push_back(std::log10(x[k]));
        ly.push_back(std::log10(y[k]));
    }
    const auto n = lx.size();
    if (n < 10) throw domain_error("fit: window holds " + std::to_string(n) + " points, need at least 10");

    const double mx = std::accumulate(lx.begin(), lx.end(), 0.0) / double(n);
    const double my = std::accumulate(ly.begin(), ly.end(), 0.0) / double(n);
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t k = 0; k < n; ++k) {
        sxx += (lx[k] - mx) * (lx[k] - mx);
        sxy += (lx[k] - mx) * (ly[k] - my);
        syy += (ly[k] - my) * (ly[k] - my);
    }
    if (sxx <= 0) throw domain_error("fit: window collapses to a single abscissa");
    const double slope = sxy / sxx;
    const double icept = my - slope * mx;
    double ssr = 0;
    for (std::size_t k = 0; k < n; ++k) {
        const double r = ly[k] - (icept + slope * lx[k]);
        ssr += r * r;
    }
    PowerLawFit f;
    f.alpha = -slope;
    f.C = std::pow(10.0, icept);
    f.lo = lo;
    f.hi = hi;
    f.points = static_cast<int>(n);
    f.r2 = syy > 0 ? 1.0 - ssr / syy : 1.0;
    f.alpha_stderr = n > 2 ? std::sqrt(ssr / double(n - 2) / sxx) : 0.0;
    f.estimator = "direct";
    return f;
}

std::pair<double, double> FitWindow::resolve(double gmin, double gmax) const {
    if (kind == Kind::explicit_range) {
        if (!(lo > 0 && hi > lo)) throw domain_error("fit window needs 0 < lo < hi");
        return {lo, hi};
    }
    if (!(gmin > 0 && gmax > gmin)) throw domain_error("fit window: empty rate range");
    const double span = std::log10(gmax / gmin);
    const double cut = std::max(0.0, 0.5 * (span - decades));
    return {gmin * std::pow(10.0, cut), gmax / std::pow(10.0, cut)};
}

ModePool ModePool::merge(const std::vector<ModeList>& lists) {
    std::vector<std::pair<double, double>> all;
    for (const auto& l : lists)
        for (std::size_t k = 0; k < l.gamma.size(); ++k) all.emplace_back(l.gamma[k], l.w[k]);
    std::stable_sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    ModePool p;
    p.instances = static_cast<int>(lists.size());
    for (const auto& [g, w] : all) {
        // identical rates from identical instances collapse into one entry
        if (!p.gamma.empty() && p.gamma.back() == g) {
            p.w.back() += w;
            continue;
        }
        p.gamma.push_back(g);
        p.w.push_back(w);
    }
    return p;
}

DensityPoints mode_spacing_density(const ModePool& pool, double points_per_decade) {
    DensityPoints out;
    const auto n = static_cast<long>(pool.gamma.size());
    if (n < 3 || pool.instances < 1 || !(pool.gamma_min() > 0)) return out;
    const double span = std::max(std::log10(pool.gamma_max() / pool.gamma_min()), 1e-12);
    const long k = std::max(1L, std::lround(double(n) / (points_per_decade * span)));
    const auto& g = pool.gamma;
    for (long b = 1; b < n - k; b += k) {
        const double lo = 0.5 * (g[b - 1] + g[b]);
        const double hi = 0.5 * (g[b + k - 1] + g[b + k]);
        if (!(hi > lo)) continue;
        double wsum = 0.0, lsum = 0.0;
        for (long j = b; j < b + k; ++j) {
            wsum += pool.w[j];
            lsum += std::log(g[j]);
        }
        out.gamma.push_back(std::exp(lsum / double(k)));
        out.rho.push_back(wsum / (pool.instances * (hi - lo)));
    }
    return out;
}

std::vector<double> log_grid(double lo, double hi, int n) {
    if (!(lo > 0 && hi > lo) || n < 2) throw domain_error("log grid needs 0 < lo < hi and n >= 2");
    std::vector<double> g(static_cast<std::size_t>(n));
    const double a = std::log10(lo), b = std::log10(hi);
    for (int k = 0; k < n; ++k) g[k] = std::pow(10.0, a + (b - a) * k / (n - 1));
    g.front() = lo;
    g.back() = hi;
    return g;
}

PowerLawFit fit_density_exponent(const ModePool& pool, const FitWindow& window) {
    const auto pts = mode_spacing_density(pool);
    std::vector<double> lx, ly;
    for (std::size_t k = 0; k < pts.gamma.size(); ++k) {
        if (!(pts.rho[k] > 0)) continue;
        lx.push_back(std::log10(pts.gamma[k]));
        ly.push_back(std::log10(pts.rho[k]));
    }
    if (lx.size() < 2) throw domain_error("fit: too few density points");
    auto [a, b] = window.resolve(pool.gamma_min(), pool.gamma_max());
    a = std::max(a, std::pow(10.0, lx.front()));
    b = std::min(b, std::pow(10.0, lx.back()));
    if (!(b > a)) throw domain_error("fit: window lies outside the density support");

    const auto x = log_grid(a, b, kFitGridPoints);
    std::vector<double> y(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) {
        const double u = std::log10(x[k]);
        auto it = std::upper_bound(lx.begin(), lx.end(), u);
        std::size_t j = static_cast<std::size_t>(std::distance(lx.begin(), it));
        j = std::clamp<std::size_t>(j, 1, lx.size() - 1);
        const double t = (u - lx[j - 1]) / (lx[j] - lx[j - 1]);
        y[k] = std::pow(10.0, ly[j - 1] + t * (ly[j] - ly[j - 1]));
    }
    auto f = fit_power_law(x, y, a, b);
    f.estimator = "mode_spacing";
    return f;
}

PowerLawFit fit_noise_exponent(const ModePool& pool, const FitWindow& window) {
    const auto [a, b] = window.resolve(pool.gamma_min(), pool.gamma_max());
    const auto x = log_grid(a, b, kFitGridPoints);
    ModeList modes;
    modes.gamma = pool.gamma;
    modes.w = pool.w;
    std::vector<double> y(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) y[k] = lorentz_sum(modes, x[k]) / std::max(1, pool.instances);
    auto f = fit_power_law(x, y, a, b);
    f.estimator = "lorentz_sum";
    return f;
}

VirtualLattice instance_lattice(const InstanceConfig& c, std::uint64_t seed) {
    const auto full = build_lattice(c.nx, c.ny, c.bc_x, c.bc_y, c.a0);
    if (c.sigma >= 1.0) return full;
    return sample_vacancies(full, c.sigma, derive_seed(seed, 0));
}

RelaxationModel instance_relaxation(const InstanceConfig& c, std::uint64_t seed) {
    RelaxationModel r = c.relaxation;
    r.seed = derive_seed(seed, 1);
    return r;
}

InstanceResult run_instance(const InstanceConfig& c, std::uint64_t seed) {
    const auto lat = instance_lattice(c, seed);
    CouplingModel coupling;
    coupling.J = c.J;
    const auto m = assemble_P(lat, coupling, instance_relaxation(c, seed), c.T);
    const auto s = diagonalize(m, c.path);
    const auto f = edge_flux_vector(lat, c.F0);
    const auto mw = mode_weights(s, m, f);

    InstanceResult r;
    r.seed = seed;
    r.occupied = m.size();
    r.clusters = m.clusters.count();
    r.goldstone = s.goldstone_count();
    r.modes = contributing_modes(mw);
    r.sum_weight = mw.total();
    r.isothermal = isothermal_weight(m, f);
    r.conserved = conserved_weight(m, f);
    return r;
}

namespace {

PowerLawFit failed_fit(const std::string& estimator) {
    PowerLawFit f;
    f.alpha = std::numeric_limits<double>::quiet_NaN();
    f.estimator = estimator;
    return f;
}

}  // namespace

EnsembleResult ensemble_run(const EnsembleConfig& config) {
    if (config.M < 1) throw domain_error("ensemble needs M >= 1");
    const int M = config.M;
    EnsembleResult r;
    r.M = M;
    r.master_seed = config.master_seed;
    r.seeds.resize(static_cast<std::size_t>(M));
    for (int k = 0; k < M; ++k) r.seeds[k] = derive_seed(config.master_seed, static_cast<std::uint64_t>(k));

    r.instances.resize(static_cast<std::size_t>(M));
    parallel_for(M, config.threads, [&](int k) {
        try {
            r.instances[k] = run_instance(config.instance, r.seeds[k]);
        } catch (const Error& e) {
            char buf[64];
            std::snprintf(buf, sizeof buf, " (instance %d, seed %llu)", k,
                          static_cast<unsigned long long>(r.seeds[k]));
            throw Error(e.kind(), e.what() + std::string(buf));
        }
    });

    std::vector<ModeList> lists;
    lists.reserve(static_cast<std::size_t>(M));
    for (const auto& inst : r.instances) {
        lists.push_back(inst.modes);
        r.gamma_max = std::max(r.gamma_max, inst.modes.gamma_max);
    }
    r.pool = ModePool::merge(lists);

    // broadened densities per instance, reduced in index order
    const auto grid = default_gamma_grid(r.gamma_max, config.grid_points);
    std::vector<std::vector<double>> dens(static_cast<std::size_t>(M));
    parallel_for(M, config.threads, [&](int k) {
        dens[k] = flux_density(r.instances[k].modes, grid, config.broadening_frac).rho;
    });
    r.rho.gamma = grid;
    r.rho.sigma_gamma = config.broadening_frac * r.gamma_max;
    r.rho.rho.assign(grid.size(), 0.0);
    r.rho_stderr.assign(grid.size(), 0.0);
    for (int k = 0; k < M; ++k)
        for (std::size_t g = 0; g < grid.size(); ++g) r.rho.rho[g] += dens[k][g];
    for (auto& v : r.rho.rho) v /= M;
    if (M > 1) {
        for (int k = 0; k < M; ++k)
            for (std::size_t g = 0; g < grid.size(); ++g) {
                const double d = dens[k][g] - r.rho.rho[g];
                r.rho_stderr[g] += d * d;
            }
        for (auto& v : r.rho_stderr) v = std::sqrt(v / (M - 1) / M);
    }

    std::vector<double> omega = config.omega;
    if (omega.empty() && r.pool.gamma_min() > 0)
        omega = log_grid(r.pool.gamma_min() / 10.0, 10.0 * r.gamma_max, 100);
    std::vector<NoiseSpectrum> spectra(static_cast<std::size_t>(M));
    parallel_for(M, config.threads, [&](int k) {
        spectra[k] = flux_noise(r.instances[k].modes, config.instance.T, omega);
    });
    r.noise.T = config.instance.T;
    r.noise.omega = omega;
    r.noise.S.assign(omega.size(), 0.0);
    r.noise.S_minus.assign(omega.size(), 0.0);
    for (int k = 0; k < M; ++k)
        for (std::size_t j = 0; j < omega.size(); ++j) {
            r.noise.S[j] += spectra[k].S[j];
            r.noise.S_minus[j] += spectra[k].S_minus[j];
        }
    for (std::size_t j = 0; j < omega.size(); ++j) {
        r.noise.S[j] /= M;
        r.noise.S_minus[j] /= M;
    }

    try {
        r.fit_rho = fit_density_exponent(r.pool, config.window);
    } catch (const Error&) {
        r.fit_rho = failed_fit("mode_spacing");
    }
    try {
        r.fit_noise = fit_noise_exponent(r.pool, config.window);
    } catch (const Error&) {
        r.fit_noise = failed_fit("lorentz_sum");
    }

    if (M > 1) {
        std::vector<double> alphas(static_cast<std::size_t>(M), std::numeric_limits<double>::quiet_NaN());
        parallel_for(M, config.threads, [&](int k) {
            try {
                alphas[k] = fit_density_exponent(ModePool::merge({r.instances[k].modes}), config.window).alpha;
            } catch (const Error&) {
            }
        });
        double s = 0, s2 = 0;
        int n = 0;
        for (double a : alphas)
            if (std::isfinite(a)) {
                s += a;
                s2 += a * a;
                ++n;
            }
        r.alpha_mean = n ? s / n : std::numeric_limits<double>::quiet_NaN();
        r.alpha_spread = n > 1 ? std::sqrt(std::max(0.0, (s2 - s * s / n) / (n - 1))) : 0.0;
    } else {
        r.alpha_mean = r.fit_rho.alpha;
        r.alpha_spread = 0.0;
    }
    return r;
}

namespace {

double mean_noise_at(const EnsembleResult& r, double T, double omega) {
    double acc = 0.0;
    for (const auto& inst : r.instances) acc += flux_noise_at(inst.modes, T, omega);
    return acc / r.M;
}

}  // namespace

std::vector<SweepRow> temperature_sweep(const EnsembleConfig& config, const std::vector<double>& T_list,
                                        double omega_ref, double T_ref) {
    EnsembleConfig ref = config;
    ref.instance.T = T_ref;
    const auto ref_run = ensemble_run(ref);
    const double s_ref = mean_noise_at(ref_run, T_ref, omega_ref);

    std::vector<SweepRow> rows;
    for (double T : T_list) {
        EnsembleConfig c = config;
        c.instance.T = T;
        const auto run = ensemble_run(c);
        SweepRow row;
        row.T = T;
        row.fit_rho = run.fit_rho;
        row.fit_noise = run.fit_noise;
        row.amplitude = mean_noise_at(run, T, omega_ref) / s_ref;
        rows.push_back(row);
    }
    return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows, bool noise_estimator) {
    std::string out = "T,alpha,alpha_stderr,amplitude,R2\n";
    char buf[160];
    for (const auto& r : rows) {
        const auto& f = noise_estimator ? r.fit_noise : r.fit_rho;
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g\n", r.T, f.alpha, f.alpha_stderr,
                      r.amplitude, f.r2);
        out += buf;
    }
    return out;
}

std::string fit_csv(const std::vector<std::pair<std::string, PowerLawFit>>& fits) {
    std::string out = "name,estimator,alpha,C,alpha_stderr,R2,window_lo,window_hi,points\n";
    char buf[200];
    for (const auto& [name, f] : fits) {
        std::snprintf(buf, sizeof buf, ",%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%d\n", f.alpha, f.C, f.alpha_stderr,
                      f.r2, f.lo, f.hi, f.points);
        out += name + "," + f.estimator + buf;
    }
    return out;
}

std::string ensemble_density_csv(const EnsembleResult& r) {
    std::string out = "gamma,rho_phi,rho_stderr,source\n";
    char buf[96];
    for (std::size_t k = 0; k < r.rho.gamma.size(); ++k) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,", r.rho.gamma[k], r.rho.rho[k], r.rho_stderr[k]);
        out += buf + std::string("exact\n");
    }
    return out;
}

}  // namespace spinflux
