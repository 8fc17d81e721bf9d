#include "spinflux/fluxnoise.hpp"

#include <cmath>
#include <cstdio>

#include "spinflux/error.hpp"

namespace spinflux {

Eigen::MatrixXd FluxVector::restrict_to(const std::vector<int>& sites) const {
    Eigen::MatrixXd out(static_cast<Eigen::Index>(sites.size()), 3);
    for (std::size_t k = 0; k < sites.size(); ++k) out.row(static_cast<Eigen::Index>(k)) = F.row(sites[k]);
    return out;
}

FluxVector edge_flux_vector(const VirtualLattice& lat, double F0) {
    FluxVector f;
    f.model = "edge";
    f.F0 = F0;
    f.left_col = 0;
    f.right_col = lat.nx - 1;
    f.width = (lat.nx - 1) * lat.a0;
    f.F = Eigen::MatrixXd::Zero(lat.size(), 3);
    if (lat.nx < 2) return f;
    for (int iy = 0; iy < lat.ny; ++iy) {
        f.F(lat.index(0, iy), 2) = F0;
        f.F(lat.index(lat.nx - 1, iy), 2) = -F0;
    }
    return f;
}

double ModeWeights::total() const {
    double t = 0.0;
    for (Eigen::Index k = 0; k < w.size(); ++k)
        if (contributing[k]) t += w(k);
    return t;
}

ModeWeights mode_weights(const ParamagnonSpectrum& s, const SystemMatrices& m, const FluxVector& f) {
    const Eigen::MatrixXd F = f.restrict_to(m.sites);
    const Eigen::MatrixXd proj_right = F.transpose() * s.right;  // (a, m): F^a . v_m
    const Eigen::MatrixXd proj_left = s.left_w * F;              // (m, a): v_m^{-1} W F^a
    const auto n = s.gamma.size();

    ModeWeights mw;
    mw.gamma = s.gamma;
    mw.c.resize(n);
    mw.w.resize(n);
    mw.contributing.assign(static_cast<std::size_t>(n), false);
    double wmax = 0.0;
    for (Eigen::Index k = 0; k < n; ++k) {
        mw.c(k) = proj_right.col(k).dot(proj_left.row(k));
        mw.w(k) = s.goldstone[k] ? 0.0 : mw.c(k) / s.gamma(k);
        if (!s.goldstone[k]) wmax = std::max(wmax, std::abs(mw.w(k)));
    }
    for (Eigen::Index k = 0; k < n; ++k)
        mw.contributing[k] = !s.goldstone[k] && std::abs(mw.w(k)) >= 1e-14 * wmax && wmax > 0;

    const double total = mw.total();
    if (total < -1e-12 * std::max(1.0, wmax))
        throw numerical_error("negative total flux weight: unstable instance");
    return mw;
}

ModeList contributing_modes(const ModeWeights& mw) {
    ModeList out;
    out.gamma_max = mw.gamma.size() ? mw.gamma.maxCoeff() : 0.0;
    for (Eigen::Index k = 0; k < mw.gamma.size(); ++k) {
        if (!mw.contributing[k]) continue;
        out.gamma.push_back(mw.gamma(k));
        out.w.push_back(mw.w(k));
    }
    return out;
}

std::vector<double> default_gamma_grid(double gamma_max, int points) {
    if (points < 2) throw domain_error("gamma grid needs at least 2 points");
    std::vector<double> g(static_cast<std::size_t>(points));
    const double top = 1.2 * gamma_max;
    for (int k = 0; k < points; ++k) g[k] = top * k / (points - 1);
    return g;
}

FluxDensity flux_density(const ModeList& modes, const std::vector<double>& grid, double broadening_frac) {
    if (!(broadening_frac > 0)) throw domain_error("broadening fraction must be positive");
    FluxDensity d;
    d.gamma = grid;
    d.rho.assign(grid.size(), 0.0);
    d.sigma_gamma = broadening_frac * modes.gamma_max;
    if (d.sigma_gamma <= 0) return d;
    const double norm = 1.0 / (d.sigma_gamma * std::sqrt(2.0 * M_PI));
    for (std::size_t g = 0; g < grid.size(); ++g) {
        double acc = 0.0;
        for (std::size_t k = 0; k < modes.gamma.size(); ++k) {
            const double u = (grid[g] - modes.gamma[k]) / d.sigma_gamma;
            acc += modes.w[k] * std::exp(-0.5 * u * u);
        }
        d.rho[g] = acc * norm;
    }
    return d;
}

double bose_prefactor(double omega, double T) {
    if (omega == 0.0) return 2.0 * T;
    return 2.0 * omega / -std::expm1(-omega / T);
}

double lorentz_sum(const ModeList& modes, double omega) {
    double acc = 0.0;
    const double o2 = omega * omega;
    for (std::size_t k = 0; k < modes.gamma.size(); ++k) {
        const double g = modes.gamma[k];
        acc += modes.w[k] * g / (o2 + g * g);
    }
    return acc;
}

double flux_noise_at(const ModeList& modes, double T, double omega) {
    return bose_prefactor(omega, T) * lorentz_sum(modes, omega);
}

NoiseSpectrum flux_noise(const ModeList& modes, double T, const std::vector<double>& omega) {
    NoiseSpectrum n;
    n.T = T;
    n.omega = omega;
    n.S.resize(omega.size());
    n.S_minus.resize(omega.size());
    for (std::size_t k = 0; k < omega.size(); ++k) {
        const double l = lorentz_sum(modes, omega[k]);
        n.S[k] = bose_prefactor(omega[k], T) * l;
        n.S_minus[k] = n.S[k] - bose_prefactor(-omega[k], T) * l;
    }
    return n;
}

double high_freq_bound(const SystemMatrices& m, const FluxVector& f, double T, double omega) {
    const Eigen::MatrixXd F = f.restrict_to(m.sites);
    const double fwf = (F.transpose() * m.W() * F).trace();
    return bose_prefactor(omega, T) / (omega * omega) * fwf;
}

double isothermal_weight(const SystemMatrices& m, const FluxVector& f) {
    const Eigen::MatrixXd F = f.restrict_to(m.sites);
    return (F.transpose() * m.chi0 * F).trace();
}

double conserved_weight(const SystemMatrices& m, const FluxVector& f) {
    const Eigen::MatrixXd F = f.restrict_to(m.sites);
    const int nc = m.clusters.count();
    std::vector<bool> relaxing(static_cast<std::size_t>(nc), false);
    for (Eigen::Index k = 0; k < m.gamma.size(); ++k)
        if (m.gamma(k) != 0.0) relaxing[m.clusters.cluster_of[k]] = true;
    double total = 0.0;
    for (int c = 0; c < nc; ++c) {
        if (relaxing[c]) continue;
        Eigen::VectorXd one = Eigen::VectorXd::Zero(m.size());
        for (int k = 0; k < m.size(); ++k)
            if (m.clusters.cluster_of[k] == c) one(k) = 1.0;
        const Eigen::VectorXd u = m.chi0 * one;
        const Eigen::VectorXd proj = F.transpose() * u;
        total += proj.squaredNorm() / one.dot(u);
    }
    return total;
}

std::string density_csv(const FluxDensity& d, const std::string& source) {
    std::string out = "gamma,rho_phi,source\n";
    char buf[96];
    for (std::size_t k = 0; k < d.gamma.size(); ++k) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,", d.gamma[k], d.rho[k]);
        out += buf + source + "\n";
    }
    return out;
}

std::string noise_csv(const NoiseSpectrum& n, const std::string& source) {
    std::string out = "omega,S_phi,S_phi_minus,source\n";
    char buf[128];
    for (std::size_t k = 0; k < n.omega.size(); ++k) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,", n.omega[k], n.S[k], n.S_minus[k]);
        out += buf + source + "\n";
    }
    return out;
}

}  // namespace spinflux
