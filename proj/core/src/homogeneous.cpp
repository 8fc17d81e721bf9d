#include "spinflux/homogeneous.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <cstdio>

#include "spinflux/error.hpp"
#include "spinflux/fluxnoise.hpp"

namespace spinflux {

HAParameters ha_from_instance(const VirtualLattice& lat, const CouplingModel& coupling,
                              const std::vector<double>& site_rates) {
    HAParameters p;
    const int n = lat.size();
    const int ns = lat.occupied_count();
    p.sigma = double(ns) / n;
    p.nsx = lat.nx;
    p.nsy = double(ns) / lat.nx;
    p.a0 = lat.a0;
    p.W = (lat.nx - 1) * lat.a0;

    const auto bond_j = coupling.bond_exchange(lat);
    double sx = 0.0, sy = 0.0;
    for (std::size_t b = 0; b < lat.bonds.size(); ++b) {
        const auto& bd = lat.bonds[b];
        if (!lat.occupied(bd.i) || !lat.occupied(bd.j)) continue;
        if (lat.row(bd.i) == lat.row(bd.j)) sx += bond_j[b];
        else sy += bond_j[b];
    }
    const double norm = n * p.sigma * p.sigma;
    p.jbar_x = norm > 0 ? sx / norm : 0.0;
    p.jbar_y = norm > 0 ? sy / norm : 0.0;

    double g = 0.0;
    bool uniform = true;
    for (double r : site_rates) {
        g += r;
        uniform = uniform && r == site_rates.front();
    }
    if (site_rates.empty()) p.gamma_bar = 0.0;
    else if (uniform) p.gamma_bar = site_rates.front();  // exact, no rounding from the sum
    else p.gamma_bar = g / double(site_rates.size());
    return p;
}

double ha_dq(const HAParameters& p, double qx, double qy) {
    const double sx = std::sin(0.5 * qx * p.a0);
    const double sy = std::sin(0.5 * qy * p.a0);
    return -(sx * sx + sy * sy);
}

double ha_jq(const HAParameters& p, double qx, double qy) {
    return 2.0 * p.sigma * (p.jbar_x * std::cos(qx * p.a0) + p.jbar_y * std::cos(qy * p.a0));
}

double ha_tcw(const HAParameters& p, double qx, double qy) { return ha_jq(p, qx, qy) / 4.0; }

namespace {

double stiffness(const HAParameters& p, double qx, double qy, double T) {
    const double s = 4.0 * T - ha_jq(p, qx, qy);
    if (!(s > 0)) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "below critical temperature at q = (%.6g, %.6g): 4T - J(q) = %.6g",
                      qx, qy, s);
        throw phase_error(buf);
    }
    return s;
}

}  // namespace

double ha_gamma_q(const HAParameters& p, double qx, double qy, double T) {
    return -ha_dq(p, qx, qy) * stiffness(p, qx, qy, T) + p.gamma_bar;
}

std::complex<double> ha_chi_q(const HAParameters& p, double qx, double qy, double omega, double T) {
    const double num = p.gamma_bar / stiffness(p, qx, qy, T) - ha_dq(p, qx, qy);
    return num / std::complex<double>(ha_gamma_q(p, qx, qy, T), -omega);
}

double ha_spin_noise(const HAParameters& p, double qx, double qy, double omega, double T) {
    const double num = p.gamma_bar / stiffness(p, qx, qy, T) - ha_dq(p, qx, qy);
    const double g = ha_gamma_q(p, qx, qy, T);
    return bose_prefactor(omega, T) * num / (omega * omega + g * g);
}

std::vector<double> ha_rates(const HAParameters& p, int nsy, double T) {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(p.nsx) * nsy);
    for (int my = 0; my < nsy; ++my)
        for (int mx = 0; mx < p.nsx; ++mx)
            out.push_back(ha_gamma_q(p, 2 * M_PI * mx / (p.nsx * p.a0), 2 * M_PI * my / (nsy * p.a0), T));
    std::sort(out.begin(), out.end());
    return out;
}

double ha_flux_noise(const HAParameters& p, double omega, double T) {
    double acc = 0.0;
    for (int n = 0; n < p.nsx; ++n) {
        const double q = 2 * M_PI / (p.nsx * p.a0) * (n - p.nsx / 2);
        const double s = std::sin(0.5 * q * p.W);
        acc += s * s * ha_spin_noise(p, q, 0.0, omega, T);
    }
    return 4.0 * p.F0 * p.F0 * (p.nsy / p.nsx) * acc;
}

double InfinitePlaneModel::gamma_max() const { return D * (M_PI / a0) * (M_PI / a0) + gamma_bar; }

double infinite_plane_rho(const InfinitePlaneModel& m, double gamma) {
    const double gmin = m.gamma_min();
    if (!(gamma > gmin) || gamma > m.gamma_max()) return 0.0;
    if (!(m.T > m.J)) throw domain_error("infinite-plane density needs T > J");
    const double x = gamma - gmin;
    double interference = 0.5;
    if (!m.average_interference) {
        const double s = std::sin(std::sqrt(x * m.W * m.W / (4.0 * m.D)));
        interference = s * s;
    }
    const double pref = m.F0 * m.F0 * m.a0 * m.nsy / (2.0 * M_PI * (m.T - m.J) * std::sqrt(m.D));
    return pref * interference / std::sqrt(x);
}

double b_alpha(double alpha, double gamma_min, double gamma_max, double omega) {
    if (!(alpha > 0 && alpha < 2)) throw domain_error("b_alpha needs 0 < alpha < 2");
    if (!(omega > 0)) throw domain_error("b_alpha needs omega > 0");
    if (!(gamma_max > gamma_min) || gamma_min < 0) throw domain_error("b_alpha needs 0 <= gamma_min < gamma_max");
    // x = e^u keeps the integrand smooth over many decades
    const auto f = [alpha](double u) {
        const double x = std::exp(u);
        return std::pow(x, 2.0 - alpha) / (1.0 + x * x);
    };
    const double lo = gamma_min > 0 ? std::log(gamma_min / omega) : -745.0;
    const double hi = std::log(gamma_max / omega);
    using boost::math::quadrature::gauss_kronrod;
    return gauss_kronrod<double, 61>::integrate(f, lo, hi, 30, 1e-12);
}

double b_alpha_limit(double alpha) { return M_PI / (2.0 * std::sin(M_PI * alpha / 2.0)); }

double sphi_closed_form(double C, double alpha, double gamma_min, double gamma_max, double T, double omega) {
    const double w = std::abs(omega);
    return bose_prefactor(omega, T) * C * b_alpha(alpha, gamma_min, gamma_max, w) / std::pow(w, alpha);
}

double sum_rule_amplitude(double sigma_jbar, double sigma_sum_f2, double alpha, double gamma_max, double T) {
    if (!(T > sigma_jbar)) throw domain_error("amplitude pole: T must exceed sigma*J");
    return (1.0 - alpha) * sigma_sum_f2 / (4.0 * (T - sigma_jbar) * std::pow(gamma_max, 1.0 - alpha));
}

double amplitude_ratio(double sigma_jbar, double T) {
    if (!(T > sigma_jbar))
        throw domain_error("amplitude ratio pole: magnetized clusters form at T = sigma*J");
    return T / (T - sigma_jbar);
}

double antisymmetric_noise_ha(const AntisymmetricInputs& p, double alpha, double omega, double T) {
    const double w = std::abs(omega);
    const double C = sum_rule_amplitude(p.sigma_jbar, p.sigma_sum_f2, alpha, p.gamma_max, T);
    // odd in omega, as S(omega) - S(-omega) must be
    return std::copysign(2.0 * C * std::pow(w, 1.0 - alpha) * b_alpha(alpha, p.gamma_min, p.gamma_max, w), omega);
}

}  // namespace spinflux
