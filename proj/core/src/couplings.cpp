#include "spinflux/couplings.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <sstream>

#include "spinflux/error.hpp"
#include "spinflux/rng.hpp"

namespace spinflux {

std::string UnitSystem::note() {
    return "hbar = k_B = d0 = |J| = F0 = 1; rates in d0|J|/hbar, temperature in |J|/k_B, "
           "energies in |J|, flux in F0";
}

std::vector<double> CouplingModel::bond_exchange(const VirtualLattice& lat) const {
    if (!bond_override.empty()) {
        if (bond_override.size() != lat.bonds.size())
            throw domain_error("bond exchange table has wrong length");
        return bond_override;
    }
    return std::vector<double>(lat.bonds.size(), J);
}

std::string to_string(RelaxationKind k) {
    switch (k) {
        case RelaxationKind::zero: return "zero";
        case RelaxationKind::uniform: return "uniform";
        case RelaxationKind::spin_1f: return "spin_1f";
    }
    return "zero";
}

RelaxationKind parse_relaxation(const std::string& s) {
    if (s == "zero") return RelaxationKind::zero;
    if (s == "uniform") return RelaxationKind::uniform;
    if (s == "spin_1f") return RelaxationKind::spin_1f;
    throw config_error("unknown relaxation variant '" + s + "' (expected zero, uniform or spin_1f)");
}

std::vector<double> RelaxationModel::site_rates(const VirtualLattice& lat) const {
    const int ns = lat.occupied_count();
    std::vector<double> rates(static_cast<std::size_t>(ns), 0.0);
    switch (kind) {
        case RelaxationKind::zero: break;
        case RelaxationKind::uniform:
            if (gamma_bar < 0) throw domain_error("uniform relaxation rate must be non-negative");
            std::fill(rates.begin(), rates.end(), gamma_bar);
            break;
        case RelaxationKind::spin_1f: {
            if (!(gamma_max > 0) || !(lambda_max > 0))
                throw domain_error("spin_1f needs gamma_max > 0 and lambda_max > 0");
            Stream rng(seed);
            for (auto& g : rates) g = gamma_max * std::exp(-lambda_max * rng.uniform());
            break;
        }
    }
    return rates;
}

double RelaxationModel::gamma_min() const {
    switch (kind) {
        case RelaxationKind::zero: return 0.0;
        case RelaxationKind::uniform: return gamma_bar;
        case RelaxationKind::spin_1f: return gamma_max * std::exp(-lambda_max);
    }
    return 0.0;
}

bool SystemMatrices::uniform_gamma() const {
    if (gamma.size() == 0) return true;
    return (gamma.array() == gamma(0)).all();
}

Eigen::MatrixXd SystemMatrices::W() const {
    Eigen::MatrixXd w = gamma.asDiagonal() * chi0;
    w -= D;
    return w;
}

Eigen::MatrixXd exchange_matrix(const VirtualLattice& lat, const std::vector<int>& sites,
                                const std::vector<double>& bond_j) {
    std::vector<int> compressed(static_cast<std::size_t>(lat.size()), -1);
    for (std::size_t k = 0; k < sites.size(); ++k) compressed[sites[k]] = static_cast<int>(k);
    const auto n = static_cast<Eigen::Index>(sites.size());
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    for (std::size_t b = 0; b < lat.bonds.size(); ++b) {
        const int a = compressed[lat.bonds[b].i];
        const int c = compressed[lat.bonds[b].j];
        if (a < 0 || c < 0) continue;
        J(a, c) = J(c, a) = bond_j[b];
    }
    return J;
}

Eigen::MatrixXd assemble_D(const VirtualLattice& lat, const ClusterPartition& clusters,
                           const CouplingModel& coupling) {
    const auto sites = lat.occupied_sites();
    const Eigen::MatrixXd absJ = exchange_matrix(lat, sites, coupling.bond_exchange(lat)).cwiseAbs();
    const auto n = absJ.rows();
    Eigen::MatrixXd D = absJ;
    for (Eigen::Index i = 0; i < n; ++i) D(i, i) = -absJ.row(i).sum();
    for (Eigen::Index i = 0; i < n; ++i) {
        const double jc = clusters.jbar[clusters.cluster_of[i]];
        if (jc == 0.0) D.row(i).setZero();  // isolated spin: 0/0 limit
        else D.row(i) /= jc;
    }
    return D;
}

namespace {

Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> stiffness_eigen(const Eigen::MatrixXd& J, double T) {
    const auto n = J.rows();
    Eigen::MatrixXd S2 = 4.0 * T * Eigen::MatrixXd::Identity(n, n) - J;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(S2);
    if (es.info() != Eigen::Success) throw numerical_error("eigensolver failed on 4T I - J");
    return es;
}

}  // namespace

double critical_temperature(const Eigen::MatrixXd& J) {
    if (J.rows() == 0) return 0.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J, Eigen::EigenvaluesOnly);
    return es.eigenvalues().maxCoeff() / 4.0;
}

Eigen::MatrixXd compute_chi0(const Eigen::MatrixXd& J, double T) {
    const auto n = J.rows();
    if (n == 0) return Eigen::MatrixXd(0, 0);
    const auto es = stiffness_eigen(J, T);
    const Eigen::VectorXd& e = es.eigenvalues();
    const double scale = std::max(1.0, e.cwiseAbs().maxCoeff());
    if (e(0) <= 1e-12 * scale) {
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "below critical temperature: 4T I - J has eigenvalue %.6g at T = %.6g", e(0), T);
        throw phase_error(buf);
    }
    const Eigen::MatrixXd& V = es.eigenvectors();
    Eigen::MatrixXd chi0 = V * e.cwiseInverse().asDiagonal() * V.transpose();
    return 0.5 * (chi0 + chi0.transpose());
}

SystemMatrices assemble_P(const VirtualLattice& lat, const CouplingModel& coupling,
                          const RelaxationModel& relaxation, double T) {
    if (!(T > 0)) throw domain_error("temperature must be positive");
    const auto bond_j = coupling.bond_exchange(lat);
    std::vector<double> bond_abs(bond_j.size());
    for (std::size_t b = 0; b < bond_j.size(); ++b) bond_abs[b] = std::abs(bond_j[b]);

    SystemMatrices m;
    m.sites = lat.occupied_sites();
    m.clusters = find_clusters(lat, bond_abs);
    m.T = T;
    m.J = exchange_matrix(lat, m.sites, bond_j);
    m.D = assemble_D(lat, m.clusters, coupling);
    const auto rates = relaxation.site_rates(lat);
    m.gamma = Eigen::Map<const Eigen::VectorXd>(rates.data(), static_cast<Eigen::Index>(rates.size()));
    const auto n = m.J.rows();
    m.S2 = 4.0 * T * Eigen::MatrixXd::Identity(n, n) - m.J;
    m.chi0 = compute_chi0(m.J, T);
    m.A = -m.D * m.S2;
    m.A.diagonal() += m.gamma;
    return m;
}

double continuum_diffusion(const SystemMatrices& m, const VirtualLattice& lat, int mode_x) {
    if (lat.bc_x != Boundary::periodic || lat.bc_y != Boundary::periodic || lat.occupied_count() != lat.size())
        throw domain_error("continuum check needs a fully occupied periodic lattice");
    const double q = 2.0 * M_PI * mode_x / (lat.nx * lat.a0);
    const auto n = m.A.rows();
    Eigen::VectorXcd e(n);
    for (Eigen::Index k = 0; k < n; ++k) e(k) = std::polar(1.0, q * lat.position(m.sites[k])[0]);
    const std::complex<double> rq = e.dot(m.A.cast<std::complex<double>>() * e) / double(n);
    const double gamma_bar = m.gamma.size() ? m.gamma.mean() : 0.0;
    return (rq.real() - gamma_bar) / (q * q);
}

double entropy_production(const SystemMatrices& m, const Eigen::VectorXd& ds) {
    const Eigen::VectorXd u = m.S2 * ds;
    return u.dot(m.D * u);
}

std::string matrix_text(const Eigen::MatrixXd& M) {
    std::string out = std::to_string(M.rows()) + " " + std::to_string(M.cols()) + "\n";
    char buf[40];
    for (Eigen::Index i = 0; i < M.rows(); ++i) {
        for (Eigen::Index j = 0; j < M.cols(); ++j) {
            std::snprintf(buf, sizeof buf, "%.17g", M(i, j));
            if (j) out.push_back(' ');
            out += buf;
        }
        out.push_back('\n');
    }
    return out;
}

Eigen::MatrixXd parse_matrix_text(const std::string& text) {
    std::istringstream in(text);
    Eigen::Index r = 0, c = 0;
    if (!(in >> r >> c) || r < 0 || c < 0) throw domain_error("matrix text: bad header");
    Eigen::MatrixXd M(r, c);
    for (Eigen::Index i = 0; i < r; ++i)
        for (Eigen::Index j = 0; j < c; ++j)
            if (!(in >> M(i, j))) throw domain_error("matrix text: truncated body");
    return M;
}

}  // namespace spinflux
