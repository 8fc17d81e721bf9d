#include "spinflux/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "spinflux/error.hpp"

namespace spinflux {

std::string to_string(SolverPath p) {
    switch (p) {
        case SolverPath::automatic: return "automatic";
        case SolverPath::symmetrized: return "symmetrized";
        case SolverPath::general: return "general";
    }
    return "automatic";
}

int ParamagnonSpectrum::goldstone_count() const {
    return static_cast<int>(std::count(goldstone.begin(), goldstone.end(), true));
}

namespace {

struct RawModes {
    Eigen::VectorXd gamma;
    Eigen::MatrixXd right;
    Eigen::MatrixXd left;
    double max_imag = 0.0;
};

RawModes symmetrized_modes(const SystemMatrices& m) {
    const auto n = m.A.rows();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m.S2);
    if (es.info() != Eigen::Success) throw numerical_error("eigensolver failed on 4T I - J");
    const Eigen::VectorXd root = es.eigenvalues().cwiseSqrt();
    const Eigen::MatrixXd& V = es.eigenvectors();
    const Eigen::MatrixXd S = V * root.asDiagonal() * V.transpose();
    const Eigen::MatrixXd Sinv = V * root.cwiseInverse().asDiagonal() * V.transpose();

    const double gbar = n ? m.gamma(0) : 0.0;
    Eigen::MatrixXd B = -S * m.D * S;
    B = 0.5 * (B + B.transpose());
    B.diagonal().array() += gbar;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eb(B);
    if (eb.info() != Eigen::Success) throw numerical_error("symmetric eigensolver did not converge");

    RawModes r;
    r.gamma = eb.eigenvalues();
    r.right = Sinv * eb.eigenvectors();
    r.left = eb.eigenvectors().transpose() * S;
    return r;
}

RawModes general_modes(const SystemMatrices& m) {
    const auto n = m.A.rows();
    Eigen::EigenSolver<Eigen::MatrixXd> es(m.A, true);
    if (es.info() != Eigen::Success) throw numerical_error("non-symmetric eigensolver did not converge");
    const Eigen::VectorXcd lam = es.eigenvalues();
    const Eigen::MatrixXcd vec = es.eigenvectors();
    const double scale = n ? lam.cwiseAbs().maxCoeff() : 0.0;

    RawModes r;
    r.gamma.resize(n);
    r.right.resize(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        const double im = std::abs(lam(k).imag());
        r.max_imag = std::max(r.max_imag, im);
        if (im > kImagTolerance * scale) {
            char buf[200];
            std::snprintf(buf, sizeof buf,
                          "complex paramagnon rate %.6g%+.6gi exceeds the realness tolerance",
                          lam(k).real(), lam(k).imag());
            throw numerical_error(buf);
        }
        r.gamma(k) = lam(k).real();
        if (lam(k).imag() != 0.0 && k + 1 < n && lam(k + 1) == std::conj(lam(k))) {
            // numerically split pair: keep the real invariant subspace
            r.gamma(k + 1) = lam(k + 1).real();
            r.right.col(k) = vec.col(k).real().normalized();
            r.right.col(k + 1) = vec.col(k).imag().normalized();
            ++k;
            continue;
        }
        r.right.col(k) = vec.col(k).real();
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(r.right);
    if (!lu.isInvertible()) throw numerical_error("right eigenvector matrix is singular");
    r.left = lu.inverse();
    return r;
}

}  // namespace

ParamagnonSpectrum diagonalize(const SystemMatrices& m, SolverPath path) {
    if (path == SolverPath::automatic)
        path = m.uniform_gamma() ? SolverPath::symmetrized : SolverPath::general;
    if (path == SolverPath::symmetrized && !m.uniform_gamma())
        throw domain_error("symmetrized solver requires uniform relaxation rates");

    RawModes raw = path == SolverPath::symmetrized ? symmetrized_modes(m) : general_modes(m);
    const auto n = raw.gamma.size();

    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Eigen::Index a, Eigen::Index b) { return raw.gamma(a) < raw.gamma(b); });

    ParamagnonSpectrum s;
    s.path = path;
    s.max_imag = raw.max_imag;
    s.gamma.resize(n);
    s.right.resize(n, n);
    s.left.resize(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        s.gamma(k) = raw.gamma(order[k]);
        s.right.col(k) = raw.right.col(order[k]);
        s.left.row(k) = raw.left.row(order[k]);
    }

    s.biorthogonality = n ? (s.left * s.right - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff() : 0.0;
    if (s.biorthogonality > kBiorthTolerance) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "ill-conditioned eigenvectors: biorthogonality residual %.3g",
                      s.biorthogonality);
        throw numerical_error(buf);
    }

    const double gmax = n ? s.gamma.cwiseAbs().maxCoeff() : 0.0;
    for (Eigen::Index k = 0; k < n; ++k) {
        if (s.gamma(k) < -kGoldstoneRate * gmax) {
            char buf[160];
            std::snprintf(buf, sizeof buf, "unstable paramagnon mode with rate %.6g at T = %.6g",
                          s.gamma(k), m.T);
            throw phase_error(buf);
        }
    }

    s.left_w = s.left * m.W();
    s.weight_norm = n ? Eigen::VectorXd(s.left_w.cwiseAbs().rowwise().maxCoeff()) : Eigen::VectorXd();
    s.goldstone.assign(static_cast<std::size_t>(n), false);
    for (Eigen::Index k = 0; k < n; ++k)
        s.goldstone[k] = std::abs(s.gamma(k)) < kGoldstoneRate * gmax && s.weight_norm(k) < kGoldstoneWeight;
    return s;
}

ComplexMatrix susceptibility_eigen(const ParamagnonSpectrum& s, double omega) {
    const auto n = s.gamma.size();
    const std::complex<double> I(0.0, 1.0);
    Eigen::VectorXcd f(n);
    for (Eigen::Index k = 0; k < n; ++k)
        f(k) = s.goldstone[k] ? 0.0 : I / (omega + I * s.gamma(k));
    return s.right.cast<std::complex<double>>() * f.asDiagonal() * s.left_w.cast<std::complex<double>>();
}

ComplexMatrix susceptibility_resolvent(const SystemMatrices& m, double omega) {
    const auto n = m.A.rows();
    if (omega == 0.0) {
        std::vector<bool> relaxing(static_cast<std::size_t>(m.clusters.count()), false);
        for (Eigen::Index k = 0; k < n; ++k)
            if (m.gamma(k) != 0.0) relaxing[m.clusters.cluster_of[k]] = true;
        if (std::find(relaxing.begin(), relaxing.end(), false) != relaxing.end())
            throw domain_error("Goldstone singularity: resolvent is singular at omega = 0 with Gamma = 0");
    }
    const std::complex<double> I(0.0, 1.0);
    ComplexMatrix lhs = I * m.A.cast<std::complex<double>>();
    lhs.diagonal().array() += omega;
    const ComplexMatrix rhs = I * m.W().cast<std::complex<double>>();
    return lhs.partialPivLu().solve(rhs);
}

std::string spectrum_csv(const ParamagnonSpectrum& s) {
    std::string out = "mode_index,gamma,weight_norm,is_goldstone\n";
    char buf[128];
    for (int k = 0; k < s.size(); ++k) {
        std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g,%d\n", k, s.gamma(k), s.weight_norm(k),
                      s.goldstone[k] ? 1 : 0);
        out += buf;
    }
    return out;
}

}  // namespace spinflux
