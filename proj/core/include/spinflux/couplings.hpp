#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "spinflux/lattice.hpp"

namespace spinflux {

// Nondimensional units: hbar = k_B = d0 = |J| = F0 = 1. Rates are in d0|J|/hbar,
// temperatures in |J|/k_B.
struct UnitSystem {
    double energy = 1.0;       // |J|
    double rate = 1.0;         // d0 |J| / hbar
    double temperature = 1.0;  // |J| / k_B
    double flux = 1.0;         // F0
    static std::string note();
};

// Nearest-neighbour exchange (J > 0 ferromagnetic). A non-empty bond_override
// replaces J bond by bond (same order as VirtualLattice::bonds).
struct CouplingModel {
    double J = 1.0;
    std::vector<double> bond_override;

    std::vector<double> bond_exchange(const VirtualLattice& lat) const;
};

enum class RelaxationKind { zero, uniform, spin_1f };

std::string to_string(RelaxationKind k);
RelaxationKind parse_relaxation(const std::string& s);

// spin_1f: Gamma_i = gamma_max * exp(-lambda_max * r_i), r_i uniform on [0,1).
struct RelaxationModel {
    RelaxationKind kind = RelaxationKind::zero;
    double gamma_bar = 0.0;
    double gamma_max = 10.0;
    double lambda_max = 20.0;
    std::uint64_t seed = 0;

    // One rate per occupied site, in occupied-site order.
    std::vector<double> site_rates(const VirtualLattice& lat) const;
    double gamma_min() const;
};

// Dense matrices over occupied sites only.
struct SystemMatrices {
    std::vector<int> sites;  // virtual index of each row
    ClusterPartition clusters;
    double T = 0.0;
    Eigen::MatrixXd J;
    Eigen::MatrixXd D;
    Eigen::VectorXd gamma;
    Eigen::MatrixXd S2;    // 4T I - J
    Eigen::MatrixXd chi0;  // S2^{-1}
    Eigen::MatrixXd A;     // i P = diag(Gamma) - D S2, real

    int size() const { return static_cast<int>(sites.size()); }
    bool uniform_gamma() const;
    Eigen::MatrixXd W() const;  // diag(Gamma) chi0 - D
};

Eigen::MatrixXd exchange_matrix(const VirtualLattice& lat, const std::vector<int>& sites,
                                const std::vector<double>& bond_j);

Eigen::MatrixXd assemble_D(const VirtualLattice& lat, const ClusterPartition& clusters,
                           const CouplingModel& coupling);

// Throws a phase error if 4T I - J is not positive definite.
Eigen::MatrixXd compute_chi0(const Eigen::MatrixXd& J, double T);

SystemMatrices assemble_P(const VirtualLattice& lat, const CouplingModel& coupling,
                          const RelaxationModel& relaxation, double T);

// Smallest temperature at which 4T I - J stays positive definite.
double critical_temperature(const Eigen::MatrixXd& J);

// Effective diffusion constant gamma_q / q^2 from the plane wave exp(i q x),
// q = 2 pi mode_x / (nx a0), on a fully occupied periodic lattice.
double continuum_diffusion(const SystemMatrices& m, const VirtualLattice& lat, int mode_x);

// ds^T S2 D S2 ds; non-positive for Gamma = 0.
double entropy_production(const SystemMatrices& m, const Eigen::VectorXd& ds);

// Dense text: "rows cols" header, then one row per line.
std::string matrix_text(const Eigen::MatrixXd& M);
Eigen::MatrixXd parse_matrix_text(const std::string& text);

}  // namespace spinflux
