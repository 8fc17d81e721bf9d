#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "spinflux/couplings.hpp"
#include "spinflux/spectral.hpp"

namespace spinflux {

// Per-site 3-vectors over the virtual lattice (row i = site i, columns x,y,z).
struct FluxVector {
    Eigen::MatrixXd F;
    std::string model = "custom";
    double F0 = 1.0;
    int left_col = 0;
    int right_col = 0;
    double width = 0.0;  // W = (right_col - left_col) a0

    // Rows of occupied sites, in SystemMatrices order.
    Eigen::MatrixXd restrict_to(const std::vector<int>& sites) const;
};

// +F0 z on column 0, -F0 z on column nx-1.
FluxVector edge_flux_vector(const VirtualLattice& lat, double F0 = 1.0);

// Per-mode flux weights. c_m = sum_a (F^a . v_m)(v_m^{-1} W F^a), w_m = c_m / gamma_m.
// `contributing` excludes Goldstone modes and dust below 1e-14 max|w|.
struct ModeWeights {
    Eigen::VectorXd gamma;
    Eigen::VectorXd c;
    Eigen::VectorXd w;
    std::vector<bool> contributing;

    double total() const;  // sum of w over contributing modes
};

ModeWeights mode_weights(const ParamagnonSpectrum& s, const SystemMatrices& m, const FluxVector& f);

// Pairs (gamma_m, w_m) of contributing modes only.
struct ModeList {
    std::vector<double> gamma;
    std::vector<double> w;
    double gamma_max = 0.0;  // largest rate of the instance, contributing or not
};

ModeList contributing_modes(const ModeWeights& mw);

struct FluxDensity {
    std::vector<double> gamma;
    std::vector<double> rho;
    double sigma_gamma = 0.0;
};

// Uniform grid of `points` values on [0, 1.2 gamma_max].
std::vector<double> default_gamma_grid(double gamma_max, int points = 400);

// Sum of unit-area Gaussians of width broadening_frac * gamma_max at each mode.
FluxDensity flux_density(const ModeList& modes, const std::vector<double>& grid, double broadening_frac = 0.1);

struct NoiseSpectrum {
    std::vector<double> omega;
    std::vector<double> S;
    std::vector<double> S_minus;  // S(omega) - S(-omega)
    double T = 0.0;
};

// 2 omega / (1 - exp(-omega/T)); 2T at omega = 0.
double bose_prefactor(double omega, double T);

// sum_m w_m gamma_m / (omega^2 + gamma_m^2)
double lorentz_sum(const ModeList& modes, double omega);

double flux_noise_at(const ModeList& modes, double T, double omega);
NoiseSpectrum flux_noise(const ModeList& modes, double T, const std::vector<double>& omega);

// [2/(1 - exp(-omega/T))] (1/omega) sum_a F^a W F^a
double high_freq_bound(const SystemMatrices& m, const FluxVector& f, double T, double omega);

// sum_a F^a chi0 F^a
double isothermal_weight(const SystemMatrices& m, const FluxVector& f);

// Weight frozen in conserved cluster magnetizations: clusters with Gamma = 0 on
// every site contribute sum_a (F^a chi0 1_c)^2 / (1_c chi0 1_c).
double conserved_weight(const SystemMatrices& m, const FluxVector& f);

std::string density_csv(const FluxDensity& d, const std::string& source);
std::string noise_csv(const NoiseSpectrum& n, const std::string& source);

}  // namespace spinflux
