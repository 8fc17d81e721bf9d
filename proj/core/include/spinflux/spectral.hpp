#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

#include "spinflux/couplings.hpp"

namespace spinflux {

enum class SolverPath { automatic, symmetrized, general };

std::string to_string(SolverPath p);

// Modes sorted by ascending rate. right.col(m) = v_m, left.row(m) = v_m^{-1},
// left_w.row(m) = v_m^{-1} W.
struct ParamagnonSpectrum {
    Eigen::VectorXd gamma;
    Eigen::MatrixXd right;
    Eigen::MatrixXd left;
    Eigen::MatrixXd left_w;
    Eigen::VectorXd weight_norm;  // max_j |(v_m^{-1} W)_j|
    std::vector<bool> goldstone;
    double biorthogonality = 0.0;  // max |left * right - I|
    double max_imag = 0.0;         // largest discarded imaginary part (general path)
    SolverPath path = SolverPath::symmetrized;

    int size() const { return static_cast<int>(gamma.size()); }
    int goldstone_count() const;
    double gamma_max() const { return gamma.size() ? gamma.maxCoeff() : 0.0; }
};

inline constexpr double kGoldstoneRate = 1e-10;    // relative to max gamma
inline constexpr double kGoldstoneWeight = 1e-12;  // absolute weight-row norm
inline constexpr double kBiorthTolerance = 1e-8;
inline constexpr double kImagTolerance = 1e-10;    // relative to max |gamma|

ParamagnonSpectrum diagonalize(const SystemMatrices& m, SolverPath path = SolverPath::automatic);

using ComplexMatrix = Eigen::MatrixXcd;

// i sum_m v_m (v_m^{-1} W) / (omega + i gamma_m), Goldstone modes skipped.
ComplexMatrix susceptibility_eigen(const ParamagnonSpectrum& s, double omega);

// i (omega I - P)^{-1} W with P = -i A, by direct LU solve.
ComplexMatrix susceptibility_resolvent(const SystemMatrices& m, double omega);

// mode_index,gamma,weight_norm,is_goldstone
std::string spectrum_csv(const ParamagnonSpectrum& s);

}  // namespace spinflux
