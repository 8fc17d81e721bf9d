#pragma once

#include <complex>
#include <string>
#include <vector>

#include "spinflux/couplings.hpp"
#include "spinflux/lattice.hpp"

namespace spinflux {

// Spatial averages replacing the disordered instance by a translation-invariant one.
// jbar_x, jbar_y are the bond averages along +x and +y, normalised by N sigma^2.
struct HAParameters {
    double sigma = 1.0;
    double jbar_x = 1.0;
    double jbar_y = 1.0;
    double gamma_bar = 0.0;
    int nsx = 20;
    double nsy = 20.0;  // N_s / N_sx
    double a0 = 1.0;
    double W = 19.0;
    double F0 = 1.0;

    double jbar() const { return 0.5 * (jbar_x + jbar_y); }
};

HAParameters ha_from_instance(const VirtualLattice& lat, const CouplingModel& coupling,
                              const std::vector<double>& site_rates);

// D~(q) = -[sin^2(qx a0/2) + sin^2(qy a0/2)]
double ha_dq(const HAParameters& p, double qx, double qy);
// J~(q) = 2 sigma [jbar_x cos(qx a0) + jbar_y cos(qy a0)]
double ha_jq(const HAParameters& p, double qx, double qy);

// Curie-Weiss temperature J~(q)/4.
double ha_tcw(const HAParameters& p, double qx, double qy);

double ha_gamma_q(const HAParameters& p, double qx, double qy, double T);
std::complex<double> ha_chi_q(const HAParameters& p, double qx, double qy, double omega, double T);
double ha_spin_noise(const HAParameters& p, double qx, double qy, double omega, double T);

// Rates over the N_sx x N_sy Brillouin zone of a periodic lattice, sorted.
std::vector<double> ha_rates(const HAParameters& p, int nsy, double T);

// Edge-model flux noise summed over q = (2 pi/(N_sx a0))(n - N_sx/2).
double ha_flux_noise(const HAParameters& p, double omega, double T);

// Third-principles model: gamma_q = D q^2 + Gamma.
struct InfinitePlaneModel {
    double D = 1.0;
    double gamma_bar = 0.0;
    double W = 19.0;
    double a0 = 1.0;
    double F0 = 1.0;
    double nsy = 20.0;
    double T = 12.0;
    double J = 1.0;
    bool average_interference = true;  // replace sin^2 by 1/2

    double gamma_min() const { return gamma_bar; }
    double gamma_max() const;
};

double infinite_plane_rho(const InfinitePlaneModel& m, double gamma);

// Integral of x^{1-alpha}/(1+x^2) over [gamma_min/omega, gamma_max/omega].
double b_alpha(double alpha, double gamma_min, double gamma_max, double omega);

// Closed-form limit pi / (2 sin(pi alpha / 2)).
double b_alpha_limit(double alpha);

// [2 omega/(1 - e^{-omega/T})] C b_alpha(omega) / omega^alpha
double sphi_closed_form(double C, double alpha, double gamma_min, double gamma_max, double T, double omega);

// Power-law amplitude from the sum rule: sigma (1-alpha) sum|F|^2 / (4 (T - sigma J) gmax^{1-alpha}).
double sum_rule_amplitude(double sigma_jbar, double sigma_sum_f2, double alpha, double gamma_max, double T);

// T / (T - sigma J)
double amplitude_ratio(double sigma_jbar, double T);

// S^- = sigma (1-alpha) sum|F|^2 / (2 gmax^{1-alpha} (T - sigma J)) |omega|^{1-alpha} b_alpha
struct AntisymmetricInputs {
    double sigma_jbar = 1.0;
    double sigma_sum_f2 = 1.0;
    double gamma_min = 0.0;
    double gamma_max = 1.0;
};
double antisymmetric_noise_ha(const AntisymmetricInputs& p, double alpha, double omega, double T);

}  // namespace spinflux
