#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spinflux/couplings.hpp"
#include "spinflux/fluxnoise.hpp"
#include "spinflux/lattice.hpp"
#include "spinflux/spectral.hpp"

namespace spinflux {

struct PowerLawFit {
    double alpha = 0.0;
    double C = 0.0;
    double lo = 0.0;
    double hi = 0.0;
    double r2 = 0.0;
    double alpha_stderr = 0.0;
    int points = 0;
    std::string estimator;
};

// Least squares of log10(y) on log10(x) over points with lo <= x <= hi.
PowerLawFit fit_power_law(const std::vector<double>& x, const std::vector<double>& y, double lo, double hi);

// Either the central `decades` of the contributing-rate range, or [lo, hi].
struct FitWindow {
    enum class Kind { central, explicit_range };
    Kind kind = Kind::central;
    double decades = 2.0;
    double lo = 0.0;
    double hi = 0.0;

    static FitWindow central(double decades = 2.0) { return {Kind::central, decades, 0, 0}; }
    static FitWindow range(double lo, double hi) { return {Kind::explicit_range, 0, lo, hi}; }
    std::pair<double, double> resolve(double gmin, double gmax) const;
};

// Modes of M instances merged and sorted by rate.
struct ModePool {
    std::vector<double> gamma;
    std::vector<double> w;
    int instances = 0;

    static ModePool merge(const std::vector<ModeList>& lists);
    double gamma_min() const { return gamma.empty() ? 0.0 : gamma.front(); }
    double gamma_max() const { return gamma.empty() ? 0.0 : gamma.back(); }
};

// Equal-count adaptive histogram: bins of k consecutive rates (about
// points_per_decade bins per decade), edges at midpoints to neighbouring rates,
// abscissa at the geometric mean of the bin. Per-instance density.
struct DensityPoints {
    std::vector<double> gamma;
    std::vector<double> rho;
};
DensityPoints mode_spacing_density(const ModePool& pool, double points_per_decade = 10.0);

inline constexpr int kFitGridPoints = 60;

// alpha from the mode-spacing density, interpolated log-log onto a log grid.
PowerLawFit fit_density_exponent(const ModePool& pool, const FitWindow& window);

// alpha from sum_m w_m gamma_m/(omega^2+gamma_m^2) / M on a log grid in the window.
PowerLawFit fit_noise_exponent(const ModePool& pool, const FitWindow& window);

// One disorder instance of the edge-flux model.
struct InstanceConfig {
    int nx = 20;
    int ny = 20;
    Boundary bc_x = Boundary::open;
    Boundary bc_y = Boundary::periodic;
    double a0 = 1.0;
    double sigma = 1.0;
    double J = 1.0;
    RelaxationModel relaxation;  // seed is replaced per instance for spin_1f
    double T = 12.0;
    double F0 = 1.0;
    SolverPath path = SolverPath::automatic;
};

struct InstanceResult {
    std::uint64_t seed = 0;
    int occupied = 0;
    int clusters = 0;
    int goldstone = 0;
    ModeList modes;
    double sum_weight = 0.0;
    double isothermal = 0.0;
    double conserved = 0.0;
};

VirtualLattice instance_lattice(const InstanceConfig& c, std::uint64_t seed);
RelaxationModel instance_relaxation(const InstanceConfig& c, std::uint64_t seed);
InstanceResult run_instance(const InstanceConfig& c, std::uint64_t seed);

struct EnsembleConfig {
    InstanceConfig instance;
    int M = 512;
    std::uint64_t master_seed = 1;
    int threads = 1;
    int grid_points = 400;
    double broadening_frac = 0.1;
    FitWindow window;
    std::vector<double> omega;  // empty: derived from the pooled rates
};

struct EnsembleResult {
    int M = 0;
    std::uint64_t master_seed = 0;
    std::vector<std::uint64_t> seeds;
    std::vector<InstanceResult> instances;
    FluxDensity rho;                 // instance-ordered mean of broadened densities
    std::vector<double> rho_stderr;
    NoiseSpectrum noise;             // mean exact-sum spectra
    ModePool pool;
    PowerLawFit fit_rho;
    PowerLawFit fit_noise;
    double alpha_mean = 0.0;         // per-instance fits, diagnostics only
    double alpha_spread = 0.0;
    double gamma_max = 0.0;
};

std::vector<double> log_grid(double lo, double hi, int n);

EnsembleResult ensemble_run(const EnsembleConfig& config);

struct SweepRow {
    double T = 0.0;
    PowerLawFit fit_rho;
    PowerLawFit fit_noise;
    double amplitude = 0.0;
};

// Amplitude is S(omega_ref, T) / S(omega_ref, T_ref) on the same ensemble.
std::vector<SweepRow> temperature_sweep(const EnsembleConfig& config, const std::vector<double>& T_list,
                                        double omega_ref = 0.1, double T_ref = 10.0);

// Runs fn(k) for k in [0, n) on `threads` workers.
template <class Fn>
void parallel_for(int n, int threads, Fn&& fn);

std::string sweep_csv(const std::vector<SweepRow>& rows, bool noise_estimator);
std::string fit_csv(const std::vector<std::pair<std::string, PowerLawFit>>& fits);
std::string ensemble_density_csv(const EnsembleResult& r);

}  // namespace spinflux

#include "spinflux/detail/parallel.hpp"
