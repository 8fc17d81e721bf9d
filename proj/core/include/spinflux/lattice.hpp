#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace spinflux {

enum class Boundary { open, periodic };

std::string to_string(Boundary b);
Boundary parse_boundary(const std::string& s);

struct Bond {
    int i;
    int j;  // i < j, virtual-site indices
};

// Square virtual lattice with an occupancy mask. Sites are row-major:
// index = iy * nx + ix.
struct VirtualLattice {
    int nx = 0;
    int ny = 0;
    double a0 = 1.0;
    Boundary bc_x = Boundary::open;
    Boundary bc_y = Boundary::periodic;
    std::vector<std::uint8_t> occupancy;
    std::vector<Bond> bonds;  // every nearest-neighbour pair, regardless of occupancy

    int size() const { return nx * ny; }
    int index(int ix, int iy) const { return iy * nx + ix; }
    int column(int i) const { return i % nx; }
    int row(int i) const { return i / nx; }
    std::array<double, 2> position(int i) const { return {column(i) * a0, row(i) * a0}; }
    bool occupied(int i) const { return occupancy[static_cast<std::size_t>(i)] != 0; }
    int occupied_count() const;
    double density() const;
    std::vector<int> occupied_sites() const;
    std::vector<int> neighbors(int i) const;
};

VirtualLattice build_lattice(int nx, int ny, Boundary bc_x, Boundary bc_y, double a0 = 1.0);

// Number of occupied sites for density sigma: nearest integer to sigma*N.
int occupied_target(int n_sites, double sigma);

// Exactly occupied_target(N, sigma) sites chosen uniformly without replacement.
VirtualLattice sample_vacancies(const VirtualLattice& lat, double sigma, std::uint64_t seed);

// Connected components of occupied sites through bonds with nonzero exchange.
// Indices refer to the compressed occupied-site order of occupied_sites().
struct ClusterPartition {
    std::vector<int> cluster_of;
    std::vector<int> members;      // N_c per cluster
    std::vector<double> jbar;      // (1/N_c) sum over ordered pairs of |J|
    int count() const { return static_cast<int>(members.size()); }
};

// bond_abs_j[b] is |J| on lat.bonds[b].
ClusterPartition find_clusters(const VirtualLattice& lat, const std::vector<double>& bond_abs_j);

// Plain-text mask: one line per row (iy), '0'/'1' per site.
std::string mask_text(const VirtualLattice& lat);
VirtualLattice apply_mask(const VirtualLattice& lat, const std::string& text);

}  // namespace spinflux
