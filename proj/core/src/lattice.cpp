#include "spinflux/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "spinflux/error.hpp"
#include "spinflux/rng.hpp"

namespace spinflux {

std::string to_string(Boundary b) { return b == Boundary::open ? "open" : "periodic"; }

Boundary parse_boundary(const std::string& s) {
    if (s == "open") return Boundary::open;
    if (s == "periodic") return Boundary::periodic;
    throw config_error("unknown boundary condition '" + s + "' (expected open or periodic)");
}

int VirtualLattice::occupied_count() const {
    return static_cast<int>(std::count(occupancy.begin(), occupancy.end(), std::uint8_t{1}));
}

double VirtualLattice::density() const { return size() ? double(occupied_count()) / size() : 0.0; }

std::vector<int> VirtualLattice::occupied_sites() const {
    std::vector<int> out;
    out.reserve(occupancy.size());
    for (int i = 0; i < size(); ++i)
        if (occupied(i)) out.push_back(i);
    return out;
}

std::vector<int> VirtualLattice::neighbors(int i) const {
    std::vector<int> out;
    for (const auto& b : bonds) {
        if (b.i == i) out.push_back(b.j);
        else if (b.j == i) out.push_back(b.i);
    }
    std::sort(out.begin(), out.end());
    return out;
}

VirtualLattice build_lattice(int nx, int ny, Boundary bc_x, Boundary bc_y, double a0) {
    if (nx < 1 || ny < 1) throw domain_error("lattice dimensions must be positive");
    if (bc_x == Boundary::periodic && nx < 3)
        throw domain_error("periodic x axis needs length >= 3, got " + std::to_string(nx));
    if (bc_y == Boundary::periodic && ny < 3)
        throw domain_error("periodic y axis needs length >= 3, got " + std::to_string(ny));
    if (!(a0 > 0)) throw domain_error("lattice spacing must be positive");

    VirtualLattice lat;
    lat.nx = nx;
    lat.ny = ny;
    lat.a0 = a0;
    lat.bc_x = bc_x;
    lat.bc_y = bc_y;
    lat.occupancy.assign(static_cast<std::size_t>(nx) * ny, 1);

    for (int iy = 0; iy < ny; ++iy) {
        for (int ix = 0; ix < nx; ++ix) {
            const int i = lat.index(ix, iy);
            if (ix + 1 < nx || bc_x == Boundary::periodic) {
                const int j = lat.index((ix + 1) % nx, iy);
                lat.bonds.push_back({std::min(i, j), std::max(i, j)});
            }
            if (iy + 1 < ny || bc_y == Boundary::periodic) {
                const int j = lat.index(ix, (iy + 1) % ny);
                lat.bonds.push_back({std::min(i, j), std::max(i, j)});
            }
        }
    }
    std::sort(lat.bonds.begin(), lat.bonds.end(),
              [](const Bond& a, const Bond& b) { return a.i != b.i ? a.i < b.i : a.j < b.j; });
    return lat;
}

int occupied_target(int n_sites, double sigma) {
    return static_cast<int>(std::lround(sigma * n_sites));
}

VirtualLattice sample_vacancies(const VirtualLattice& lat, double sigma, std::uint64_t seed) {
    if (!(sigma >= 0.0 && sigma <= 1.0)) throw domain_error("spin density must lie in [0, 1]");
    VirtualLattice out = lat;
    const int n = lat.size();
    const int keep = occupied_target(n, sigma);

    // partial Fisher-Yates: the first `keep` entries become the occupied set
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    Stream rng(seed);
    for (int k = 0; k < keep; ++k) {
        const auto r = static_cast<int>(rng.below(static_cast<std::uint64_t>(n - k)));
        std::swap(order[k], order[k + r]);
    }
    std::fill(out.occupancy.begin(), out.occupancy.end(), std::uint8_t{0});
    for (int k = 0; k < keep; ++k) out.occupancy[order[k]] = 1;
    return out;
}

namespace {

int find_root(std::vector<int>& parent, int x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

}  // namespace

ClusterPartition find_clusters(const VirtualLattice& lat, const std::vector<double>& bond_abs_j) {
    if (bond_abs_j.size() != lat.bonds.size())
        throw domain_error("exchange magnitudes must be given for every bond");
    const auto sites = lat.occupied_sites();
    std::vector<int> compressed(static_cast<std::size_t>(lat.size()), -1);
    for (std::size_t k = 0; k < sites.size(); ++k) compressed[sites[k]] = static_cast<int>(k);

    const int ns = static_cast<int>(sites.size());
    std::vector<int> parent(static_cast<std::size_t>(ns));
    std::iota(parent.begin(), parent.end(), 0);
    for (std::size_t b = 0; b < lat.bonds.size(); ++b) {
        const int a = compressed[lat.bonds[b].i];
        const int c = compressed[lat.bonds[b].j];
        if (a < 0 || c < 0 || bond_abs_j[b] == 0.0) continue;
        const int ra = find_root(parent, a);
        const int rc = find_root(parent, c);
        // keep the smaller index as root so labels do not depend on bond order
        if (ra != rc) parent[std::max(ra, rc)] = std::min(ra, rc);
    }

    ClusterPartition part;
    part.cluster_of.assign(static_cast<std::size_t>(ns), -1);
    std::vector<int> label_of_root(static_cast<std::size_t>(ns), -1);
    for (int k = 0; k < ns; ++k) {
        const int r = find_root(parent, k);
        if (label_of_root[r] < 0) {
            label_of_root[r] = part.count();
            part.members.push_back(0);
            part.jbar.push_back(0.0);
        }
        const int c = label_of_root[r];
        part.cluster_of[k] = c;
        part.members[c] += 1;
    }
    for (std::size_t b = 0; b < lat.bonds.size(); ++b) {
        const int a = compressed[lat.bonds[b].i];
        const int c = compressed[lat.bonds[b].j];
        if (a < 0 || c < 0) continue;
        part.jbar[part.cluster_of[a]] += 2.0 * bond_abs_j[b];  // ordered pairs (a,c) and (c,a)
    }
    for (int c = 0; c < part.count(); ++c) part.jbar[c] /= part.members[c];
    return part;
}

std::string mask_text(const VirtualLattice& lat) {
    std::string out;
    out.reserve(static_cast<std::size_t>(lat.size() + lat.ny));
    for (int iy = 0; iy < lat.ny; ++iy) {
        for (int ix = 0; ix < lat.nx; ++ix) out.push_back(lat.occupied(lat.index(ix, iy)) ? '1' : '0');
        out.push_back('\n');
    }
    return out;
}

VirtualLattice apply_mask(const VirtualLattice& lat, const std::string& text) {
    VirtualLattice out = lat;
    std::istringstream in(text);
    std::string line;
    int iy = 0;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (iy >= lat.ny) throw domain_error("mask has more rows than the lattice");
        if (static_cast<int>(line.size()) != lat.nx)
            throw domain_error("mask row " + std::to_string(iy) + " has wrong length");
        for (int ix = 0; ix < lat.nx; ++ix) {
            if (line[ix] != '0' && line[ix] != '1') throw domain_error("mask must contain only 0 and 1");
            out.occupancy[lat.index(ix, iy)] = line[ix] == '1';
        }
        ++iy;
    }
    if (iy != lat.ny) throw domain_error("mask has fewer rows than the lattice");
    return out;
}

}  // namespace spinflux
