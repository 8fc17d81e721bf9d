#include <cmath>
#include <complex>

#include "doctest.h"
#include "spinflux/error.hpp"
#include "spinflux/rng.hpp"
#include "spinflux/spectral.hpp"

using namespace spinflux;

namespace {

SystemMatrices random_instance(std::uint64_t seed, RelaxationKind kind = RelaxationKind::spin_1f) {
    const auto lat = sample_vacancies(build_lattice(7, 7, Boundary::open, Boundary::periodic), 0.8, seed);
    CouplingModel c;
    c.J = (seed % 2) ? 1.0 : -1.0;
    RelaxationModel r;
    r.kind = kind;
    r.gamma_bar = 0.5;
    r.seed = derive_seed(seed, 1);
    return assemble_P(lat, c, r, 3.0);
}

}  // namespace

TEST_CASE("diagonal relaxation matrix") {
    auto lat = build_lattice(3, 1, Boundary::open, Boundary::open);
    CouplingModel c;
    c.J = 0.0;
    RelaxationModel r;
    r.kind = RelaxationKind::spin_1f;
    r.seed = 4;
    const auto m = assemble_P(lat, c, r, 1.0);
    const auto s = diagonalize(m);
    Eigen::VectorXd sorted = m.gamma;
    std::sort(sorted.data(), sorted.data() + sorted.size());
    CHECK((s.gamma - sorted).cwiseAbs().maxCoeff() < 1e-14);
    for (int k = 0; k < 3; ++k) CHECK(s.right.col(k).cwiseAbs().maxCoeff() == doctest::Approx(1.0));
}

TEST_CASE("bonded pair rates") {
    const auto lat = build_lattice(2, 1, Boundary::open, Boundary::open);
    CouplingModel fm, afm;
    afm.J = -1.0;
    for (auto path : {SolverPath::symmetrized, SolverPath::general}) {
        const auto sf = diagonalize(assemble_P(lat, fm, {}, 12.0), path);
        CHECK(std::abs(sf.gamma(0)) < 1e-12);
        CHECK(sf.gamma(1) == doctest::Approx(98.0));
        CHECK(sf.goldstone[0]);
        CHECK(sf.goldstone_count() == 1);
        const auto sa = diagonalize(assemble_P(lat, afm, {}, 12.0), path);
        CHECK(sa.gamma(1) == doctest::Approx(94.0));
    }
}

TEST_CASE("single spin susceptibility") {
    const auto lat = build_lattice(1, 1, Boundary::open, Boundary::open);
    RelaxationModel r;
    r.kind = RelaxationKind::uniform;
    r.gamma_bar = 0.7;
    const double T = 2.0;
    const auto m = assemble_P(lat, {}, r, T);
    const auto s = diagonalize(m);
    for (double w : {0.0, 0.1, 1.0, 30.0}) {
        const std::complex<double> ref = std::complex<double>(0, 0.7) / (4 * T * std::complex<double>(w, 0.7));
        CHECK(std::abs(susceptibility_eigen(s, w)(0, 0) - ref) < 1e-15);
        CHECK(std::abs(susceptibility_resolvent(m, w)(0, 0) - ref) < 1e-15);
    }
}

TEST_CASE("static limit recovers chi0 when every cluster relaxes") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto m = random_instance(seed);
        const auto chi = susceptibility_eigen(diagonalize(m), 0.0);
        CHECK((chi.real() - m.chi0).cwiseAbs().maxCoeff() < 1e-10 * m.chi0.cwiseAbs().maxCoeff());
        CHECK(chi.imag().cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("high frequency tail approaches iW/omega") {
    const auto m = random_instance(3);
    const auto s = diagonalize(m);
    const double w = 1e4 * s.gamma_max();
    const auto chi = susceptibility_eigen(s, w);
    const Eigen::MatrixXcd ref = std::complex<double>(0, 1) * m.W().cast<std::complex<double>>() / w;
    const double scale = ref.cwiseAbs().maxCoeff();
    CHECK((chi - ref).cwiseAbs().maxCoeff() / scale < s.gamma_max() / w);
    CHECK(susceptibility_eigen(s, 10 * w).cwiseAbs().maxCoeff() < 0.11 * chi.cwiseAbs().maxCoeff());
}

TEST_CASE("eigen expansion matches the resolvent") {
    for (std::uint64_t seed = 10; seed < 14; ++seed) {
        const auto m = random_instance(seed);
        const auto s = diagonalize(m);
        CHECK(s.path == SolverPath::general);
        for (double w : {1e-3, 0.1, 1.0, 17.0}) {
            const double dev = (susceptibility_eigen(s, w) - susceptibility_resolvent(m, w)).cwiseAbs().maxCoeff();
            CHECK(dev < 1e-9);
        }
    }
}

TEST_CASE("symmetrized and general paths agree for uniform relaxation") {
    const auto m = random_instance(7, RelaxationKind::uniform);
    const auto a = diagonalize(m, SolverPath::symmetrized), b = diagonalize(m, SolverPath::general);
    CHECK((a.gamma - b.gamma).cwiseAbs().maxCoeff() < 1e-10 * a.gamma_max());
    for (double w : {0.05, 2.0}) {
        CHECK((susceptibility_eigen(a, w) - susceptibility_eigen(b, w)).cwiseAbs().maxCoeff() < 1e-10);
    }
}

TEST_CASE("Goldstone modes carry no weight") {
    const auto m = random_instance(21, RelaxationKind::zero);
    const auto s = diagonalize(m);
    CHECK(s.goldstone_count() == m.clusters.count());
    for (int k = 0; k < s.size(); ++k)
        if (s.goldstone[k]) CHECK(s.weight_norm(k) < kGoldstoneWeight);
    try {
        susceptibility_resolvent(m, 0.0);
        FAIL("expected a domain error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::domain);
    }
}

TEST_CASE("spectrum csv header") {
    const auto s = diagonalize(random_instance(2));
    const auto csv = spectrum_csv(s);
    CHECK(csv.rfind("mode_index,gamma,weight_norm,is_goldstone\n", 0) == 0);
}
