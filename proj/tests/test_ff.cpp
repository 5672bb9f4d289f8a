#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "adsq/ed.hpp"
#include "adsq/ff.hpp"
#include "adsq/model.hpp"

using namespace adsq;

namespace {

ModeBasis modes_for(int N, double rh, double m, double mu) {
    Geometry g(N, 1.0, 1.0, rh);
    ModelParams p;
    p.mass = m;
    p.chem_potential = mu;
    return diagonalize_modes(build_single_particle(g, p));
}

}  // namespace

TEST_CASE("mode energies are sorted and wavefunctions orthonormal") {
    ModeBasis mb = modes_for(10, 1.0, 0.6, -0.2);
    REQUIRE(mb.energies.size() == 10);
    CHECK(std::is_sorted(mb.energies.begin(), mb.energies.end()));
    Eigen::MatrixXcd gram = mb.wavefunctions.adjoint() * mb.wavefunctions;
    CHECK((gram - Eigen::MatrixXcd::Identity(10, 10)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("pinned reference point: ground energy and half-chain entropy") {
    ModeBasis mb = modes_for(10, 1.0, 0.7, -0.3);
    CHECK(ground_energy(mb) == doctest::Approx(-129.091249447811634).epsilon(1e-12));
    Eigen::MatrixXcd C = correlation_matrix(mb);
    CHECK(entanglement_from_correlation(C, 5) ==
          doctest::Approx(0.578559720070299).epsilon(1e-10));
}

TEST_CASE("free-fermion energies match exact diagonalization") {
    struct Pt { double rh, m, mu; };
    for (Pt pt : {Pt{0.0, 0.9, 0.4}, Pt{1.0, -0.5, -0.7}, Pt{5.0, 2.0, 0.0}}) {
        ModeBasis mb = modes_for(6, pt.rh, pt.m, pt.mu);
        Geometry g(6, 1.0, 1.0, pt.rh);
        ModelParams p;
        p.mass = pt.m;
        p.chem_potential = pt.mu;
        GroundResult gr = ground_and_first_excited(build_spin_hamiltonian(g, p), 6);
        CHECK(ground_energy(mb) == doctest::Approx(gr.E0).epsilon(1e-11));
        CHECK(first_excited_energy(mb) == doctest::Approx(gr.E1).epsilon(1e-11));
    }
}

TEST_CASE("correlation matrix is a Hermitian projector for the ground filling") {
    ModeBasis mb = modes_for(12, 2.0, 0.3, 0.5);
    Eigen::MatrixXcd C = correlation_matrix(mb);
    CHECK((C - C.adjoint()).cwiseAbs().maxCoeff() < 1e-13);
    CHECK((C * C - C).cwiseAbs().maxCoeff() < 1e-12);
    // trace = number of negative-energy modes
    int nocc = 0;
    for (Eigen::Index i = 0; i < mb.energies.size(); ++i)
        if (mb.energies[i] < -1e-12) ++nocc;
    CHECK(C.trace().real() == doctest::Approx(static_cast<double>(nocc)).epsilon(1e-12));
}

TEST_CASE("swap occupation moves one particle between edge modes") {
    ModeBasis mb = modes_for(8, 1.0, 1.1, 0.2);
    Eigen::MatrixXcd C0 = correlation_matrix(mb, Occupation::Ground);
    Eigen::MatrixXcd C1 = correlation_matrix(mb, Occupation::GroundWithSwap);
    CHECK(std::abs((C1.trace() - C0.trace()).real()) < 1e-12);  // particle number unchanged
    CHECK((C1 - C0).cwiseAbs().maxCoeff() > 1e-6);              // but the state differs
}

TEST_CASE("entanglement entropy from correlations matches the many-body entropy") {
    Geometry g(8, 1.0, 1.0, 1.0);
    ModelParams p;
    p.mass = 0.8;
    p.chem_potential = -0.1;
    ModeBasis mb = diagonalize_modes(build_single_particle(g, p));
    Eigen::MatrixXcd C = correlation_matrix(mb);
    GroundResult gr = ground_and_first_excited(build_spin_hamiltonian(g, p), 8);
    auto sectors = enumerate_sectors(8);
    Eigen::VectorXcd full = embed(gr.ground, sectors[gr.sector0], 8);
    for (int l : {2, 4, 6})
        CHECK(entanglement_from_correlation(C, l) ==
              doctest::Approx(entanglement_entropy(full, 8, l)).epsilon(1e-9));
}

TEST_CASE("charge profiles sum to the sector charge") {
    Geometry g(10, 0.5, 1.0, 1.0);
    ModelParams p;
    p.mass = 0.4;
    p.chem_potential = 0.9;
    ModeBasis mb = diagonalize_modes(build_single_particle(g, p));
    Eigen::MatrixXcd C = correlation_matrix(mb);
    ChargeProfiles prof = charge_profiles(C, g);
    REQUIRE(prof.flat.size() == 10);
    int nocc = static_cast<int>(std::lround(C.trace().real()));
    // Q_flat = (2k - N)/(2a)
    CHECK(prof.flat.sum() == doctest::Approx((2.0 * nocc - 10.0) / (2.0 * 0.5)).epsilon(1e-10));
    for (int n = 1; n <= 10; ++n)
        CHECK(prof.weighted[n - 1] ==
              doctest::Approx(g.redshift(n) * prof.flat[n - 1]).epsilon(1e-12));
}

TEST_CASE("excited-state charge rearrangement is neutral") {
    ModeBasis mb = modes_for(12, 1.0, 0.6, 0.3);
    Eigen::VectorXd dq = excited_delta_q(mb);
    REQUIRE(dq.size() == 12);
    CHECK(std::abs(dq.sum()) < 1e-12);
    CHECK(dq.cwiseAbs().maxCoeff() > 1e-8);
}

TEST_CASE("bond chirality from correlations matches exact diagonalization") {
    Geometry g(6, 1.0, 1.0, 1.0);
    ModelParams p;
    p.mass = 0.7;
    p.chem_potential = -0.3;
    Eigen::MatrixXcd C = correlation_matrix(diagonalize_modes(build_single_particle(g, p)));
    GroundResult gr = ground_and_first_excited(build_spin_hamiltonian(g, p), 6);
    Eigen::VectorXcd full = embed(gr.ground, enumerate_sectors(6)[gr.sector0], 6);
    for (int i = 1; i < 6; ++i)
        CHECK(kappa_expectation(C, i) ==
              doctest::Approx(expectation(full, operator_kappa(i))).epsilon(1e-10));
}

TEST_CASE("scalar chirality: pinned references and ED cross-check") {
    {
        Eigen::MatrixXcd C = correlation_matrix(modes_for(6, 1.0, 0.7, -0.3));
        CHECK(chi_expectation(C, 2) == doctest::Approx(0.036646721950578852).epsilon(1e-12));
    }
    {
        Eigen::MatrixXcd C = correlation_matrix(modes_for(6, 2.0, 1.5, 0.4));
        CHECK(chi_expectation(C, 1) == doctest::Approx(-0.021033790005579703).epsilon(1e-12));
    }
    Geometry g(6, 1.0, 1.0, 2.0);
    ModelParams p;
    p.mass = 1.5;
    p.chem_potential = 0.4;
    Eigen::MatrixXcd C = correlation_matrix(diagonalize_modes(build_single_particle(g, p)));
    GroundResult gr = ground_and_first_excited(build_spin_hamiltonian(g, p), 6);
    Eigen::VectorXcd full = embed(gr.ground, enumerate_sectors(6)[gr.sector0], 6);
    for (int i = 1; i <= 4; ++i)
        CHECK(chi_expectation(C, i) ==
              doctest::Approx(expectation(full, operator_chi(i))).epsilon(1e-10));
}

TEST_CASE("mean bond chirality at the massless point (pinned references)") {
    auto mean_kappa = [](int N) {
        Geometry g(N, 1.0, 1.0, 0.0);
        ModelParams p;
        Eigen::MatrixXcd C = correlation_matrix(diagonalize_modes(build_single_particle(g, p)));
        double s = 0.0;
        for (int i = 1; i < N; ++i) s += kappa_expectation(C, i);
        return s / (N - 1);
    };
    CHECK(mean_kappa(20) == doctest::Approx(-0.030812978502).epsilon(1e-9));
    CHECK(mean_kappa(40) == doctest::Approx(-0.017848428540).epsilon(1e-9));
    CHECK(mean_kappa(80) == doctest::Approx(-0.010210017146).epsilon(1e-9));
}
