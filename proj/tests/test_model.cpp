#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "adsq/ed.hpp"
#include "adsq/model.hpp"

using namespace adsq;

TEST_CASE("single-particle matrix entries for the two-site chain") {
    // alpha_1 = 1 when a = L = 1, r_h = 0: hopping -1/2, chiral -i/4 on the bond.
    Geometry g(2, 1.0, 1.0, 0.0);
    ModelParams p;
    p.mass = 0.3;
    p.chem_potential = 0.2;
    SingleParticle sp = build_single_particle(g, p);
    REQUIRE(sp.matrix.rows() == 2);
    CHECK(sp.matrix(0, 1).real() == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(sp.matrix(0, 1).imag() == doctest::Approx(-0.25).epsilon(1e-15));
    // diagonal: m (-1)^n alpha_n - mu alpha_n
    CHECK(sp.matrix(0, 0).real() == doctest::Approx(-0.3 - 0.2).epsilon(1e-14));
    double a2 = g.redshift(2);
    CHECK(sp.matrix(1, 1).real() == doctest::Approx((0.3 - 0.2) * a2).epsilon(1e-14));
    // Hermitian
    CHECK(std::abs(sp.matrix(1, 0) - std::conj(sp.matrix(0, 1))) < 1e-15);
}

TEST_CASE("half-filled sector off-diagonal element of the two-site Hamiltonian") {
    Geometry g(2, 1.0, 1.0, 0.0);
    ModelParams p;
    p.mass = 0.3;
    p.chem_potential = 0.2;
    auto sectors = enumerate_sectors(2);
    Eigen::MatrixXcd M = sector_matrix(build_spin_hamiltonian(g, p), sectors[1]);
    CHECK(M(0, 1).real() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(M(0, 1).imag() == doctest::Approx(-0.25).epsilon(1e-15));
}

TEST_CASE("four-site ground and first excited energies (pinned reference)") {
    Geometry g(4, 1.0, 1.0, 1.0);
    ModelParams p;
    p.mass = 1.0;
    GroundResult gr = ground_and_first_excited(build_spin_hamiltonian(g, p), 4);
    CHECK(gr.E0 == doctest::Approx(-11.348434498354495).epsilon(1e-12));
    CHECK(gr.E1 == doctest::Approx(-9.263392140284214).epsilon(1e-12));
}

TEST_CASE("constant offset matches the closed form without disorder") {
    Geometry g(8, 1.0, 1.0, 2.0);
    ModelParams p;
    p.mass = 0.7;
    p.chem_potential = -0.4;
    SingleParticle sp = build_single_particle(g, p);
    double expected = 0.0;
    for (int n = 1; n <= 8; ++n)
        expected += 0.5 * p.chem_potential * g.redshift(n) * (1.0 - ((n % 2 == 0) ? 1.0 : -1.0));
    CHECK(sp.const_offset == doctest::Approx(expected).epsilon(1e-13));
}

TEST_CASE("unscaled field variant has uniform hopping") {
    Geometry g(10, 1.0, 1.0, 2.0);
    ModelParams p;
    p.mass = 1.0;
    p.scaling = FieldScaling::Unscaled;
    SingleParticle sp = build_single_particle(g, p);
    for (int n = 0; n < 9; ++n)
        CHECK(sp.matrix(n, n + 1).real() == doctest::Approx(-0.5).epsilon(1e-14));
    // diagonal carries w_n = 1/alpha_n
    for (int n = 1; n <= 10; ++n) {
        double w = 1.0 / g.redshift(n);
        double sign = (n % 2 == 0) ? 1.0 : -1.0;
        CHECK(sp.matrix(n - 1, n - 1).real() == doctest::Approx(sign * w).epsilon(1e-13));
    }
}

TEST_CASE("effective redshift mode rescales the couplings") {
    Geometry g(6, 1.0, 1.0, 1.0);
    ModelParams raw, eff;
    raw.mass = eff.mass = 0.5;
    eff.redshift_mode = RedshiftMode::Effective;
    SingleParticle hr = build_single_particle(g, raw);
    SingleParticle he = build_single_particle(g, eff);
    double aN = g.redshift(6);
    // mass diagonal scales by 1/alpha_N
    CHECK(he.matrix(0, 0).real() == doctest::Approx(hr.matrix(0, 0).real() / aN).epsilon(1e-13));
    // hopping scales by 1/alpha_N^2
    CHECK(he.matrix(0, 1).real() ==
          doctest::Approx(hr.matrix(0, 1).real() / (aN * aN)).epsilon(1e-13));
}

TEST_CASE("disorder fields are deterministic, bounded and sample-dependent") {
    Geometry g(12, 1.0, 1.0, 0.0);
    auto h1 = build_disorder_fields(g, 2.5, 42, 0);
    auto h2 = build_disorder_fields(g, 2.5, 42, 0);
    auto h3 = build_disorder_fields(g, 2.5, 42, 1);
    auto h4 = build_disorder_fields(g, 2.5, 43, 0);
    REQUIRE(h1.size() == 12);
    CHECK(h1 == h2);
    CHECK(h1 != h3);
    CHECK(h1 != h4);
    for (double v : h1) {
        CHECK(v >= -2.5);
        CHECK(v <= 2.5);
    }
    // W = 0 means no fields
    for (double v : build_disorder_fields(g, 0.0, 42, 0)) CHECK(v == 0.0);
}

TEST_CASE("disordered spin and single-particle Hamiltonians stay consistent") {
    Geometry g(6, 1.0, 1.0, 1.0);
    ModelParams p;
    p.mass = 0.25;
    p.chem_potential = 0.1;
    auto h = build_disorder_fields(g, 3.0, 7, 2);
    GroundResult gr = ground_and_first_excited(build_spin_hamiltonian(g, p, &h), 6);
    // reference: diagonalize the quadratic form directly
    SingleParticle sp = build_single_particle(g, p, &h);
    Eigen::MatrixXcd M = sp.matrix;
    Eigen::VectorXd w;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(M);
    double e0 = sp.const_offset;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
        if (es.eigenvalues()[i] < 0) e0 += es.eigenvalues()[i];
    CHECK(gr.E0 == doctest::Approx(e0).epsilon(1e-12));
}

TEST_CASE("the flat charge commutes with the Hamiltonian") {
    Geometry g(8, 1.0, 1.0, 1.0);
    ModelParams p;
    p.mass = 1.3;
    p.chem_potential = -0.6;
    Eigen::MatrixXcd H = dense_matrix(build_spin_hamiltonian(g, p), 8);
    Eigen::MatrixXcd Q = dense_matrix(operator_q_flat(g), 8);
    CHECK((H * Q - Q * H).cwiseAbs().maxCoeff() < 1e-11);
    // both charges are diagonal in the occupation basis and commute with each other
    Eigen::MatrixXcd Qw = dense_matrix(operator_q_weighted(g), 8);
    CHECK((Q * Qw - Qw * Q).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("flat charge eigenvalue on the Neel state is zero") {
    Geometry g(6, 1.0, 1.0, 0.0);
    auto sectors = enumerate_sectors(6);
    const auto& half = sectors[3];
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(half.basis.size());
    psi[neel_index(6, half)] = 1.0;
    Eigen::VectorXcd full = embed(psi, half, 6);
    CHECK(expectation(full, operator_q_flat(g)) == doctest::Approx(0.0).epsilon(1e-14));
    // imbalance of the Neel state is -1/2
    CHECK(expectation(full, operator_imbalance(g, false)) == doctest::Approx(-0.5).epsilon(1e-14));
}

TEST_CASE("chirality operators are Hermitian and traceless") {
    for (auto op : {operator_kappa(2), operator_chi(1)}) {
        Eigen::MatrixXcd M = dense_matrix(op, 4);
        CHECK((M - M.adjoint()).cwiseAbs().maxCoeff() < 1e-14);
        CHECK(std::abs(M.trace()) < 1e-12);
    }
}

TEST_CASE("current operator is the sum of bond chiralities") {
    Geometry g(4, 1.0, 1.0, 0.0);
    Eigen::MatrixXcd J = dense_matrix(operator_current(g, false), 4);
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(16, 16);
    for (int i = 1; i < 4; ++i) sum += dense_matrix(operator_kappa(i), 4);
    CHECK((J - sum).cwiseAbs().maxCoeff() < 1e-14);
    // weighted current inserts alpha_i^2
    Eigen::MatrixXcd Jw = dense_matrix(operator_current(g, true), 4);
    sum.setZero();
    for (int i = 1; i < 4; ++i) {
        double ai = g.redshift(i);
        sum += ai * ai * dense_matrix(operator_kappa(i), 4);
    }
    CHECK((Jw - sum).cwiseAbs().maxCoeff() < 1e-13);
}
