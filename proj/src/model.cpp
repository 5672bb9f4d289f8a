#include "adsq/model.hpp"

#include <cmath>

#include "adsq/rng.hpp"

namespace adsq {
namespace {

struct Couplings {
    std::vector<double> hop;     // bond n: coefficient of X_n X_{n+1} and Y_n Y_{n+1}
    std::vector<double> chiral;  // bond n: coefficient of X_n Y_{n+1} (minus sign on YX)
    std::vector<double> zcoef;   // site n: coefficient of Z_n
    double constant = 0.0;
};

// Shared parameterization of the spin and single-particle builders, so both
// representations agree on absolute energies by construction.
Couplings couplings(const Geometry& geom, const ModelParams& p,
                    const std::vector<double>* disorder) {
    const int N = geom.num_sites();
    const double a = geom.spacing(), L = geom.ads_radius();
    std::vector<double> alpha = geom.redshift_profile(p.redshift_mode == RedshiftMode::Effective);

    Couplings c;
    c.hop.resize(N - 1);
    c.chiral.resize(N - 1);
    c.zcoef.resize(N);
    for (int n = 1; n < N; ++n) {
        double al = alpha[n - 1];
        double w2 = 1.0 / (al * al);
        double bond = p.chiral_radius_weight ? (geom.horizon_radius() + n * a) / a : double(n);
        if (p.scaling == FieldScaling::Scaled) {
            c.hop[n - 1] = al * al / (4 * a);
            c.chiral[n - 1] = a * bond / (8 * L * L);
        } else {
            c.hop[n - 1] = 1.0 / (4 * a);
            c.chiral[n - 1] = a * bond * w2 / (8 * L * L);
        }
    }
    for (int n = 1; n <= N; ++n) {
        double v = p.scaling == FieldScaling::Scaled ? alpha[n - 1] : 1.0 / alpha[n - 1];
        double sgn = (n % 2 == 0) ? 1.0 : -1.0;
        double zc = 0.5 * p.mass * sgn * v - 0.5 * p.chem_potential * v;
        if (disorder && !disorder->empty()) {
            double w = p.disorder_weighted ? alpha[n - 1] : 1.0;
            zc += 0.5 * w * (*disorder)[n - 1];
        }
        c.zcoef[n - 1] = zc;
        c.constant += 0.5 * p.mass * sgn * v - 0.5 * p.chem_potential * v * sgn;
    }
    return c;
}

}  // namespace

std::vector<double> build_disorder_fields(const Geometry& geom, double W,
                                          std::uint64_t seed, std::uint64_t sample) {
    const int N = geom.num_sites();
    std::vector<double> h(N, 0.0);
    if (W == 0.0) return h;
    CounterRng rng(seed, sample);
    for (int n = 1; n <= N; ++n) h[n - 1] = (2.0 * rng.uniform(n) - 1.0) * W;
    return h;
}

PauliSum build_spin_hamiltonian(const Geometry& geom, const ModelParams& params,
                                const std::vector<double>* disorder) {
    const int N = geom.num_sites();
    std::vector<double> drawn;
    if (!disorder && params.disorder_width > 0) {
        drawn = build_disorder_fields(geom, params.disorder_width, params.seed);
        disorder = &drawn;
    }
    Couplings c = couplings(geom, params, disorder);

    PauliSum H;
    for (int n = 1; n < N; ++n) {
        H.add(c.hop[n - 1], {{n, Axis::X}, {n + 1, Axis::X}});
        H.add(c.hop[n - 1], {{n, Axis::Y}, {n + 1, Axis::Y}});
        H.add(c.chiral[n - 1], {{n, Axis::X}, {n + 1, Axis::Y}});
        H.add(-c.chiral[n - 1], {{n, Axis::Y}, {n + 1, Axis::X}});
    }
    for (int n = 1; n <= N; ++n) H.add(c.zcoef[n - 1], {{n, Axis::Z}});
    H.constant = c.constant;
    return H;
}

SingleParticle build_single_particle(const Geometry& geom, const ModelParams& params,
                                     const std::vector<double>* disorder) {
    const int N = geom.num_sites();
    std::vector<double> drawn;
    if (!disorder && params.disorder_width > 0) {
        drawn = build_disorder_fields(geom, params.disorder_width, params.seed);
        disorder = &drawn;
    }
    Couplings c = couplings(geom, params, disorder);

    SingleParticle sp;
    sp.matrix = Eigen::MatrixXcd::Zero(N, N);
    double zsum = 0.0;
    for (int n = 1; n <= N; ++n) {
        sp.matrix(n - 1, n - 1) = 2.0 * c.zcoef[n - 1];
        zsum += c.zcoef[n - 1];
    }
    for (int n = 1; n < N; ++n) {
        cdouble hop(-2.0 * c.hop[n - 1], -2.0 * c.chiral[n - 1]);
        sp.matrix(n - 1, n) = hop;
        sp.matrix(n, n - 1) = std::conj(hop);
    }
    // Z_n = 2 n_hat - 1, so the identity part picks up -sum zcoef.
    sp.const_offset = c.constant - zsum;
    return sp;
}

PauliSum operator_q_flat(const Geometry& geom) {
    const int N = geom.num_sites();
    const double a = geom.spacing();
    PauliSum Q;
    for (int n = 1; n <= N; ++n) {
        Q.add(1.0 / (2 * a), {{n, Axis::Z}});
        Q.constant += ((n % 2 == 0) ? 1.0 : -1.0) / (2 * a);
    }
    return Q;
}

PauliSum operator_q_weighted(const Geometry& geom) {
    const int N = geom.num_sites();
    const double a = geom.spacing();
    PauliSum Q;
    for (int n = 1; n <= N; ++n) {
        double al = geom.redshift(n);
        Q.add(al / (2 * a), {{n, Axis::Z}});
        Q.constant += al * ((n % 2 == 0) ? 1.0 : -1.0) / (2 * a);
    }
    return Q;
}

PauliSum operator_kappa(int i) {
    if (i < 1) throw std::out_of_range("operator_kappa: bond index must be >= 1");
    PauliSum k;
    k.add(0.25, {{i, Axis::X}, {i + 1, Axis::Y}});
    k.add(-0.25, {{i, Axis::Y}, {i + 1, Axis::X}});
    return k;
}

PauliSum operator_chi(int i) {
    if (i < 1) throw std::out_of_range("operator_chi: site index must be >= 1");
    PauliSum chi;
    const Axis ax[3] = {Axis::X, Axis::Y, Axis::Z};
    // epsilon_{abc} X^a Y^b Z^c / 8 over the three sites of the triple
    int perm[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
    for (int p = 0; p < 6; ++p) {
        double sgn = p < 3 ? 0.125 : -0.125;
        chi.add(sgn, {{i, ax[perm[p][0]]}, {i + 1, ax[perm[p][1]]}, {i + 2, ax[perm[p][2]]}});
    }
    return chi;
}

PauliSum operator_current(const Geometry& geom, bool weighted) {
    const int N = geom.num_sites();
    PauliSum J;
    for (int i = 1; i < N; ++i) {
        double w = 1.0;
        if (weighted) {
            double al = geom.redshift(i);
            w = al * al;
        }
        J.add(0.25 * w, {{i, Axis::X}, {i + 1, Axis::Y}});
        J.add(-0.25 * w, {{i, Axis::Y}, {i + 1, Axis::X}});
    }
    return J;
}

PauliSum operator_imbalance(const Geometry& geom, bool weighted) {
    const int N = geom.num_sites();
    PauliSum I;
    for (int n = 1; n <= N; ++n) {
        double sgn = (n % 2 == 0) ? 1.0 : -1.0;
        double w = weighted ? geom.redshift(n) : 1.0;
        I.add(sgn * w / (2.0 * N), {{n, Axis::Z}});
    }
    return I;
}

}  // namespace adsq
