#include "adsq/ff.hpp"

#include <cmath>
#include <stdexcept>

#include "adsq/linalg.hpp"

namespace adsq {
namespace {

constexpr double kZeroModeTol = 1e-12;

int occupied_count(const ModeBasis& m) {
    int n = 0;
    while (n < m.energies.size() && m.energies[n] < -kZeroModeTol) ++n;
    return n;
}

using Mat8 = Eigen::Matrix<cdouble, 8, 8>;
using Mat2 = Eigen::Matrix<cdouble, 2, 2>;

// site 1 of the triple is the least significant bit, matching the chain convention
Mat8 kron3(const Mat2& m1, const Mat2& m2, const Mat2& m3) {
    Mat8 out;
    for (int r = 0; r < 8; ++r)
        for (int c = 0; c < 8; ++c)
            out(r, c) = m3((r >> 2) & 1, (c >> 2) & 1) * m2((r >> 1) & 1, (c >> 1) & 1) *
                        m1(r & 1, c & 1);
    return out;
}

struct ThreeSiteOps {
    Mat8 chi;
    Mat8 lower[3];  // Jordan-Wigner fermion lowering operators on the triple

    ThreeSiteOps() {
        Mat2 I2, X, Y, Z;
        I2 << 1, 0, 0, 1;
        X << 0, 1, 1, 0;
        Y << 0, cdouble(0, -1), cdouble(0, 1), 0;
        Z << 1, 0, 0, -1;
        const Mat2 sig[3] = {X, Y, Z};
        chi.setZero();
        int perm[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
        for (int p = 0; p < 6; ++p) {
            double sgn = p < 3 ? 0.125 : -0.125;
            chi += sgn * kron3(sig[perm[p][0]], sig[perm[p][1]], sig[perm[p][2]]);
        }
        // c_j = (prod_{k<j} Z_k) (X_j - i Y_j)/2; vacuum is all sites in |1>
        Mat2 low = 0.5 * (X - cdouble(0, 1) * Y);
        for (int j = 0; j < 3; ++j) {
            Mat2 f[3];
            for (int k = 0; k < 3; ++k) f[k] = (k < j) ? Z : (k == j ? low : I2);
            lower[j] = kron3(f[0], f[1], f[2]);
        }
    }
};

const ThreeSiteOps& three_site_ops() {
    static const ThreeSiteOps ops;
    return ops;
}

}  // namespace

ModeBasis diagonalize_modes(const SingleParticle& h) {
    ModeBasis m;
    m.wavefunctions = h.matrix;
    eigh(m.wavefunctions, m.energies, true);
    m.const_offset = h.const_offset;
    return m;
}

double ground_energy(const ModeBasis& modes) {
    double E = modes.const_offset;
    int nocc = occupied_count(modes);
    for (int j = 0; j < nocc; ++j) E += modes.energies[j];
    return E;
}

double first_excited_energy(const ModeBasis& modes) {
    return ground_energy(modes) + modes.energies.cwiseAbs().minCoeff();
}

bool has_zero_mode(const ModeBasis& modes) {
    return modes.energies.cwiseAbs().minCoeff() <= kZeroModeTol;
}

Eigen::MatrixXcd correlation_matrix(const ModeBasis& modes, Occupation rule) {
    const auto N = modes.energies.size();
    std::vector<bool> occ(N, false);
    int nocc = occupied_count(modes);
    for (int j = 0; j < nocc; ++j) occ[j] = true;
    if (rule == Occupation::GroundWithSwap) {
        if (nocc > 0) occ[nocc - 1] = false;
        if (nocc < N) occ[nocc] = true;
    }
    Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(N, N);
    for (Eigen::Index j = 0; j < N; ++j)
        if (occ[j]) C += modes.wavefunctions.col(j) * modes.wavefunctions.col(j).adjoint();
    return C;
}

double entanglement_from_correlation(const Eigen::MatrixXcd& C, int l) {
    if (l < 1 || l >= C.rows())
        throw std::invalid_argument("entanglement_from_correlation: need 1 <= l < N");
    Eigen::MatrixXcd block = C.topLeftCorner(l, l);
    Eigen::VectorXd nu;
    eigh(block, nu, false);
    double S = 0.0;
    for (Eigen::Index k = 0; k < nu.size(); ++k) {
        double v = nu[k];
        if (v < -1e-9 || v > 1.0 + 1e-9)
            throw std::runtime_error("entanglement_from_correlation: eigenvalue outside [0,1]");
        v = std::min(std::max(v, 1e-14), 1.0 - 1e-14);
        S -= v * std::log(v) + (1.0 - v) * std::log(1.0 - v);
    }
    return S;
}

ChargeProfiles charge_profiles(const Eigen::MatrixXcd& C, const Geometry& geom) {
    const int N = geom.num_sites();
    const double a = geom.spacing();
    ChargeProfiles out;
    out.flat.resize(N);
    out.weighted.resize(N);
    for (int n = 1; n <= N; ++n) {
        double z = 2.0 * C(n - 1, n - 1).real() - 1.0;
        double sgn = (n % 2 == 0) ? 1.0 : -1.0;
        out.flat[n - 1] = (z + sgn) / (2 * a);
        out.weighted[n - 1] = geom.redshift(n) * (z + sgn) / (2 * a);
    }
    return out;
}

Eigen::VectorXd excited_delta_q(const ModeBasis& modes) {
    const auto N = modes.energies.size();
    int nocc = occupied_count(modes);
    int hi = nocc > 0 ? nocc - 1 : 0;
    int lo = nocc < N ? nocc : static_cast<int>(N) - 1;
    return modes.wavefunctions.col(lo).cwiseAbs2() - modes.wavefunctions.col(hi).cwiseAbs2();
}

double kappa_expectation(const Eigen::MatrixXcd& C, int i) {
    if (i < 1 || i >= C.rows()) throw std::out_of_range("kappa_expectation: bond out of range");
    // the stored matrix is sum psi psi^dag = conj(<c_i^dag c_j>), so the sign flips
    return -C(i - 1, i).imag();
}

double chi_expectation(const Eigen::MatrixXcd& C, int i) {
    if (i < 1 || i + 1 >= C.rows()) throw std::out_of_range("chi_expectation: triple out of range");
    const auto& ops = three_site_ops();
    Eigen::Matrix3cd C3 = C.block(i - 1, i - 1, 3, 3);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3cd> es(C3);
    Mat8 rho = Mat8::Identity();
    for (int k = 0; k < 3; ++k) {
        Mat8 d = Mat8::Zero();
        for (int j = 0; j < 3; ++j) d += std::conj(es.eigenvectors()(j, k)) * ops.lower[j];
        double nu = es.eigenvalues()[k];
        rho = rho * ((1.0 - nu) * Mat8::Identity() + (2.0 * nu - 1.0) * (d.adjoint() * d));
    }
    return (rho * ops.chi).trace().real();
}

}  // namespace adsq
