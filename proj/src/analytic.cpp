#include "adsq/analytic.hpp"

#include <cmath>
#include <stdexcept>

namespace adsq {
namespace analytic {

namespace {
constexpr double kPi = 3.141592653589793;
}

double dispersion_continuum(double alpha, double m, double k, double mu) {
    return alpha * std::sqrt(m * m + alpha * alpha * k * k) - mu;
}

double dispersion_lattice(double alpha_n, double m, double k, double a) {
    if (a <= 0) throw std::invalid_argument("dispersion_lattice: a > 0 required");
    double s = std::sin(0.5 * k * a);
    return alpha_n * std::sqrt(m * m + 4.0 * alpha_n * alpha_n * s * s / (a * a));
}

double fermi_momentum(double alpha, double m, double mu) {
    if (alpha <= 0) throw std::invalid_argument("fermi_momentum: alpha > 0 required");
    if (mu <= alpha * m) return 0.0;
    double disc = mu * mu - alpha * alpha * m * m;
    return disc > 0 ? std::sqrt(disc) / (alpha * alpha) : 0.0;
}

double site_ground_energy(double alpha, double m, double mu) {
    double kf = fermi_momentum(alpha, m, mu);
    if (m == 0.0) return -mu * kf / (2.0 * kPi);
    return (m * m * std::asinh(alpha * kf / m) - mu * kf) / (2.0 * kPi);
}

double continuum_charge(double alpha, double m, double mu) {
    return fermi_momentum(alpha, m, mu) / kPi;
}

double total_charge_exact(const Geometry& geom, double m, double mu) {
    double Q = 0.0;
    for (int n = 1; n <= geom.num_sites(); ++n)
        Q += continuum_charge(geom.redshift(n), m, mu);
    return Q;
}

double gap_continuum(double m, double mu) {
    double am = std::abs(m), amu = std::abs(mu);
    return amu > am ? amu - am : 0.0;
}

double gap_finite_N(double alpha, double m, double mu, int N, double a) {
    if (m == 0.0) throw std::invalid_argument("gap_finite_N: m must be nonzero");
    double kmin = kPi / ((N + 1) * a);
    return alpha * m - mu + (alpha * alpha * alpha / (2.0 * m)) * kmin * kmin;
}

double gap_large_mass(const Geometry& geom, double m, double mu) {
    double scale = std::max(std::abs(m), std::abs(mu));
    return scale * geom.redshift(1);
}

double harmonic_sum(int N, double beta) {
    if (N < 1) throw std::invalid_argument("harmonic_sum: N >= 1 required");
    double S = 0.0;
    for (int n = 1; n <= N; ++n) S += std::sqrt(static_cast<double>(n) * (n + beta));
    return S;
}

double harmonic_sum_series(int N, double beta) {
    if (N < 1) throw std::invalid_argument("harmonic_sum_series: N >= 1 required");
    double h1 = 0.0, h2 = 0.0;
    for (int n = 1; n <= N; ++n) {
        h1 += 1.0 / n;
        h2 += 1.0 / (static_cast<double>(n) * n);
    }
    double Nn = static_cast<double>(N);
    return 0.5 * Nn * (Nn + 1.0) + 0.5 * beta * Nn - beta * beta * h1 / 8.0 +
           beta * beta * beta * h2 / 16.0;
}

}  // namespace analytic
}  // namespace adsq
