#pragma once

#include "adsq/geometry.hpp"

namespace adsq {
namespace analytic {

// epsilon(k) = alpha * sqrt(m^2 + (alpha k)^2) - mu
double dispersion_continuum(double alpha, double m, double k, double mu = 0.0);

// epsilon_n(k) = alpha_n * sqrt(m^2 + (4 alpha_n^2 / a^2) sin^2(k a / 2))
double dispersion_lattice(double alpha_n, double m, double k, double a);

// k_F = (1/alpha^2) sqrt(mu^2 - alpha^2 m^2) for mu > alpha*m, else 0 (Theta(0)=0).
double fermi_momentum(double alpha, double m, double mu);

// Contribution of one site to the ground-state energy density:
// (1/2pi) [m^2 asinh(alpha k_F / m) - mu k_F], with the m -> 0 limit -mu k_F / 2pi.
double site_ground_energy(double alpha, double m, double mu);

// Charge density per site k_F / pi.
double continuum_charge(double alpha, double m, double mu);

// Q = sum_n (1 / pi alpha_n^2) sqrt(mu^2 - alpha_n^2 m^2) Theta(mu - alpha_n m)
double total_charge_exact(const Geometry& geom, double m, double mu);

// Distance from |mu| to the interval [0, |m|]: zero in the critical window.
double gap_continuum(double m, double mu);

// Delta_N = alpha m - mu + (alpha^3 / 2m) (pi / ((N+1) a))^2; requires m != 0.
double gap_finite_N(double alpha, double m, double mu, int N, double a);

// Large-mass gap |m| alpha_1 = |m| sqrt(r_1^2 - r_h^2)/L (or |mu| alpha_1 when
// the chemical potential dominates).
double gap_large_mass(const Geometry& geom, double m, double mu);

// S_N(beta) = sum_{n=1..N} sqrt(n (n + beta)), exactly and via the generalized
// harmonic-number series through the beta^3 term.
double harmonic_sum(int N, double beta);
double harmonic_sum_series(int N, double beta);

}  // namespace analytic
}  // namespace adsq
