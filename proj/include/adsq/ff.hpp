#pragma once

#include <vector>

#include "adsq/geometry.hpp"
#include "adsq/model.hpp"

namespace adsq {

// Eigenmodes of the single-particle matrix: energies ascending, columns of
// `wavefunctions` are the normalized real-space mode wavefunctions.
struct ModeBasis {
    Eigen::VectorXd energies;
    Eigen::MatrixXcd wavefunctions;
    double const_offset = 0.0;
};

ModeBasis diagonalize_modes(const SingleParticle& h);

// Many-body energies by mode filling: occupy every mode with energy < 0
// (chemical potential already folded into the diagonal). Zero modes within
// 1e-12 are left empty.
double ground_energy(const ModeBasis& modes);
double first_excited_energy(const ModeBasis& modes);
bool has_zero_mode(const ModeBasis& modes);

enum class Occupation { Ground, GroundWithSwap };

// C_ij = <c_i^dag c_j> = sum over occupied modes of psi psi^dag. The swap rule
// exchanges the highest occupied with the lowest unoccupied mode.
Eigen::MatrixXcd correlation_matrix(const ModeBasis& modes,
                                    Occupation rule = Occupation::Ground);

// Entropy from the eigenvalues nu of the leading l x l block of C.
double entanglement_from_correlation(const Eigen::MatrixXcd& C, int l);

struct ChargeProfiles {
    Eigen::VectorXd flat;      // q_n = (<Z_n> + (-1)^n)/2a with <Z_n> = 2 C_nn - 1
    Eigen::VectorXd weighted;  // alpha_n q_n
};

ChargeProfiles charge_profiles(const Eigen::MatrixXcd& C, const Geometry& geom);

// First-excited charge rearrangement dQ_n = |psi_hi+1(n)|^2 - |psi_hi(n)|^2
// (highest occupied -> lowest unoccupied mode swap); sums to zero.
Eigen::VectorXd excited_delta_q(const ModeBasis& modes);

// <kappa_i> on the Gaussian state described by C (= Im <c_i^dag c_{i+1}>).
double kappa_expectation(const Eigen::MatrixXcd& C, int i);

// <chi_i> from the exact Gaussian reduced density matrix of sites i, i+1, i+2.
double chi_expectation(const Eigen::MatrixXcd& C, int i);

}  // namespace adsq
