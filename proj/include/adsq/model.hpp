#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "adsq/geometry.hpp"
#include "adsq/pauli.hpp"

namespace adsq {

enum class RedshiftMode { Raw, Effective };

// Scaled: Hamiltonian of the rescaled field (hopping alpha_n^2/4a, chiral a n/8L^2,
// mass/mu weighted by alpha_n). Unscaled: the same model written for the bare field,
// with uniform 1/4a hopping, chiral a n w_n^2/8L^2 and mass/mu weighted by w_n = 1/alpha_n.
enum class FieldScaling { Scaled, Unscaled };

struct ModelParams {
    double mass = 0.0;
    double chem_potential = 0.0;
    double disorder_width = 0.0;
    bool disorder_weighted = false;
    std::uint64_t seed = 0;
    RedshiftMode redshift_mode = RedshiftMode::Raw;
    FieldScaling scaling = FieldScaling::Scaled;
    bool chiral_radius_weight = false;  // use r_n instead of the printed n in the chiral bond
};

// N x N Hermitian tridiagonal matrix h plus scalar offset E_c, such that the
// spin Hamiltonian equals sum_nm h_nm c_n^dag c_m + E_c under Jordan-Wigner.
struct SingleParticle {
    Eigen::MatrixXcd matrix;
    double const_offset = 0.0;
};

// i.i.d. uniform on [-W, W]; deterministic in (seed, sample, site).
std::vector<double> build_disorder_fields(const Geometry& geom, double W,
                                          std::uint64_t seed, std::uint64_t sample = 0);

PauliSum build_spin_hamiltonian(const Geometry& geom, const ModelParams& params,
                                const std::vector<double>* disorder = nullptr);

SingleParticle build_single_particle(const Geometry& geom, const ModelParams& params,
                                     const std::vector<double>* disorder = nullptr);

// Conserved charges: Q_flat = sum (Z_n + (-1)^n)/2a, Q_weighted = sum alpha_n (Z_n + (-1)^n)/2a.
PauliSum operator_q_flat(const Geometry& geom);
PauliSum operator_q_weighted(const Geometry& geom);

// Vector chirality kappa_i = (X_i Y_{i+1} - Y_i X_{i+1})/4 (bond i).
PauliSum operator_kappa(int i);

// Scalar chirality chi_i = S_i . (S_{i+1} x S_{i+2}): six three-site strings, +-1/8.
PauliSum operator_chi(int i);

// Current J = sum_i kappa_i; weighted variant J_w = sum_i alpha_i^2 kappa_i.
PauliSum operator_current(const Geometry& geom, bool weighted);

// Imbalance I = (1/2N) sum (-1)^n Z_n; weighted variant inserts alpha_n.
PauliSum operator_imbalance(const Geometry& geom, bool weighted);

}  // namespace adsq
