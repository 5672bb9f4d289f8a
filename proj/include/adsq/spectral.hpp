#pragma once

#include <cstdint>
#include <vector>

#include "adsq/ed.hpp"

namespace adsq {

struct UnfoldedSpectrum {
    std::vector<double> raw;       // sorted input levels
    std::vector<double> unfolded;  // epsilon_i = Nbar(E_i), mean spacing ~ 1
    int poly_degree = 6;
    bool degree_reduced = false;   // set when monotonicity forced a lower degree
};

// Polynomial fit of the cumulative level count; degree reduced automatically
// if the fitted staircase is non-monotonic on the data.
UnfoldedSpectrum unfold(const std::vector<double>& levels, int poly_degree = 6);

struct SectorRStat {
    double charge = 0.0;
    double mean_r = 0.0;
    int count = 0;             // number of r values
    bool in_weighted_mean = false;
};

struct RStats {
    std::vector<SectorRStat> per_sector;
    double weighted_mean = 0.0;  // over sectors with >= min_levels levels
    int degenerate_spacings = 0; // spacings below 1e-12 (counted as r = 0)
};

// r_i = min(s_i, s_{i-1})/max(...) from consecutive spacings of per-sector
// unfolded levels; the mean is weighted by each sector's r count.
RStats r_statistics(const std::vector<std::pair<double, std::vector<double>>>& sector_levels,
                    int unfold_degree = 6, int min_levels = 10);

RStats r_statistics(const SpectrumResult& spectrum, int unfold_degree = 6, int min_levels = 10);

// r values from a single pre-unfolded (or raw) level list.
std::vector<double> r_values(const std::vector<double>& levels);

struct BrodyFit {
    double beta = 0.0;
    double fit_error = 0.0;              // root-mean-square histogram residual
    std::vector<double> bin_edges;
    std::vector<double> density;
};

// P_beta(s) = (beta+1) b s^beta exp(-b s^{beta+1}), b = Gamma((beta+2)/(beta+1))^(beta+1)
double brody_pdf(double beta, double s);

// Least squares on a 40-bin histogram over s in [0, 4] by default; the
// maximum-likelihood estimator is available behind the flag.
BrodyFit brody_fit(const std::vector<double>& spacings, bool maximum_likelihood = false);

// Fraction of spacings below 1e-8 (the discrete delta(s) component).
double delta_of_zero_spacing_fraction(const std::vector<double>& spacings);

// Reference samplers (deterministic, counter-based RNG).
std::vector<double> sample_poisson_spacings(std::size_t n, std::uint64_t seed);
std::vector<double> sample_wigner_spacings(std::size_t n, std::uint64_t seed);
std::vector<double> sample_goe_levels(int dim, std::uint64_t seed);

}  // namespace adsq
