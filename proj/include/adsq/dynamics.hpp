#pragma once

#include <vector>

#include "adsq/ed.hpp"
#include "adsq/geometry.hpp"
#include "adsq/model.hpp"

namespace adsq {

struct Series {
    std::vector<double> times;
    std::vector<double> values;
};

enum class QuenchInitialState {
    GroundOfMuZero,  // ground state of H(mu=0), evolved with the full chemical potential
    Ground,          // ground state of the evolving H (stationary: constant series)
    Neel
};

// <J(t)> on the chosen initial state, evolved inside its charge sector.
Series current_evolution(const Geometry& geom, const ModelParams& params,
                         const std::vector<double>& times, bool weighted,
                         QuenchInitialState initial = QuenchInitialState::GroundOfMuZero);

struct QuenchSeries {
    std::vector<double> times;
    Eigen::MatrixXd per_sample;  // sample x time
    Eigen::VectorXd mean, stddev;
    std::vector<std::uint64_t> sample_indices;
};

// Neel-state imbalance dynamics over a quenched-disorder ensemble. Each sample
// draws its own h_n from (params.seed, sample) and evolves in the half-filling
// sector; the flat or weighted imbalance is recorded per time point.
QuenchSeries quench_imbalance(const Geometry& geom, const ModelParams& params, double W,
                              int n_samples, const std::vector<double>& times, bool weighted);

struct FrozenMemory {
    double value = 0.0;  // time average of the ensemble mean over the tail window
    double t1 = 0.0, t2 = 0.0;
    double tail_fraction = 0.4;
    double std_error = 0.0;  // across samples' own tail averages
};

FrozenMemory frozen_memory(const QuenchSeries& series, double tail_fraction = 0.4);

// Dominant angular frequency of a uniformly sampled series (discrete Fourier
// transform of the mean-subtracted values; DC excluded).
double dominant_frequency(const Series& series);

std::vector<double> linspace(double t0, double t1, int n);

}  // namespace adsq
