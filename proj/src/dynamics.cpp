#include "adsq/dynamics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "adsq/linalg.hpp"

namespace adsq {

std::vector<double> linspace(double t0, double t1, int n) {
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) out[i] = n > 1 ? t0 + (t1 - t0) * i / (n - 1) : t0;
    return out;
}

namespace {

int ground_sector_of(const PauliSum& H, const std::vector<ChargeSector>& sectors) {
    double best = std::numeric_limits<double>::infinity();
    int bestk = 0;
    for (const auto& sec : sectors) {
        Eigen::MatrixXcd M = sector_matrix(H, sec);
        Eigen::VectorXd w;
        eigh(M, w, false);
        if (w[0] < best) {
            best = w[0];
            bestk = sec.population;
        }
    }
    return bestk;
}

}  // namespace

Series current_evolution(const Geometry& geom, const ModelParams& params,
                         const std::vector<double>& times, bool weighted,
                         QuenchInitialState initial) {
    const int N = geom.num_sites();
    auto sectors = enumerate_sectors(N, geom.spacing());
    PauliSum H = build_spin_hamiltonian(geom, params);

    int k;
    Eigen::VectorXcd psi0;
    if (initial == QuenchInitialState::Neel) {
        k = N / 2;
        psi0 = Eigen::VectorXcd::Zero(sectors[k].basis.size());
        psi0[neel_index(N, sectors[k])] = 1.0;
    } else {
        ModelParams p0 = params;
        if (initial == QuenchInitialState::GroundOfMuZero) p0.chem_potential = 0.0;
        PauliSum H0 = build_spin_hamiltonian(geom, p0);
        k = ground_sector_of(H0, sectors);
        Eigen::MatrixXcd M = sector_matrix(H0, sectors[k]);
        Eigen::VectorXd w;
        eigh(M, w, true);
        psi0 = M.col(0);
    }

    SectorEvolver ev(H, sectors[k]);
    Eigen::MatrixXcd J = sector_matrix(operator_current(geom, weighted), sectors[k]);
    Eigen::VectorXcd c0 = ev.eigenvectors().adjoint() * psi0;

    Series out;
    out.times = times;
    out.values.reserve(times.size());
    for (double t : times) {
        Eigen::VectorXcd c = c0;
        for (Eigen::Index n = 0; n < c.size(); ++n)
            c[n] *= std::exp(cdouble(0, -ev.eigenvalues()[n] * t));
        Eigen::VectorXcd psi = ev.eigenvectors() * c;
        out.values.push_back(psi.dot(J * psi).real());
    }
    return out;
}

QuenchSeries quench_imbalance(const Geometry& geom, const ModelParams& params, double W,
                              int n_samples, const std::vector<double>& times, bool weighted) {
    if (n_samples < 1) throw std::invalid_argument("quench_imbalance: need n_samples >= 1");
    const int N = geom.num_sites();
    auto sectors = enumerate_sectors(N, geom.spacing());
    const ChargeSector& sec = sectors[N / 2];
    const int ineel = neel_index(N, sec);
    const auto d = static_cast<Eigen::Index>(sec.basis.size());
    const auto T = static_cast<Eigen::Index>(times.size());

    // the imbalance is diagonal in the computational basis
    std::vector<double> alpha = geom.redshift_profile(params.redshift_mode == RedshiftMode::Effective);
    Eigen::VectorXd diag_im(d);
    for (Eigen::Index b = 0; b < d; ++b) {
        double v = 0.0;
        for (int n = 1; n <= N; ++n) {
            double z = ((sec.basis[static_cast<std::size_t>(b)] >> (n - 1)) & 1u) ? -1.0 : 1.0;
            double sgn = (n % 2 == 0) ? 1.0 : -1.0;
            v += sgn * (weighted ? alpha[n - 1] : 1.0) * z;
        }
        diag_im[b] = v / (2.0 * N);
    }

    QuenchSeries out;
    out.times = times;
    out.per_sample.resize(n_samples, T);
    for (int s = 0; s < n_samples; ++s) {
        out.sample_indices.push_back(static_cast<std::uint64_t>(s));
        std::vector<double> hn = build_disorder_fields(geom, W, params.seed,
                                                       static_cast<std::uint64_t>(s));
        ModelParams p = params;
        p.disorder_width = W;
        PauliSum H = build_spin_hamiltonian(geom, p, &hn);
        SectorEvolver ev(H, sec);
        Eigen::VectorXcd c0 = ev.eigenvectors().adjoint().col(ineel);
        for (Eigen::Index it = 0; it < T; ++it) {
            Eigen::VectorXcd c = c0;
            for (Eigen::Index n = 0; n < c.size(); ++n)
                c[n] *= std::exp(cdouble(0, -ev.eigenvalues()[n] * times[static_cast<std::size_t>(it)]));
            Eigen::VectorXcd psi = ev.eigenvectors() * c;
            out.per_sample(s, it) = diag_im.dot(psi.cwiseAbs2());
        }
    }
    out.mean = out.per_sample.colwise().mean();
    out.stddev.resize(T);
    for (Eigen::Index it = 0; it < T; ++it) {
        double m = out.mean[it];
        double acc = 0.0;
        for (int s = 0; s < n_samples; ++s) {
            double dlt = out.per_sample(s, it) - m;
            acc += dlt * dlt;
        }
        out.stddev[it] = n_samples > 1 ? std::sqrt(acc / (n_samples - 1)) : 0.0;
    }
    return out;
}

FrozenMemory frozen_memory(const QuenchSeries& series, double tail_fraction) {
    const auto T = static_cast<Eigen::Index>(series.times.size());
    const auto start = static_cast<Eigen::Index>(
        std::ceil((1.0 - tail_fraction) * static_cast<double>(T)));
    if (T - start < 2) throw std::invalid_argument("frozen_memory: tail window too short");

    FrozenMemory out;
    out.tail_fraction = tail_fraction;
    out.t1 = series.times[static_cast<std::size_t>(start)];
    out.t2 = series.times[static_cast<std::size_t>(T - 1)];
    out.value = series.mean.segment(start, T - start).mean();

    const auto S = series.per_sample.rows();
    if (S > 1) {
        Eigen::VectorXd tails(S);
        for (Eigen::Index s = 0; s < S; ++s)
            tails[s] = series.per_sample.row(s).segment(start, T - start).mean();
        double m = tails.mean();
        double var = (tails.array() - m).square().sum() / (S - 1);
        out.std_error = std::sqrt(var / S);
    }
    return out;
}

double dominant_frequency(const Series& series) {
    const auto n = series.values.size();
    if (n < 4) throw std::invalid_argument("dominant_frequency: series too short");
    const double dt = series.times[1] - series.times[0];
    double mean = 0.0;
    for (double v : series.values) mean += v;
    mean /= static_cast<double>(n);

    constexpr double pi = 3.141592653589793;
    double best_amp = -1.0, best_omega = 0.0;
    for (std::size_t k = 1; k <= n / 2; ++k) {
        cdouble acc(0, 0);
        for (std::size_t t = 0; t < n; ++t)
            acc += (series.values[t] - mean) *
                   std::exp(cdouble(0, -2.0 * pi * static_cast<double>(k * t) / static_cast<double>(n)));
        double amp = std::abs(acc);
        if (amp > best_amp) {
            best_amp = amp;
            best_omega = 2.0 * pi * static_cast<double>(k) / (static_cast<double>(n) * dt);
        }
    }
    return best_omega;
}

}  // namespace adsq
