#include "adsq/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "adsq/linalg.hpp"
#include "adsq/rng.hpp"

namespace adsq {

UnfoldedSpectrum unfold(const std::vector<double>& levels, int poly_degree) {
    if (static_cast<int>(levels.size()) < poly_degree + 2)
        throw std::invalid_argument("unfold: too few levels for the requested degree");
    UnfoldedSpectrum out;
    out.raw = levels;
    std::sort(out.raw.begin(), out.raw.end());

    const auto M = static_cast<Eigen::Index>(out.raw.size());
    Eigen::VectorXd x(M), y(M);
    for (Eigen::Index i = 0; i < M; ++i) {
        x[i] = out.raw[static_cast<std::size_t>(i)];
        y[i] = static_cast<double>(i + 1);
    }
    int degree = poly_degree;
    Eigen::VectorXd fitted;
    while (true) {
        fitted = polyfit_values(x, y, degree);
        bool monotone = true;
        for (Eigen::Index i = 1; i < M && monotone; ++i)
            if (fitted[i] < fitted[i - 1] - 1e-9) monotone = false;
        if (monotone || degree == 1) break;
        --degree;
        out.degree_reduced = true;
    }
    out.poly_degree = degree;
    out.unfolded.assign(fitted.data(), fitted.data() + M);
    std::sort(out.unfolded.begin(), out.unfolded.end());
    return out;
}

std::vector<double> r_values(const std::vector<double>& levels) {
    std::vector<double> sorted = levels;
    std::sort(sorted.begin(), sorted.end());
    std::vector<double> out;
    for (std::size_t i = 2; i < sorted.size(); ++i) {
        double s1 = sorted[i - 1] - sorted[i - 2];
        double s2 = sorted[i] - sorted[i - 1];
        double lo = std::min(s1, s2), hi = std::max(s1, s2);
        out.push_back(hi > 1e-12 ? lo / hi : 0.0);
    }
    return out;
}

RStats r_statistics(const std::vector<std::pair<double, std::vector<double>>>& sector_levels,
                    int unfold_degree, int min_levels) {
    RStats out;
    double acc = 0.0;
    int total = 0;
    for (const auto& [q, levels] : sector_levels) {
        if (static_cast<int>(levels.size()) < 3) continue;  // skipped, reported by absence
        int deg = std::min<int>(unfold_degree, static_cast<int>(levels.size()) - 2);
        std::vector<double> lv = unfold(levels, deg).unfolded;
        SectorRStat s;
        s.charge = q;
        double sum = 0.0;
        for (double r : r_values(lv)) {
            sum += r;
            ++s.count;
            if (r == 0.0) ++out.degenerate_spacings;
        }
        if (s.count == 0) continue;
        s.mean_r = sum / s.count;
        s.in_weighted_mean = static_cast<int>(levels.size()) >= min_levels;
        if (s.in_weighted_mean) {
            acc += sum;
            total += s.count;
        }
        out.per_sector.push_back(s);
    }
    out.weighted_mean = total > 0 ? acc / total : 0.0;
    return out;
}

RStats r_statistics(const SpectrumResult& spectrum, int unfold_degree, int min_levels) {
    std::map<double, std::vector<double>> by_sector;
    for (Eigen::Index i = 0; i < spectrum.eigenvalues.size(); ++i)
        by_sector[spectrum.sector_labels[static_cast<std::size_t>(i)]].push_back(
            spectrum.eigenvalues[i]);
    std::vector<std::pair<double, std::vector<double>>> input(by_sector.begin(), by_sector.end());
    return r_statistics(input, unfold_degree, min_levels);
}

double brody_pdf(double beta, double s) {
    double b = std::pow(std::tgamma((beta + 2.0) / (beta + 1.0)), beta + 1.0);
    return (beta + 1.0) * b * std::pow(s, beta) * std::exp(-b * std::pow(s, beta + 1.0));
}

namespace {

// histogram objective: RMS distance to the normalized spacing density
double brody_sse(double beta, const std::vector<double>& centers,
                 const std::vector<double>& density) {
    double sse = 0.0;
    for (std::size_t i = 0; i < centers.size(); ++i) {
        double d = brody_pdf(beta, centers[i]) - density[i];
        sse += d * d;
    }
    return sse;
}

double brody_negloglik(double beta, const std::vector<double>& s) {
    double b = std::pow(std::tgamma((beta + 2.0) / (beta + 1.0)), beta + 1.0);
    double nll = 0.0;
    for (double v : s) {
        double vv = std::max(v, 1e-12);
        nll -= std::log(beta + 1.0) + std::log(b) + beta * std::log(vv) -
               b * std::pow(vv, beta + 1.0);
    }
    return nll;
}

template <typename F>
double minimize_on_unit_interval(F f) {
    // coarse grid then golden-section refinement; objective is cheap
    double best = 0.0, fbest = f(0.0);
    for (int i = 1; i <= 100; ++i) {
        double x = i / 100.0;
        double fx = f(x);
        if (fx < fbest) {
            fbest = fx;
            best = x;
        }
    }
    double lo = std::max(0.0, best - 0.01), hi = std::min(1.0, best + 0.01);
    const double gr = 0.6180339887498949;
    double c = hi - gr * (hi - lo), d = lo + gr * (hi - lo);
    for (int it = 0; it < 60; ++it) {
        if (f(c) < f(d))
            hi = d;
        else
            lo = c;
        c = hi - gr * (hi - lo);
        d = lo + gr * (hi - lo);
    }
    return 0.5 * (lo + hi);
}

}  // namespace

BrodyFit brody_fit(const std::vector<double>& spacings, bool maximum_likelihood) {
    if (spacings.size() < 50)
        throw std::invalid_argument("brody_fit: need at least 50 spacings");

    constexpr int kBins = 40;
    constexpr double kRange = 4.0;
    const double width = kRange / kBins;

    BrodyFit out;
    out.bin_edges.resize(kBins + 1);
    for (int i = 0; i <= kBins; ++i) out.bin_edges[i] = i * width;
    std::vector<double> counts(kBins, 0.0);
    for (double s : spacings) {
        int bin = static_cast<int>(s / width);
        if (bin >= 0 && bin < kBins) counts[bin] += 1.0;
    }
    out.density.resize(kBins);
    std::vector<double> centers(kBins);
    for (int i = 0; i < kBins; ++i) {
        out.density[i] = counts[i] / (spacings.size() * width);
        centers[i] = (i + 0.5) * width;
    }

    if (maximum_likelihood) {
        out.beta = minimize_on_unit_interval(
            [&](double b) { return brody_negloglik(b, spacings); });
    } else {
        out.beta = minimize_on_unit_interval(
            [&](double b) { return brody_sse(b, centers, out.density); });
    }
    out.fit_error = std::sqrt(brody_sse(out.beta, centers, out.density) / kBins);
    return out;
}

double delta_of_zero_spacing_fraction(const std::vector<double>& spacings) {
    if (spacings.empty()) return 0.0;
    std::size_t zeros = 0;
    for (double s : spacings)
        if (s < 1e-8) ++zeros;
    return static_cast<double>(zeros) / spacings.size();
}

std::vector<double> sample_poisson_spacings(std::size_t n, std::uint64_t seed) {
    CounterRng rng(seed);
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = -std::log(1.0 - rng.uniform(i));
    return out;
}

std::vector<double> sample_wigner_spacings(std::size_t n, std::uint64_t seed) {
    CounterRng rng(seed);
    std::vector<double> out(n);
    constexpr double pi = 3.141592653589793;
    for (std::size_t i = 0; i < n; ++i)
        out[i] = std::sqrt(-4.0 * std::log(1.0 - rng.uniform(i)) / pi);
    return out;
}

std::vector<double> sample_goe_levels(int dim, std::uint64_t seed) {
    CounterRng rng(seed);
    Eigen::MatrixXd A(dim, dim);
    std::uint64_t idx = 0;
    for (int i = 0; i < dim; ++i)
        for (int j = i; j < dim; ++j) {
            double g = rng.normal(idx++);
            A(i, j) = (i == j) ? g * std::sqrt(2.0) : g;
            A(j, i) = A(i, j);
        }
    Eigen::VectorXd w;
    eigh(A, w, false);
    return std::vector<double>(w.data(), w.data() + dim);
}

}  // namespace adsq
