#include "adsq/ed.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_map>

#include "adsq/linalg.hpp"
#include "adsq/model.hpp"

namespace adsq {

std::vector<ChargeSector> enumerate_sectors(int N, double a) {
    if (N > kEdSiteCap) throw std::invalid_argument("enumerate_sectors: N exceeds ED cap");
    std::vector<ChargeSector> sectors(N + 1);
    for (int k = 0; k <= N; ++k) {
        sectors[k].population = k;
        sectors[k].charge = (2.0 * k - N) / (2.0 * a);
    }
    const std::uint64_t dim = 1ull << N;
    for (std::uint64_t b = 0; b < dim; ++b)
        sectors[std::popcount(b)].basis.push_back(b);
    return sectors;
}

int neel_index(int N, const ChargeSector& sector) {
    std::uint64_t neel = 0;
    for (int n = 2; n <= N; n += 2) neel |= 1ull << (n - 1);
    auto it = std::lower_bound(sector.basis.begin(), sector.basis.end(), neel);
    if (it == sector.basis.end() || *it != neel)
        throw std::invalid_argument("neel_index: Neel state not in this sector");
    return static_cast<int>(it - sector.basis.begin());
}

Eigen::MatrixXcd sector_matrix(const PauliSum& op, const ChargeSector& sector) {
    const auto d = static_cast<Eigen::Index>(sector.basis.size());
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(d, d);
    std::unordered_map<std::uint64_t, cdouble> acc;
    for (Eigen::Index col = 0; col < d; ++col) {
        acc.clear();
        for (const auto& t : op.terms) {
            auto [b2, amp] = apply_string(t, sector.basis[col]);
            acc[b2] += amp;
        }
        for (const auto& [b2, amp] : acc) {
            auto it = std::lower_bound(sector.basis.begin(), sector.basis.end(), b2);
            if (it != sector.basis.end() && *it == b2) {
                M(it - sector.basis.begin(), col) += amp;
            } else if (std::abs(amp) > 1e-12) {
                throw std::runtime_error("sector_matrix: operator does not conserve the charge");
            }
        }
        M(col, col) += op.constant;
    }
    return M;
}

SpectrumResult eigensolve(const PauliSum& H, int N, double a) {
    SpectrumResult out;
    std::vector<std::pair<double, std::pair<double, int>>> all;  // (E, (q, k))
    for (const auto& sec : enumerate_sectors(N, a)) {
        Eigen::MatrixXcd M = sector_matrix(H, sec);
        Eigen::VectorXd w;
        eigh(M, w, false);
        for (Eigen::Index i = 0; i < w.size(); ++i)
            all.push_back({w[i], {sec.charge, sec.population}});
    }
    std::sort(all.begin(), all.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    out.eigenvalues.resize(static_cast<Eigen::Index>(all.size()));
    for (std::size_t i = 0; i < all.size(); ++i) {
        out.eigenvalues[static_cast<Eigen::Index>(i)] = all[i].first;
        out.sector_labels.push_back(all[i].second.first);
        out.sector_population.push_back(all[i].second.second);
    }
    return out;
}

GroundResult ground_and_first_excited(const PauliSum& H, int N, double a) {
    auto sectors = enumerate_sectors(N, a);
    // values-only pass: two lowest levels per sector are enough to rank E0, E1
    std::vector<std::pair<double, int>> lows;  // (E, population); ties broken by sector ascending
    for (const auto& sec : sectors) {
        Eigen::MatrixXcd M = sector_matrix(H, sec);
        Eigen::VectorXd w;
        eigh(M, w, false);
        lows.push_back({w[0], sec.population});
        if (w.size() > 1) lows.push_back({w[1], sec.population});
    }
    std::sort(lows.begin(), lows.end());

    GroundResult out;
    out.E0 = lows[0].first;
    out.E1 = lows[1].first;
    out.sector0 = lows[0].second;
    out.sector1 = lows[1].second;
    out.degenerate = std::abs(out.E1 - out.E0) < 1e-10 * std::max(1.0, std::abs(out.E0));

    Eigen::MatrixXcd M = sector_matrix(H, sectors[out.sector0]);
    Eigen::VectorXd w;
    eigh(M, w, true);
    out.ground = M.col(0);
    if (out.sector1 == out.sector0) {
        out.first_excited = M.col(1);
    } else {
        Eigen::MatrixXcd M1 = sector_matrix(H, sectors[out.sector1]);
        eigh(M1, w, true);
        out.first_excited = M1.col(0);
    }
    return out;
}

Eigen::VectorXcd embed(const Eigen::VectorXcd& psi, const ChargeSector& sector, int N) {
    Eigen::VectorXcd full = Eigen::VectorXcd::Zero(Eigen::Index(1) << N);
    for (std::size_t i = 0; i < sector.basis.size(); ++i)
        full[static_cast<Eigen::Index>(sector.basis[i])] = psi[static_cast<Eigen::Index>(i)];
    return full;
}

double expectation(const Eigen::VectorXcd& state, const PauliSum& op) {
    cdouble val = state.dot(apply_op(op, state));  // Eigen dot conjugates the left factor
    if (std::abs(val.imag()) > 1e-12 * std::max(1.0, std::abs(val.real())))
        throw std::runtime_error("expectation: non-negligible imaginary part (observable not Hermitian?)");
    return val.real();
}

double entanglement_entropy(const Eigen::VectorXcd& state, int N, int l) {
    if (l < 1 || l >= N) throw std::invalid_argument("entanglement_entropy: need 1 <= l < N");
    const Eigen::Index rows = Eigen::Index(1) << l;
    const Eigen::Index cols = Eigen::Index(1) << (N - l);
    // psi[r + (c << l)]: sites 1..l are the low bits
    Eigen::Map<const Eigen::MatrixXcd> Mmap(state.data(), rows, cols);
    Eigen::MatrixXcd rho;
    if (rows <= cols)
        rho = Mmap * Mmap.adjoint();
    else
        rho = Mmap.adjoint() * Mmap;
    Eigen::VectorXd w;
    eigh(rho, w, false);
    double S = 0.0;
    for (Eigen::Index i = 0; i < w.size(); ++i)
        if (w[i] > 1e-14) S -= w[i] * std::log(w[i]);
    return S;
}

SectorEvolver::SectorEvolver(const PauliSum& H, const ChargeSector& sector) {
    evecs_ = sector_matrix(H, sector);
    eigh(evecs_, evals_, true);
}

Eigen::VectorXcd SectorEvolver::evolve(const Eigen::VectorXcd& psi, double t) const {
    Eigen::VectorXcd c = evecs_.adjoint() * psi;
    for (Eigen::Index i = 0; i < c.size(); ++i)
        c[i] *= std::exp(cdouble(0, -evals_[i] * t));
    return evecs_ * c;
}

Eigen::VectorXcd evolve(const Eigen::VectorXcd& state, const PauliSum& H, int N, double t) {
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(state.size());
    for (const auto& sec : enumerate_sectors(N)) {
        Eigen::VectorXcd part(sec.basis.size());
        double norm2 = 0.0;
        for (std::size_t i = 0; i < sec.basis.size(); ++i) {
            part[static_cast<Eigen::Index>(i)] = state[static_cast<Eigen::Index>(sec.basis[i])];
            norm2 += std::norm(part[static_cast<Eigen::Index>(i)]);
        }
        if (norm2 < 1e-28) continue;
        SectorEvolver ev(H, sec);
        Eigen::VectorXcd evolved = ev.evolve(part, t);
        for (std::size_t i = 0; i < sec.basis.size(); ++i)
            out[static_cast<Eigen::Index>(sec.basis[i])] = evolved[static_cast<Eigen::Index>(i)];
    }
    return out;
}

std::vector<Eigen::VectorXcd> evolve_series(const Eigen::VectorXcd& state, const PauliSum& H,
                                            int N, const std::vector<double>& times) {
    std::vector<Eigen::VectorXcd> out;
    out.reserve(times.size());
    for (double t : times) out.push_back(evolve(state, H, N, t));
    return out;
}

std::vector<cdouble> otoc(const PauliSum& H, int N, int i, int j,
                          const std::vector<double>& times, OtocState reference, double a) {
    if (i < 1 || i >= N || j < 1 || j >= N) throw std::out_of_range("otoc: bond index out of range");
    auto sectors = enumerate_sectors(N, a);
    PauliSum ki = operator_kappa(i);
    PauliSum kj = operator_kappa(j);

    auto series_in_sector = [&](const ChargeSector& sec, const Eigen::VectorXcd& psi,
                                std::vector<cdouble>& out, double weight) {
        SectorEvolver ev(H, sec);
        const Eigen::MatrixXcd Ki = sector_matrix(ki, sec);
        const Eigen::MatrixXcd Kj = sector_matrix(kj, sec);
        const Eigen::MatrixXcd& V = ev.eigenvectors();
        const Eigen::VectorXd& E = ev.eigenvalues();
        for (std::size_t it = 0; it < times.size(); ++it) {
            Eigen::VectorXcd ph(E.size());
            for (Eigen::Index n = 0; n < E.size(); ++n)
                ph[n] = std::exp(cdouble(0, -E[n] * times[it]));
            auto U = [&](const Eigen::VectorXcd& x) {
                return (V * ph.asDiagonal() * (V.adjoint() * x)).eval();
            };
            auto Udag = [&](const Eigen::VectorXcd& x) {
                return (V * ph.conjugate().asDiagonal() * (V.adjoint() * x)).eval();
            };
            auto heis = [&](const Eigen::VectorXcd& x) { return Udag(Kj * U(x)); };
            Eigen::VectorXcd x = heis(psi);
            x = Ki * x;
            x = heis(x);
            x = Ki * x;
            out[it] += weight * psi.dot(x);
        }
    };

    std::vector<cdouble> out(times.size(), cdouble(0, 0));
    if (reference == OtocState::InfiniteTemperature) {
        // exact trace, sector by sector (kappa conserves the charge)
        const double dim = std::pow(2.0, N);
        for (const auto& sec : sectors) {
            SectorEvolver ev(H, sec);
            const Eigen::MatrixXcd Ki = sector_matrix(ki, sec);
            const Eigen::MatrixXcd Kj = sector_matrix(kj, sec);
            const Eigen::MatrixXcd& V = ev.eigenvectors();
            const Eigen::VectorXd& E = ev.eigenvalues();
            for (std::size_t it = 0; it < times.size(); ++it) {
                Eigen::VectorXcd ph(E.size());
                for (Eigen::Index n = 0; n < E.size(); ++n)
                    ph[n] = std::exp(cdouble(0, -E[n] * times[it]));
                Eigen::MatrixXcd Kjt =
                    V * ph.conjugate().asDiagonal() * V.adjoint() * Kj * V * ph.asDiagonal() * V.adjoint();
                Eigen::MatrixXcd prod = Ki * Kjt;
                out[it] += (prod * prod).trace() / dim;
            }
        }
        return out;
    }

    if (reference == OtocState::Neel) {
        const ChargeSector& sec = sectors[N / 2];
        Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(sec.basis.size());
        psi[neel_index(N, sec)] = 1.0;
        series_in_sector(sec, psi, out, 1.0);
        return out;
    }

    // ground state: locate the ground sector, then work inside it
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
    const ChargeSector& sec = sectors[bestk];
    Eigen::MatrixXcd M = sector_matrix(H, sec);
    Eigen::VectorXd w;
    eigh(M, w, true);
    Eigen::VectorXcd psi = M.col(0);
    series_in_sector(sec, psi, out, 1.0);
    return out;
}

}  // namespace adsq
