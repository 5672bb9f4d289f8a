#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace adsq {

using cdouble = std::complex<double>;

enum class Axis : char { X = 'X', Y = 'Y', Z = 'Z' };

// One weighted Pauli string. Sites are 1-based; at most one factor per site.
struct PauliString {
    double coeff = 0.0;
    std::vector<std::pair<int, Axis>> factors;
};

// Hermitian operator as a real-weighted Pauli-string list plus an identity part.
struct PauliSum {
    std::vector<PauliString> terms;
    double constant = 0.0;

    void add(double coeff, std::vector<std::pair<int, Axis>> factors) {
        if (coeff == 0.0) return;
        terms.push_back({coeff, std::move(factors)});
    }
};

// Basis-state convention: bit (n-1) of the index is set iff site n is in |1>,
// with Z|0> = +|0>, Z|1> = -|1>. Applying a string to basis state b yields a
// single basis state b' with a complex amplitude.
inline std::pair<std::uint64_t, cdouble> apply_string(const PauliString& t, std::uint64_t b) {
    cdouble amp(t.coeff, 0.0);
    std::uint64_t flip = 0;
    for (const auto& [site, ax] : t.factors) {
        std::uint64_t bit = (b >> (site - 1)) & 1u;
        switch (ax) {
            case Axis::X:
                flip |= 1ull << (site - 1);
                break;
            case Axis::Y:
                flip |= 1ull << (site - 1);
                amp *= bit ? cdouble(0, -1) : cdouble(0, 1);
                break;
            case Axis::Z:
                if (bit) amp = -amp;
                break;
        }
    }
    return {b ^ flip, amp};
}

// out += O * in on the full 2^N space.
inline void apply_op(const PauliSum& op, const Eigen::VectorXcd& in, Eigen::VectorXcd& out) {
    const auto dim = in.size();
    if (out.size() != dim) out = Eigen::VectorXcd::Zero(dim);
    for (const auto& t : op.terms) {
        std::uint64_t flip = 0;
        std::vector<int> ybits, zbits;
        for (const auto& [site, ax] : t.factors) {
            if (ax != Axis::Z) flip |= 1ull << (site - 1);
            if (ax == Axis::Y) ybits.push_back(site - 1);
            if (ax == Axis::Z) zbits.push_back(site - 1);
        }
        for (Eigen::Index b = 0; b < dim; ++b) {
            cdouble amp(t.coeff, 0.0);
            for (int yb : ybits) amp *= ((b >> yb) & 1) ? cdouble(0, -1) : cdouble(0, 1);
            for (int zb : zbits)
                if ((b >> zb) & 1) amp = -amp;
            out[static_cast<Eigen::Index>(b ^ static_cast<Eigen::Index>(flip))] += amp * in[b];
        }
    }
    if (op.constant != 0.0) out += op.constant * in;
}

inline Eigen::VectorXcd apply_op(const PauliSum& op, const Eigen::VectorXcd& in) {
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(in.size());
    apply_op(op, in, out);
    return out;
}

// Dense matrix on the full 2^N space (test/reference use; N small).
inline Eigen::MatrixXcd dense_matrix(const PauliSum& op, int N) {
    if (N > 20) throw std::invalid_argument("dense_matrix: N too large");
    const Eigen::Index dim = Eigen::Index(1) << N;
    Eigen::MatrixXcd H = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto& t : op.terms)
        for (Eigen::Index b = 0; b < dim; ++b) {
            auto [b2, amp] = apply_string(t, static_cast<std::uint64_t>(b));
            H(static_cast<Eigen::Index>(b2), b) += amp;
        }
    H += op.constant * Eigen::MatrixXcd::Identity(dim, dim);
    return H;
}

}  // namespace adsq
