#include "adsq/linalg.hpp"

#include <stdexcept>

#include <complex>
#define lapack_complex_double std::complex<double>
#define lapack_complex_float std::complex<float>
#include <lapacke.h>

namespace adsq {

void eigh(Eigen::MatrixXcd& A, Eigen::VectorXd& w, bool vectors) {
    const auto n = static_cast<lapack_int>(A.rows());
    if (A.cols() != n) throw std::invalid_argument("eigh: square matrix required");
    w.resize(n);
    lapack_int info = LAPACKE_zheevd(LAPACK_COL_MAJOR, vectors ? 'V' : 'N', 'L', n,
                                     A.data(), n, w.data());
    if (info != 0) throw std::runtime_error("eigh: zheevd failed, info=" + std::to_string(info));
}

void eigh(Eigen::MatrixXd& A, Eigen::VectorXd& w, bool vectors) {
    const auto n = static_cast<lapack_int>(A.rows());
    if (A.cols() != n) throw std::invalid_argument("eigh: square matrix required");
    w.resize(n);
    lapack_int info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, vectors ? 'V' : 'N', 'L', n,
                                     A.data(), n, w.data());
    if (info != 0) throw std::runtime_error("eigh: dsyevd failed, info=" + std::to_string(info));
}

Eigen::VectorXd polyfit_values(const Eigen::VectorXd& x, const Eigen::VectorXd& y, int degree) {
    const auto m = x.size();
    if (m != y.size() || m < degree + 1)
        throw std::invalid_argument("polyfit_values: need at least degree+1 samples");
    double lo = x.minCoeff(), hi = x.maxCoeff();
    double mid = 0.5 * (lo + hi), half = hi > lo ? 0.5 * (hi - lo) : 1.0;
    Eigen::MatrixXd V(m, degree + 1);
    for (Eigen::Index i = 0; i < m; ++i) {
        double t = (x[i] - mid) / half;
        double p = 1.0;
        for (int d = 0; d <= degree; ++d) {
            V(i, d) = p;
            p *= t;
        }
    }
    Eigen::VectorXd coef = V.colPivHouseholderQr().solve(y);
    return V * coef;
}

}  // namespace adsq
