#pragma once

#include <Eigen/Dense>

namespace adsq {

// Hermitian eigendecomposition (LAPACK zheevd). On return A holds the
// eigenvectors (columns) when vectors=true; w holds ascending eigenvalues.
void eigh(Eigen::MatrixXcd& A, Eigen::VectorXd& w, bool vectors = true);

// Real symmetric variant (dsyevd).
void eigh(Eigen::MatrixXd& A, Eigen::VectorXd& w, bool vectors = true);

// Degree-d polynomial least squares of y against x (x pre-scaled to [-1,1]
// internally for conditioning). Returns the fitted values at the sample points.
Eigen::VectorXd polyfit_values(const Eigen::VectorXd& x, const Eigen::VectorXd& y, int degree);

}  // namespace adsq
