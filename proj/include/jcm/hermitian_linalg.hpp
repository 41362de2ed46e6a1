#pragma once

#include <Eigen/Dense>

namespace jcm {

/// Eigen-decomposition of a Hermitian matrix: real eigenvalues in ascending
/// order, matching eigenvector columns.
struct EigenSystem {
    Eigen::VectorXd values;
    Eigen::MatrixXcd vectors;
};

/// All eigenvalues of a Hermitian matrix, ascending. Inputs are symmetrized
/// ((M + M^dag)/2) to absorb roundoff from block assembly; anything deviating
/// from Hermitian beyond 1e-12 relative is rejected.
Eigen::VectorXd eigenvalues_hermitian(const Eigen::MatrixXcd& m);

/// Eigenvalues plus eigenvectors, same validation as eigenvalues_hermitian.
EigenSystem eigensystem_hermitian(const Eigen::MatrixXcd& m);

/// Trace norm ||M||_1 of a Hermitian matrix: the sum of the absolute values
/// of its eigenvalues.
double trace_norm(const Eigen::MatrixXcd& m);

/// e^{-iHt} v for Hermitian h, via eigen-decomposition. Unitary, so the
/// result keeps the norm of v.
Eigen::VectorXcd matrix_exponential_action(const Eigen::MatrixXcd& h, double t,
                                           const Eigen::VectorXcd& v);

}  // namespace jcm
