#include "jcm/hermitian_linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace jcm {

namespace {

// Rejects genuinely non-Hermitian input, then absorbs block-assembly roundoff.
Eigen::MatrixXcd symmetrized(const Eigen::MatrixXcd& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("hermitian_linalg: matrix must be square");
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    const double deviation = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (deviation > 1e-12 * scale)
        throw std::invalid_argument(
            "hermitian_linalg: input deviates from Hermitian beyond 1e-12 relative");
    return 0.5 * (m + m.adjoint());
}

}  // namespace

Eigen::VectorXd eigenvalues_hermitian(const Eigen::MatrixXcd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(symmetrized(m),
                                                           Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eigenvalues_hermitian: decomposition failed");
    return solver.eigenvalues();
}

EigenSystem eigensystem_hermitian(const Eigen::MatrixXcd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(symmetrized(m));
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eigensystem_hermitian: decomposition failed");
    return {solver.eigenvalues(), solver.eigenvectors()};
}

double trace_norm(const Eigen::MatrixXcd& m) {
    return eigenvalues_hermitian(m).cwiseAbs().sum();
}

Eigen::VectorXcd matrix_exponential_action(const Eigen::MatrixXcd& h, double t,
                                           const Eigen::VectorXcd& v) {
    if (h.rows() != v.size())
        throw std::invalid_argument("matrix_exponential_action: dimension mismatch");
    const EigenSystem sys = eigensystem_hermitian(h);
    Eigen::VectorXcd w = sys.vectors.adjoint() * v;
    for (Eigen::Index i = 0; i < w.size(); ++i)
        w[i] *= std::polar(1.0, -sys.values[i] * t);
    return sys.vectors * w;
}

}  // namespace jcm
