#include "jcm/measures.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

#include "jcm/hermitian_linalg.hpp"

namespace jcm {

namespace {

// Truncation and roundoff produce spurious eigenvalues of order 1e-13; these
// floors keep them out of the entropy and negativity sums.
constexpr double kEntropyFloor = 1e-15;
constexpr double kNegativityDust = 1e-10;

}  // namespace

Eigen::MatrixXcd partial_transpose_atom(const JointDensity& rho) {
    const int d = rho.field_dim();
    Eigen::MatrixXcd m(2 * d, 2 * d);
    m.topLeftCorner(d, d) = rho.ee;
    m.topRightCorner(d, d) = rho.eg.adjoint();
    m.bottomLeftCorner(d, d) = rho.eg;
    m.bottomRightCorner(d, d) = rho.gg;
    return m;
}

double negativity(const JointDensity& rho) {
    const Eigen::VectorXd values = eigenvalues_hermitian(partial_transpose_atom(rho));
    double total = 0.0;
    for (Eigen::Index i = 0; i < values.size(); ++i)
        if (values[i] < -kNegativityDust) total -= values[i];
    return total;
}

double von_neumann_entropy(const Eigen::MatrixXcd& m) {
    if (std::abs(m.trace().real() - 1.0) > 1e-6 || std::abs(m.trace().imag()) > 1e-6)
        throw std::invalid_argument("von_neumann_entropy: trace deviates from 1 beyond 1e-6");
    const Eigen::VectorXd values = eigenvalues_hermitian(m);
    double s = 0.0;
    for (Eigen::Index i = 0; i < values.size(); ++i)
        if (values[i] > kEntropyFloor) s -= values[i] * std::log(values[i]);
    return s;
}

double mutual_entropy(const JointDensity& rho, const Eigen::Matrix2cd& rho_atom,
                      const Eigen::MatrixXcd& rho_field) {
    if ((atom_marginal(rho) - rho_atom).cwiseAbs().maxCoeff() > 1e-8 ||
        rho_field.rows() != rho.field_dim() ||
        (field_marginal(rho) - rho_field).cwiseAbs().maxCoeff() > 1e-8)
        throw std::invalid_argument("mutual_entropy: marginals inconsistent with the joint state");
    const double value = von_neumann_entropy(rho_atom) + von_neumann_entropy(rho_field) -
                         von_neumann_entropy(rho.full());
    return std::max(0.0, value);
}

MeasureRecord measure_sweep_point(const SystemParams& params, const FieldVector& field0,
                                  double t) {
    const ChiQuad chi = chi_vectors(params, field0, t);
    const JointDensity rho = assemble_joint_density(params, chi);
    const Eigen::Matrix2cd rho_atom = reduced_atom(params, chi);
    const Eigen::MatrixXcd rho_field = reduced_field(params, chi);

    assert((atom_marginal(rho) - rho_atom).cwiseAbs().maxCoeff() < 1e-10);
    assert((field_marginal(rho) - rho_field).cwiseAbs().maxCoeff() < 1e-10);
    assert(std::abs(chi.chi1.squaredNorm() + chi.chi2.squaredNorm() -
                    field0.squaredNorm()) < 1e-10);
    assert(std::abs(chi.chi3.squaredNorm() + chi.chi4.squaredNorm() -
                    field0.squaredNorm()) < 1e-10);

    MeasureRecord rec;
    rec.t = t;
    rec.negativity = negativity(rho);
    rec.s_atom = von_neumann_entropy(rho_atom);
    rec.s_field = von_neumann_entropy(rho_field);
    rec.s_joint = von_neumann_entropy(rho.full());
    rec.mutual_entropy = std::max(0.0, rec.s_atom + rec.s_field - rec.s_joint);
    rec.classical_bound = std::min(rec.s_atom, rec.s_field);
    rec.truncation_mass_lost =
        std::max(0.0, 1.0 - (rho.ee.trace() + rho.gg.trace()).real());
    return rec;
}

}  // namespace jcm
