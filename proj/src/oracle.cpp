#include "jcm/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "jcm/hermitian_linalg.hpp"

namespace jcm {

Eigen::MatrixXcd build_hamiltonian(const SystemParams& params, int n_max) {
    // g = 0 (bare, decoupled levels) is allowed here, unlike in the dynamics ops
    if (!std::isfinite(params.g) || !std::isfinite(params.omega_a) ||
        !std::isfinite(params.delta))
        throw std::invalid_argument("build_hamiltonian: parameters must be finite");
    if (n_max < 1) throw std::invalid_argument("build_hamiltonian: n_max must be >= 1");

    const int d = n_max + 1;
    const double wf = params.omega_f();
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(2 * d, 2 * d);
    for (int n = 0; n <= n_max; ++n) {
        h(n, n) = 0.5 * params.omega_a + wf * n;          // |e,n>
        h(d + n, d + n) = -0.5 * params.omega_a + wf * n;  // |g,n>
    }
    // g(sigma+ a + sigma- a') couples |e,n> <-> |g,n+1>; the transition out of
    // |e,n_max> has no partner level and is dropped.
    for (int n = 0; n < n_max; ++n) {
        const double k = params.g * std::sqrt(static_cast<double>(n + 1));
        h(n, d + n + 1) = k;
        h(d + n + 1, n) = k;
    }
    return h;
}

JointDensity brute_force_state(const SystemParams& params, const FieldVector& field0,
                               double t) {
    params.validate();
    if (t < 0.0) throw std::invalid_argument("brute_force_state: t must be >= 0");
    const int d = static_cast<int>(field0.size());
    if (d < 2) throw std::invalid_argument("brute_force_state: field vector needs at least 2 levels");

    const Eigen::MatrixXcd h = build_hamiltonian(params, d - 1);

    Eigen::VectorXcd ground = Eigen::VectorXcd::Zero(2 * d);
    ground.tail(d) = field0;
    Eigen::VectorXcd excited = Eigen::VectorXcd::Zero(2 * d);
    excited.head(d) = field0;

    const Eigen::VectorXcd psi_g = matrix_exponential_action(h, t, ground);
    const Eigen::VectorXcd psi_e = matrix_exponential_action(h, t, excited);

    const double wg = params.atom_ground_weight;
    const double we = params.atom_excited_weight();
    const Eigen::MatrixXcd full =
        wg * (psi_g * psi_g.adjoint()) + we * (psi_e * psi_e.adjoint());

    JointDensity rho;
    rho.ee = full.topLeftCorner(d, d);
    rho.eg = full.topRightCorner(d, d);
    rho.gg = full.bottomRightCorner(d, d);
    return rho;
}

MeasureRecord measure_oracle_point(const SystemParams& params, const FieldVector& field0,
                                   double t) {
    const JointDensity rho = brute_force_state(params, field0, t);
    const Eigen::Matrix2cd rho_atom = atom_marginal(rho);
    const Eigen::MatrixXcd rho_field = field_marginal(rho);

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
