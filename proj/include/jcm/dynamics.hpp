#pragma once

#include <utility>

#include <Eigen/Dense>

#include "jcm/field_space.hpp"

namespace jcm {

/// Physical constants of the atom-field system, hbar = 1.
///
/// The field frequency is derived as omega_a - delta, so the detuning relation
/// holds exactly by construction. All reported measures are invariant under a
/// common shift of omega_a and omega_f at fixed delta (it only conjugates the
/// state with local phases), so this choice does not affect results.
struct SystemParams {
    double g = 1.0;                   ///< atom-field coupling, > 0
    double omega_a = 1.0;             ///< atomic transition frequency
    double delta = 0.0;               ///< detuning omega_a - omega_f
    double atom_ground_weight = 0.0;  ///< weight of |g><g| in the initial atom mixture, in [0, 1]

    double omega_f() const { return omega_a - delta; }
    double atom_excited_weight() const { return 1.0 - atom_ground_weight; }

    /// Throws std::invalid_argument if any field is out of range.
    void validate() const;
};

/// The four unnormalized field vectors carrying the joint state at time t:
///   U(t)|g,eta> = |g>|chi1> + |e>|chi2>,
///   U(t)|e,eta> = |g>|chi3> + |e>|chi4>.
/// Unitarity fixes <chi1|chi1> + <chi2|chi2> = <chi3|chi3> + <chi4|chi4>
/// = |eta|^2.
struct ChiQuad {
    FieldVector chi1, chi2, chi3, chi4;
    double t = 0.0;
};

/// Rank-2 joint density matrix in block form over {|e>, |g>} (x) Fock space,
/// atom index outer, Fock index inner:
///
///   rho = [ ee  eg  ]
///         [ eg' gg  ]      (eg' = adjoint of eg)
struct JointDensity {
    Eigen::MatrixXcd ee;
    Eigen::MatrixXcd gg;
    Eigen::MatrixXcd eg;

    int field_dim() const { return static_cast<int>(ee.rows()); }

    /// Assembled 2*(n_max+1)-dimensional matrix.
    Eigen::MatrixXcd full() const;
};

/// Rabi frequency Omega_n = sqrt((delta/2)^2 + g^2 (n+1)) of excitation
/// sector n.
double rabi_frequency(const SystemParams& params, int n);

/// Mixing angle theta_n in (0, pi/2) with tan(theta_n) =
/// 2 g sqrt(n+1) / (-delta + 2 Omega_n); evaluated with a two-argument
/// arctangent so a large negative detuning stays well-conditioned.
double mixing_angle(const SystemParams& params, int n);

/// Dressed-state energies (E+, E-) = omega_f (n + 1/2) +- Omega_n of sector n.
std::pair<double, double> dressed_energies(const SystemParams& params, int n);

/// Closed-form time evolution of |g,eta> and |e,eta> under the truncated
/// Hamiltonian, expressed as the four chi vectors.
///
/// field0 must be normalized (within 1e-10; a tail below the truncation
/// tolerance passes). Truncation is hard: |e,n_max> evolves with its bare
/// phase e^{-i(omega_a/2 + omega_f n_max) t} because the coupling out of the
/// top level is dropped, and the n = 0 component of |g,eta> keeps the exact
/// bare ground phase e^{+i omega_a t/2}. This makes the result identical to
/// e^{-iHt} with the truncated H, so comparisons against the brute-force
/// propagator cancel truncation error.
ChiQuad chi_vectors(const SystemParams& params, const FieldVector& field0, double t);

/// Joint density from outer products of the chi vectors:
///   ee = w_g |chi2><chi2| + w_e |chi4><chi4|
///   gg = w_g |chi1><chi1| + w_e |chi3><chi3|
///   eg = w_g |chi2><chi1| + w_e |chi4><chi3|
/// with w_g = atom_ground_weight, w_e = 1 - w_g.
JointDensity assemble_joint_density(const SystemParams& params, const ChiQuad& chi);

/// Atomic marginal, computed directly from the chi vectors. The diagonal is
/// (Tr ee, 1 - Tr ee) and the off-diagonal is Tr eg.
Eigen::Matrix2cd reduced_atom(const SystemParams& params, const ChiQuad& chi);

/// Field marginal ee + gg, computed directly from the chi vectors.
Eigen::MatrixXcd reduced_field(const SystemParams& params, const ChiQuad& chi);

/// Partial trace over the field of an assembled joint density.
Eigen::Matrix2cd atom_marginal(const JointDensity& rho);

/// Partial trace over the atom of an assembled joint density.
Eigen::MatrixXcd field_marginal(const JointDensity& rho);

}  // namespace jcm
