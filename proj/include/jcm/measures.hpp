#pragma once

#include <Eigen/Dense>

#include "jcm/dynamics.hpp"

namespace jcm {

/// One time sample of the correlation measures. Entropies are in nats.
struct MeasureRecord {
    double t = 0.0;
    double negativity = 0.0;            ///< -(sum of negative eigenvalues of rho^T1)
    double mutual_entropy = 0.0;        ///< s_atom + s_field - s_joint, clamped to >= 0
    double s_atom = 0.0;
    double s_field = 0.0;
    double s_joint = 0.0;
    double classical_bound = 0.0;       ///< min(s_atom, s_field)
    double truncation_mass_lost = 0.0;  ///< 1 - Tr rho(t), the occupation mass above the cutoff
};

/// Partial transpose with respect to the atom: the off-diagonal blocks swap,
///   rho^T1 = [ ee  eg' ]
///            [ eg  gg  ].
/// Hermitian with the same trace as rho.
Eigen::MatrixXcd partial_transpose_atom(const JointDensity& rho);

/// Negativity N(rho) = (||rho^T1||_1 - 1) / 2, computed as the absolute sum
/// of the negative eigenvalues of the partial transpose. Eigenvalues within
/// 1e-10 of zero are roundoff dust and do not count, so a product state gives
/// exactly 0. No separability threshold is applied; callers see the raw value.
double negativity(const JointDensity& rho);

/// Von Neumann entropy -Tr(m ln m) in nats, with 0 ln 0 = 0; eigenvalues
/// below 1e-15 are treated as exact zeros. The trace must be 1 within 1e-6
/// (a larger deviation signals an upstream assembly bug and throws).
double von_neumann_entropy(const Eigen::MatrixXcd& m);

/// Quantum mutual entropy S(rho_atom) + S(rho_field) - S(rho), clamped to
/// >= 0. The marginals must be the partial traces of rho within 1e-8, else
/// std::invalid_argument.
double mutual_entropy(const JointDensity& rho, const Eigen::Matrix2cd& rho_atom,
                      const Eigen::MatrixXcd& rho_field);

/// Full measure record for one grid point: evolves the state, assembles the
/// density and its marginals, and evaluates every measure.
MeasureRecord measure_sweep_point(const SystemParams& params, const FieldVector& field0,
                                  double t);

}  // namespace jcm
