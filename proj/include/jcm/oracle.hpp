#pragma once

#include "jcm/dynamics.hpp"
#include "jcm/measures.hpp"

namespace jcm {

/// Dense truncated Hamiltonian on {|e>, |g>} (x) {|0>..|n_max>}, atom index
/// outer. Truncation is hard: the coupling out of |e, n_max> is dropped, so
/// the matrix commutes exactly with the excitation number a'a + sigma_z/2.
Eigen::MatrixXcd build_hamiltonian(const SystemParams& params, int n_max);

/// Brute-force rho(t): propagates |g,eta> and |e,eta> with e^{-iHt} via dense
/// eigen-decomposition and mixes the projectors. No closed-form shortcut; this
/// is the independent check for the chi-vector path.
JointDensity brute_force_state(const SystemParams& params, const FieldVector& field0,
                               double t);

/// Measure record computed entirely on the brute-force path.
MeasureRecord measure_oracle_point(const SystemParams& params, const FieldVector& field0,
                                   double t);

}  // namespace jcm
