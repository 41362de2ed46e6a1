#pragma once

#include <complex>

#include <Eigen/Dense>

namespace jcm {

using Complex = std::complex<double>;

/// Coefficients of a field state over the truncated Fock basis {|0>, ..., |n_max>},
/// entry n holding the amplitude on the n-photon number state.
using FieldVector = Eigen::VectorXcd;

/// Rule for picking the Fock-space cutoff of a coherent state.
struct TruncationPolicy {
    double tail_tolerance = 1e-12;  ///< admissible occupation probability above the cutoff
    int buffer = 5;                 ///< extra levels kept above the cutoff
};

/// Coherent-state coefficients b_n = e^{-|alpha|^2/2} alpha^n / sqrt(n!) for
/// n = 0..n_max, computed by the stable forward recurrence
/// b_{n+1} = b_n * alpha / sqrt(n+1) (no factorials, so large n_max is safe).
/// Coefficients are not renormalized after truncation; the missing tail mass
/// is tracked downstream as a diagnostic.
FieldVector coherent_coefficients(Complex alpha, int n_max);

/// Smallest n_max such that the Poisson occupation mass above it is below
/// policy.tail_tolerance, plus policy.buffer extra levels (the dynamics shifts
/// occupation up by one photon, so the working dimension has to exceed the
/// occupation support).
int choose_truncation(Complex alpha, const TruncationPolicy& policy = {});

}  // namespace jcm
