#include "jcm/dynamics.hpp"

#include <cmath>
#include <stdexcept>

namespace jcm {

namespace {

constexpr double kNormalizationTol = 1e-10;

void require_sector(int n) {
    if (n < 0) throw std::invalid_argument("dynamics: sector index n must be >= 0");
}

// Closed forms of sin(2 theta_n) and cos(2 theta_n); algebraically exact, so
// the hot path skips the trig round trip through the angle.
double sin_two_theta(const SystemParams& params, int n) {
    return params.g * std::sqrt(static_cast<double>(n + 1)) / rabi_frequency(params, n);
}

double cos_two_theta(const SystemParams& params, int n) {
    return -0.5 * params.delta / rabi_frequency(params, n);
}

}  // namespace

void SystemParams::validate() const {
    if (!(g > 0.0) || !std::isfinite(g))
        throw std::invalid_argument("SystemParams: g must be positive and finite");
    if (!std::isfinite(omega_a))
        throw std::invalid_argument("SystemParams: omega_a must be finite");
    if (!std::isfinite(delta))
        throw std::invalid_argument("SystemParams: delta must be finite");
    if (!(atom_ground_weight >= 0.0 && atom_ground_weight <= 1.0))
        throw std::invalid_argument("SystemParams: atom_ground_weight must lie in [0, 1]");
}

double rabi_frequency(const SystemParams& params, int n) {
    require_sector(n);
    return std::hypot(0.5 * params.delta, params.g * std::sqrt(static_cast<double>(n + 1)));
}

double mixing_angle(const SystemParams& params, int n) {
    require_sector(n);
    // both arguments are positive (2 Omega_n > |delta|), so the angle lands in (0, pi/2)
    return std::atan2(2.0 * params.g * std::sqrt(static_cast<double>(n + 1)),
                      -params.delta + 2.0 * rabi_frequency(params, n));
}

std::pair<double, double> dressed_energies(const SystemParams& params, int n) {
    require_sector(n);
    const double center = params.omega_f() * (n + 0.5);
    const double omega = rabi_frequency(params, n);
    return {center + omega, center - omega};
}

Eigen::MatrixXcd JointDensity::full() const {
    const int d = field_dim();
    Eigen::MatrixXcd m(2 * d, 2 * d);
    m.topLeftCorner(d, d) = ee;
    m.topRightCorner(d, d) = eg;
    m.bottomLeftCorner(d, d) = eg.adjoint();
    m.bottomRightCorner(d, d) = gg;
    return m;
}

ChiQuad chi_vectors(const SystemParams& params, const FieldVector& field0, double t) {
    params.validate();
    if (t < 0.0) throw std::invalid_argument("chi_vectors: t must be >= 0");
    const int dim = static_cast<int>(field0.size());
    if (dim < 2) throw std::invalid_argument("chi_vectors: field vector needs at least 2 levels");
    if (std::abs(field0.squaredNorm() - 1.0) > kNormalizationTol)
        throw std::invalid_argument("chi_vectors: field vector must be normalized");

    const int n_top = dim - 1;
    const double wf = params.omega_f();
    const Complex mi(0.0, -1.0);

    ChiQuad q;
    q.t = t;
    q.chi1 = FieldVector::Zero(dim);
    q.chi2 = FieldVector::Zero(dim);
    q.chi3 = FieldVector::Zero(dim);
    q.chi4 = FieldVector::Zero(dim);

    // |g,0> sits outside every two-level sector and only picks up its bare phase.
    q.chi1[0] = field0[0] * std::polar(1.0, 0.5 * params.omega_a * t);

    // |g,n> for n >= 1 mixes with |e,n-1> inside sector n-1.
    for (int n = 1; n <= n_top; ++n) {
        const double omega = rabi_frequency(params, n - 1);
        const double c2 = cos_two_theta(params, n - 1);
        const Complex phase = std::polar(1.0, -wf * (n - 0.5) * t);
        q.chi1[n] = field0[n] * phase *
                    (std::cos(omega * t) + mi * c2 * std::sin(omega * t));
    }

    // Sector n also feeds |e,n> from the initial |g,n+1> amplitude, and
    // |e,n> from |e,eta> splits between |e,n> and |g,n+1>.
    for (int n = 0; n < n_top; ++n) {
        const double omega = rabi_frequency(params, n);
        const double s2 = sin_two_theta(params, n);
        const double c2 = cos_two_theta(params, n);
        const Complex phase = std::polar(1.0, -wf * (n + 0.5) * t);
        const Complex transfer = mi * phase * s2 * std::sin(omega * t);
        q.chi2[n] = field0[n + 1] * transfer;
        q.chi3[n + 1] = field0[n] * transfer;
        q.chi4[n] = field0[n] * phase *
                    (std::cos(omega * t) - mi * c2 * std::sin(omega * t));
    }

    // Hard truncation: the coupling out of |e,n_top> is dropped, so the top
    // level evolves with its bare phase and nothing lands on |n_top + 1>.
    q.chi4[n_top] = field0[n_top] *
                    std::polar(1.0, -(0.5 * params.omega_a + wf * n_top) * t);

    return q;
}

JointDensity assemble_joint_density(const SystemParams& params, const ChiQuad& chi) {
    params.validate();
    const double wg = params.atom_ground_weight;
    const double we = params.atom_excited_weight();
    JointDensity rho;
    rho.ee = wg * (chi.chi2 * chi.chi2.adjoint()) + we * (chi.chi4 * chi.chi4.adjoint());
    rho.gg = wg * (chi.chi1 * chi.chi1.adjoint()) + we * (chi.chi3 * chi.chi3.adjoint());
    rho.eg = wg * (chi.chi2 * chi.chi1.adjoint()) + we * (chi.chi4 * chi.chi3.adjoint());
    return rho;
}

Eigen::Matrix2cd reduced_atom(const SystemParams& params, const ChiQuad& chi) {
    params.validate();
    const double wg = params.atom_ground_weight;
    const double we = params.atom_excited_weight();
    // Tr ee and Tr eg, contracted without forming the blocks.
    const double p_excited = wg * chi.chi2.squaredNorm() + we * chi.chi4.squaredNorm();
    const Complex coherence = wg * chi.chi1.dot(chi.chi2) + we * chi.chi3.dot(chi.chi4);
    Eigen::Matrix2cd atom;
    atom(0, 0) = p_excited;
    atom(0, 1) = coherence;
    atom(1, 0) = std::conj(coherence);
    atom(1, 1) = 1.0 - p_excited;
    return atom;
}

Eigen::MatrixXcd reduced_field(const SystemParams& params, const ChiQuad& chi) {
    params.validate();
    const double wg = params.atom_ground_weight;
    const double we = params.atom_excited_weight();
    return wg * (chi.chi1 * chi.chi1.adjoint() + chi.chi2 * chi.chi2.adjoint()) +
           we * (chi.chi3 * chi.chi3.adjoint() + chi.chi4 * chi.chi4.adjoint());
}

Eigen::Matrix2cd atom_marginal(const JointDensity& rho) {
    Eigen::Matrix2cd atom;
    atom(0, 0) = rho.ee.trace();
    atom(0, 1) = rho.eg.trace();
    atom(1, 0) = std::conj(atom(0, 1));
    atom(1, 1) = rho.gg.trace();
    return atom;
}

Eigen::MatrixXcd field_marginal(const JointDensity& rho) {
    return rho.ee + rho.gg;
}

}  // namespace jcm
