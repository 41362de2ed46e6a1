#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

#include <doctest.h>

#include "jcm/field_space.hpp"
#include "jcm/hermitian_linalg.hpp"

using jcm::Complex;

namespace {

Eigen::MatrixXcd random_hermitian(int dim, unsigned seed) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXcd g(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
    return 0.5 * (g + g.adjoint());
}

// Independent matrix exponential: scaling and squaring with a Taylor series.
Eigen::MatrixXcd expm_series(const Eigen::MatrixXcd& a) {
    const int dim = static_cast<int>(a.rows());
    int squarings = 0;
    double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
    while (norm > 0.5) {
        norm *= 0.5;
        ++squarings;
    }
    const Eigen::MatrixXcd scaled = a / std::pow(2.0, squarings);
    Eigen::MatrixXcd result = Eigen::MatrixXcd::Identity(dim, dim);
    Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(dim, dim);
    for (int k = 1; k <= 25; ++k) {
        term = (term * scaled) / static_cast<double>(k);
        result += term;
    }
    for (int s = 0; s < squarings; ++s) result = result * result;
    return result;
}

}  // namespace

TEST_SUITE("hermitian-linalg") {

TEST_CASE("eigenvalues of simple matrices") {
    CHECK(jcm::eigenvalues_hermitian(Eigen::MatrixXcd::Identity(4, 4)).isApprox(
        Eigen::Vector4d::Ones(), 1e-14));

    Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(3, 3);
    d(0, 0) = 3.0;
    d(1, 1) = -1.0;
    d(2, 2) = 2.0;
    const Eigen::VectorXd values = jcm::eigenvalues_hermitian(d);
    CHECK(values[0] == doctest::Approx(-1.0));
    CHECK(values[1] == doctest::Approx(2.0));
    CHECK(values[2] == doctest::Approx(3.0));
}

TEST_CASE("eigenvalue sum and product reproduce trace and determinant") {
    const Eigen::MatrixXcd m = random_hermitian(8, 17);
    const Eigen::VectorXd values = jcm::eigenvalues_hermitian(m);

    CHECK(std::abs(values.sum() - m.trace().real()) <
          1e-10 * std::max(1.0, std::abs(m.trace().real())));

    const double det = m.determinant().real();
    CHECK(std::abs(values.prod() - det) < 1e-10 * std::max(1.0, std::abs(det)));
}

TEST_CASE("eigenpairs satisfy the backward-error bound") {
    const Eigen::MatrixXcd m = random_hermitian(12, 3);
    const double scale = m.cwiseAbs().maxCoeff();
    const jcm::EigenSystem sys = jcm::eigensystem_hermitian(m);
    for (int i = 0; i < 12; ++i) {
        const Eigen::VectorXcd v = sys.vectors.col(i);
        CHECK((m * v - sys.values[i] * v).norm() <= 1e-10 * scale);
    }
}

TEST_CASE("non-hermitian input is rejected") {
    Eigen::MatrixXcd m = random_hermitian(4, 5);
    m(1, 2) += Complex(1e-6, 0.0);
    CHECK_THROWS_AS(jcm::eigenvalues_hermitian(m), std::invalid_argument);
    CHECK_THROWS_AS(jcm::trace_norm(m), std::invalid_argument);
}

TEST_CASE("trace norm of a PSD matrix is its trace") {
    const Eigen::MatrixXcd g = random_hermitian(6, 11);
    const Eigen::MatrixXcd psd = g * g.adjoint();
    CHECK(jcm::trace_norm(psd) == doctest::Approx(psd.trace().real()).epsilon(1e-12));
}

TEST_CASE("trace norm of diag(0.5, -0.5) is 1") {
    Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(2, 2);
    d(0, 0) = 0.5;
    d(1, 1) = -0.5;
    CHECK(jcm::trace_norm(d) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("trace norm matches Tr sqrt(M'M)") {
    const Eigen::MatrixXcd m = random_hermitian(6, 23);
    const Eigen::VectorXd squares = jcm::eigenvalues_hermitian(m.adjoint() * m);
    double reference = 0.0;
    for (int i = 0; i < squares.size(); ++i)
        reference += std::sqrt(std::max(0.0, squares[i]));
    CHECK(std::abs(jcm::trace_norm(m) - reference) < 1e-9);
}

TEST_CASE("exponential action at t = 0 is the identity") {
    const Eigen::MatrixXcd h = random_hermitian(5, 7);
    Eigen::VectorXcd v(5);
    v << 1.0, Complex(0.0, 2.0), -0.5, 0.25, Complex(1.0, -1.0);
    CHECK((jcm::matrix_exponential_action(h, 0.0, v) - v).norm() < 1e-14);
}

TEST_CASE("diagonal generator rotates each component") {
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(3, 3);
    h(0, 0) = 1.0;
    h(1, 1) = -2.0;
    h(2, 2) = 0.5;
    Eigen::VectorXcd v(3);
    v << 1.0, 1.0, Complex(0.0, 1.0);
    const double t = 0.8;
    const Eigen::VectorXcd result = jcm::matrix_exponential_action(h, t, v);
    for (int i = 0; i < 3; ++i)
        CHECK(std::abs(result[i] - v[i] * std::polar(1.0, -h(i, i).real() * t)) < 1e-14);
}

TEST_CASE("exponential action matches a scaled-and-squared series") {
    const Eigen::MatrixXcd h = random_hermitian(6, 29);
    Eigen::VectorXcd v(6);
    v << 0.3, Complex(0.1, -0.4), 1.0, Complex(-0.7, 0.2), 0.05, Complex(0.0, 0.9);
    const double t = 1.0;

    const Eigen::MatrixXcd u = expm_series(Complex(0.0, -1.0) * t * h);
    const Eigen::VectorXcd result = jcm::matrix_exponential_action(h, t, v);
    CHECK((result - u * v).norm() < 1e-12);
    CHECK(result.norm() == doctest::Approx(v.norm()).epsilon(1e-12));
}

TEST_CASE("unitarity holds out to long times") {
    const Eigen::MatrixXcd h = random_hermitian(10, 41);
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(10);
    v[0] = std::sqrt(0.5);
    v[7] = Complex(0.0, std::sqrt(0.5));
    for (const double t : {1.0, 10.0, 100.0})
        CHECK(jcm::matrix_exponential_action(h, t, v).norm() ==
              doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("dimension mismatch is rejected") {
    const Eigen::MatrixXcd h = random_hermitian(4, 2);
    CHECK_THROWS_AS(jcm::matrix_exponential_action(h, 1.0, Eigen::VectorXcd::Ones(5)),
                    std::invalid_argument);
}

}  // TEST_SUITE
