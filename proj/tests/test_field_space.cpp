#include <cmath>
#include <complex>
#include <stdexcept>

#include <doctest.h>

#include "jcm/field_space.hpp"

using jcm::Complex;
using jcm::FieldVector;

namespace {

// Independent route: b_n from the closed form with explicit factorials.
Complex coefficient_direct(Complex alpha, int n) {
    return std::exp(-0.5 * std::norm(alpha)) * std::pow(alpha, n) /
           std::sqrt(std::tgamma(static_cast<double>(n) + 1.0));
}

// Brute-force Poisson tail: sum e^{-m} m^n / n! over n > cutoff via log-space
// terms until they stop contributing.
double poisson_tail(double mean, int cutoff) {
    double tail = 0.0;
    for (int n = cutoff + 1; n < cutoff + 2000; ++n) {
        const double log_p = -mean + n * std::log(mean) - std::lgamma(n + 1.0);
        const double p = std::exp(log_p);
        if (p < 1e-300 || (tail > 0.0 && p < 1e-18 * tail)) break;
        tail += p;
    }
    return tail;
}

int truncation_oracle(double mean, double tol, int buffer) {
    int n = 0;
    while (poisson_tail(mean, n) >= tol) ++n;
    return n + buffer;
}

}  // namespace

TEST_SUITE("field-space") {

TEST_CASE("vacuum state has a single nonzero coefficient") {
    const FieldVector b = jcm::coherent_coefficients(0.0, 5);
    REQUIRE(b.size() == 6);
    CHECK(b[0] == Complex(1.0, 0.0));
    for (int n = 1; n <= 5; ++n) CHECK(b[n] == Complex(0.0, 0.0));
}

TEST_CASE("occupation above n = 25 is below 1e-10 for alpha = sqrt(5)") {
    const FieldVector b = jcm::coherent_coefficients(std::sqrt(5.0), 40);
    for (int n = 26; n <= 40; ++n) CHECK(std::norm(b[n]) < 1e-10);
    // the bound is tight: level 25 itself still carries more than 1e-10
    CHECK(std::norm(b[25]) >= 1e-10);
}

TEST_CASE("ground coefficient matches the closed form") {
    const FieldVector b = jcm::coherent_coefficients(std::sqrt(5.0), 30);
    CHECK(std::abs(b[0] - std::exp(-2.5)) < 1e-15);
}

TEST_CASE("recurrence agrees with the factorial formula up to n = 20") {
    for (const Complex alpha : {Complex(1.3, 0.0), Complex(0.4, -1.7), Complex(2.2, 0.9)}) {
        const FieldVector b = jcm::coherent_coefficients(alpha, 20);
        for (int n = 0; n <= 20; ++n)
            CHECK(std::abs(b[n] - coefficient_direct(alpha, n)) < 1e-12);
    }
}

TEST_CASE("normalization and mean photon number") {
    const Complex alpha(1.9, -0.6);
    const jcm::TruncationPolicy policy;
    const int n_max = jcm::choose_truncation(alpha, policy);
    const FieldVector b = jcm::coherent_coefficients(alpha, n_max);

    const double tail = 1.0 - b.squaredNorm();
    CHECK(tail >= -1e-14);
    CHECK(tail < policy.tail_tolerance);

    double mean = 0.0;
    for (int n = 0; n <= n_max; ++n) mean += n * std::norm(b[n]);
    CHECK(mean == doctest::Approx(std::norm(alpha)).epsilon(1e-9));
}

TEST_CASE("truncation of the vacuum is just the buffer") {
    CHECK(jcm::choose_truncation(0.0, {1e-12, 5}) == 5);
    CHECK(jcm::choose_truncation(0.0, {1e-10, 1}) == 1);
}

TEST_CASE("truncation for alpha = sqrt(5) at the documented tail bound") {
    const int n_max = jcm::choose_truncation(std::sqrt(5.0), {1e-10, 5});
    CHECK(n_max >= 30);
    CHECK(n_max == truncation_oracle(5.0, 1e-10, 5));
}

TEST_CASE("truncation for alpha = 2 matches the brute-force tail sum") {
    const int n_max = jcm::choose_truncation(2.0, {1e-12, 5});
    CHECK(n_max == truncation_oracle(4.0, 1e-12, 5));
    CHECK(n_max == 30);
}

TEST_CASE("truncation is phase-invariant") {
    const jcm::TruncationPolicy policy{1e-12, 5};
    const int reference = jcm::choose_truncation(2.0, policy);
    CHECK(jcm::choose_truncation(Complex(0.0, 2.0), policy) == reference);
    CHECK(jcm::choose_truncation(Complex(-std::sqrt(2.0), std::sqrt(2.0)), policy) == reference);
}

TEST_CASE("invalid inputs are rejected") {
    const double nan = std::nan("");
    CHECK_THROWS_AS(jcm::coherent_coefficients(Complex(nan, 0.0), 10), std::invalid_argument);
    CHECK_THROWS_AS(jcm::coherent_coefficients(1.0, 0), std::invalid_argument);
    CHECK_THROWS_AS(jcm::choose_truncation(1.0, {0.0, 5}), std::invalid_argument);
    CHECK_THROWS_AS(jcm::choose_truncation(1.0, {1e-12, 0}), std::invalid_argument);
}

}  // TEST_SUITE
