#include "jcm/field_space.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace jcm {

FieldVector coherent_coefficients(Complex alpha, int n_max) {
    if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag()))
        throw std::invalid_argument("coherent_coefficients: alpha must be finite");
    if (n_max < 1)
        throw std::invalid_argument("coherent_coefficients: n_max must be >= 1");

    FieldVector b(n_max + 1);
    b[0] = std::exp(-0.5 * std::norm(alpha));
    for (int n = 0; n < n_max; ++n)
        b[n + 1] = b[n] * alpha / std::sqrt(static_cast<double>(n + 1));
    return b;
}

int choose_truncation(Complex alpha, const TruncationPolicy& policy) {
    if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag()))
        throw std::invalid_argument("choose_truncation: alpha must be finite");
    if (!(policy.tail_tolerance > 0.0))
        throw std::invalid_argument("choose_truncation: tail_tolerance must be positive");
    if (policy.buffer < 1)
        throw std::invalid_argument("choose_truncation: buffer must be >= 1");

    const double mean = std::norm(alpha);  // Poisson occupation mean |alpha|^2
    if (mean == 0.0) return policy.buffer;

    // Occupation probabilities p_n = e^{-mean} mean^n / n!, extended until the
    // geometric remainder bound past the mean is negligible next to the
    // tolerance. Past n+1 > 2*mean the term ratio is below 1/2, so
    // sum_{m > n} p_m <= p_n * r / (1 - r) with r = mean / (n + 2).
    std::vector<double> p;
    p.push_back(std::exp(-mean));
    for (int n = 1;; ++n) {
        p.push_back(p.back() * mean / n);
        if (n + 1 > 2.0 * mean) {
            const double r = mean / (n + 2);
            if (p.back() * r / (1.0 - r) < 1e-4 * policy.tail_tolerance) break;
        }
    }

    // Tail above each candidate cutoff, accumulated small-to-large.
    std::vector<double> tail(p.size() + 1, 0.0);
    for (int n = static_cast<int>(p.size()) - 1; n >= 0; --n)
        tail[n] = tail[n + 1] + p[n];

    int cutoff = static_cast<int>(p.size()) - 1;
    for (int n = 0; n < static_cast<int>(p.size()); ++n) {
        if (tail[n + 1] < policy.tail_tolerance) {
            cutoff = n;
            break;
        }
    }
    return cutoff + policy.buffer;
}

}  // namespace jcm
