// Euler-Maclaurin zeta on s > 1 and the reflection to negative arguments.
#pragma once

#include <cmath>
#include <stdexcept>

namespace fraclab::detail {

// zeta(s), s > 1: partial sum to n-1 plus tail and B_{2k} corrections.
// n = 24, six Bernoulli terms reaches ~1e-15 on s in (1, 40].
inline double zeta_em(double s) {
    constexpr double B[6] = {1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66, -691.0 / 2730};
    constexpr double fact[6] = {2, 24, 720, 40320, 3628800, 479001600};
    const int n = 24;
    double acc = 0.0;
    for (int k = 1; k < n; ++k) acc += std::pow(double(k), -s);
    acc += std::pow(double(n), 1.0 - s) / (s - 1.0);
    acc += 0.5 * std::pow(double(n), -s);
    double prod = 1.0;
    for (int k = 1; k <= 6; ++k) {
        // prod = s (s+1) ... (s+2k-2)
        prod = (k == 1) ? s : prod * (s + 2 * k - 3) * (s + 2 * k - 2);
        acc += B[k - 1] / fact[k - 1] * prod * std::pow(double(n), -s - 2 * k + 1);
    }
    return acc;
}

// zeta(-s) for s in (0,2), via zeta(z) = 2^z pi^{z-1} sin(pi z/2) Gamma(1-z) zeta(1-z).
inline double zeta_negative(double s) {
    if (!(s > 0.0 && s < 2.0)) throw std::invalid_argument("zeta_negative: s in (0,2) required");
    return -std::pow(2.0, -s) * std::pow(M_PI, -s - 1.0) * std::sin(M_PI * s / 2.0) *
           std::tgamma(1.0 + s) * zeta_em(1.0 + s);
}

} // namespace fraclab::detail
