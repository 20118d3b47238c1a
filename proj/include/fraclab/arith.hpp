// Exact arithmetic for the Dirac-comb analysis: zeta/eta evaluation, divisor
// power sums by trial division, and the quadratic-pair sums
//   sum_{m1 != m2, m1^2 - m2^2 = k} |m1 - m2|^{-(1+2 delta)}
// both brute-force and in closed form (2 sigma for odd k, the 2^{-2delta}
// sigma(k/4) branch for k = 0 mod 4, zero for k = 2 mod 4).
#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "detail/zeta.hpp"
#include "grid.hpp"

namespace fraclab {

inline double zeta_eval(double s) {
    if (!(s > 1.0)) throw std::invalid_argument("zeta_eval: s > 1 required");
    return detail::zeta_em(s);
}

// eta(s) = (1 - 2^{1-s}) zeta(s) for s > 1; alternating sum with repeated
// averaging below (where the zeta identity would need analytic continuation).
inline double eta_eval(double s) {
    if (!(s > 0.0)) throw std::invalid_argument("eta_eval: s > 0 required");
    if (s > 1.0) return (1.0 - std::pow(2.0, 1.0 - s)) * detail::zeta_em(s);
    std::vector<double> part;
    double acc = 0.0, sign = 1.0;
    for (int n = 1; n <= 96; ++n, sign = -sign) {
        acc += sign * std::pow(double(n), -s);
        if (n >= 56) part.push_back(acc);
    }
    for (std::size_t lvl = 1; lvl < part.size(); ++lvl)
        for (std::size_t i = 0; i + lvl < part.size(); ++i) part[i] = 0.5 * (part[i] + part[i + 1]);
    return part[0];
}

inline std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

// sigma_s(n) = sum_{d | n} d^s, s real (here s = -(1+2 delta) < 0), trial division.
inline double divisor_power_sum(std::int64_t n, double s) {
    if (n <= 0) throw std::invalid_argument("divisor_power_sum: n must be positive");
    double acc = 0.0;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        acc += std::pow(double(d), s);
        std::int64_t e = n / d;
        if (e != d) acc += std::pow(double(e), s);
    }
    return acc;
}

// Exhaustive double loop over |m_i| <= M; finds all pairs when M^2 >= |k| + M.
inline double pair_sum_bruteforce(std::int64_t k, DeltaParam delta, int M) {
    if (k == 0) throw std::invalid_argument("pair_sum_bruteforce: k must be nonzero");
    const double p = -(1.0 + 2.0 * delta);
    double acc = 0.0;
    for (std::int64_t m1 = -M; m1 <= M; ++m1)
        for (std::int64_t m2 = -M; m2 <= M; ++m2) {
            if (m1 == m2) continue;
            if (m1 * m1 - m2 * m2 == k) acc += std::pow(double(m1 - m2 < 0 ? m2 - m1 : m1 - m2), p);
        }
    return acc;
}

// Closed form of the same sum (divisor Lemma): factor m1-m2 = d, m1+m2 = e,
// de = k with d = e (mod 2).
inline double divisor_coefficient(std::int64_t k, DeltaParam delta) {
    if (k == 0) throw std::invalid_argument("divisor_coefficient: k must be nonzero");
    std::int64_t a = k < 0 ? -k : k;
    const double s = -(1.0 + 2.0 * delta);
    if (a % 2 == 1) return 2.0 * divisor_power_sum(a, s);
    if (a % 4 == 0) return std::pow(2.0, -2.0 * delta) * divisor_power_sum(a / 4, s);
    return 0.0; // k = 2 (mod 4): d and e can never share parity
}

inline std::vector<int> totients_upto(int n) {
    std::vector<int> phi(n + 1);
    for (int i = 0; i <= n; ++i) phi[i] = i;
    for (int i = 2; i <= n; ++i)
        if (phi[i] == i) // i prime
            for (int j = i; j <= n; j += i) phi[j] -= phi[j] / i;
    return phi;
}

} // namespace fraclab
