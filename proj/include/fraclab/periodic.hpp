// Periodic-data machinery: Fourier coefficient sequences on Z, the 2-periodic
// line h_p,delta[F] with coefficients on the half-integer frequencies k/2,
// the Gaussian comb datum f_{eps1,eps2}, and the background split of
// h_delta[f_eps] into the constant C_eps and the eps-periodic oscillation.
//
// psi is the Gaussian e^{-pi (sigma x)^2} (default sigma = 1/4); its transform
// mass outside the unit ball is ~1e-40, numerically indistinguishable from the
// compactly supported cutoff the theory asks for, and every moment is closed
// form. ||psi||_2^2 = 1/(sigma sqrt(2)).
#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

#include "dispersion.hpp"
#include "spectral.hpp"

namespace fraclab {

struct FourierCoeffSeq {
    int M = 0;               // coefficients for |nu| <= M
    std::vector<cd> coeffs;  // index nu + M
    bool normalized = false; // sum |F(nu)|^2 == 1
    bool tail_ok = true;     // M large enough for the requested accuracy

    cd at(int nu) const { return (nu < -M || nu > M) ? cd(0, 0) : coeffs[nu + M]; }
    double sum_sq() const {
        double s = 0;
        for (const auto& z : coeffs) s += std::norm(z);
        return s;
    }
};

struct PeriodicLine {
    double delta = 0.0;
    int K = 0;              // coefficients c_k of delta_{k/2}, |k| <= K
    std::vector<cd> c;      // index k + K
    double psi_norm_sq = 1; // the ||psi||_2^2 parameter kept explicit

    cd at(int k) const { return (k < -K || k > K) ? cd(0, 0) : c[k + K]; }
};

struct InconsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline double psi_norm_sq_gaussian(double sigma) { return 1.0 / (sigma * std::sqrt(2.0)); }

// Comb coefficients F(m) = e^{-pi (eps1 m)^2}, optionally l^2-normalized.
// The Dirac-comb limit statements live on the raw (unnormalized) sequence.
inline FourierCoeffSeq gaussian_comb_coeffs(double eps1, int M, bool normalize = true) {
    if (!(eps1 > 0.0)) throw std::invalid_argument("gaussian_comb_coeffs: eps1 > 0 required");
    FourierCoeffSeq F;
    F.M = M;
    F.coeffs.assign(2 * M + 1, cd(0, 0));
    for (int m = -M; m <= M; ++m) F.coeffs[m + M] = std::exp(-M_PI * (eps1 * m) * (eps1 * m));
    F.tail_ok = double(M) >= 4.0 / eps1;
    if (normalize) {
        double Z = std::sqrt(F.sum_sq());
        for (auto& z : F.coeffs) z /= Z;
        F.normalized = true;
    }
    return F;
}

// c_k = -(2 b_{1,delta}/||psi||^2) sum_{nu1 != nu2, nu1^2-nu2^2 = k}
//       F(nu1) conj(F(nu2)) / |nu1-nu2|^{1+2 delta},
// enumerated through the factorization nu1-nu2 = d, nu1+nu2 = e, de = k,
// d = e (mod 2). k = 0 is the antidiagonal family (m, -m).
inline PeriodicLine periodic_line(const FourierCoeffSeq& F, DeltaParam delta, int K, double psi_norm_sq) {
    if (!(psi_norm_sq > 0.0)) throw std::invalid_argument("periodic_line: psi_norm_sq > 0 required");
    PeriodicLine line;
    line.delta = delta;
    line.K = K;
    line.psi_norm_sq = psi_norm_sq;
    line.c.assign(2 * K + 1, cd(0, 0));
    const double expo = 1.0 + 2.0 * double(delta);
    const double pref = -2.0 * b1_constant(delta) / psi_norm_sq;
    const int M = F.M;

    // k = 0: pairs (m, -m), m != 0
    {
        cd acc(0, 0);
        for (int m = -M; m <= M; ++m) {
            if (m == 0) continue;
            acc += F.at(m) * std::conj(F.at(-m)) * std::pow(2.0 * std::abs(m), -expo);
        }
        line.c[K] = pref * acc;
    }
    for (int k = -K; k <= K; ++k) {
        if (k == 0) continue;
        long long a = k < 0 ? -(long long)k : k;
        cd acc(0, 0);
        for (long long d = 1; d * d <= a; ++d) {
            if (a % d != 0) continue;
            long long divs[2] = {d, a / d};
            int ndiv = (divs[0] == divs[1]) ? 1 : 2;
            for (int i = 0; i < ndiv; ++i)
                for (int sgn = -1; sgn <= 1; sgn += 2) {
                    long long dd = sgn * divs[i];
                    long long ee = k / dd;
                    if (((dd - ee) & 1LL) != 0) continue; // parity mismatch
                    long long nu1 = (dd + ee) / 2, nu2 = (ee - dd) / 2;
                    if (std::abs(nu1) > M || std::abs(nu2) > M) continue;
                    acc += F.at((int)nu1) * std::conj(F.at((int)nu2)) * std::pow(double(divs[i]), -expo);
                }
        }
        line.c[k + K] = pref * acc;
    }
    return line;
}

// h_p(t) = sum_k c_k e^{i pi k t}; real for Hermitian coefficient sequences.
inline double evaluate_hp(const PeriodicLine& line, double t) {
    cd acc(0, 0);
    for (int k = -line.K; k <= line.K; ++k) {
        double ph = M_PI * k * t;
        acc += line.at(k) * cd(std::cos(ph), std::sin(ph));
    }
    double scale = std::max(1.0, std::abs(acc.real()));
    if (std::abs(acc.imag()) > 1e-8 * scale)
        throw InconsistencyError("evaluate_hp: imaginary residue exceeds 1e-8");
    return acc.real();
}

// f_{eps1,eps2}(x) = psi(eps2 x) F_{eps1}(x), L^2-normalized on the grid.
inline ComplexField comb_datum(double eps1, double eps2, double psi_sigma, const Grid1D& grid) {
    if (!(grid.half_width >= 6.0 / eps2))
        throw std::invalid_argument("comb_datum: need L >= 6/eps2");
    if (!(grid.dx() <= eps1 / 8.0))
        throw std::invalid_argument("comb_datum: need dx <= eps1/8");
    const int M = (int)std::ceil(5.0 / eps1);
    ComplexField f(grid);
    for (int j = 0; j < grid.n_points; ++j) {
        double x = grid.x(j);
        double F = 0.0;
        for (int m = 1; m <= M; ++m)
            F += 2.0 * std::exp(-M_PI * (eps1 * m) * (eps1 * m)) * std::cos(2.0 * M_PI * x * m);
        F += 1.0;
        double psi = std::exp(-M_PI * (psi_sigma * eps2 * x) * (psi_sigma * eps2 * x));
        f.samples[j] = psi * F;
    }
    return normalized(std::move(f));
}

// C_eps2 = (eps2^{-2 delta}/||psi||^2) int |x|^{2 delta} |psi|^2 dx, closed
// form for the Gaussian psi. Flagged (not rejected) for delta >= 1/2 where the
// o(eps) split is outside the theorem's hypothesis.
inline Flagged background_constant(double psi_sigma, DeltaParam delta, double eps2) {
    const double d = delta;
    const double mom = std::tgamma(d + 0.5) * std::pow(2.0 * M_PI * psi_sigma * psi_sigma, -(d + 0.5));
    Flagged out;
    out.value = std::pow(eps2, -2.0 * d) * mom / psi_norm_sq_gaussian(psi_sigma);
    out.ok = d < 0.5;
    return out;
}

// (h_delta[f_{eps1,eps2}](t) - C_eps2)/eps2 on t_grid; converges to the
// 2-periodic line as eps2 -> 0 (delta < 1/2).
inline DispersionCurve renormalized_profile(double eps1, double eps2, double psi_sigma, DeltaParam delta,
                                            const std::vector<double>& t_grid, const Grid1D& grid) {
    ComplexField f = comb_datum(eps1, eps2, psi_sigma, grid);
    const double C = background_constant(psi_sigma, delta, eps2).value;
    DispersionCurve curve;
    curve.delta = delta;
    curve.method = "direct";
    SpectralField F = forward_transform(f);
    for (double t : t_grid) {
        SpectralField G = F;
        for (int k = 0; k < G.size(); ++k) {
            double xi = G.grid.xi(k);
            double ph = -M_PI * t * xi * xi;
            G.coefficients[k] *= cd(std::cos(ph), std::sin(ph));
        }
        ComplexField u = inverse_transform(G);
        double h = detail::weighted_sq_sum(u.samples, grid.dx(), 2.0 * double(delta), grid.n_points / 2.0, false);
        curve.times.push_back(t);
        curve.values.push_back((h - C) / eps2);
        curve.quality.push_back(tail_mass(u) < 1e-6);
    }
    return curve;
}

// Background sum: h_b(t) = (eps^{-2d}/||psi||^2) sum_nu |F(nu)|^2
//                  int |y + eps t nu|^{2d} |(evolve psi)(y, eps^2 t)|^2 dy,
// with psi evolved once per t on its own working grid.
inline DispersionCurve background_curve(const FourierCoeffSeq& F, double psi_sigma, DeltaParam delta,
                                        double eps, const std::vector<double>& t_grid,
                                        const Grid1D& psi_grid = Grid1D(40.0, 4096)) {
    const double d = delta;
    ComplexField psi(psi_grid);
    for (int j = 0; j < psi_grid.n_points; ++j) {
        double y = psi_grid.x(j);
        psi.samples[j] = std::exp(-M_PI * (psi_sigma * y) * (psi_sigma * y));
    }
    const double dy = psi_grid.dx();
    DispersionCurve curve;
    curve.delta = d;
    curve.method = "direct";
    for (double t : t_grid) {
        ComplexField u = evolve(psi, eps * eps * t);
        double acc = 0.0;
        for (int nu = -F.M; nu <= F.M; ++nu) {
            double w = std::norm(F.at(nu));
            if (w == 0.0) continue;
            double shift = eps * t * nu;
            double integ = 0.0;
            for (int j = 0; j < psi_grid.n_points; ++j)
                integ += std::pow(std::abs(psi_grid.x(j) + shift), 2.0 * d) * std::norm(u.samples[j]);
            acc += w * integ * dy;
        }
        curve.times.push_back(t);
        curve.values.push_back(std::pow(eps, -2.0 * d) * acc / psi_norm_sq_gaussian(psi_sigma));
        curve.quality.push_back(true);
    }
    return curve;
}

} // namespace fraclab
