// Exponent estimators for hhat_delta: windowed-FFT decay fit, dyadic band
// (Lipschitz) fit, and the epsilon-pairing scaling fit of the leading
// asymptotic term A eps^{-2 delta} || |xi|^delta fhat ||_2^2.
//
// The h(t) sampler is hybrid: direct evolution for |t| <= 1 (propagator
// resolved on the dual grid), chirped large-t identity beyond. Both sides use
// the zeta(-2 delta) kink correction so the switch leaves no tau^{-1} floor.
#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "dispersion.hpp"
#include "powerlaw.hpp"

namespace fraclab {

enum class Taper {
    tukey,   // flat fraction 0.5, C^1 cosine lobes (default)
    flattop, // flat fraction 0.5, C-infinity Planck-style lobes
};

namespace detail {

inline double taper_weight(Taper kind, double s /* in [-1,1] */) {
    double a = std::abs(s);
    const double flat = 0.5;
    if (a <= flat) return 1.0;
    if (a >= 1.0) return 0.0;
    double z = (a - flat) / (1.0 - flat); // (0,1)
    if (kind == Taper::tukey) return 0.5 * (1.0 + std::cos(M_PI * z));
    double e = 1.0 / (1.0 - z) - 1.0 / z;
    if (e > 700.0) return 1.0;
    if (e < -700.0) return 0.0;
    return 1.0 / (1.0 + std::exp(e));
}

} // namespace detail

inline double h_hybrid(const ComplexField& f, DeltaParam delta, double t, bool kink = true) {
    if (std::abs(t) <= 1.0) return h_direct(f, delta, t, kink).value;
    return h_large_t(f, delta, t, kink);
}

// Uniform samples of h on [-T, T) with spacing dt.
inline DispersionCurve sample_dispersion_curve(const ComplexField& f, DeltaParam delta, double T, double dt,
                                               bool kink = true) {
    DispersionCurve c;
    c.delta = delta;
    c.method = "direct";
    for (double t = -T; t < T - dt / 2; t += dt) {
        c.times.push_back(t);
        c.values.push_back(h_hybrid(f, delta, t, kink));
        c.quality.push_back(true);
    }
    return c;
}

// |curve-hat(tau)| on tau >= 0 after tapering; returns (tau_j, |H_j|).
inline void windowed_fft(const DispersionCurve& c, Taper kind, std::vector<double>& tau,
                         std::vector<double>& mag) {
    const std::size_t n = c.times.size();
    if (n < 16) throw std::invalid_argument("windowed_fft: curve too short");
    const double dt = c.times[1] - c.times[0];
    std::vector<detail::cd> a(n);
    for (std::size_t j = 0; j < n; ++j) {
        double s = -1.0 + 2.0 * double(j) / double(n);
        a[j] = c.values[j] * detail::taper_weight(kind, s);
    }
    detail::fft(a, false);
    tau.clear();
    mag.clear();
    for (std::size_t j = 1; j < n / 2; ++j) {
        tau.push_back(double(j) / (double(n) * dt));
        mag.push_back(std::abs(a[j]) * dt);
    }
}

// Log-log slope of |hhat| over tau_range; the fit discards the top and bottom
// half-decade of the resolved band [1/(2T), Nyquist].
inline PowerLawFit hhat_decay_fit(const ComplexField& f, DeltaParam delta, double t_window,
                                  std::pair<double, double> tau_range, Taper taper = Taper::tukey,
                                  double dt = 1.0 / 32.0) {
    DispersionCurve c = sample_dispersion_curve(f, delta, t_window, dt);
    std::vector<double> tau, mag;
    windowed_fft(c, taper, tau, mag);
    const double guard = std::sqrt(10.0);
    const double lo = std::max(tau_range.first, tau.front() * guard);
    const double hi = std::min(tau_range.second, tau.back() / guard);
    std::vector<double> xs, ys;
    for (std::size_t j = 0; j < tau.size(); ++j)
        if (tau[j] >= lo && tau[j] <= hi && mag[j] > 0.0) {
            xs.push_back(tau[j]);
            ys.push_back(mag[j]);
        }
    if (xs.size() < 6) throw std::invalid_argument("hhat_decay_fit: tau_range outside resolved band");
    return fit_power_law(xs, ys);
}

// Dyadic band projections by FFT masking; slope of log2 ||P_k h||_inf vs k.
// Sup norms are taken over the middle half of the window (taper-free zone).
inline PowerLawFit band_regularity_fit(const DispersionCurve& c, int k_min = 0, int k_max = 5,
                                       Taper taper = Taper::flattop) {
    if (k_max - k_min + 1 < 4) throw std::invalid_argument("band_regularity_fit: need >= 4 bands");
    const std::size_t n = c.times.size();
    if (n < 64) throw std::invalid_argument("band_regularity_fit: curve too short");
    for (std::size_t j = 2; j < n; ++j) {
        double d0 = c.times[1] - c.times[0], dj = c.times[j] - c.times[j - 1];
        if (std::abs(dj - d0) > 1e-9 * std::abs(d0))
            throw std::invalid_argument("band_regularity_fit: nonuniform sampling");
    }
    const double dt = c.times[1] - c.times[0];
    const double nyq = 0.5 / dt;
    if (std::pow(2.0, k_max + 1) > nyq)
        throw std::invalid_argument("band_regularity_fit: top band exceeds Nyquist");

    std::vector<detail::cd> a(n);
    for (std::size_t j = 0; j < n; ++j) {
        double s = -1.0 + 2.0 * double(j) / double(n);
        a[j] = c.values[j] * detail::taper_weight(taper, s);
    }
    detail::fft(a, false);

    std::vector<double> ks, l2norms;
    for (int k = k_min; k <= k_max; ++k) {
        const double blo = std::pow(2.0, k), bhi = std::pow(2.0, k + 1);
        std::vector<detail::cd> band(n, detail::cd(0, 0));
        for (std::size_t j = 0; j < n; ++j) {
            double freq = (j <= n / 2) ? double(j) / (double(n) * dt) : double(n - j) / (double(n) * dt);
            if (freq >= blo && freq < bhi) band[j] = a[j];
        }
        detail::fft(band, true);
        double sup = 0.0;
        for (std::size_t j = n / 4; j < 3 * n / 4; ++j) sup = std::max(sup, std::abs(band[j]));
        ks.push_back(double(k));
        l2norms.push_back(std::log2(sup));
    }
    PowerLawFit fit = fit_line(ks, l2norms);
    fit.window_min = std::pow(2.0, k_min);
    fit.window_max = std::pow(2.0, k_max + 1);
    return fit;
}

// <hhat_delta, zeta_eps> with the Gaussian surrogate zeta(tau) = e^{-pi tau^2}
// (zeta-check(t) = e^{-pi t^2}), i.e. eps * int h(t) e^{-pi (eps t)^2} dt.
// Fits log of the pairing against log eps; the leading term gives -2 delta.
inline PowerLawFit pair_scaling_fit(const ComplexField& f, DeltaParam delta,
                                    const std::vector<double>& eps_list, double dt = 0.05) {
    if (!(delta < 1.0)) throw std::domain_error("pair_scaling_fit: theorem requires delta < 1");
    if (eps_list.size() < 4) throw std::invalid_argument("pair_scaling_fit: need >= 4 epsilons");
    double emin = eps_list[0], emax = eps_list[0];
    for (double e : eps_list) {
        if (!(e > 0.0)) throw std::invalid_argument("pair_scaling_fit: eps must be positive");
        emin = std::min(emin, e);
        emax = std::max(emax, e);
    }
    if (emax / emin < std::pow(10.0, 1.5))
        throw std::invalid_argument("pair_scaling_fit: eps_list must span >= 1.5 decades");

    bool real_f = true;
    for (const auto& z : f.samples)
        if (std::abs(z.imag()) > 1e-14) real_f = false;

    std::vector<double> pairings;
    for (double eps : eps_list) {
        const double tmax = 4.5 / eps;
        double acc = 0.0;
        for (double t = dt / 2; t < tmax; t += dt) {
            double w = std::exp(-M_PI * eps * eps * t * t);
            double hp = h_hybrid(f, delta, t);
            double hm = real_f ? hp : h_hybrid(f, delta, -t);
            acc += (hp + hm) * w;
        }
        pairings.push_back(eps * acc * dt);
    }
    return fit_power_law(eps_list, pairings);
}

} // namespace fraclab
