// Ground state of D^{2 delta} + |x|^{2 delta}: the sharp uncertainty constant
// a_delta (eigenvalue = 2 a_delta^2) and the minimizer Q_delta, by shifted
// power iteration on c I - A. The shift c = max dual multiplier + L^{2 delta}
// dominates the grid spectrum, so the Rayleigh quotient decreases monotonically.
#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "dispersion.hpp"
#include "powerlaw.hpp"
#include "spectral.hpp"

namespace fraclab {

struct GroundState {
    double delta = 0.0;
    ComplexField q;          // real nonnegative samples, ||q||_2 = 1
    double eigenvalue = 0.0; // 2 a_delta^2
    double a_delta = 0.0;
    double residual = 0.0;
    int iterations = 0;
    std::vector<double> rayleigh_history;
};

struct ConvergenceError : std::runtime_error {
    double last_residual;
    ConvergenceError(const std::string& what, double r) : std::runtime_error(what), last_residual(r) {}
};

// (D^{2 delta} + |x|^{2 delta}) f: frequency multiplier plus pointwise weight.
inline ComplexField apply_uncertainty_operator(const ComplexField& f, DeltaParam delta) {
    SpectralField F = forward_transform(f);
    for (int k = 0; k < F.size(); ++k)
        F.coefficients[k] *= std::pow(std::abs(F.grid.xi(k)), 2.0 * double(delta));
    ComplexField out = inverse_transform(F);
    for (int j = 0; j < f.size(); ++j)
        out.samples[j] += std::pow(std::abs(f.grid.x(j)), 2.0 * double(delta)) * f.samples[j];
    return out;
}

inline GroundState ground_state(DeltaParam delta, const Grid1D& grid, double tol = 1e-8,
                                int max_iterations = 400000) {
    if (!(tol > 0.0)) throw std::invalid_argument("ground_state: tol must be positive");
    const int N = grid.n_points;
    const double dx = grid.dx();
    const double shift = std::pow(grid.xi_max(), 2.0 * double(delta)) +
                         std::pow(grid.half_width, 2.0 * double(delta));

    ComplexField q = normalized(gaussian_datum(grid)); // positive start, never orthogonal to Q
    GroundState gs;
    gs.delta = delta;
    double lam = 0.0, res = 0.0;
    int it = 0;
    for (; it < max_iterations; ++it) {
        ComplexField Aq = apply_uncertainty_operator(q, delta);
        double num = 0.0;
        for (int j = 0; j < N; ++j) num += (std::conj(q.samples[j]) * Aq.samples[j]).real();
        lam = num * dx; // Rayleigh quotient (q normalized)
        gs.rayleigh_history.push_back(lam);
        double r2 = 0.0;
        for (int j = 0; j < N; ++j) r2 += std::norm(Aq.samples[j] - lam * q.samples[j]);
        res = std::sqrt(r2 * dx);
        if (res <= tol) break;
        double nrm2 = 0.0;
        for (int j = 0; j < N; ++j) {
            q.samples[j] = shift * q.samples[j] - Aq.samples[j];
            nrm2 += std::norm(q.samples[j]);
        }
        double nrm = std::sqrt(nrm2 * dx);
        for (auto& z : q.samples) z /= nrm;
    }
    if (res > tol) throw ConvergenceError("ground_state: power iteration did not converge", res);

    if (q.samples[N / 2].real() < 0.0)
        for (auto& z : q.samples) z = -z;
    for (auto& z : q.samples) z = cd(z.real(), 0.0); // iteration preserves realness; drop fp dust

    gs.q = q;
    gs.eigenvalue = lam;
    gs.a_delta = std::sqrt(lam / 2.0);
    gs.residual = res;
    gs.iterations = it;
    return gs;
}

// Slope of log q vs log x over [x_lo, x_hi]; expected -(1+4 delta) for
// delta < 1. r^2 < 0.9 marks the fit as not-power-law (Gaussian tail case).
struct TailFit {
    PowerLawFit fit;
    bool power_law = true;
};

inline TailFit tail_exponent(const GroundState& gs, double x_lo, double x_hi) {
    const Grid1D& g = gs.q.grid;
    if (!(x_lo >= 0.15 * g.half_width && x_hi <= 0.45 * g.half_width && x_lo < x_hi))
        throw std::invalid_argument("tail_exponent: window must sit in [0.15 L, 0.45 L]");
    std::vector<double> xs, qs;
    for (int j = 0; j < g.n_points; ++j) {
        double x = g.x(j);
        double v = gs.q.samples[j].real();
        if (x >= x_lo && x <= x_hi && v > 0.0) {
            xs.push_back(x);
            qs.push_back(v);
        }
    }
    if (xs.size() < 8) throw std::invalid_argument("tail_exponent: window contains too few nodes");
    TailFit out;
    out.fit = fit_power_law(xs, qs);
    out.power_law = out.fit.r_squared >= 0.9;
    return out;
}

// Dilation f_lambda(x) = lambda^{1/2} f(lambda x) with the closed-form balance
// lambda = (d_delta/x_weighted)^{1/(2 delta)}; resampled on the same grid.
inline ComplexField balance_rescale(const ComplexField& f, DeltaParam delta) {
    SigmaNorms sn = sigma_norms(f, delta);
    if (sn.x_weighted <= 0.0 || sn.d_delta <= 0.0)
        throw std::invalid_argument("balance_rescale: both seminorms must be positive");
    const double lambda = std::pow(sn.d_delta / sn.x_weighted, 1.0 / (2.0 * double(delta)));
    const Grid1D& g = f.grid;
    ComplexField out(g);
    const double dx = g.dx();
    for (int j = 0; j < g.n_points; ++j) {
        double y = lambda * g.x(j); // sample f at y by linear interpolation
        double u = (y + g.half_width) / dx;
        int i0 = (int)std::floor(u);
        double w = u - i0;
        cd v(0, 0);
        if (i0 >= 0 && i0 + 1 < g.n_points) v = (1.0 - w) * f.samples[i0] + w * f.samples[i0 + 1];
        out.samples[j] = std::sqrt(lambda) * v;
    }
    // linear interpolation nudges mass; restore ||f_lambda||_2 = ||f||_2 exactly
    double target = l2_norm(f), got = l2_norm(out);
    if (got > 0.0)
        for (auto& z : out.samples) z *= target / got;
    return out;
}

// || |x|^delta f ||_2 || D^delta f ||_2 / ||f||_2^2.
inline double uncertainty_product(const ComplexField& f, DeltaParam delta) {
    double n = l2_norm(f);
    if (n == 0.0) throw std::invalid_argument("uncertainty_product: zero field");
    SigmaNorms sn = sigma_norms(f, delta);
    return sn.x_weighted * sn.d_delta / (n * n);
}

} // namespace fraclab
