// The dispersion functional h_delta[f](t) = int |x|^{2 delta} |u(x,t)|^2 dx
// via three routes, its sharp constants, and the dynamical lower bounds.
//
// Routes:
//   h_direct   - evolve on the grid, weighted quadrature in x
//   h_large_t  - |t|^{2 delta} ||D^delta (f e^{i pi y^2/t})||_2^2 (exact identity)
//   h_seminorm - b_{1,delta} double dual-grid sum of the difference quotient
//                |e^{-i pi t xi^2} fhat(xi) - e^{-i pi t eta^2} fhat(eta)|^2
//                / |xi - eta|^{1+2 delta}, with analytic corrections for the
//                excluded diagonal cell and for eta outside the dual box
//                (the plain truncated sum misses up to 14% at delta = 1/4).
#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "grid.hpp"
#include "spectral.hpp"

namespace fraclab {

struct DispersionCurve {
    double delta = 0.0;
    std::vector<double> times;
    std::vector<double> values;
    std::vector<bool> quality; // per-sample tail-mass gate
    std::string method;        // direct | large_t | seminorm
};

// b_{n,delta} = (1 / (2 pi^{n/2+2delta})) Gamma((n+2delta)/2) / |Gamma(-delta)|.
// |Gamma(-delta)| = Gamma(1-delta)/delta on (0,1).
inline double b_constant(int n, DeltaParam delta) {
    if (n < 1) throw std::invalid_argument("b_constant: n must be positive");
    if (!(delta < 1.0)) throw std::domain_error("b_constant: delta = 1 outside Gamma(-delta) domain");
    const double d = delta;
    const double abs_gamma_neg = std::tgamma(1.0 - d) / d;
    return 0.5 * std::pow(M_PI, -(n / 2.0 + 2.0 * d)) * std::tgamma((n + 2.0 * d) / 2.0) / abs_gamma_neg;
}

// One-dimensional form b_{1,delta} = (2 pi)^{-2 delta} Gamma(2 delta) / (|Gamma(-delta)| Gamma(delta));
// equals b_constant(1, delta) by Legendre duplication.
inline double b1_constant(DeltaParam delta) {
    if (!(delta < 1.0)) throw std::domain_error("b1_constant: delta = 1 outside Gamma(-delta) domain");
    const double d = delta;
    const double abs_gamma_neg = std::tgamma(1.0 - d) / d;
    return std::pow(2.0 * M_PI, -2.0 * d) * std::tgamma(2.0 * d) / (abs_gamma_neg * std::tgamma(d));
}

// Quadrature of |x|^{2 delta} |u(x,t)|^2. Result flagged (not thrown) when the
// evolved mass outside [-L/2, L/2] exceeds 1e-6.
inline Flagged h_direct(const ComplexField& f, DeltaParam delta, double t, bool kink_correction = false) {
    ComplexField u = evolve(f, t);
    Flagged out;
    out.tail_mass = tail_mass(u);
    out.ok = out.tail_mass < 1e-6;
    out.value = detail::weighted_sq_sum(u.samples, u.grid.dx(), 2.0 * delta, u.size() / 2.0, kink_correction);
    return out;
}

// |t|^{2 delta} ||D^delta g_t||_2^2 with g_t(y) = f(y) e^{i pi y^2 / t}.
inline double h_large_t(const ComplexField& f, DeltaParam delta, double t, bool kink_correction = false) {
    if (t == 0.0) throw std::domain_error("h_large_t: t must be nonzero");
    ComplexField g(f.grid);
    for (int j = 0; j < f.size(); ++j) {
        double y = f.grid.x(j);
        double ph = M_PI * y * y / t;
        g.samples[j] = f.samples[j] * cd(std::cos(ph), std::sin(ph));
    }
    double nd = fractional_derivative_norm(g, delta, kink_correction);
    return std::pow(std::abs(t), 2.0 * delta) * nd * nd;
}

// Dual-grid pair sum for the seminorm identity. O(N^2); N <= 4096 recommended.
inline double h_seminorm(const ComplexField& f, DeltaParam delta, double t) {
    const int N = f.size();
    const double dxi = f.grid.dxi();
    const double d = delta;
    SpectralField Fh = forward_transform(f);

    std::vector<cd> F(N);
    for (int k = 0; k < N; ++k) {
        double xi = f.grid.xi(k);
        double ph = -M_PI * t * xi * xi;
        F[k] = Fh.coefficients[k] * cd(std::cos(ph), std::sin(ph));
    }

    double acc = 0.0;
    for (int i = 0; i < N; ++i) {
        double row = 0.0;
        for (int j = 0; j < N; ++j) {
            if (j == i) continue;
            double s = std::abs(i - j) * dxi;
            row += std::norm(F[i] - F[j]) * std::pow(s, -(1.0 + 2.0 * d));
        }
        acc += row;
    }
    acc *= dxi * dxi;

    // excluded diagonal cell: integrand ~ |F'(xi)|^2 |s|^{1-2 delta} there
    ComplexField xf(f.grid);
    for (int j = 0; j < N; ++j) xf.samples[j] = cd(0.0, -2.0 * M_PI) * f.grid.x(j) * f.samples[j];
    SpectralField Fp = forward_transform(xf); // (fhat)'
    double diag = 0.0;
    for (int k = 0; k < N; ++k) {
        double xi = f.grid.xi(k);
        cd dF = Fp.coefficients[k] + cd(0.0, -2.0 * M_PI * t * xi) * Fh.coefficients[k];
        diag += std::norm(dF); // |F'| = |e^{-i pi t xi^2}(fhat' - 2 pi i t xi fhat)|
    }
    acc += diag * dxi * 2.0 / (2.0 - 2.0 * d) * std::pow(dxi / 2.0, 2.0 - 2.0 * d);

    // eta beyond the covered dual box [lo, hi]: F(eta) ~ 0 there, so each
    // ordering contributes |F(xi)|^2 * int_{outside} |xi-eta|^{-(1+2d)} d eta
    const double hi = f.grid.xi(N - 1) + dxi / 2.0;
    const double lo = f.grid.xi(0) - dxi / 2.0;
    double tail = 0.0;
    for (int k = 0; k < N; ++k) {
        double xi = f.grid.xi(k);
        tail += std::norm(F[k]) * (std::pow(hi - xi, -2.0 * d) + std::pow(xi - lo, -2.0 * d)) / (2.0 * d);
    }
    acc += 2.0 * tail * dxi;

    return b1_constant(delta) * acc;
}

// h_delta[f_G](t) = h0 (1 + t^2)^delta.
inline double gaussian_reference(DeltaParam delta, double t, double h0) {
    if (h0 < 0.0) throw std::invalid_argument("gaussian_reference: h0 must be >= 0");
    return h0 * std::pow(1.0 + t * t, double(delta));
}

struct BoundsRow {
    double t = 0.0;
    double h_t = 0.0;
    double margin_pointwise = 0.0; // h(t) - (a^2/(xw*dd))^2 max(xw^2, dd^2 |t|^{2d})
    double margin_two_time = 0.0;  // h(0) h(t) - a^4 |t|^{2d}
    double margin_classical = 0.0; // delta = 1 only: h(t) - (1/4pi)(1+t^2), zero iff f = c f_G
    bool has_classical = false;
};

struct BoundsReport {
    double delta = 0.0;
    double a_delta = 0.0;
    SigmaNorms norms;
    std::vector<BoundsRow> rows;
    double worst_margin = 0.0;
};

// Evaluates both Thm-type lower bounds pointwise on t_grid; f must be normalized.
inline BoundsReport check_dynamical_bounds(const ComplexField& f, DeltaParam delta, double a_delta,
                                           const std::vector<double>& t_grid) {
    if (std::abs(l2_norm(f) - 1.0) > 1e-8)
        throw std::invalid_argument("check_dynamical_bounds: f must be L2-normalized");
    BoundsReport rep;
    rep.delta = delta;
    rep.a_delta = a_delta;
    rep.norms = sigma_norms(f, delta);
    const double xw = rep.norms.x_weighted, dd = rep.norms.d_delta;
    const double a2 = a_delta * a_delta;
    const double pref = (a2 / (xw * dd)) * (a2 / (xw * dd));
    const double h0 = h_direct(f, delta, 0.0).value;
    rep.worst_margin = 0.0;
    bool first = true;
    for (double t : t_grid) {
        BoundsRow row;
        row.t = t;
        row.h_t = h_direct(f, delta, t).value;
        double rhs = pref * std::max(xw * xw, dd * dd * std::pow(std::abs(t), 2.0 * double(delta)));
        row.margin_pointwise = row.h_t - rhs;
        row.margin_two_time = t == 0.0 ? 0.0 : h0 * row.h_t - a2 * a2 * std::pow(std::abs(t), 2.0 * double(delta));
        if (double(delta) == 1.0) {
            row.has_classical = true;
            row.margin_classical = row.h_t - (1.0 / (4.0 * M_PI)) * (1.0 + t * t);
        }
        rep.rows.push_back(row);
        double m = std::min(row.margin_pointwise, row.margin_two_time);
        rep.worst_margin = first ? m : std::min(rep.worst_margin, m);
        first = false;
    }
    return rep;
}

// sup over t_grid of h(t) / (||f||_Sigma^2 (1+t^2)^delta); empirically O(1).
inline double nahas_ponce_ratio(const ComplexField& f, DeltaParam delta, const std::vector<double>& t_grid) {
    SigmaNorms sn = sigma_norms(f, delta);
    if (sn.sigma_sq() == 0.0) return 0.0;
    double sup = 0.0;
    for (double t : t_grid) {
        double h = h_direct(f, delta, t).value;
        sup = std::max(sup, h / (sn.sigma_sq() * std::pow(1.0 + t * t, double(delta))));
    }
    return sup;
}

} // namespace fraclab
