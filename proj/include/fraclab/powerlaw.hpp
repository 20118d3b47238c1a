// Log-log least squares for exponent checks, with r^2 as fit quality.
#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace fraclab {

struct PowerLawFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    double window_min = 0.0;
    double window_max = 0.0;
};

// Straight-line least squares on already-transformed coordinates.
inline PowerLawFit fit_line(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size() || xs.size() < 2)
        throw std::invalid_argument("fit_line: need >= 2 matched points");
    const double n = double(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
        syy += ys[i] * ys[i];
    }
    const double vx = sxx - sx * sx / n;
    const double cxy = sxy - sx * sy / n;
    const double vy = syy - sy * sy / n;
    if (vx <= 0.0) throw std::invalid_argument("fit_line: degenerate abscissae");
    PowerLawFit fit;
    fit.slope = cxy / vx;
    fit.intercept = (sy - fit.slope * sx) / n;
    fit.r_squared = vy > 0.0 ? (cxy * cxy) / (vx * vy) : 1.0;
    fit.window_min = xs.front();
    fit.window_max = xs.back();
    return fit;
}

// Fit y ~ c x^slope over (x, y) pairs with positive entries.
inline PowerLawFit fit_power_law(const std::vector<double>& x, const std::vector<double>& y) {
    std::vector<double> lx, ly;
    double wmin = 0, wmax = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] > 0.0 && y[i] > 0.0) {
            lx.push_back(std::log(x[i]));
            ly.push_back(std::log(y[i]));
            if (lx.size() == 1) wmin = wmax = x[i];
            wmin = std::min(wmin, x[i]);
            wmax = std::max(wmax, x[i]);
        }
    }
    PowerLawFit fit = fit_line(lx, ly);
    fit.window_min = wmin;
    fit.window_max = wmax;
    return fit;
}

} // namespace fraclab
