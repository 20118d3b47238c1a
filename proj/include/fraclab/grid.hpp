// Uniform 1-D grid on [-L, L), its dual frequency grid, and sampled fields.
// Conventions (fixed once, used everywhere):
//   x_j  = -L + j*dx,            dx  = 2L/N
//   xi_k = (k - N/2)*dxi,        dxi = 1/(2L)          (so dx*dxi*N = 1)
//   fhat(xi) = int e^{-2pi i x xi} f(x) dx
#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace fraclab {

using cd = std::complex<double>;

struct Grid1D {
    double half_width = 0.0; // L
    int n_points = 0;        // N, even

    Grid1D() = default;
    Grid1D(double L, int N) : half_width(L), n_points(N) {
        if (!(L > 0.0)) throw std::invalid_argument("Grid1D: half_width must be > 0");
        if (N <= 0 || N % 2 != 0) throw std::invalid_argument("Grid1D: n_points must be positive and even");
    }

    double dx() const { return 2.0 * half_width / n_points; }
    double dxi() const { return 1.0 / (2.0 * half_width); }
    double x(int j) const { return -half_width + j * dx(); }
    double xi(int k) const { return (k - n_points / 2) * dxi(); }
    double xi_max() const { return n_points / 2 * dxi(); } // box edge N/(4L)

    bool operator==(const Grid1D& o) const {
        return half_width == o.half_width && n_points == o.n_points;
    }
};

struct ComplexField {
    Grid1D grid;
    std::vector<cd> samples; // samples[j] = f(x_j)

    ComplexField() = default;
    explicit ComplexField(const Grid1D& g) : grid(g), samples(g.n_points, cd(0, 0)) {}
    ComplexField(const Grid1D& g, std::vector<cd> s) : grid(g), samples(std::move(s)) {
        if ((int)samples.size() != grid.n_points)
            throw std::invalid_argument("ComplexField: sample count != grid.n_points");
    }
    int size() const { return grid.n_points; }
};

struct SpectralField {
    Grid1D grid;
    std::vector<cd> coefficients; // coefficients[k] = fhat(xi_k), xi_k = (k-N/2)*dxi

    SpectralField() = default;
    explicit SpectralField(const Grid1D& g) : grid(g), coefficients(g.n_points, cd(0, 0)) {}
    SpectralField(const Grid1D& g, std::vector<cd> c) : grid(g), coefficients(std::move(c)) {
        if ((int)coefficients.size() != grid.n_points)
            throw std::invalid_argument("SpectralField: coefficient count != grid.n_points");
    }
    int size() const { return grid.n_points; }
};

struct DeltaParam {
    double delta;
    explicit DeltaParam(double d) : delta(d) {
        if (!(d > 0.0 && d <= 1.0)) throw std::invalid_argument("DeltaParam: need 0 < delta <= 1");
    }
    operator double() const { return delta; }
};

struct SigmaNorms {
    double l2 = 0.0;
    double x_weighted = 0.0; // || |x|^delta f ||_2
    double d_delta = 0.0;    // || D^delta f ||_2
    double sigma_sq() const { return x_weighted * x_weighted + d_delta * d_delta; }
};

// A value plus the tail-mass quality flag attached by operations whose
// absolute tolerances assume the data fits well inside [-L/2, L/2].
struct Flagged {
    double value = 0.0;
    bool ok = true;
    double tail_mass = 0.0;
    operator double() const { return value; }
};

} // namespace fraclab
