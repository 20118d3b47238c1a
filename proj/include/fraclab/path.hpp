// The jump path H_delta(t) = sum of atom weights over p/q <= t and its local
// analysis: increments against the smallest-denominator atom, two-sided
// oscillation fits for Holder exponents, and the coarse box/Legendre spectrum.
//
// All walks stream atoms in rational order; nothing is stored except the
// per-scale state, so q_max = 1e4 (~3e7 atoms) runs in seconds.
#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "comb.hpp"
#include "farey.hpp"
#include "powerlaw.hpp"

namespace fraclab {

struct JumpPath {
    double delta = 0.0;
    i64 q_max = 1;
    double psi_norm_sq = 1.0;
    std::vector<double> t;
    std::vector<double> H; // right-continuous partial sums at the t samples
};

struct HolderEstimate {
    double t0 = 0.0;
    double exponent = 0.0;
    double scale_min = 0.0, scale_max = 0.0;
    bool drift_removed = false;
    double r_squared = 0.0;
    bool degenerate = false;
    std::vector<double> scales, oscillations;
};

struct IncrementResult {
    double value = 0.0;     // H(t+h) - H(t)
    i64 P = 0, Q = 0;       // smallest-denominator fraction in (t, t+h]
    double atom_term = 0.0; // its weight, 0 (flagged) if Q > q_max
    double remainder = 0.0; // value - atom_term
    bool atom_resolved = true;
};

// H at the t_grid samples (sorted, within [0,1]); exact at Farey points.
inline JumpPath build_path(DeltaParam delta, i64 q_max, const std::vector<double>& t_grid,
                           double psi_norm_sq = 1.0) {
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        if (t_grid[i] < 0.0 || t_grid[i] > 1.0) throw std::invalid_argument("build_path: t_grid in [0,1]");
        if (i && t_grid[i] < t_grid[i - 1]) throw std::invalid_argument("build_path: t_grid must be sorted");
    }
    JumpPath path;
    path.delta = delta;
    path.q_max = q_max;
    path.psi_norm_sq = psi_norm_sq;
    path.t = t_grid;
    path.H.assign(t_grid.size(), 0.0);
    double acc = 0.0;
    std::size_t i = 0;
    for_each_atom(delta, q_max, psi_norm_sq, [&](i64 p, i64 q, double w) {
        double s = double(p) / double(q);
        while (i < path.t.size() && path.t[i] < s) {
            path.H[i] = acc;
            ++i;
        }
        acc += w;
    });
    for (; i < path.t.size(); ++i) path.H[i] = acc;
    return path;
}

// H(t+h) - H(t) split into the smallest-denominator atom and the remainder
// (paper order O(h^{1+delta})).
inline IncrementResult increment(DeltaParam delta, double t, double h, i64 q_max,
                                 double psi_norm_sq = 1.0) {
    if (!(h > 0.0 && t >= 0.0 && t + h <= 1.0)) throw std::invalid_argument("increment: need [t,t+h] in [0,1]");
    const std::vector<double> w = atom_weight_table(delta, q_max, psi_norm_sq);
    IncrementResult out;
    FareyState s = farey_seek(t, q_max);
    // sum over atoms strictly above t, up to and including t+h
    double hi = t + h;
    while (true) {
        if (!farey_next(s)) break;
        if (s.p1 >= s.q1) break;
        double v = double(s.p1) / double(s.q1);
        if (v <= t) continue;
        if (v > hi) break;
        out.value += w[std::size_t(s.q1)];
    }
    Fraction f = smallest_denominator(t, h);
    out.P = f.p;
    out.Q = f.q;
    if (f.q <= q_max) {
        out.atom_term = w[std::size_t(f.q)];
        out.atom_resolved = true;
    } else {
        out.atom_term = 0.0;
        out.atom_resolved = false;
    }
    out.remainder = out.value - out.atom_term;
    return out;
}

enum class OscSide { two_sided, right };

// Per-scale oscillation sup_{|s-t0|<=h} |H(s) - H(t0) - A_h (s-t0)| with the
// secant drift A_h = (H(t0+h)-H(t0-h))/(2h) when remove_drift is set.
// Two streaming passes; scales must respect the resolution floor 10/q_max^2.
inline HolderEstimate holder_fit(DeltaParam delta, double t0, std::vector<double> scales,
                                 bool remove_drift, i64 q_max, double psi_norm_sq = 1.0,
                                 OscSide side = OscSide::two_sided) {
    std::sort(scales.begin(), scales.end());
    const double floor_scale = 10.0 / (double(q_max) * double(q_max));
    if (scales.empty() || scales.front() < floor_scale || scales.back() > 0.25)
        throw std::invalid_argument("holder_fit: scales must lie in [10/q_max^2, 0.25]");
    const double hmax = scales.back();
    const double lo = std::max(0.0, t0 - (side == OscSide::two_sided ? hmax * 1.0001 : 0.0));
    const double hi = std::min(1.0, t0 + hmax * 1.0001);
    const std::vector<double> wt = atom_weight_table(delta, q_max, psi_norm_sq);
    const std::size_t ns = scales.size();

    // pass 1: P at t0 and at the window endpoints t0 +- h_j (relative to lo)
    std::vector<double> markers;
    for (double h : scales) {
        if (side == OscSide::two_sided) markers.push_back(t0 - h);
        markers.push_back(t0 + h);
    }
    markers.push_back(t0);
    std::sort(markers.begin(), markers.end());
    std::vector<double> Pmark(markers.size(), 0.0);
    {
        double P = 0.0;
        std::size_t mi = 0;
        FareyState s = farey_seek(lo, q_max);
        while (true) {
            double v = s.current().value();
            if (v >= lo) {
                while (mi < markers.size() && markers[mi] < v) Pmark[mi++] = P;
                if (v > hi) break;
                P += wt[std::size_t(s.q1)];
            }
            if (!farey_next(s) || s.p1 >= s.q1) break;
        }
        while (mi < markers.size()) Pmark[mi++] = P;
    }
    auto P_at = [&](double x) {
        auto it = std::lower_bound(markers.begin(), markers.end(), x);
        // markers contain x exactly (they were built from the same doubles)
        std::size_t idx = std::size_t(it - markers.begin());
        return Pmark[idx];
    };
    const double P0 = P_at(t0);
    std::vector<double> drift(ns, 0.0);
    if (remove_drift && side == OscSide::two_sided)
        for (std::size_t j = 0; j < ns; ++j)
            drift[j] = (P_at(t0 + scales[j]) - P_at(t0 - scales[j])) / (2.0 * scales[j]);

    // pass 2: per-scale sup of the drift-corrected deviation
    std::vector<double> osc(ns, 0.0);
    {
        double P = 0.0, prev_pos = lo;
        FareyState s = farey_seek(lo, q_max);
        while (true) {
            double v = s.current().value();
            if (v >= lo) {
                if (v > hi) break;
                double Ppre = P;
                P += wt[std::size_t(s.q1)];
                if (side == OscSide::right ? (v > t0 && v <= t0 + hmax) : true) {
                    double dist = std::abs(v - t0);
                    double dist_pre = (v > t0) ? std::max(0.0, prev_pos - t0) : dist;
                    auto apply = [&](double val, double d0) {
                        auto it = std::lower_bound(scales.begin(), scales.end(), d0);
                        for (std::size_t j = std::size_t(it - scales.begin()); j < ns; ++j) {
                            double dev = std::abs(val - P0 - drift[j] * (v - t0));
                            osc[j] = std::max(osc[j], dev);
                        }
                    };
                    apply(P, dist);
                    if (side == OscSide::two_sided || prev_pos > t0) apply(Ppre, dist_pre);
                }
                prev_pos = v;
            }
            if (!farey_next(s) || s.p1 >= s.q1) break;
        }
    }

    HolderEstimate est;
    est.t0 = t0;
    est.drift_removed = remove_drift;
    est.scale_min = scales.front();
    est.scale_max = scales.back();
    est.scales = scales;
    est.oscillations = osc;
    std::vector<double> xs, ys;
    for (std::size_t j = 0; j < ns; ++j)
        if (osc[j] > 0.0) {
            xs.push_back(scales[j]);
            ys.push_back(osc[j]);
        }
    if (xs.size() < 3) {
        est.degenerate = true;
        return est;
    }
    PowerLawFit fit = fit_power_law(xs, ys);
    est.exponent = fit.slope;
    est.r_squared = fit.r_squared;
    return est;
}

struct SpectrumCurve {
    std::vector<double> moment_orders;
    std::vector<double> tau;    // structure-function exponents tau(q)
    std::vector<double> gammas; // Holder values
    std::vector<double> d;      // Legendre spectrum d(gamma) = min_q(q gamma - tau(q))
};

// Structure functions S_q(l) = sum_boxes osc^q over boxes of size l, slopes
// tau(q), Legendre transform on a gamma grid. Single streaming walk.
inline SpectrumCurve spectrum_fit(DeltaParam delta, i64 q_max, const std::vector<double>& box_scales,
                                  const std::vector<double>& moment_orders, double psi_norm_sq = 1.0,
                                  std::vector<double> gammas = {}) {
    const double floor_scale = 10.0 / (double(q_max) * double(q_max));
    for (double l : box_scales)
        if (!(l >= floor_scale && l < 1.0))
            throw std::invalid_argument("spectrum_fit: box scales must lie in [10/q_max^2, 1)");
    const std::size_t nl = box_scales.size(), nq = moment_orders.size();

    struct ScaleState {
        long long box = -1;
        double mn = 0, mx = 0;
    };
    std::vector<ScaleState> st(nl);
    std::vector<std::vector<double>> Sq(nl, std::vector<double>(nq, 0.0));
    auto finalize = [&](std::size_t j) {
        double o = st[j].mx - st[j].mn;
        if (o > 0.0)
            for (std::size_t qi = 0; qi < nq; ++qi) Sq[j][qi] += std::pow(o, moment_orders[qi]);
    };
    double P = 0.0;
    for_each_atom(delta, q_max, psi_norm_sq, [&](i64 p, i64 q, double w) {
        double s = double(p) / double(q);
        double Ppre = P;
        P += w;
        for (std::size_t j = 0; j < nl; ++j) {
            long long b = (long long)std::floor(s / box_scales[j]);
            if (b != st[j].box) {
                if (st[j].box >= 0) finalize(j);
                st[j].box = b;
                st[j].mn = st[j].mx = Ppre; // carry-in value at box entry
            }
            st[j].mn = std::min(st[j].mn, P);
            st[j].mx = std::max(st[j].mx, P);
        }
    });
    for (std::size_t j = 0; j < nl; ++j) finalize(j);

    SpectrumCurve out;
    out.moment_orders = moment_orders;
    out.tau.resize(nq);
    std::vector<double> lx(nl);
    for (std::size_t j = 0; j < nl; ++j) lx[j] = std::log(box_scales[j]);
    for (std::size_t qi = 0; qi < nq; ++qi) {
        std::vector<double> ly(nl);
        for (std::size_t j = 0; j < nl; ++j) ly[j] = std::log(std::max(Sq[j][qi], 1e-300));
        out.tau[qi] = fit_line(lx, ly).slope;
    }
    if (gammas.empty())
        for (double g = 0.15; g <= 1.45 + 1e-9; g += 0.05) gammas.push_back(g);
    out.gammas = gammas;
    for (double g : gammas) {
        double best = moment_orders[0] * g - out.tau[0];
        for (std::size_t qi = 1; qi < nq; ++qi) best = std::min(best, moment_orders[qi] * g - out.tau[qi]);
        out.d.push_back(best);
    }
    return out;
}

} // namespace fraclab
