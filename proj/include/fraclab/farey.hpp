// Farey sequence enumeration, Stern-Brocot interval searches, and the
// counting functions M(I,N) / |N|(I,r). All fraction bookkeeping is exact
// 64-bit integer arithmetic; fractions are compared by cross-multiplication.
#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "arith.hpp"

namespace fraclab {

using i64 = std::int64_t;

struct Fraction {
    i64 p = 0, q = 1;
    double value() const { return double(p) / double(q); }
};

// Adjacent pair (p1/q1 < p2/q2) in F_{q_max}; unimodular: p2 q1 - p1 q2 = 1.
struct FareyState {
    i64 p1 = 0, q1 = 1;
    i64 p2 = 1, q2 = 1;
    i64 q_max = 1;
    bool unimodular() const { return p2 * q1 - p1 * q2 == 1; }
    Fraction current() const { return {p1, q1}; }
};

inline FareyState farey_begin(i64 q_max) {
    if (q_max < 1) throw std::invalid_argument("farey_begin: q_max >= 1 required");
    return {0, 1, 1, q_max, q_max};
}

// Advance one term; false once the walk has passed 1/1.
inline bool farey_next(FareyState& s) {
    if (s.p1 >= s.q1) return false; // current is 1/1 (or beyond): end of sequence
    i64 a = (s.q1 + s.q_max) / s.q2;
    i64 p3 = a * s.p2 - s.p1;
    i64 q3 = a * s.q2 - s.q1;
    s.p1 = s.p2;
    s.q1 = s.q2;
    s.p2 = p3;
    s.q2 = q3;
    return true;
}

namespace detail {

// p/q <= x for double x, exact on the integer side.
inline bool frac_le(i64 p, i64 q, double x) { return double(p) <= x * double(q); }
inline bool frac_lt(i64 p, i64 q, double x) { return double(p) < x * double(q); }

} // namespace detail

// State whose current fraction is the largest element of F_{q_max} that is
// <= lo (lo in [0,1]). Batched Stern-Brocot descent, O(log) mediant runs.
inline FareyState farey_seek(double lo, i64 q_max) {
    if (!(lo >= 0.0 && lo <= 1.0)) throw std::invalid_argument("farey_seek: lo in [0,1] required");
    i64 a = 0, b = 1, c = 1, d = 1; // a/b <= lo < c/d, adjacent at every stage
    while (b + d <= q_max) {
        if (detail::frac_le(a + c, b + d, lo)) {
            // run right: a/b <- mediant k times while still <= lo and q admissible
            i64 k_q = (q_max - b) / d;
            i64 k = 1;
            if (c > lo * d) {
                double kf = std::floor((lo * b - a) / (c - lo * d));
                k = (i64)kf;
            } else
                k = k_q;
            if (k < 1) k = 1;
            if (k > k_q) k = k_q;
            while (k > 1 && !detail::frac_le(a + k * c, b + k * d, lo)) --k;
            while (k < k_q && detail::frac_le(a + (k + 1) * c, b + (k + 1) * d, lo)) ++k;
            a += k * c;
            b += k * d;
        } else {
            i64 k_q = (q_max - d) / b;
            i64 k = 1;
            if (a < lo * b || a == 0) {
                if (lo * b - a > 0) {
                    double kf = std::floor((c - lo * d) / (lo * b - a));
                    k = (i64)kf;
                } else
                    k = k_q; // lo == a/b boundary: push the right neighbour down fully
            }
            if (k < 1) k = 1;
            if (k > k_q) k = k_q;
            while (k > 1 && detail::frac_le(c + k * a, d + k * b, lo)) --k;
            while (k < k_q && !detail::frac_le(c + (k + 1) * a, d + (k + 1) * b, lo)) ++k;
            c += k * a;
            d += k * b;
        }
    }
    FareyState s{a, b, c, d, q_max};
    return s;
}

// Exact count of reduced p/q in the half-open interval [lo, hi), q <= N.
inline i64 count_M(double lo, double hi, i64 N) {
    if (N < 1) throw std::invalid_argument("count_M: N >= 1 required");
    if (!(lo < hi)) return 0;
    FareyState s = farey_seek(std::max(lo, 0.0), N);
    // seek gives current <= lo; advance past anything strictly below lo
    while (detail::frac_lt(s.p1, s.q1, lo))
        if (!farey_next(s)) return 0;
    i64 count = 0;
    while (detail::frac_lt(s.p1, s.q1, hi)) {
        ++count;
        if (!farey_next(s)) break;
    }
    return count;
}

// Count restricted to a residue class of q (0: odd, 1: q=2 mod 4, 2: q=0 mod 4).
inline i64 count_M_class(double lo, double hi, i64 N, int cls) {
    if (N < 1) return 0;
    FareyState s = farey_seek(std::max(lo, 0.0), N);
    while (detail::frac_lt(s.p1, s.q1, lo))
        if (!farey_next(s)) return 0;
    i64 count = 0;
    while (detail::frac_lt(s.p1, s.q1, hi)) {
        i64 q = s.q1;
        bool in = (cls == 0 && q % 2 == 1) || (cls == 1 && q % 4 == 2) || (cls == 2 && q % 4 == 0);
        if (in) ++count;
        if (!farey_next(s)) break;
    }
    return count;
}

// The reduced fraction with the smallest denominator in (t, t+h], by
// Stern-Brocot descent; exists for every h > 0.
inline Fraction smallest_denominator(double t, double h) {
    if (!(h > 0.0)) throw std::invalid_argument("smallest_denominator: h > 0 required");
    double a = t, b = t + h;
    i64 shift = (i64)std::floor(a);
    a -= double(shift);
    b -= double(shift);
    if (b >= 1.0) return {shift + 1, 1}; // integer inside (a, b]
    // now 0 <= a < b < 1; descend until the mediant lands in (a, b]
    i64 pl = 0, ql = 1, ph = 1, qh = 1;
    for (int guard = 0; guard < 1 << 20; ++guard) {
        i64 pm = pl + ph, qm = ql + qh;
        if (detail::frac_le(pm, qm, a)) {
            // step right k times: largest k with (pl + k ph)/(ql + k qh) <= a
            i64 k = 1;
            if (double(ph) > a * double(qh)) {
                double kf = std::floor((a * ql - pl) / (double(ph) - a * double(qh)));
                if (kf > 1) k = (i64)kf;
            }
            while (k > 1 && !detail::frac_le(pl + k * ph, ql + k * qh, a)) --k;
            while (detail::frac_le(pl + (k + 1) * ph, ql + (k + 1) * qh, a)) ++k;
            pl += k * ph;
            ql += k * qh;
        } else if (!detail::frac_le(pm, qm, b)) {
            // step left k times: largest k with (ph + k pl)/(qh + k ql) > b
            i64 k = 1;
            if (b * double(ql) > double(pl)) {
                double kf = std::floor((double(ph) - b * double(qh)) / (b * double(ql) - double(pl)));
                if (kf > 1) k = (i64)kf;
            }
            while (k > 1 && detail::frac_le(ph + k * pl, qh + k * ql, b)) --k;
            while (!detail::frac_le(ph + (k + 1) * pl, qh + (k + 1) * ql, b)) ++k;
            ph += k * pl;
            qh += k * ql;
        } else {
            return {pm + shift * qm, qm};
        }
    }
    throw std::runtime_error("smallest_denominator: descent failed to terminate");
}

// Partial quotients of t to the given depth (stops early on exact rationals).
inline std::vector<i64> continued_fraction(double t, int depth) {
    if (depth < 1 || depth > 40) throw std::invalid_argument("continued_fraction: depth in [1,40]");
    std::vector<i64> a;
    double x = t;
    for (int i = 0; i < depth; ++i) {
        double fl = std::floor(x);
        a.push_back((i64)fl);
        double frac = x - fl;
        if (frac < 1e-14) break;
        x = 1.0 / frac;
        if (x > 4.5e15) break; // beyond double resolution: treat as exact
    }
    return a;
}

inline double convergent_value(const std::vector<i64>& a) {
    double v = 0.0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) {
        if (it == a.rbegin())
            v = double(*it);
        else
            v = double(*it) + (v == 0.0 ? 0.0 : 1.0 / v);
    }
    return v;
}

} // namespace fraclab
