// The pure-point measure h_p,delta[F_D](2t) on t in [0,1): atoms at reduced
// rationals p/q with weights set by the residue class of q mod 4,
//   Z = (2 b_{1,delta}/||psi||^2) zeta(2(1+delta)),
//   q odd        -> -Z / q^{2(1+delta)}
//   q = 2 mod 4  -> +2 (2^{1+2 delta} - 1) Z / q^{2(1+delta)}
//   q = 0 mod 4  -> -2^{2(1+delta)} Z / q^{2(1+delta)}
// plus the weak pairings against test functions for line and measure.
#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "arith.hpp"
#include "dispersion.hpp"
#include "farey.hpp"
#include "periodic.hpp"

namespace fraclab {

struct RationalAtom {
    i64 p = 0;
    i64 q = 1;
    double weight = 0.0;
};

struct PurePointMeasure {
    double delta = 0.0;
    i64 q_max = 1;
    double psi_norm_sq = 1.0;
    std::vector<RationalAtom> atoms; // sorted by p/q
};

inline double comb_zeta_prefactor(DeltaParam delta, double psi_norm_sq) {
    return 2.0 * b1_constant(delta) / psi_norm_sq * zeta_eval(2.0 * (1.0 + double(delta)));
}

inline double atom_weight(i64 p, i64 q, DeltaParam delta, double psi_norm_sq) {
    if (q < 1 || gcd64(p, q) != 1) throw std::invalid_argument("atom_weight: need gcd(p,q) = 1, q >= 1");
    const double Z = comb_zeta_prefactor(delta, psi_norm_sq);
    const double qp = std::pow(double(q), -2.0 * (1.0 + double(delta)));
    if (q % 2 == 1) return -Z * qp;
    if (q % 4 == 2) return 2.0 * (std::pow(2.0, 1.0 + 2.0 * double(delta)) - 1.0) * Z * qp;
    return -std::pow(2.0, 2.0 * (1.0 + double(delta))) * Z * qp;
}

// Signed weight by denominator only; |w| is p-independent within a class.
inline std::vector<double> atom_weight_table(DeltaParam delta, i64 q_max, double psi_norm_sq) {
    const double Z = comb_zeta_prefactor(delta, psi_norm_sq);
    std::vector<double> w(std::size_t(q_max) + 1, 0.0);
    for (i64 q = 1; q <= q_max; ++q) {
        const double qp = std::pow(double(q), -2.0 * (1.0 + double(delta)));
        if (q % 2 == 1)
            w[q] = -Z * qp;
        else if (q % 4 == 2)
            w[q] = 2.0 * (std::pow(2.0, 1.0 + 2.0 * double(delta)) - 1.0) * Z * qp;
        else
            w[q] = -std::pow(2.0, 2.0 * (1.0 + double(delta))) * Z * qp;
    }
    return w;
}

// Streaming Farey walk over all atoms p/q in [0,1), q <= q_max, in rational
// order; the visitor receives (p, q, weight). Nothing is materialized.
template <class Visitor>
inline void for_each_atom(DeltaParam delta, i64 q_max, double psi_norm_sq, Visitor&& visit) {
    const std::vector<double> w = atom_weight_table(delta, q_max, psi_norm_sq);
    FareyState s = farey_begin(q_max);
    while (s.p1 < s.q1) { // stop before the endpoint 1/1 (period repeat of 0/1)
        visit(s.p1, s.q1, w[std::size_t(s.q1)]);
        if (!farey_next(s)) break;
    }
}

inline PurePointMeasure comb_measure(DeltaParam delta, i64 q_max, double psi_norm_sq = 1.0) {
    if (q_max < 1) throw std::invalid_argument("comb_measure: q_max >= 1 required");
    PurePointMeasure m;
    m.delta = delta;
    m.q_max = q_max;
    m.psi_norm_sq = psi_norm_sq;
    for_each_atom(delta, q_max, psi_norm_sq,
                  [&](i64 p, i64 q, double wt) { m.atoms.push_back({p, q, wt}); });
    return m;
}

inline double total_variation(const PurePointMeasure& m) {
    double s = 0.0;
    for (const auto& a : m.atoms) s += std::abs(a.weight);
    return s;
}

// <h_p, phi> = sum_k c_k phihat(-k/2) in the line's own (period-2) variable.
inline cd weak_pairing_line(const PeriodicLine& line, const std::function<cd(double)>& phi_hat) {
    cd acc(0, 0);
    for (int k = -line.K; k <= line.K; ++k) acc += line.at(k) * phi_hat(-0.5 * k);
    return acc;
}

// <measure, phi> = sum over atoms of w phi(p/q), phi evaluated in t in [0,1).
inline double weak_pairing_measure(const PurePointMeasure& m, const std::function<double(double)>& phi) {
    double acc = 0.0;
    for (const auto& a : m.atoms) acc += a.weight * phi(double(a.p) / double(a.q));
    return acc;
}

} // namespace fraclab
