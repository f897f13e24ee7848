#ifndef SYMPD_DISTANCES_HPP
#define SYMPD_DISTANCES_HPP

#include <cmath>
#include <optional>

#include "sympd/domain.hpp"
#include "sympd/interpolant.hpp"

namespace sympd {

/// Hyperbolic distance tanh^{-1} |(a - b) / (1 - conj(b) a)| on the disc.
inline double hyperbolic_distance(cplx a, cplx b)
{
    if (!(std::abs(a) < 1.0 && std::abs(b) < 1.0))
        raise(errc::outside_disc, "both points must lie in the open unit disc");
    return std::atanh(std::abs((a - b) / (1.0 - std::conj(b) * a)));
}

struct DistanceReport {
    double lower{0.0};                 // Caratheodory bound from the origin
    std::optional<double> upper;       // Lempert bound via an explicit disc
    bool equal{false};
    int argmax_j{1};
    bool lambda0_relaxed{false};       // strictness bump applied to lambda0
};

/// Distances from the origin. The lower bound
///   max_j tanh^{-1} ||Phi_j(., y)||
/// holds on the whole domain; for J_n targets (and every G2 target) that
/// satisfy the constructive hypotheses the matching analytic disc is built
/// and certifies equality with the Lempert function.
inline DistanceReport dist_origin(const PointGn& y)
{
    if (!in_gtilde(y).inside)
        raise(errc::not_interior, "point is not interior to the domain");
    DistanceReport rep;

    bool at_origin = std::abs(y.q) < 1e-14;
    double sup = 0.0;
    for (int j = 1; j <= y.n - 1; ++j) {
        at_origin = at_origin && std::abs(y.yc(j)) < 1e-14;
        const double s = phi_supnorm(j, y);
        if (s > sup) {
            sup = s;
            rep.argmax_j = j;
        }
    }
    rep.lower = std::atanh(sup);
    if (at_origin) {
        rep.upper = 0.0;
        rep.equal = true;
        return rep;
    }

    // Constructive upper bound at the extremal lambda0. The construction
    // needs strict ||Phi_1|| < |lambda0|, so when the maximum is attained at
    // j = 1 the base point is nudged outward by a relative 1e-9.
    double lam = sup;
    if (phi_supnorm(1, y) >= lam * (1.0 - 1e-12)) {
        lam = sup * (1.0 + 1e-9);
        rep.lambda0_relaxed = true;
    }
    if (lam >= 1.0)
        return rep;
    try {
        Interpolant psi;
        if (y.n == 2)
            psi = build_interpolant_g2(y.yc(1), y.q, lam);
        else if (in_jn(y))
            psi = build_interpolant_jn(y, lam);
        else
            return rep; // no construction promised off J_n
        const double hit = point_distance(eval_interpolant(psi, lam), y);
        if (hit < 1e-8) {
            rep.upper = std::atanh(lam);
            rep.equal = std::abs(*rep.upper - rep.lower) < 1e-8;
        }
    } catch (const error&) {
        // hypothesis gap (degenerate pair, |y_{n-1}| > |y_1|, ...): no upper bound
    }
    return rep;
}

} // namespace sympd

#endif
