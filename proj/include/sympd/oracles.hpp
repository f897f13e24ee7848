#ifndef SYMPD_ORACLES_HPP
#define SYMPD_ORACLES_HPP

#include <cmath>
#include <functional>
#include <vector>

#include "sympd/complex2.hpp"
#include "sympd/domain.hpp"
#include "sympd/mu.hpp"

namespace sympd {

/// Sampling plans for the brute-force baselines; fixed default seed for
/// reproducible CI runs.
struct GridSpec {
    int radial{40};
    int angular{200};
    uint32_t seed{0x5EED};

    GridSpec() = default;
    GridSpec(int radial_, int angular_, uint32_t seed_ = 0x5EED)
        : radial(radial_), angular(angular_), seed(seed_)
    {
        if (radial < 1 || angular < 1)
            raise(errc::bad_input, "grid counts must be >= 1");
    }
};

inline double halton_seq(uint64_t i, uint32_t base)
{
    double f = 1.0, r = 0.0;
    while (i > 0) {
        f /= base;
        r += f * (i % base);
        i /= base;
    }
    return r;
}

/// max |f| over angular samples of the unit circle.
inline double supnorm_sampling(const std::function<cplx(cplx)>& f, const GridSpec& grid)
{
    double s = 0.0;
    for (int i = 0; i < grid.angular; ++i)
        s = std::max(s, std::abs(f(std::polar(1.0, 2.0 * M_PI * i / grid.angular))));
    return s;
}

/// Brute-force mu for the diagonal structure. Every structured singularity is
/// a point (z(w), w) on the graph of the affine-in-z equation
/// det(I - B diag(z, w)) = 0, so mu = 1 / inf_w max(|z(w)|, |w|). The scan
/// works directly on the determinant (solved by affine elimination) and
/// refines the best cell; it shares no code with the bisection route.
inline double mu_grid(const Mat2& b, const GridSpec& grid)
{
    // Height of the zero graph over one free variable; `swap` exchanges the
    // roles of z and w (needed when the zero set contains a line parallel to
    // one axis, e.g. for triangular B).
    const auto height = [&](cplx w, bool swap) {
        const cplx g0 = swap ? mu_det(b, w, 0.0) : mu_det(b, 0.0, w);
        const cplx g1 = swap ? mu_det(b, w, 1.0) : mu_det(b, 1.0, w);
        const cplx slope = g1 - g0;
        if (std::abs(slope) < 1e-300)
            return (std::abs(g0) < 1e-12) ? std::abs(w) : 1e308;
        return std::max(std::abs(-g0 / slope), std::abs(w));
    };

    const double mag =
        std::max({std::abs(b.a11), std::abs(b.a22), std::sqrt(std::abs(b.det()))});
    double center = (mag > 0.0) ? 1.0 / mag : 1e6;
    center = std::min(center, 1e6);

    // local box refinement; the 0.3 shrink keeps three steps of slack over
    // the per-round grid error
    const auto refine = [&](cplx w0, double h0, bool swap) {
        double loc = h0;
        cplx loc_w = w0;
        double span = std::max(h0, std::abs(w0)) * 0.5;
        for (int round = 0; round < 12; ++round) {
            cplx next_w = loc_w;
            for (int ix = -10; ix <= 10; ++ix) {
                for (int iy = -10; iy <= 10; ++iy) {
                    const cplx w = loc_w + cplx(span * ix / 10.0, span * iy / 10.0);
                    const double h = height(w, swap);
                    if (h < loc) {
                        loc = h;
                        next_w = w;
                    }
                }
            }
            loc_w = next_w;
            span *= 0.3;
        }
        return loc;
    };

    double best = 1e308;
    for (int swap = 0; swap < 2; ++swap) {
        best = std::min(best, refine(0.0, height(0.0, swap), swap));
        for (int ir = 0; ir < grid.radial; ++ir) {
            // log-spaced radii straddling the expected scale; every radial
            // level seeds its own refinement so no basin is lost
            const double expo = -2.0 + 4.0 * ir / std::max(1, grid.radial - 1);
            const double r = center * std::pow(10.0, expo);
            double lev = 1e308;
            cplx lev_w = 0.0;
            for (int ia = 0; ia < grid.angular; ++ia) {
                const cplx w = std::polar(r, 2.0 * M_PI * ia / grid.angular);
                const double h = height(w, swap);
                if (h < lev) {
                    lev = h;
                    lev_w = w;
                }
            }
            if (lev < 1e6 && lev < 4.0 * best)
                best = std::min(best, refine(lev_w, lev, swap));
        }
    }
    if (!(best < 1e6))
        return 0.0;
    return 1.0 / best;
}

/// One-sided membership cross-check: true when D_j(z, w) has no zero over the
/// sampled open-bidisc slices. The z variable is eliminated exactly per
/// sampled w (D_j is affine in z), so only the w plane is sampled.
inline bool membership_torus_sampling(const PointGn& p, const GridSpec& grid)
{
    const int nw = grid.radial * grid.angular;
    const uint64_t off = grid.seed & 0xFFFFu;
    for (int j = 1; j <= p.n - 1; ++j) {
        const double c = p.choose(j);
        const cplx a = p.yc(j);
        const cplx b = p.yc(p.n - j);
        for (int i = 0; i < nw; ++i) {
            const double rw = std::sqrt(halton_seq(off + i + 1, 2)) * 0.9999;
            const double tw = 2.0 * M_PI * halton_seq(off + i + 1, 3);
            const cplx w = std::polar(rw, tw);
            // D_j(z, w) = (c - b w) + z (c q w - a): zero with |z| < 1?
            const cplx a0 = c - b * w;
            const cplx a1 = c * p.q * w - a;
            if (std::abs(a1) < 1e-300) {
                if (std::abs(a0) <= 1e-12 * c)
                    return false;
                continue;
            }
            if (std::abs(-a0 / a1) < 0.9999)
                return false;
        }
    }
    return true;
}

} // namespace sympd

#endif
