#ifndef SYMPD_MOEBIUS_HPP
#define SYMPD_MOEBIUS_HPP

#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <optional>

#include "sympd/complex2.hpp"

namespace sympd {

/// Scalar fractional-linear map m(z) = (a z + b) / (c z + d).
struct ScalarMoebius {
    cplx a{0.0}, b{0.0}, c{0.0}, d{0.0};

    cplx eval(cplx z) const { return (a * z + b) / (c * z + d); }

    bool is_degenerate(double tol = 1e-14) const
    {
        const double scale = std::abs(a) * std::abs(d) + std::abs(b) * std::abs(c);
        return std::abs(a * d - b * c) <= tol * std::max(1e-300, scale);
    }

    /// Pole -d/c; nullopt for affine maps (c == 0).
    std::optional<cplx> pole() const
    {
        if (std::abs(c) == 0.0)
            return std::nullopt;
        return -d / c;
    }

    /// Zero -b/a of the numerator; nullopt when a == 0.
    std::optional<cplx> zero() const
    {
        if (std::abs(a) == 0.0)
            return std::nullopt;
        return -b / a;
    }
};

struct Circle {
    cplx center{0.0};
    double radius{0.0};
};

namespace detail {

// Circumcircle through three points; nullopt when near-collinear.
inline std::optional<Circle> circumcircle(cplx p0, cplx p1, cplx p2)
{
    const cplx u = p1 - p0;
    const cplx v = p2 - p0;
    const double det = u.real() * v.imag() - u.imag() * v.real();
    const double scale = abs2(u) + abs2(v);
    if (std::abs(det) <= 1e-13 * std::max(1e-300, scale))
        return std::nullopt;
    const double nu = abs2(u);
    const double nv = abs2(v);
    const double x1 = (nu * v.imag() - nv * u.imag()) / (2.0 * det);
    const double x2 = (nv * u.real() - nu * v.real()) / (2.0 * det);
    const cplx x{x1, x2};
    return Circle{p0 + x, std::abs(x)};
}

inline double golden_scan(const std::function<double(double)>& f, bool minimize)
{
    // coarse scan over the angle, then golden-section refinement around the best cell
    constexpr int kCoarse = 96;
    const double sign = minimize ? 1.0 : -1.0;
    double best = std::numeric_limits<double>::infinity();
    int best_i = 0;
    const double step = 2.0 * M_PI / kCoarse;
    for (int i = 0; i < kCoarse; ++i) {
        const double val = sign * f(i * step);
        if (val < best) {
            best = val;
            best_i = i;
        }
    }
    double lo = (best_i - 1) * step;
    double hi = (best_i + 1) * step;
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = hi - gr * (hi - lo);
    double x2 = lo + gr * (hi - lo);
    double f1 = sign * f(x1);
    double f2 = sign * f(x2);
    for (int it = 0; it < 80; ++it) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - gr * (hi - lo);
            f1 = sign * f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + gr * (hi - lo);
            f2 = sign * f(x2);
        }
    }
    return sign * std::min(f1, f2);
}

} // namespace detail

/// Image of the circle |z| = r under a nondegenerate Moebius map, by the
/// circumcircle of three boundary images. nullopt when the images are
/// near-collinear (pole on or almost on the circle; the image is a line).
inline std::optional<Circle> mobius_circle_image(const ScalarMoebius& m, double r)
{
    const cplx w = std::polar(1.0, 2.0 * M_PI / 3.0);
    return detail::circumcircle(m.eval(r), m.eval(r * w), m.eval(r * w * w));
}

/// min |m(z)| over the closed disc |z| <= r.
/// A numerator zero inside gives 0 at once; otherwise the region is either the
/// image disc or, when the pole lies inside, the closed exterior of the image
/// circle, and the minimum sits on the boundary circle in both cases.
inline double mobius_min_modulus_disc(const ScalarMoebius& m, double r)
{
    if (m.is_degenerate())
        return std::abs(m.eval(0.0)); // constant map
    if (auto z0 = m.zero(); z0 && std::abs(*z0) <= r)
        return 0.0;
    double rr = r;
    if (auto p = m.pole(); p && std::abs(std::abs(*p) - r) <= 1e-12 * r)
        rr = r * (1.0 - 8e-12); // nudge off a pole sitting on the circle
    if (auto img = mobius_circle_image(m, rr)) {
        const bool pole_inside = m.pole() && std::abs(*m.pole()) < rr;
        if (pole_inside)
            return std::max(0.0, img->radius - std::abs(img->center));
        return std::max(0.0, std::abs(img->center) - img->radius);
    }
    // near-line image: fall back to a boundary scan
    return detail::golden_scan(
        [&](double t) { return std::abs(m.eval(std::polar(rr, t))); }, true);
}

/// max |m(z)| over the closed disc |z| <= r; requires the pole outside.
inline double mobius_max_modulus_disc(const ScalarMoebius& m, double r)
{
    if (m.is_degenerate())
        return std::abs(m.eval(0.0));
    if (auto p = m.pole(); p && std::abs(*p) <= r)
        return std::numeric_limits<double>::infinity();
    if (auto img = mobius_circle_image(m, r))
        return std::abs(img->center) + img->radius;
    return detail::golden_scan(
        [&](double t) { return std::abs(m.eval(std::polar(r, t))); }, false);
}

/// Boundary point of the disc |z| <= r at which |m(z)| attains its minimum
/// (used to extract witnesses). Falls back to a scan when needed.
inline cplx mobius_min_modulus_arg(const ScalarMoebius& m, double r)
{
    if (auto z0 = m.zero(); z0 && std::abs(*z0) <= r)
        return *z0;
    if (auto img = mobius_circle_image(m, r)) {
        if (std::abs(img->center) > 1e-300) {
            const cplx p = img->center * (1.0 - img->radius / std::abs(img->center));
            // preimage of the closest image point
            const cplx z = (m.d * p - m.b) / (m.a - m.c * p);
            if (std::isfinite(z.real()) && std::isfinite(z.imag()))
                return z * (r / std::max(std::abs(z), 1e-300));
        }
    }
    constexpr int kCoarse = 512;
    double best = std::numeric_limits<double>::infinity();
    cplx arg = r;
    for (int i = 0; i < kCoarse; ++i) {
        const cplx z = std::polar(r, 2.0 * M_PI * i / kCoarse);
        const double val = std::abs(m.eval(z));
        if (val < best) {
            best = val;
            arg = z;
        }
    }
    return arg;
}

} // namespace sympd

#endif
