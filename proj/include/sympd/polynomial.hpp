#ifndef SYMPD_POLYNOMIAL_HPP
#define SYMPD_POLYNOMIAL_HPP

#include <algorithm>
#include <cmath>
#include <vector>

#include "sympd/complex2.hpp"

namespace sympd {

/// Complex polynomial, coefficients in ascending degree.
struct PolyC {
    std::vector<cplx> c;

    PolyC() = default;
    explicit PolyC(std::vector<cplx> coeffs) : c(std::move(coeffs)) { trim(); }
    static PolyC constant(cplx v) { return PolyC({v}); }

    void trim()
    {
        double scale = 0.0;
        for (const auto& v : c)
            scale = std::max(scale, std::abs(v));
        const double tol = 1e-14 * std::max(1.0, scale);
        while (c.size() > 1 && std::abs(c.back()) <= tol)
            c.pop_back();
        if (c.empty())
            c.push_back(0.0);
    }

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const
    {
        for (const auto& v : c)
            if (std::abs(v) != 0.0)
                return false;
        return true;
    }

    cplx eval(cplx z) const
    {
        cplx r = 0.0;
        for (auto it = c.rbegin(); it != c.rend(); ++it)
            r = r * z + *it;
        return r;
    }

    PolyC derivative() const
    {
        if (c.size() <= 1)
            return PolyC({cplx(0.0)});
        std::vector<cplx> d(c.size() - 1);
        for (size_t i = 1; i < c.size(); ++i)
            d[i - 1] = c[i] * static_cast<double>(i);
        return PolyC(std::move(d));
    }

    PolyC operator+(const PolyC& o) const
    {
        std::vector<cplx> r(std::max(c.size(), o.c.size()), cplx(0.0));
        for (size_t i = 0; i < c.size(); ++i)
            r[i] += c[i];
        for (size_t i = 0; i < o.c.size(); ++i)
            r[i] += o.c[i];
        return PolyC(std::move(r));
    }

    PolyC operator-(const PolyC& o) const
    {
        std::vector<cplx> r(std::max(c.size(), o.c.size()), cplx(0.0));
        for (size_t i = 0; i < c.size(); ++i)
            r[i] += c[i];
        for (size_t i = 0; i < o.c.size(); ++i)
            r[i] -= o.c[i];
        return PolyC(std::move(r));
    }

    PolyC operator*(const PolyC& o) const
    {
        std::vector<cplx> r(c.size() + o.c.size() - 1, cplx(0.0));
        for (size_t i = 0; i < c.size(); ++i)
            for (size_t k = 0; k < o.c.size(); ++k)
                r[i + k] += c[i] * o.c[k];
        return PolyC(std::move(r));
    }

    PolyC operator*(cplx s) const
    {
        std::vector<cplx> r = c;
        for (auto& v : r)
            v *= s;
        return PolyC(std::move(r));
    }

    static PolyC from_roots(const std::vector<cplx>& roots, cplx lead = 1.0)
    {
        PolyC p({lead});
        for (cplx r : roots)
            p = p * PolyC({-r, 1.0});
        return p;
    }
};

/// All roots with multiplicity by Aberth-Ehrlich simultaneous iteration.
/// Exact zero roots are stripped first; the rest are polished by Newton.
inline std::vector<cplx> poly_roots(const PolyC& p_in)
{
    PolyC p = p_in;
    p.trim();
    if (p.is_zero())
        raise(errc::zero_polynomial, "cannot factor the zero polynomial");
    if (p.degree() < 1)
        raise(errc::bad_input, "degree must be at least 1");

    double scale = 0.0;
    for (const auto& v : p.c)
        scale = std::max(scale, std::abs(v));

    std::vector<cplx> roots;
    // strip roots at the origin
    size_t lo = 0;
    while (lo + 1 < p.c.size() && std::abs(p.c[lo]) <= 1e-14 * scale) {
        roots.push_back(0.0);
        ++lo;
    }
    std::vector<cplx> cc(p.c.begin() + lo, p.c.end());
    PolyC q(std::move(cc));
    const int d = q.degree();
    if (d == 0)
        return roots;

    // initial guesses on a circle sized by the root-magnitude bound
    double rmax = 0.0;
    for (int i = 0; i < d; ++i)
        rmax = std::max(rmax, std::abs(q.c[i] / q.c[d]));
    const double r0 = 1.0 + rmax;
    std::vector<cplx> z(d);
    for (int i = 0; i < d; ++i)
        z[i] = std::polar(0.5 * r0, 2.0 * M_PI * i / d + 0.7);

    const PolyC dq = q.derivative();
    const int max_iter = 500;
    bool converged = false;
    for (int iter = 0; iter < max_iter && !converged; ++iter) {
        converged = true;
        for (int i = 0; i < d; ++i) {
            const cplx pv = q.eval(z[i]);
            double local = 0.0; // residual scale at z[i]
            double zp = 1.0;
            for (const auto& v : q.c) {
                local += std::abs(v) * zp;
                zp *= std::max(1.0, std::abs(z[i]));
            }
            if (std::abs(pv) <= 1e-14 * local)
                continue;
            const cplx dv = dq.eval(z[i]);
            cplx ratio = (std::abs(dv) > 0.0) ? pv / dv : cplx(1.0);
            cplx sum = 0.0;
            for (int k = 0; k < d; ++k)
                if (k != i)
                    sum += 1.0 / (z[i] - z[k]);
            const cplx denom = 1.0 - ratio * sum;
            const cplx step = (std::abs(denom) > 1e-300) ? ratio / denom : ratio;
            z[i] -= step;
            if (std::abs(step) > 1e-13 * std::max(1.0, std::abs(z[i])))
                converged = false;
        }
    }
    if (!converged) {
        // accept if residuals are small anyway, else report
        for (int i = 0; i < d; ++i) {
            double local = 0.0, zp = 1.0;
            for (const auto& v : q.c) {
                local += std::abs(v) * zp;
                zp *= std::max(1.0, std::abs(z[i]));
            }
            if (std::abs(q.eval(z[i])) > 1e-10 * local)
                raise(errc::no_convergence, "root iteration did not converge");
        }
    }
    // Newton polish (no-op on clustered roots where it would stall)
    for (int i = 0; i < d; ++i) {
        for (int it = 0; it < 3; ++it) {
            const cplx dv = dq.eval(z[i]);
            if (std::abs(dv) < 1e-300)
                break;
            const cplx step = q.eval(z[i]) / dv;
            if (std::abs(step) > 1e-2 * std::max(1.0, std::abs(z[i])))
                break;
            z[i] -= step;
        }
    }
    roots.insert(roots.end(), z.begin(), z.end());
    return roots;
}

/// Balanced factorization h = f g with |f| = |g| on the unit circle and
/// g(0) = 0. The Blaschke part of h goes to f (minus one zero at the origin,
/// which goes to g); both sides carry the square root of the outer part
///   O(lambda) = c prod_k (lambda - r_k) prod_i (1 - conj(a_i) lambda),
/// taken factorwise with the principal branch.
struct BalancedFactors {
    std::vector<cplx> blaschke_roots; // inside roots carried by f (may include 0)
    std::vector<cplx> outside_roots;  // roots r_k with |r_k| >= 1 - 1e-10
    cplx lead{1.0};                   // leading coefficient c of h

    cplx sqrt_outer(cplx z) const
    {
        cplx s = std::sqrt(lead);
        for (cplx r : outside_roots)
            s *= std::sqrt(-r) * std::sqrt(1.0 - z / r);
        for (cplx a : blaschke_roots)
            s *= std::sqrt(1.0 - std::conj(a) * z);
        return s;
    }

    cplx f(cplx z) const
    {
        cplx b = 1.0;
        for (cplx a : blaschke_roots)
            b *= (z - a) / (1.0 - std::conj(a) * z);
        return b * sqrt_outer(z);
    }

    cplx g(cplx z) const { return z * sqrt_outer(z); }
};

/// 2x2 matrix with polynomial entries.
struct PolyMat2 {
    PolyC e11, e12, e21, e22;

    Mat2 eval(cplx z) const
    {
        return {e11.eval(z), e12.eval(z), e21.eval(z), e22.eval(z)};
    }
    PolyC det() const { return e11 * e22 - e12 * e21; }
};

inline BalancedFactors balanced_factorize(const PolyC& h)
{
    PolyC p = h;
    p.trim();
    if (p.is_zero())
        raise(errc::zero_polynomial, "h is identically zero");
    double scale = 0.0;
    for (const auto& v : p.c)
        scale = std::max(scale, std::abs(v));
    if (std::abs(p.c[0]) > 1e-12 * scale)
        raise(errc::root_on_origin_missing, "h(0) != 0");
    if (p.degree() < 1)
        raise(errc::zero_polynomial, "h is constant");

    BalancedFactors out;
    out.lead = p.c.back();
    bool origin_used = false;
    for (cplx r : poly_roots(p)) {
        if (std::abs(r) < 1.0 - 1e-10) {
            if (!origin_used && std::abs(r) <= 1e-10) {
                origin_used = true; // this zero becomes the factor lambda in g
                continue;
            }
            out.blaschke_roots.push_back(r);
        } else {
            out.outside_roots.push_back(r);
        }
    }
    if (!origin_used)
        raise(errc::root_on_origin_missing, "no root at the origin");
    return out;
}

} // namespace sympd

#endif
