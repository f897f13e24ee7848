#ifndef SYMPD_DOMAIN_HPP
#define SYMPD_DOMAIN_HPP

#include <cmath>
#include <string>
#include <vector>

#include "sympd/complex2.hpp"
#include "sympd/moebius.hpp"

namespace sympd {

/// Binomial coefficient as a double (exact for the small n used here).
inline double binom(int n, int k)
{
    if (k < 0 || k > n)
        return 0.0;
    k = std::min(k, n - k);
    long double r = 1.0L;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return static_cast<double>(r);
}

/// A candidate point (y_1, ..., y_{n-1}, q) of C^n, n >= 2.
struct PointGn {
    int n{2};
    std::vector<cplx> y; // y_1 ... y_{n-1}
    cplx q{0.0};

    PointGn() : y(1, cplx(0.0)) {}
    PointGn(int n_, std::vector<cplx> y_, cplx q_) : n(n_), y(std::move(y_)), q(q_)
    {
        if (n < 2)
            raise(errc::dimension_too_small, "n must be at least 2");
        if (static_cast<int>(y.size()) != n - 1)
            raise(errc::length_mismatch, "expected n-1 coordinates",
                  "got " + std::to_string(y.size()) + " for n = " + std::to_string(n));
    }

    static PointGn origin(int n_)
    {
        return PointGn(n_, std::vector<cplx>(n_ - 1, cplx(0.0)), 0.0);
    }

    cplx yc(int j) const { return y[j - 1]; } // 1-based coordinate access
    double choose(int j) const { return binom(n, j); }
};

struct MembershipReport {
    bool inside{false};
    std::vector<double> margins; // per j = 1..n-1: C(n,j) - |beta_j| - |beta_{n-j}|
    double q_margin{0.0};        // 1 - |q|
};

/// beta_j = (y_j - q conj(y_{n-j})) / (1 - |q|^2); reconstruction
/// y_j = beta_j + conj(beta_{n-j}) q holds for all j.
inline std::vector<cplx> beta_coeffs(const PointGn& p)
{
    const double q2 = abs2(p.q);
    if (!(q2 < 1.0))
        raise(errc::q_on_boundary, "|q| must be < 1",
              "|q| = " + std::to_string(std::sqrt(q2)));
    std::vector<cplx> beta(p.n - 1);
    for (int j = 1; j <= p.n - 1; ++j)
        beta[j - 1] = (p.yc(j) - p.q * std::conj(p.yc(p.n - j))) / (1.0 - q2);
    return beta;
}

inline MembershipReport in_gtilde(const PointGn& p)
{
    MembershipReport rep;
    rep.q_margin = 1.0 - std::abs(p.q);
    rep.margins.assign(p.n - 1, -std::numeric_limits<double>::infinity());
    if (rep.q_margin <= 0.0) {
        rep.inside = false;
        return rep;
    }
    const auto beta = beta_coeffs(p);
    bool ok = rep.q_margin > 1e-12;
    for (int j = 1; j <= p.n - 1; ++j) {
        const double m =
            p.choose(j) - std::abs(beta[j - 1]) - std::abs(beta[p.n - j - 1]);
        rep.margins[j - 1] = m;
        ok = ok && m > 1e-12;
    }
    rep.inside = ok;
    return rep;
}

/// Phi_j(z, y) = (C(n,j) q z - y_j) / (y_{n-j} z - C(n,j)).
inline cplx phi(int j, cplx z, const PointGn& p)
{
    const double c = p.choose(j);
    const cplx den = p.yc(p.n - j) * z - c;
    if (std::abs(den) < 1e-14)
        raise(errc::pole_hit, "z hits the pole of Phi_j");
    return (c * p.q * z - p.yc(j)) / den;
}

/// H-infinity norm of Phi_j(., y) in closed form:
///   (C |y_j - conj(y_{n-j}) q| + |y_j y_{n-j} - C^2 q|) / (C^2 - |y_{n-j}|^2).
inline double phi_supnorm(int j, const PointGn& p)
{
    const double c = p.choose(j);
    const cplx yj = p.yc(j);
    const cplx ynj = p.yc(p.n - j);
    if (!(std::abs(ynj) < c))
        raise(errc::pole_on_disc, "Phi_j has a pole on the closed disc",
              "|y_{n-j}| = " + std::to_string(std::abs(ynj)));
    const double num =
        c * std::abs(yj - std::conj(ynj) * p.q) + std::abs(yj * ynj - c * c * p.q);
    return num / (c * c - abs2(ynj));
}

/// Same norm by the circle-image route (|center| + radius of the image of the
/// unit circle); used as a second algebraic route in tests.
inline double phi_supnorm_circle(int j, const PointGn& p)
{
    const double c = p.choose(j);
    ScalarMoebius m{c * p.q, -p.yc(j), p.yc(p.n - j), cplx(-c)};
    return mobius_max_modulus_disc(m, 1.0);
}

namespace detail {

// No zero of D(z, w) = C - a z - b w + C q z w with |z| < 1, |w| < 1.
// Solving D = 0 for z gives the Moebius map z(w) = (C - b w)/(a - C q w); a
// zero exists in the open bidisc iff min_{|w|<=t} |z(w)| dips below t as t->1.
inline bool pair_nonvanishing(double c, cplx a, cplx b, cplx q)
{
    const cplx cq = c * q;
    if (std::abs(a) < 1e-300 && std::abs(cq) < 1e-300)
        return std::abs(b) <= c; // D = C - b w
    ScalarMoebius zw{-b, cplx(c), -cq, a};
    if (zw.is_degenerate()) {
        // a b = C^2 q: the solution branch is the constant z = C/a
        if (std::abs(a) < 1e-300)
            return std::abs(b) <= c;
        return std::abs(c / a) >= 1.0;
    }
    for (double t : {0.9, 0.99, 0.999, 0.9999}) {
        if (mobius_min_modulus_disc(zw, t) < t)
            return false;
    }
    return true;
}

} // namespace detail

/// Closure membership: D_j(z, w) = C - y_j z - y_{n-j} w + C q z w has no zero
/// in the open bidisc, for every j. One-sided near the boundary.
inline bool in_gamma_tilde(const PointGn& p)
{
    for (int j = 1; j <= p.n - 1; ++j) {
        if (!detail::pair_nonvanishing(p.choose(j), p.yc(j), p.yc(p.n - j), p.q))
            return false;
    }
    return true;
}

/// J_n: all middle coordinates proportional to y_1 / y_{n-1} (and the middle
/// average condition for even n). Constraints are vacuous for n <= 3.
inline bool in_jn(const PointGn& p, double tol = 1e-12)
{
    if (!in_gtilde(p).inside)
        return false;
    if (p.n <= 3)
        return true;
    const cplx y1 = p.yc(1);
    const cplx yn1 = p.yc(p.n - 1);
    const int half = p.n / 2;
    const int top = (p.n % 2 == 0) ? half - 1 : half;
    for (int j = 2; j <= top; ++j) {
        const double c = p.choose(j) / p.n;
        if (std::abs(p.yc(j) - c * y1) > tol)
            return false;
        if (std::abs(p.yc(p.n - j) - c * yn1) > tol)
            return false;
    }
    if (p.n % 2 == 0) {
        const cplx mid = p.choose(half) * (y1 + yn1) / (2.0 * p.n);
        if (std::abs(p.yc(half) - mid) > tol)
            return false;
    }
    return true;
}

/// The unique J_n tuple over (y_1, y_{n-1}, q); n >= 3.
inline PointGn jn_embed(cplx y1, cplx yn1, cplx q, int n)
{
    if (n < 3)
        raise(errc::dimension_too_small, "J_n requires n >= 3");
    std::vector<cplx> y(n - 1);
    y[0] = y1;
    y[n - 2] = yn1;
    const int half = n / 2;
    const int top = (n % 2 == 0) ? half - 1 : half;
    for (int j = 2; j <= top; ++j) {
        const double c = binom(n, j) / n;
        y[j - 1] = c * y1;
        y[n - j - 1] = c * yn1;
    }
    if (n % 2 == 0)
        y[half - 1] = binom(n, half) * (y1 + yn1) / (2.0 * n);
    return PointGn(n, std::move(y), q);
}

/// pi_{2k+1} / pi_{2k} of [n/2] matrices with equal determinants.
inline PointGn pi_map(const std::vector<Mat2>& bs, int n)
{
    const int k = n / 2;
    if (static_cast<int>(bs.size()) != k)
        raise(errc::length_mismatch, "pi_map needs [n/2] matrices",
              "got " + std::to_string(bs.size()) + " for n = " + std::to_string(n));
    const cplx q = bs.front().det();
    for (const auto& b : bs) {
        if (std::abs(b.det() - q) > 1e-12)
            raise(errc::determinant_mismatch, "determinants must agree to 1e-12");
    }
    std::vector<cplx> y(n - 1);
    const int top = (n % 2 == 0) ? k - 1 : k;
    for (int j = 1; j <= top; ++j) {
        const double c = binom(n, j);
        y[j - 1] = c * bs[j - 1].a11;
        y[n - j - 1] = c * bs[j - 1].a22;
    }
    if (n % 2 == 0)
        y[k - 1] = binom(n, k) * 0.5 * (bs[k - 1].a11 + bs[k - 1].a22);
    return PointGn(n, std::move(y), q);
}

/// pi_hat_n(B) = pi(B, ..., B).
inline PointGn pi_hat(const Mat2& b, int n)
{
    return pi_map(std::vector<Mat2>(static_cast<size_t>(n / 2), b), n);
}

/// Elementary symmetric coordinates of scalars in the disc (classical pi_n);
/// G_n points for test construction.
inline PointGn pi_scalar(const std::vector<cplx>& z)
{
    const int n = static_cast<int>(z.size());
    if (n < 2)
        raise(errc::dimension_too_small, "need at least two scalars");
    std::vector<cplx> e(n + 1, cplx(0.0));
    e[0] = 1.0;
    for (int i = 0; i < n; ++i)
        for (int k = std::min(i + 1, n); k >= 1; --k)
            e[k] += z[i] * e[k - 1];
    std::vector<cplx> y(e.begin() + 1, e.begin() + n);
    return PointGn(n, std::move(y), e[n]);
}

} // namespace sympd

#endif
