#ifndef SYMPD_TESTS_SUPPORT_HPP
#define SYMPD_TESTS_SUPPORT_HPP

#include <complex>
#include <optional>
#include <random>

#include "sympd/sympd.hpp"

namespace testsup {

using sympd::cplx;
using sympd::Mat2;
using sympd::PointGn;
using sympd::Vec2;

inline std::mt19937& rng()
{
    static std::mt19937 gen(0x5EED);
    return gen;
}

inline void reseed(uint32_t s) { rng().seed(s); }

inline double uniform(double lo, double hi)
{
    return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline cplx rand_disc(double radius = 1.0)
{
    const double r = radius * std::sqrt(uniform(0.0, 1.0));
    return std::polar(r, uniform(0.0, 2.0 * M_PI));
}

inline Mat2 rand_mat(double radius = 1.0)
{
    return {rand_disc(radius), rand_disc(radius), rand_disc(radius), rand_disc(radius)};
}

/// Random strict contraction with norm about `target`.
inline Mat2 rand_contraction(double target = 0.7)
{
    Mat2 m = rand_mat(1.0);
    const double nrm = sympd::op_norm(m);
    if (nrm < 1e-12)
        return Mat2::diag(target, 0.0);
    return m * cplx(target * uniform(0.3, 1.0) / nrm);
}

inline Mat2 rand_hermitian(double scale = 1.0)
{
    const Mat2 m = rand_mat(scale);
    return (m + m.adjoint()) * cplx(0.5);
}

/// Random interior point built from admissible beta pairs.
inline PointGn rand_interior(int n, double fill = 0.8)
{
    const cplx q = rand_disc(0.6 * fill);
    std::vector<cplx> beta(n - 1);
    for (int j = 1; j <= n / 2; ++j) {
        const double c = sympd::binom(n, j);
        if (j == n - j) {
            beta[j - 1] = rand_disc(0.5 * c * fill);
        } else {
            const double s = uniform(0.1, fill);
            beta[j - 1] = rand_disc(0.5 * s * c);
            beta[n - j - 1] = rand_disc(0.5 * s * c);
        }
    }
    std::vector<cplx> y(n - 1);
    for (int j = 1; j <= n - 1; ++j)
        y[j - 1] = beta[j - 1] + std::conj(beta[n - j - 1]) * q;
    return PointGn(n, std::move(y), q);
}

/// Random point outside the domain with a clear negative margin.
inline PointGn rand_exterior(int n)
{
    for (int tries = 0; tries < 200; ++tries) {
        PointGn p = rand_interior(n, 0.9);
        const double blow = uniform(1.3, 3.0);
        for (auto& v : p.y)
            v *= blow;
        const auto rep = sympd::in_gtilde(p);
        double worst = rep.q_margin;
        for (double m : rep.margins)
            worst = std::min(worst, m);
        if (worst < -1e-3)
            return p;
    }
    // fallback: push q outside
    PointGn p = rand_interior(n, 0.5);
    p.q = std::polar(1.5, uniform(0.0, 2.0 * M_PI));
    return p;
}

/// Random feasible Schwarz instance: an interior point, a pair index with
/// |y_{n-j}| <= |y_j| and a base point with ||Phi_j|| < |lambda0| < 1.
inline sympd::SchwarzInstance rand_instance(int n)
{
    for (int tries = 0; tries < 500; ++tries) {
        PointGn p = rand_interior(n, uniform(0.3, 0.9));
        for (int j = 1; j <= n - 1; ++j) {
            if (std::abs(p.yc(n - j)) > std::abs(p.yc(j)))
                continue;
            const double c = p.choose(j);
            if (std::abs(p.yc(j) * p.yc(n - j) - c * c * p.q) < 1e-6)
                continue;
            const double pn = sympd::phi_supnorm(j, p);
            if (pn < 1e-3 || pn > 0.75)
                continue;
            const cplx lam = std::polar(std::min(0.97, pn * uniform(1.15, 1.6)),
                                        uniform(0.0, 2.0 * M_PI));
            return sympd::SchwarzInstance(lam, p, j);
        }
    }
    throw std::runtime_error("rand_instance: generation failed");
}

/// Random J_n target (n >= 3) satisfying the constructive hypotheses, with
/// ||Phi_1|| inside (0.05, 0.7) so that lambda0 = 1.2 ||Phi_1|| stays in the disc.
inline PointGn rand_jn_target(int n)
{
    for (int tries = 0; tries < 2000; ++tries) {
        const double s = uniform(0.1, 0.8);
        cplx y1 = rand_disc(s * n * 0.5);
        cplx yn1 = rand_disc(std::abs(y1));
        const cplx q = rand_disc(0.3);
        PointGn p = sympd::jn_embed(y1, yn1, q, n);
        if (!sympd::in_gtilde(p).inside)
            continue;
        if (std::abs(p.yc(n - 1)) > std::abs(p.yc(1)))
            continue;
        const double c = static_cast<double>(n);
        if (std::abs(p.yc(1) * p.yc(n - 1) - c * c * p.q) < 1e-4)
            continue;
        const double pn = sympd::phi_supnorm(1, p);
        if (pn < 0.05 || pn > 0.7)
            continue;
        bool ok = true;
        for (int j = 2; j <= n - 1; ++j)
            ok = ok && std::abs(p.yc(j)) < p.choose(j); // pole-free everywhere
        if (ok)
            return p;
    }
    throw std::runtime_error("rand_jn_target: generation failed");
}

/// Random G2 target (s, p) with the constructive hypotheses.
inline std::pair<cplx, cplx> rand_g2_target()
{
    for (int tries = 0; tries < 2000; ++tries) {
        const cplx s = rand_disc(1.2);
        const cplx p = rand_disc(0.5);
        PointGn y(2, {s}, p);
        if (!sympd::in_gtilde(y).inside)
            continue;
        if (std::abs(s * s - 4.0 * p) < 1e-4)
            continue;
        const double pn = sympd::phi_supnorm(1, y);
        if (pn < 0.05 || pn > 0.7)
            continue;
        return {s, p};
    }
    throw std::runtime_error("rand_g2_target: generation failed");
}

/// Random polynomial 2x2 Schur-class function with F(0) = [[0, *], [0, 0]]
/// and circle sup-norm about `target`; psi = pi_hat(F) is then a polynomial
/// interpolant datum for the converse characterization.
inline sympd::PolyMat2 rand_poly_schur_factor(int degree = 2, double target = 0.8)
{
    using sympd::PolyC;
    std::vector<Mat2> coef(degree + 1);
    coef[0] = {0.0, rand_disc(1.0), 0.0, 0.0};
    for (int k = 1; k <= degree; ++k)
        coef[k] = rand_mat(1.0);
    const auto eval = [&](cplx z) {
        Mat2 r = Mat2::zero();
        for (int k = degree; k >= 0; --k)
            r = r * z + coef[k];
        return r;
    };
    const double sup = sympd::circle_sup_norm(eval, 1.0, 256);
    const cplx scale = target / std::max(sup, 1e-9);
    sympd::PolyMat2 f;
    std::vector<cplx> c11(degree + 1), c12(degree + 1), c21(degree + 1), c22(degree + 1);
    for (int k = 0; k <= degree; ++k) {
        c11[k] = coef[k].a11 * scale;
        c12[k] = coef[k].a12 * scale;
        c21[k] = coef[k].a21 * scale;
        c22[k] = coef[k].a22 * scale;
    }
    f.e11 = PolyC(std::move(c11));
    f.e12 = PolyC(std::move(c12));
    f.e21 = PolyC(std::move(c21));
    f.e22 = PolyC(std::move(c22));
    return f;
}

/// psi = pi_hat_n of a polynomial factor, as coordinate polynomials.
inline std::vector<sympd::PolyC> poly_psi_from_factor(const sympd::PolyMat2& f, int n)
{
    using sympd::PolyC;
    std::vector<PolyC> psi(n);
    const int k = n / 2;
    const int top = (n % 2 == 0) ? k - 1 : k;
    for (int j = 1; j <= top; ++j) {
        psi[j - 1] = f.e11 * cplx(sympd::binom(n, j));
        psi[n - j - 1] = f.e22 * cplx(sympd::binom(n, j));
    }
    if (n % 2 == 0)
        psi[k - 1] = (f.e11 + f.e22) * cplx(0.5 * sympd::binom(n, k));
    psi[n - 1] = f.det();
    return psi;
}

// ---- test-side oracles (independent long-double routes) ----

using lcplx = std::complex<long double>;

struct LMat2 {
    lcplx a11, a12, a21, a22;
};

inline LMat2 widen(const Mat2& m)
{
    return {lcplx(m.a11), lcplx(m.a12), lcplx(m.a21), lcplx(m.a22)};
}

/// Largest singular value through the Hermitian eigenproblem of A*A in
/// long-double arithmetic.
inline double svd_oracle_smax(const Mat2& m)
{
    const LMat2 a = widen(m);
    // H = A* A
    const lcplx h11 = std::conj(a.a11) * a.a11 + std::conj(a.a21) * a.a21;
    const lcplx h12 = std::conj(a.a11) * a.a12 + std::conj(a.a21) * a.a22;
    const lcplx h22 = std::conj(a.a12) * a.a12 + std::conj(a.a22) * a.a22;
    const long double tr = h11.real() + h22.real();
    const long double det =
        h11.real() * h22.real() - (h12 * std::conj(h12)).real();
    const long double disc = std::sqrt(std::max(0.0L, tr * tr - 4.0L * det));
    return static_cast<double>(std::sqrt(0.5L * (tr + disc)));
}

/// f(H) for Hermitian H by long-double spectral decomposition; used to
/// cross-check the production inverse square roots.
template <typename F>
LMat2 hermitian_fun_oracle(const Mat2& m, F&& f)
{
    const LMat2 h = widen(m);
    const long double a = h.a11.real();
    const long double d = h.a22.real();
    const lcplx b = h.a12;
    const long double mean = 0.5L * (a + d);
    const long double disc =
        std::sqrt(0.25L * (a - d) * (a - d) + (b * std::conj(b)).real());
    const long double l1 = mean + disc;
    const long double l2 = mean - disc;
    if (disc < 1e-18L * std::max(1.0L, std::abs(l1)))
        return {lcplx(f(l1)), 0.0L, 0.0L, lcplx(f(l1))};
    const long double inv = 1.0L / (2.0L * disc);
    const lcplx p11 = (a - l2) * inv;
    const lcplx p12 = b * inv;
    const lcplx p21 = std::conj(b) * inv;
    const lcplx p22 = (d - l2) * inv;
    const long double f1 = f(l1);
    const long double f2 = f(l2);
    return {p11 * f1 + (lcplx(1.0L) - p11) * f2, p12 * (f1 - f2), p21 * (f1 - f2),
            p22 * f1 + (lcplx(1.0L) - p22) * f2};
}

inline Vec2 apply_oracle(const LMat2& m, const Vec2& v)
{
    const lcplx x = m.a11 * lcplx(v.x) + m.a12 * lcplx(v.y);
    const lcplx y = m.a21 * lcplx(v.x) + m.a22 * lcplx(v.y);
    return {cplx(static_cast<double>(x.real()), static_cast<double>(x.imag())),
            cplx(static_cast<double>(y.real()), static_cast<double>(y.imag()))};
}

} // namespace testsup

#endif
