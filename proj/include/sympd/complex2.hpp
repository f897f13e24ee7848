#ifndef SYMPD_COMPLEX2_HPP
#define SYMPD_COMPLEX2_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <utility>

#include "sympd/errors.hpp"

namespace sympd {

using cplx = std::complex<double>;

inline double abs2(cplx z) { return std::norm(z); }

struct Vec2 {
    cplx x{0.0, 0.0};
    cplx y{0.0, 0.0};

    double norm2() const { return abs2(x) + abs2(y); }
    double norm() const { return std::sqrt(norm2()); }

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(cplx s) const { return {s * x, s * y}; }
    Vec2 operator-() const { return {-x, -y}; }

    /// <a, b> = a1*conj(b1) + a2*conj(b2)
    cplx dot(const Vec2& b) const { return x * std::conj(b.x) + y * std::conj(b.y); }
};

/// 2x2 complex matrix, row-major entries a11 a12 / a21 a22.
struct Mat2 {
    cplx a11{0.0, 0.0}, a12{0.0, 0.0}, a21{0.0, 0.0}, a22{0.0, 0.0};

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static Mat2 zero() { return {}; }
    static Mat2 diag(cplx d1, cplx d2) { return {d1, 0.0, 0.0, d2}; }
    /// u v* (rank-one outer product)
    static Mat2 outer(const Vec2& u, const Vec2& v)
    {
        return {u.x * std::conj(v.x), u.x * std::conj(v.y),
                u.y * std::conj(v.x), u.y * std::conj(v.y)};
    }

    Mat2 operator+(const Mat2& o) const
    {
        return {a11 + o.a11, a12 + o.a12, a21 + o.a21, a22 + o.a22};
    }
    Mat2 operator-(const Mat2& o) const
    {
        return {a11 - o.a11, a12 - o.a12, a21 - o.a21, a22 - o.a22};
    }
    Mat2 operator-() const { return {-a11, -a12, -a21, -a22}; }
    Mat2 operator*(const Mat2& o) const
    {
        return {a11 * o.a11 + a12 * o.a21, a11 * o.a12 + a12 * o.a22,
                a21 * o.a11 + a22 * o.a21, a21 * o.a12 + a22 * o.a22};
    }
    Mat2 operator*(cplx s) const { return {s * a11, s * a12, s * a21, s * a22}; }
    friend Mat2 operator*(cplx s, const Mat2& m) { return m * s; }

    Vec2 apply(const Vec2& v) const
    {
        return {a11 * v.x + a12 * v.y, a21 * v.x + a22 * v.y};
    }

    /// Conjugate transpose.
    Mat2 adjoint() const
    {
        return {std::conj(a11), std::conj(a21), std::conj(a12), std::conj(a22)};
    }

    cplx det() const { return a11 * a22 - a12 * a21; }
    cplx trace() const { return a11 + a22; }
    double frob2() const { return abs2(a11) + abs2(a12) + abs2(a21) + abs2(a22); }
    double max_abs() const
    {
        return std::max(std::max(std::abs(a11), std::abs(a12)),
                        std::max(std::abs(a21), std::abs(a22)));
    }

    Mat2 inverse() const
    {
        const cplx d = det();
        if (std::abs(d) == 0.0)
            raise(errc::singular_resolvent, "2x2 matrix is singular");
        const cplx id = 1.0 / d;
        return {a22 * id, -a12 * id, -a21 * id, a11 * id};
    }
};

inline double max_abs_diff(const Mat2& a, const Mat2& b) { return (a - b).max_abs(); }

/// Largest singular value from the closed form
/// ||A||^2 = (t + sqrt(t^2 - 4 delta)) / 2,  t = sum |a_ij|^2, delta = |det A|^2.
inline double op_norm(const Mat2& m)
{
    const double t = m.frob2();
    const double delta = abs2(m.det());
    const double disc = std::max(0.0, t * t - 4.0 * delta);
    return std::sqrt(0.5 * (t + std::sqrt(disc)));
}

/// Smallest singular value, sigma_min = sqrt(delta) / sigma_max (0 when A = 0).
inline double smin(const Mat2& m)
{
    const double smax = op_norm(m);
    if (smax == 0.0)
        return 0.0;
    return std::abs(m.det()) / smax;
}

/// 2-norm condition number sigma_max / sigma_min (infinity for singular input).
inline double cond2(const Mat2& m)
{
    const double lo = smin(m);
    if (lo == 0.0)
        return std::numeric_limits<double>::infinity();
    return op_norm(m) / lo;
}

namespace detail {

// f(H) for Hermitian H by 2x2 spectral decomposition. Eigenvalues are clipped
// from below at `clip` before applying f (guards inverse powers near the
// contraction boundary).
template <typename F>
Mat2 hermitian_fun(const Mat2& h, F&& f, double clip)
{
    const double a = h.a11.real();
    const double d = h.a22.real();
    const cplx b = 0.5 * (h.a12 + std::conj(h.a21));
    const double mean = 0.5 * (a + d);
    const double disc = std::sqrt(0.25 * (a - d) * (a - d) + abs2(b));
    double l1 = mean + disc;
    double l2 = mean - disc;
    l1 = std::max(l1, clip);
    l2 = std::max(l2, clip);
    const double scale = std::abs(l1) + std::abs(l2);
    if (disc <= 1e-15 * std::max(1.0, scale))
        return Mat2::diag(f(l1), f(l1));
    // P1 = (H - l2 I) / (l1 - l2), P2 = I - P1
    const double inv = 1.0 / (2.0 * disc);
    Mat2 p1{(a - l2) * inv, b * inv, std::conj(b) * inv, (d - l2) * inv};
    Mat2 p2 = Mat2::identity() - p1;
    const double f1 = f(l1);
    const double f2 = f(l2);
    return p1 * cplx(f1) + p2 * cplx(f2);
}

} // namespace detail

/// H^(1/2) for Hermitian positive semidefinite H.
inline Mat2 hermitian_sqrt(const Mat2& h)
{
    return detail::hermitian_fun(h, [](double x) { return std::sqrt(std::max(x, 0.0)); }, 0.0);
}

/// H^(-1/2) for Hermitian positive definite H; eigenvalues clipped at 1e-14.
inline Mat2 hermitian_inv_sqrt(const Mat2& h)
{
    return detail::hermitian_fun(h, [](double x) { return 1.0 / std::sqrt(x); }, 1e-14);
}

/// Matricial Moebius transform
///   M_Z(X) = (1 - Z Z*)^(-1/2) (X - Z) (1 - Z* X)^(-1) (1 - Z* Z)^(1/2).
/// Requires ||Z|| < 1; the resolvent 1 - Z*X must be well conditioned.
inline Mat2 mobius(const Mat2& z, const Mat2& x)
{
    if (!(op_norm(z) < 1.0))
        raise(errc::not_contraction, "Moebius parameter Z must be a strict contraction",
              "op_norm(Z) = " + std::to_string(op_norm(z)));
    const Mat2 zs = z.adjoint();
    const Mat2 left = hermitian_inv_sqrt(Mat2::identity() - z * zs);
    const Mat2 right = hermitian_sqrt(Mat2::identity() - zs * z);
    const Mat2 resolvent = Mat2::identity() - zs * x;
    if (cond2(resolvent) > 1e12)
        raise(errc::singular_resolvent, "1 - Z*X is numerically singular");
    return left * (x - z) * resolvent.inverse() * right;
}

/// The vectors of the alpha-constraint:
///   u_Z(a) = (1 - Z Z*)^(-1/2) (a1 Z e1 + a2 e2),
///   v_Z(a) = -(1 - Z* Z)^(-1/2) (a1 e1 + a2 Z* e2).
inline std::pair<Vec2, Vec2> uv_vectors(const Mat2& z, const Vec2& alpha)
{
    if (alpha.norm2() == 0.0)
        raise(errc::zero_alpha, "alpha must be nonzero");
    if (!(op_norm(z) < 1.0))
        raise(errc::not_contraction, "Z must be a strict contraction");
    const Mat2 zs = z.adjoint();
    const Mat2 isq_left = hermitian_inv_sqrt(Mat2::identity() - z * zs);
    const Mat2 isq_right = hermitian_inv_sqrt(Mat2::identity() - zs * z);
    const Vec2 ze1{z.a11, z.a21};
    const Vec2 zse2{zs.a12, zs.a22};
    const Vec2 u = isq_left.apply(ze1 * alpha.x + Vec2{0.0, alpha.y});
    const Vec2 v = -(isq_right.apply(Vec2{alpha.x, 0.0} + zse2 * alpha.y));
    return {u, v};
}

/// The test matrix
///   K_Z(rho) = [ [(1 - rho^2 Z*Z)(1 - Z*Z)^(-1)]_11   [(1 - rho^2)(1 - ZZ*)^(-1) Z]_21 ]
///              [ [(1 - rho^2) Z*(1 - ZZ*)^(-1)]_12    [(ZZ* - rho^2)(1 - ZZ*)^(-1)]_22 ].
inline Mat2 k_matrix(const Mat2& z, double rho)
{
    if (!(op_norm(z) < 1.0))
        raise(errc::not_contraction, "Z must be a strict contraction");
    if (!(rho >= 0.0 && rho < 1.0))
        raise(errc::bad_input, "rho must lie in [0, 1)");
    const Mat2 zs = z.adjoint();
    const Mat2 ai = (Mat2::identity() - z * zs).inverse();
    const Mat2 bi = (Mat2::identity() - zs * z).inverse();
    const double r2 = rho * rho;
    const cplx k11 = ((Mat2::identity() - (zs * z) * cplx(r2)) * bi).a11;
    const cplx k12 = (1.0 - r2) * (ai * z).a21;
    const cplx k21 = (1.0 - r2) * (zs * ai).a12;
    const cplx k22 = ((z * zs - Mat2::diag(r2, r2)) * ai).a22;
    return {k11, k12, k21, k22};
}

/// Smallest eigenvalue of a Hermitian 2x2 matrix and a unit eigenvector.
inline std::pair<double, Vec2> hermitian_min_eig(const Mat2& h)
{
    const double herm_err = std::max(
        std::max(std::abs(h.a11.imag()), std::abs(h.a22.imag())),
        std::abs(h.a12 - std::conj(h.a21)));
    if (herm_err > 1e-10)
        raise(errc::not_hermitian, "matrix is not Hermitian to 1e-10",
              "deviation = " + std::to_string(herm_err));
    const double a = h.a11.real();
    const double d = h.a22.real();
    const cplx b = 0.5 * (h.a12 + std::conj(h.a21));
    const double mean = 0.5 * (a + d);
    const double disc = std::sqrt(0.25 * (a - d) * (a - d) + abs2(b));
    const double lmin = mean - disc;
    Vec2 v1{b, cplx(lmin - a)};
    Vec2 v2{cplx(lmin - d), std::conj(b)};
    Vec2 v = (v1.norm2() >= v2.norm2()) ? v1 : v2;
    if (v.norm2() < 1e-60) {
        // numerically a multiple of the identity
        v = (a <= d) ? Vec2{1.0, 0.0} : Vec2{0.0, 1.0};
    }
    const double inv = 1.0 / v.norm();
    return {lmin, v * cplx(inv)};
}

} // namespace sympd

#endif
