#ifndef SYMPD_SCHWARZ_HPP
#define SYMPD_SCHWARZ_HPP

#include <cmath>
#include <string>

#include "sympd/complex2.hpp"
#include "sympd/domain.hpp"

namespace sympd {

/// Input data for one coordinate pair of the Schwarz problem: a base point
/// lambda0, an interior target y0 and an index j. The constructor enforces
///   0 < |lambda0| < 1,     y_j y_{n-j} != C^2 q,
///   |y_{n-j}| <= |y_j|,    ||Phi_j(., y0)|| < |lambda0|.
struct SchwarzInstance {
    cplx lambda0;
    PointGn y0;
    int j;

    SchwarzInstance(cplx lambda0_, PointGn y0_, int j_)
        : lambda0(lambda0_), y0(std::move(y0_)), j(j_)
    {
        if (j < 1 || j > y0.n - 1)
            raise(errc::bad_input, "index j out of range");
        const double al = std::abs(lambda0);
        if (!(al > 0.0 && al < 1.0))
            raise(errc::hypothesis_violated, "lambda0 must satisfy 0 < |lambda0| < 1",
                  "|lambda0| = " + std::to_string(al));
        if (!in_gtilde(y0).inside)
            raise(errc::hypothesis_violated, "y0 must be an interior point");
        const double c = y0.choose(j);
        const cplx dgn = y0.yc(j) * y0.yc(y0.n - j) - c * c * y0.q;
        const double scale = std::max(1.0, c * c);
        if (std::abs(dgn) <= 1e-14 * scale)
            raise(errc::hypothesis_violated, "degenerate pair: y_j y_{n-j} = C^2 q",
                  "|y_j y_{n-j} - C^2 q| = " + std::to_string(std::abs(dgn)));
        if (std::abs(y0.yc(y0.n - j)) > std::abs(y0.yc(j)))
            raise(errc::hypothesis_violated, "|y_{n-j}| <= |y_j| required",
                  "slack = " +
                      std::to_string(std::abs(y0.yc(j)) - std::abs(y0.yc(y0.n - j))));
        const double pn = phi_supnorm(j, y0);
        if (!(pn < al))
            raise(errc::hypothesis_violated, "||Phi_j(., y0)|| < |lambda0| required",
                  "norm = " + std::to_string(pn) + ", |lambda0| = " + std::to_string(al));
    }

    double choose() const { return y0.choose(j); }
    cplx yj() const { return y0.yc(j); }
    cplx ynj() const { return y0.yc(y0.n - j); }
    /// y_j y_{n-j} - C^2 q
    cplx pair_det() const { return yj() * ynj() - choose() * choose() * y0.q; }
};

/// All scalar admissibility quantities for one instance.
struct SchwarzData {
    cplx w;          // principal root of (y_j y_{n-j} - C^2 q) / (C^2 lambda0)
    double x_j;      // X_j
    double x_nj;     // X_{n-j}
    double r;        // R_j
    double theta;    // smaller root of z + 1/z = X_{n-j}
    double vartheta; // larger root
};

inline SchwarzData compute_schwarz_data(const SchwarzInstance& inst)
{
    const double c = inst.choose();
    const double c2 = c * c;
    const double al = std::abs(inst.lambda0);
    const double al2 = al * al;
    const cplx dpair = inst.pair_det();
    const double adp = std::abs(dpair);
    const double ayj2 = abs2(inst.yj());
    const double aynj2 = abs2(inst.ynj());
    const double aq2 = abs2(inst.y0.q);

    SchwarzData d;
    d.w = std::sqrt(dpair / (c2 * inst.lambda0));
    d.x_j = al * (c2 - ayj2 - aynj2 / al2 + c2 * aq2 / al2) / adp;
    d.x_nj = al * (c2 - ayj2 / al2 - aynj2 + c2 * aq2 / al2) / adp;
    d.r = al * (c2 - aynj2) / adp;
    // X_{n-j} > 2 in exact arithmetic, but the margin shrinks quadratically
    // when lambda0 approaches the sup-norm at a flat extremum (e.g. the G2
    // target (0, p)); tolerate representable round-off there.
    if (d.x_nj < 2.0 - 1e-9)
        raise(errc::hypothesis_violated, "X_{n-j} <= 2; hypothesis chain broken",
              "X_{n-j} = " + std::to_string(d.x_nj));
    const double disc = std::sqrt(std::max(0.0, d.x_nj * d.x_nj - 4.0));
    d.theta = 0.5 * (d.x_nj - disc);
    d.vartheta = 0.5 * (d.x_nj + disc);
    return d;
}

/// Z_{nu,j} = [ y_j / (C lambda0)   nu w ; w / nu   y_{n-j} / C ].
inline Mat2 z_matrix(const SchwarzInstance& inst, double nu)
{
    if (!(nu > 0.0))
        raise(errc::nu_out_of_range, "nu must be positive");
    const double c = inst.choose();
    const cplx w = compute_schwarz_data(inst).w;
    return {inst.yj() / (c * inst.lambda0), nu * w, w / nu, inst.ynj() / c};
}

/// Closed form for det(1 - Z*Z):
///   1 - |y_j|^2/(C^2 |l0|^2) - |y_{n-j}|^2/C^2 + |q|^2/|l0|^2
///     - |y_j y_{n-j} - C^2 q| / (C^2 |l0|) (nu^2 + 1/nu^2).
inline double det_one_minus_zstarz(const SchwarzInstance& inst, double nu)
{
    if (!(nu > 0.0))
        raise(errc::nu_out_of_range, "nu must be positive");
    const double c2 = inst.choose() * inst.choose();
    const double al = std::abs(inst.lambda0);
    const double al2 = al * al;
    const double n2 = nu * nu;
    return 1.0 - abs2(inst.yj()) / (c2 * al2) - abs2(inst.ynj()) / c2 +
           abs2(inst.y0.q) / al2 -
           std::abs(inst.pair_det()) / (c2 * al) * (n2 + 1.0 / n2);
}

/// Closed form of K_{Z_{nu,j}}(|lambda0|) det(1 - Z*Z) and its determinant
/// -(l - k_j)(l - k_{n-j}) with l = |y_j y_{n-j} - C^2 q| (nu^2 + 1/nu^2),
/// k_j = |y_j y_{n-j} - C^2 q| X_j.
inline std::pair<Mat2, double> kappa_closed_form(const SchwarzInstance& inst, double nu)
{
    const SchwarzData d = compute_schwarz_data(inst);
    const double n2 = nu * nu;
    if (!(nu > 0.0 && d.theta < n2 && n2 < d.vartheta))
        raise(errc::nu_out_of_range, "nu^2 outside (theta, vartheta)",
              "nu^2 = " + std::to_string(n2) + ", window = (" +
                  std::to_string(d.theta) + ", " + std::to_string(d.vartheta) + ")");
    const double c2 = inst.choose() * inst.choose();
    const double al = std::abs(inst.lambda0);
    const double al2 = al * al;
    const double adp = std::abs(inst.pair_det());
    const double ayj2 = abs2(inst.yj());
    const double aynj2 = abs2(inst.ynj());
    const double aq2 = abs2(inst.y0.q);

    const double m11 =
        1.0 - ayj2 / c2 - aynj2 / c2 + aq2 - adp / c2 * (al / n2 + n2 / al);
    const cplx m12 = (1.0 - al2) * (d.w / nu + inst.y0.q / inst.lambda0 * nu * std::conj(d.w));
    // sign of the (nu^2 |l0| + 1/(nu^2 |l0|)) group follows the direct matrix
    // product, which also reproduces the stated determinant below
    const double m22 =
        -al2 + ayj2 / c2 + aynj2 / c2 - aq2 / al2 + adp / c2 * (n2 * al + 1.0 / (n2 * al));
    const Mat2 kd{cplx(m11), m12, std::conj(m12), cplx(m22)};

    // l and k carry the same C^2 normalization as the matrix entries
    const double l = adp / c2 * (n2 + 1.0 / n2);
    const double kj = adp / c2 * d.x_j;
    const double knj = adp / c2 * d.x_nj;
    return {kd, -(l - kj) * (l - knj)};
}

/// R_j + 1/R_j - X_{n-j}; equals
/// C^2 |y_j - conj(y_{n-j}) q|^2 / (|l0| (C^2 - |y_{n-j}|^2) |y_j y_{n-j} - C^2 q|).
inline double r_x_gap(const SchwarzInstance& inst)
{
    const SchwarzData d = compute_schwarz_data(inst);
    return d.r + 1.0 / d.r - d.x_nj;
}

/// The displayed quotient for r_x_gap; second route for tests.
inline double r_x_gap_quotient(const SchwarzInstance& inst)
{
    const double c2 = inst.choose() * inst.choose();
    const double al = std::abs(inst.lambda0);
    const double num = c2 * abs2(inst.yj() - std::conj(inst.ynj()) * inst.y0.q);
    return num / (al * (c2 - abs2(inst.ynj())) * std::abs(inst.pair_det()));
}

/// Whether alpha certifies solvability of the Q(0) constraint:
/// ||v_Z(alpha)|| <= |lambda0| ||u_Z(alpha)||.
inline bool alpha_solvable(const Mat2& z, cplx lambda0, const Vec2& alpha)
{
    const auto [u, v] = uv_vectors(z, alpha);
    return v.norm2() <= abs2(lambda0) * u.norm2() * (1.0 + 1e-12) + 1e-30;
}

/// Pick alpha in the admissible cone of K = K_{Z_{nu,j}}(|lambda0|).
/// The quadratic form that controls solvability of the Q(0) constraint is
///   ||v_Z(a)||^2 - |lambda0|^2 ||u_Z(a)||^2 = <K conj(a), conj(a)>
/// (the off-diagonal placement of K is conjugated relative to the u/v
/// convention), so the conjugate of the minimal eigenvector of K realizes
/// the most negative value lambda_min(K) < 0 and always solves.
inline Vec2 choose_alpha(const SchwarzInstance& inst, double nu)
{
    // admissibility: ||Z_nu|| < 1, equivalent to the (theta, vartheta)
    // window but robust when the window is only representable in exact
    // arithmetic
    const Mat2 z = z_matrix(inst, nu);
    if (!(op_norm(z) < 1.0))
        raise(errc::nu_out_of_range, "nu^2 outside (theta, vartheta)",
              "op_norm(Z_nu) = " + std::to_string(op_norm(z)));
    const Mat2 k = k_matrix(z, std::abs(inst.lambda0));
    // K is Hermitian in exact arithmetic but its entries blow up like
    // 1/(1 - ||Z||^2) near the boundary; symmetrize so the absolute
    // Hermitian tolerance of the eigensolver is immaterial
    const Mat2 k_sym = (k + k.adjoint()) * cplx(0.5);
    const Vec2 e = hermitian_min_eig(k_sym).second;
    return {std::conj(e.x), std::conj(e.y)};
}

/// Q(0) solving Q0* conj(lambda0) u = v:  Q0 = u v* / (lambda0 ||u||^2).
/// Rank one; ||Q0|| = ||v|| / (|lambda0| ||u||) <= 1 for admissible alpha.
inline Mat2 build_q0(const Mat2& z, cplx lambda0, const Vec2& alpha)
{
    const auto [u, v] = uv_vectors(z, alpha);
    const double un = u.norm();
    if (un <= 1e-12)
        raise(errc::zero_u, "u_Z(alpha) vanishes; Q(0) constraint unsolvable");
    if (v.norm() <= 1e-14)
        return Mat2::zero();
    Mat2 q0 = Mat2::outer(u, v) * (1.0 / (lambda0 * un * un));
    const double nrm = op_norm(q0);
    if (nrm > 1.0 + 1e-9)
        raise(errc::q_not_contractive, "||Q(0)|| > 1; alpha not admissible",
              "norm = " + std::to_string(nrm));
    return q0;
}

inline Mat2 build_q0(const SchwarzInstance& inst, double nu, const Vec2& alpha)
{
    return build_q0(z_matrix(inst, nu), inst.lambda0, alpha);
}

/// Scalar Blaschke factor with B(0) = lambda0 and B(lambda0) = 0.
inline cplx blaschke_b(cplx lambda0, cplx lambda)
{
    return (lambda0 - lambda) / (1.0 - std::conj(lambda0) * lambda);
}

} // namespace sympd

#endif
