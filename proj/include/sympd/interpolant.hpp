#ifndef SYMPD_INTERPOLANT_HPP
#define SYMPD_INTERPOLANT_HPP

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "sympd/complex2.hpp"
#include "sympd/domain.hpp"
#include "sympd/polynomial.hpp"
#include "sympd/schwarz.hpp"

namespace sympd {

/// 2x2 Schur-class function: a constant Q(0) or a matrix polynomial.
struct SchurFunction {
    enum class Kind { constant, polynomial };
    Kind kind{Kind::constant};
    Mat2 q0;
    std::vector<Mat2> coeffs; // ascending degree, polynomial kind only

    static SchurFunction constant(const Mat2& q)
    {
        SchurFunction s;
        s.kind = Kind::constant;
        s.q0 = q;
        return s;
    }
    static SchurFunction polynomial(std::vector<Mat2> cs)
    {
        SchurFunction s;
        s.kind = Kind::polynomial;
        s.coeffs = std::move(cs);
        if (s.coeffs.empty())
            s.coeffs.push_back(Mat2::zero());
        s.q0 = s.coeffs.front();
        return s;
    }

    Mat2 eval(cplx z) const
    {
        if (kind == Kind::constant)
            return q0;
        Mat2 r = Mat2::zero();
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
            r = r * z + *it;
        return r;
    }
    Mat2 at_zero() const { return q0; }
};

/// Largest op-norm over samples of the circle |z| = r.
template <typename F>
double circle_sup_norm(F&& f, double r, int samples = 720)
{
    double s = 0.0;
    for (int i = 0; i < samples; ++i)
        s = std::max(s, op_norm(f(std::polar(r, 2.0 * M_PI * i / samples))));
    return s;
}

inline void validate_schur(const SchurFunction& q)
{
    const double sup = circle_sup_norm([&](cplx z) { return q.eval(z); }, 0.999);
    if (sup > 1.0 + 1e-9)
        raise(errc::not_schur, "Q exceeds the Schur bound on |lambda| = 0.999",
              "sup = " + std::to_string(sup));
}

/// One factor F_j(lambda) = M_{-Z}((B Q)(lambda)) diag(lambda, 1).
struct InterpolantFactor {
    Mat2 z;
    cplx lambda0;
    SchurFunction q;
    int j{1};
    double nu{1.0};
    Vec2 alpha;
};

inline Mat2 eval_factor(const InterpolantFactor& fac, cplx lambda)
{
    if (!(std::abs(lambda) < 1.0))
        raise(errc::outside_disc, "lambda must lie in the open unit disc");
    const cplx b = blaschke_b(fac.lambda0, lambda);
    const Mat2 x = fac.q.eval(lambda) * b;
    const Mat2 g = mobius(-fac.z, x);
    return {g.a11 * lambda, g.a12, g.a21 * lambda, g.a22};
}

struct Interpolant {
    int n{3};
    std::vector<InterpolantFactor> factors; // [n/2] of them
    cplx lambda0;
    PointGn target;
};

/// Assemble the point pi(F_1(lambda), ..., F_k(lambda)); factor determinants
/// must agree (the q coordinate has to be single-valued).
inline PointGn eval_interpolant(const Interpolant& psi, cplx lambda)
{
    const int k = psi.n / 2;
    std::vector<Mat2> f(k);
    for (int i = 0; i < k; ++i)
        f[i] = eval_factor(psi.factors[i], lambda);
    const cplx q = f[0].det();
    for (int i = 1; i < k; ++i) {
        if (std::abs(f[i].det() - q) > 1e-9)
            raise(errc::det_inconsistent, "factor determinants disagree",
                  "spread = " + std::to_string(std::abs(f[i].det() - q)));
    }
    std::vector<cplx> y(psi.n - 1);
    const int top = (psi.n % 2 == 0) ? k - 1 : k;
    for (int j = 1; j <= top; ++j) {
        const double c = binom(psi.n, j);
        y[j - 1] = c * f[j - 1].a11;
        y[psi.n - j - 1] = c * f[j - 1].a22;
    }
    if (psi.n % 2 == 0)
        y[k - 1] = binom(psi.n, k) * 0.5 * (f[k - 1].a11 + f[k - 1].a22);
    return PointGn(psi.n, std::move(y), q);
}

namespace detail {

inline double halton(uint64_t i, uint32_t base)
{
    double f = 1.0, r = 0.0;
    while (i > 0) {
        f /= base;
        r += f * (i % base);
        i /= base;
    }
    return r;
}

// quasi-random interior disc points plus a boundary-adjacent ring
inline std::vector<cplx> membership_grid(int interior, int ring, uint32_t seed)
{
    std::vector<cplx> pts;
    pts.reserve(interior + ring);
    const uint64_t off = seed & 0xFFFFu;
    for (int i = 0; i < interior; ++i) {
        const double r = std::sqrt(halton(off + i + 1, 2));
        const double t = 2.0 * M_PI * halton(off + i + 1, 3);
        pts.push_back(std::polar(r * 0.9995, t));
    }
    for (int i = 0; i < ring; ++i)
        pts.push_back(std::polar(0.999, 2.0 * M_PI * i / std::max(1, ring)));
    return pts;
}

} // namespace detail

struct VerifyReport {
    double origin_residual{0.0};   // max coordinate of psi(0)
    double target_residual{0.0};   // max coordinate error of psi(lambda0)
    double worst_margin{0.0};      // min membership margin over the sweep
    double worst_q_margin{0.0};    // min (1 - |q|) over the sweep
    double worst_det_spread{0.0};  // max factor-determinant disagreement
    bool pass{false};
};

inline double point_distance(const PointGn& a, const PointGn& b)
{
    double r = std::abs(a.q - b.q);
    for (int j = 1; j <= a.n - 1; ++j)
        r = std::max(r, std::abs(a.yc(j) - b.yc(j)));
    return r;
}

inline VerifyReport verify_interpolant(const Interpolant& psi, int interior = 10000,
                                       int ring = 360, uint32_t seed = 0x5EED)
{
    VerifyReport rep;
    rep.origin_residual = point_distance(eval_interpolant(psi, 0.0), PointGn::origin(psi.n));
    rep.target_residual = point_distance(eval_interpolant(psi, psi.lambda0), psi.target);
    rep.worst_margin = std::numeric_limits<double>::infinity();
    rep.worst_q_margin = std::numeric_limits<double>::infinity();
    const int k = psi.n / 2;
    for (cplx lam : detail::membership_grid(interior, ring, seed)) {
        std::vector<Mat2> f(k);
        for (int i = 0; i < k; ++i)
            f[i] = eval_factor(psi.factors[i], lam);
        for (int i = 1; i < k; ++i)
            rep.worst_det_spread =
                std::max(rep.worst_det_spread, std::abs(f[i].det() - f[0].det()));
        const PointGn p = eval_interpolant(psi, lam);
        const MembershipReport m = in_gtilde(p);
        for (double mg : m.margins)
            rep.worst_margin = std::min(rep.worst_margin, mg);
        rep.worst_q_margin = std::min(rep.worst_q_margin, m.q_margin);
    }
    rep.pass = rep.origin_residual < 1e-10 && rep.target_residual < 1e-8 &&
               rep.worst_margin > 0.0 && rep.worst_q_margin > 0.0 &&
               rep.worst_det_spread < 1e-9;
    return rep;
}

namespace detail {

inline double default_nu(const SchwarzData& d)
{
    if (d.theta < 1.0 && 1.0 < d.vartheta)
        return 1.0;
    return std::sqrt(std::sqrt(d.theta * d.vartheta));
}

inline InterpolantFactor make_factor(const SchwarzInstance& inst, std::optional<double> nu_opt,
                                     const std::optional<SchurFunction>& q_opt)
{
    const SchwarzData d = compute_schwarz_data(inst);
    const double nu = nu_opt.value_or(default_nu(d));
    const double n2 = nu * nu;
    if (!(nu > 0.0))
        raise(errc::nu_out_of_range, "nu must be positive");
    InterpolantFactor fac;
    fac.z = z_matrix(inst, nu);
    // ||Z_nu|| < 1 is the exact admissibility test for nu (equivalent
    // to the window, and robust when the window nearly collapses)
    if (!(op_norm(fac.z) < 1.0))
        raise(errc::nu_out_of_range, "nu^2 outside (theta, vartheta)",
              "nu^2 = " + std::to_string(n2) + ", window = (" + std::to_string(d.theta) +
                  ", " + std::to_string(d.vartheta) + ")");
    fac.lambda0 = inst.lambda0;
    fac.j = inst.j;
    fac.nu = nu;
    fac.alpha = choose_alpha(inst, nu);
    const Mat2 q0 = build_q0(fac.z, inst.lambda0, fac.alpha);
    if (q_opt) {
        validate_schur(*q_opt);
        const auto [u, v] = uv_vectors(fac.z, fac.alpha);
        const Vec2 lhs = q_opt->at_zero().adjoint().apply(u * std::conj(inst.lambda0));
        const double res = (lhs - v).norm();
        if (res > 1e-10)
            raise(errc::q_constraint_violated, "Q(0) violates the interpolation constraint",
                  "residual = " + std::to_string(res));
        fac.q = *q_opt;
    } else {
        fac.q = SchurFunction::constant(q0);
    }
    return fac;
}

} // namespace detail

/// Constructive route for J_n targets (n >= 3): psi = pi_hat_n of one
/// factor built on the (1, n-1) pair.
inline Interpolant build_interpolant_jn(const PointGn& y, cplx lambda0,
                                        std::optional<double> nu = std::nullopt,
                                        std::optional<SchurFunction> q = std::nullopt)
{
    if (y.n < 3)
        raise(errc::dimension_too_small, "J_n construction needs n >= 3; use the G2 form");
    if (!in_jn(y))
        raise(errc::hypothesis_violated, "target does not lie in J_n");
    const SchwarzInstance inst(lambda0, y, 1);
    const InterpolantFactor fac = detail::make_factor(inst, nu, q);
    Interpolant psi;
    psi.n = y.n;
    psi.factors.assign(static_cast<size_t>(y.n / 2), fac);
    psi.lambda0 = lambda0;
    psi.target = y;
    return psi;
}

/// G2 construction: psi(lambda) = (tr F(lambda), det F(lambda)).
inline Interpolant build_interpolant_g2(cplx s, cplx p, cplx lambda0,
                                        std::optional<double> nu = std::nullopt,
                                        std::optional<SchurFunction> q = std::nullopt)
{
    const PointGn y(2, {s}, p);
    const SchwarzInstance inst(lambda0, y, 1);
    const InterpolantFactor fac = detail::make_factor(inst, nu, q);
    Interpolant psi;
    psi.n = 2;
    psi.factors = {fac};
    psi.lambda0 = lambda0;
    psi.target = y;
    return psi;
}

/// Assemble-and-check for general factor lists: determinant consistency is
/// verified on a 50-point grid, nothing more is claimed.
inline Interpolant assemble_interpolant(std::vector<InterpolantFactor> factors, int n)
{
    if (static_cast<int>(factors.size()) != n / 2)
        raise(errc::length_mismatch, "need [n/2] factors");
    Interpolant psi;
    psi.n = n;
    psi.lambda0 = factors.front().lambda0;
    psi.factors = std::move(factors);
    for (int i = 0; i < 50; ++i) {
        const cplx lam = std::polar(0.02 + 0.96 * i / 49.0, 2.0 * M_PI * i / 50.0);
        Mat2 f0 = eval_factor(psi.factors[0], lam);
        for (size_t k = 1; k < psi.factors.size(); ++k) {
            const Mat2 fk = eval_factor(psi.factors[k], lam);
            if (std::abs(fk.det() - f0.det()) > 1e-9)
                raise(errc::det_inconsistent,
                      "factor determinants disagree on the check grid",
                      "spread = " + std::to_string(std::abs(fk.det() - f0.det())));
        }
    }
    psi.target = eval_interpolant(psi, psi.lambda0);
    return psi;
}

/// Result of the converse characterization for one index j.
struct CharacterizedFactor {
    int j{1};
    bool hypothesis_ok{false};
    std::string violation;
    BalancedFactors factors;  // recovered f, g with |f| = |g| on the circle
    double nu{0.0};           // |f(lambda0) / w_j| after unitary normalization
    double theta{0.0};
    double vartheta{0.0};
    bool nu_in_window{false};
    Mat2 g_lambda0;           // normalized G_j(lambda0)
    Mat2 z_expected;          // Z_{nu,j} for the recovered nu
    double g_residual{0.0};   // max-abs difference of the two matrices above
    double fg_residual{0.0};  // max |f g - h| on an interior grid
    double balance_residual{0.0}; // max | |f| - |g| | on the circle
    double schur_margin{-1.0}; // max over the circle of op_norm(F_j) - 1
};

struct CharacterizeResult {
    PointGn target;
    std::vector<CharacterizedFactor> factors;
};

/// Converse analysis of an interpolant: given polynomial
/// coordinates of psi with psi(0) = 0 and psi(lambda0) interior, recover for
/// each pair j the balanced factors of h_j = psi_j psi_{n-j} / C^2 - psi_n,
/// the matrix G_j(lambda0) and the parameter nu, and report diagnostics.
inline CharacterizeResult characterize(const std::vector<PolyC>& psi, cplx lambda0)
{
    const int n = static_cast<int>(psi.size());
    if (n < 2)
        raise(errc::bad_input, "need at least two coordinate polynomials");
    bool all_constant = true;
    for (const auto& p : psi)
        if (p.degree() > 0)
            all_constant = false;
    if (all_constant)
        raise(errc::degenerate_target, "constant psi cannot interpolate distinct nodes");
    double at0 = 0.0;
    for (const auto& p : psi)
        at0 = std::max(at0, std::abs(p.eval(0.0)));
    if (at0 > 1e-10)
        raise(errc::bad_input, "psi(0) must be the origin",
              "residual = " + std::to_string(at0));

    std::vector<cplx> y0(n - 1);
    for (int j = 1; j <= n - 1; ++j)
        y0[j - 1] = psi[j - 1].eval(lambda0);
    const PointGn target(n, y0, psi[n - 1].eval(lambda0));
    if (!in_gtilde(target).inside)
        raise(errc::degenerate_target, "psi(lambda0) is not interior");

    CharacterizeResult out{target, {}};
    for (int j = 1; j <= n / 2; ++j) {
        CharacterizedFactor cf;
        cf.j = j;
        const double c = binom(n, j);
        PolyC h = psi[j - 1] * psi[n - j - 1] * cplx(1.0 / (c * c)) - psi[n - 1];
        try {
            const SchwarzInstance inst(lambda0, target, j);
            const SchwarzData d = compute_schwarz_data(inst);
            cf.theta = d.theta;
            cf.vartheta = d.vartheta;
            if (h.is_zero())
                raise(errc::degenerate_target, "h_j vanishes identically");
            cf.factors = balanced_factorize(h);
            cf.hypothesis_ok = true;

            const cplx flam = cf.factors.f(lambda0);
            const cplx nu_c = flam / d.w;
            cf.nu = std::abs(nu_c);
            if (cf.nu <= 0.0)
                raise(errc::factorization_failed, "f(lambda0) vanished");
            cf.nu_in_window = (d.theta < cf.nu * cf.nu && cf.nu * cf.nu < d.vartheta);
            const cplx mu = std::conj(nu_c) / cf.nu; // rotation making nu > 0
            const cplx glam = cf.factors.g(lambda0);
            cf.g_lambda0 = {target.yc(j) / (c * lambda0), mu * flam,
                            std::conj(mu) * glam / lambda0, target.yc(n - j) / c};
            cf.z_expected = z_matrix(inst, cf.nu);
            cf.g_residual = max_abs_diff(cf.g_lambda0, cf.z_expected);

            // diagnostics: product identity, boundary balance, Schur bound
            for (int i = 0; i < 200; ++i) {
                const cplx z = std::polar(0.97 * std::sqrt((i + 1.0) / 200.0),
                                          2.0 * M_PI * i / 200.0 * 7.0);
                cf.fg_residual = std::max(
                    cf.fg_residual,
                    std::abs(cf.factors.f(z) * cf.factors.g(z) - h.eval(z)));
            }
            for (int i = 0; i < 360; ++i) {
                const cplx z = std::polar(1.0, 2.0 * M_PI * i / 360.0);
                cf.balance_residual =
                    std::max(cf.balance_residual, std::abs(std::abs(cf.factors.f(z)) -
                                                           std::abs(cf.factors.g(z))));
                const Mat2 fj{psi[j - 1].eval(z) / c, cf.factors.f(z), cf.factors.g(z),
                              psi[n - j - 1].eval(z) / c};
                cf.schur_margin = std::max(cf.schur_margin, op_norm(fj) - 1.0);
            }
        } catch (const error& e) {
            if (e.code() == errc::hypothesis_violated) {
                cf.hypothesis_ok = false;
                cf.violation = e.message();
            } else {
                throw;
            }
        }
        out.factors.push_back(std::move(cf));
    }
    return out;
}

} // namespace sympd

#endif
