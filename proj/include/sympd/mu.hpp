#ifndef SYMPD_MU_HPP
#define SYMPD_MU_HPP

#include <cmath>
#include <optional>
#include <utility>
#include <vector>

#include "sympd/complex2.hpp"
#include "sympd/domain.hpp"
#include "sympd/moebius.hpp"
#include "sympd/polynomial.hpp"

namespace sympd {

/// mu_E for the 2x2 diagonal structure E = {diag(z, w)}.
struct MuResult {
    double value{0.0};
    std::optional<std::pair<cplx, cplx>> witness; // diag entries of a singular X
    int iterations{0};
};

/// det(I - B diag(z, w)) = 1 - b11 z - b22 w + det(B) z w.
inline cplx mu_det(const Mat2& b, cplx z, cplx w)
{
    return 1.0 - b.a11 * z - b.a22 * w + b.det() * z * w;
}

namespace detail {

// Solving mu_det = 0 for z at fixed w yields the Moebius map
//   z(w) = (1 - b22 w) / (b11 - det(B) w).
inline ScalarMoebius mu_graph(const Mat2& b)
{
    return {-b.a22, cplx(1.0), -b.det(), b.a11};
}

} // namespace detail

/// Bisection on t = 1/mu over the predicate "mu_det has a zero with
/// |z| <= t, |w| <= t". Triangular B is handled in closed form (mu_det
/// factors as (1 - b11 z)(1 - b22 w)); mu = 0 when no zero exists for t up
/// to 1e6.
inline MuResult mu_diag(const Mat2& b)
{
    MuResult res;
    // triangular (and numerically triangular) B: the determinant factors as
    // (1 - b11 z)(1 - b22 w), and the graph parametrization below would lose
    // the zero line parallel to the z axis
    const bool triangular =
        std::abs(b.a12) == 0.0 || std::abs(b.a21) == 0.0 ||
        std::abs(b.a12 * b.a21) <= 1e-14 * std::abs(b.a11 * b.a22);
    if (triangular) {
        const double m1 = std::abs(b.a11);
        const double m2 = std::abs(b.a22);
        res.value = std::max(m1, m2);
        if (res.value > 0.0) {
            if (m1 >= m2)
                res.witness = {1.0 / b.a11, cplx(0.0)};
            else
                res.witness = {cplx(0.0), 1.0 / b.a22};
        }
        return res;
    }

    const ScalarMoebius zw = detail::mu_graph(b);
    const auto feasible = [&](double t) {
        return mobius_min_modulus_disc(zw, t) <= t;
    };

    double lo = 0.0;
    double hi = 1.0;
    while (!feasible(hi)) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e6)
            return res; // no structured singularity up to t = 1e6: mu = 0
    }
    while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        if (feasible(mid))
            hi = mid;
        else
            lo = mid;
        ++res.iterations;
    }
    res.value = 2.0 / (lo + hi);

    const cplx warg = mobius_min_modulus_arg(zw, hi);
    res.witness = {zw.eval(warg), warg};
    return res;
}

/// The mu-realization of an interior point: B_j = [ y_j/C  w_j ; w_j  y_{n-j}/C ]
/// with w_j^2 = (y_j y_{n-j} - C^2 q) / C^2, so det B_j = q for every j.
inline std::vector<Mat2> mu_realization_unchecked(const PointGn& p)
{
    std::vector<Mat2> bs;
    for (int j = 1; j <= p.n / 2; ++j) {
        const double c = p.choose(j);
        const cplx w = std::sqrt((p.yc(j) * p.yc(p.n - j) - c * c * p.q) / (c * c));
        bs.push_back({p.yc(j) / c, w, w, p.yc(p.n - j) / c});
    }
    return bs;
}

inline std::vector<Mat2> mu_realization(const PointGn& p)
{
    if (!in_gtilde(p).inside)
        raise(errc::not_interior, "point is not interior to the domain");
    return mu_realization_unchecked(p);
}

/// Membership via the structured singular value: all mu_E(B_j) < 1 for the
/// canonical realization. For J_n points the single-matrix criterion with
/// pi_hat is checked as well and must agree.
inline bool mu_membership_check(const PointGn& p)
{
    bool all_inside = true;
    for (const auto& bj : mu_realization_unchecked(p))
        all_inside = all_inside && (mu_diag(bj).value < 1.0);
    if (all_inside && p.n >= 3 && in_jn(p)) {
        const double c = static_cast<double>(p.n);
        const cplx w = std::sqrt((p.yc(1) * p.yc(p.n - 1) - c * c * p.q) / (c * c));
        const Mat2 single{p.yc(1) / c, w, w, p.yc(p.n - 1) / c};
        all_inside = mu_diag(single).value < 1.0;
    }
    return all_inside;
}

/// Analytic lift of a polynomial map into the domain: matrix functions
///   F_j = [ phi_j / C   phi_j phi_{n-j} / C^2 - phi_n ; 1   phi_{n-j} / C ]
/// with det F_j = phi_n, so that pi recovers phi. The un-normalized printed
/// variant does not reproduce phi under pi; this one does.
inline std::vector<PolyMat2> lift_to_mu_ball(const std::vector<PolyC>& phi,
                                             int grid_samples = 200)
{
    const int n = static_cast<int>(phi.size());
    if (n < 2)
        raise(errc::bad_input, "need at least two coordinates");
    std::vector<PolyMat2> lifts;
    for (int j = 1; j <= n / 2; ++j) {
        const double c = binom(n, j);
        PolyMat2 f;
        f.e11 = phi[j - 1] * cplx(1.0 / c);
        f.e12 = phi[j - 1] * phi[n - j - 1] * cplx(1.0 / (c * c)) - phi[n - 1];
        f.e21 = PolyC::constant(1.0);
        f.e22 = phi[n - j - 1] * cplx(1.0 / c);
        lifts.push_back(std::move(f));
    }
    for (int i = 0; i < grid_samples; ++i) {
        const cplx lam = std::polar(0.995 * std::sqrt((i + 0.5) / grid_samples),
                                    2.0 * M_PI * 17.0 * i / grid_samples);
        std::vector<cplx> y(n - 1);
        for (int j = 1; j <= n - 1; ++j)
            y[j - 1] = phi[j - 1].eval(lam);
        const PointGn p(n, std::move(y), phi[n - 1].eval(lam));
        if (!in_gtilde(p).inside)
            raise(errc::not_interior, "phi leaves the domain at a sample point");
    }
    return lifts;
}

/// Necessary condition for the structured Nevanlinna-Pick problem: nodes push
/// forward to a J_n interpolation problem through pi_hat. For two-point data
/// with one node (0, 0) the Schwarz bound max_j ||Phi_j|| <= |lambda| decides
/// feasibility of the necessary condition.
struct StructuredNpNode {
    cplx lambda;
    Mat2 b;
};

struct StructuredNpReport {
    std::vector<std::pair<cplx, PointGn>> induced; // (lambda_i, pi_hat_n(B_i))
    bool schwarz_applicable{false};
    bool schwarz_pass{false};
    double schwarz_margin{0.0}; // |lambda| - max_j ||Phi_j||
};

inline StructuredNpReport structured_np_necessary(const std::vector<StructuredNpNode>& nodes,
                                                  int n)
{
    if (nodes.size() < 2)
        raise(errc::bad_input, "need at least two nodes");
    for (size_t i = 0; i < nodes.size(); ++i)
        for (size_t k = i + 1; k < nodes.size(); ++k)
            if (std::abs(nodes[i].lambda - nodes[k].lambda) < 1e-12)
                raise(errc::duplicate_nodes, "interpolation nodes must be distinct");
    StructuredNpReport rep;
    for (const auto& nd : nodes) {
        const double mu = mu_diag(nd.b).value;
        if (!(mu < 1.0))
            raise(errc::node_not_in_ball, "target matrix has mu_E >= 1",
                  "mu = " + std::to_string(mu));
        rep.induced.emplace_back(nd.lambda, pi_hat(nd.b, n));
    }
    if (nodes.size() == 2) {
        int zero_at = -1;
        for (int i = 0; i < 2; ++i)
            if (std::abs(nodes[i].lambda) < 1e-14 && nodes[i].b.max_abs() < 1e-12)
                zero_at = i;
        if (zero_at >= 0) {
            const auto& other = nodes[1 - zero_at];
            const PointGn y = pi_hat(other.b, n);
            double worst = 0.0;
            for (int j = 1; j <= n - 1; ++j)
                worst = std::max(worst, phi_supnorm(j, y));
            rep.schwarz_applicable = true;
            rep.schwarz_margin = std::abs(other.lambda) - worst;
            rep.schwarz_pass = rep.schwarz_margin >= 0.0;
        }
    }
    return rep;
}

} // namespace sympd

#endif
