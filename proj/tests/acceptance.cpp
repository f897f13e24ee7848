// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Tolerances are fixed here, not configurable.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "support.hpp"

using namespace sympd;
using testsup::rand_contraction;
using testsup::rand_g2_target;
using testsup::rand_instance;
using testsup::rand_interior;
using testsup::rand_jn_target;
using testsup::rand_mat;
using testsup::uniform;

namespace {

std::string sci(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3e", x);
    return buf;
}

struct Criterion {
    std::string name;
    std::function<bool(std::string&)> run;
};

// 1. Admissibility window: ||Z_nu|| < 1 iff theta < nu^2 < vartheta, det K < 0 inside.
bool criterion_window(std::string& detail)
{
    testsup::reseed(0xACC1);
    int checked = 0;
    double worst_det = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < 200; ++i) {
        const SchwarzInstance inst = rand_instance(2 + i % 7);
        const SchwarzData d = compute_schwarz_data(inst);
        const double lo = 0.5 * d.theta;
        const double hi = 2.0 * d.vartheta;
        for (int k = 0; k < 100; ++k) {
            const double nu2 = lo + (hi - lo) * k / 99.0;
            const double band = 1e-9 * std::max(1.0, nu2);
            if (std::abs(nu2 - d.theta) <= band || std::abs(nu2 - d.vartheta) <= band)
                continue;
            const bool in_window = d.theta < nu2 && nu2 < d.vartheta;
            const bool contractive = op_norm(z_matrix(inst, std::sqrt(nu2))) < 1.0;
            if (in_window != contractive) {
                detail = "misclassified nu^2 = " + sci(nu2);
                return false;
            }
            if (in_window) {
                const double detk =
                    k_matrix(z_matrix(inst, std::sqrt(nu2)), std::abs(inst.lambda0))
                        .det()
                        .real();
                worst_det = std::max(worst_det, detk);
                if (!(detk < 0.0)) {
                    detail = "det K >= 0 inside the window";
                    return false;
                }
            }
            ++checked;
        }
    }
    detail = std::to_string(checked) + " grid points, max det K inside window = " +
             sci(worst_det);
    return true;
}

// 2. Appendix identities to 1e-9 on 1000 feasible (instance, nu) pairs.
bool criterion_appendix(std::string& detail)
{
    testsup::reseed(0xACC2);
    double w_app2 = 0.0, w_app3 = 0.0, w_appmat = 0.0, w_app6 = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const SchwarzInstance inst = rand_instance(2 + i % 7);
        const SchwarzData d = compute_schwarz_data(inst);
        const double nu = std::sqrt(uniform(d.theta * 1.01, d.vartheta * 0.99));
        const Mat2 z = z_matrix(inst, nu);

        const double direct =
            (Mat2::identity() - z.adjoint() * z).det().real();
        w_app2 = std::max(w_app2, std::abs(det_one_minus_zstarz(inst, nu) - direct));

        w_app3 = std::max(w_app3, std::abs(r_x_gap(inst) - r_x_gap_quotient(inst)));

        const auto [kd, kd_det] = kappa_closed_form(inst, nu);
        const Mat2 kd_direct =
            k_matrix(z, std::abs(inst.lambda0)) * cplx(det_one_minus_zstarz(inst, nu));
        w_appmat = std::max(w_appmat, max_abs_diff(kd, kd_direct));
        w_app6 = std::max(w_app6, std::abs(kd.det().real() - kd_det));
    }
    detail = "max residuals: app2 = " + sci(w_app2) +
             ", app3 = " + sci(w_app3) +
             ", matrix = " + sci(w_appmat) +
             ", app6 = " + sci(w_app6);
    return w_app2 < 1e-9 && w_app3 < 1e-9 && w_appmat < 1e-9 && w_app6 < 1e-9;
}

// 3. End-to-end interpolation on 50 J_n / G2 targets.
bool criterion_interpolation(std::string& detail)
{
    testsup::reseed(0xACC3);
    double worst_origin = 0.0, worst_target = 0.0, worst_margin = 1e300;
    const int ns[] = {2, 3, 4, 5};
    for (int i = 0; i < 50; ++i) {
        const int n = ns[i % 4];
        Interpolant psi;
        PointGn y = PointGn::origin(2);
        if (n == 2) {
            const auto [s, p] = rand_g2_target();
            y = PointGn(2, {s}, p);
            psi = build_interpolant_g2(s, p, 1.2 * phi_supnorm(1, y));
        } else {
            y = rand_jn_target(n);
            psi = build_interpolant_jn(y, 1.2 * phi_supnorm(1, y));
        }
        const VerifyReport rep = verify_interpolant(psi, 10000, 360);
        worst_origin = std::max(worst_origin, rep.origin_residual);
        worst_target = std::max(worst_target, rep.target_residual);
        worst_margin = std::min(worst_margin, std::min(rep.worst_margin, rep.worst_q_margin));
    }
    detail = "worst psi(0) = " + sci(worst_origin) +
             ", worst psi(l0) = " + sci(worst_target) +
             ", min sweep margin = " + sci(worst_margin);
    return worst_origin < 1e-10 && worst_target < 1e-8 && worst_margin > 0.0;
}

// 4. Non-uniqueness: two admissible nu differ at a third point.
bool criterion_nonuniqueness(std::string& detail)
{
    testsup::reseed(0xACC4);
    for (int trial = 0; trial < 50; ++trial) {
        const PointGn y = rand_jn_target(3);
        const cplx lam0 = 1.2 * phi_supnorm(1, y);
        const SchwarzData d = compute_schwarz_data(SchwarzInstance(lam0, y, 1));
        const double nu_b = std::sqrt(0.5 * (1.0 + 0.98 * d.vartheta));
        if (nu_b * nu_b < 1.05)
            continue;
        const Interpolant a = build_interpolant_jn(y, lam0, 1.0);
        const Interpolant b = build_interpolant_jn(y, lam0, nu_b);
        const cplx third = -0.5 * lam0;
        const double node_gap = std::max(
            point_distance(eval_interpolant(a, lam0), eval_interpolant(b, lam0)),
            point_distance(eval_interpolant(a, 0.0), eval_interpolant(b, 0.0)));
        const double spread =
            point_distance(eval_interpolant(a, third), eval_interpolant(b, third));
        if (node_gap < 1e-9 && spread > 1e-6) {
            detail = "nu = 1 vs nu = " + sci(nu_b) +
                     ": node gap = " + sci(node_gap) +
                     ", third-point spread = " + sci(spread);
            return true;
        }
    }
    detail = "no admissible pair produced distinct interpolants";
    return false;
}

// 5. Converse round trip through the balanced factorization.
bool criterion_characterize(std::string& detail)
{
    testsup::reseed(0xACC5);
    int done = 0;
    double worst_g = 0.0, worst_fg = 0.0, worst_bal = 0.0;
    for (int trial = 0; trial < 400 && done < 20; ++trial) {
        const int n = 3 + trial % 3;
        const auto f = testsup::rand_poly_schur_factor(2, 0.8);
        const auto psi = testsup::poly_psi_from_factor(f, n);
        const cplx lam0 = std::polar(uniform(0.45, 0.7), uniform(0.0, 2.0 * M_PI));
        CharacterizeResult res;
        try {
            res = characterize(psi, lam0);
        } catch (const error&) {
            continue;
        }
        bool usable = true;
        for (const auto& cf : res.factors)
            usable = usable && cf.hypothesis_ok;
        if (!usable)
            continue;
        ++done;
        for (const auto& cf : res.factors) {
            if (!cf.nu_in_window) {
                detail = "recovered nu^2 left the window";
                return false;
            }
            worst_g = std::max(worst_g, cf.g_residual);
            worst_fg = std::max(worst_fg, cf.fg_residual);
            worst_bal = std::max(worst_bal, cf.balance_residual);
        }
    }
    detail = std::to_string(done) +
             " interpolants; worst G(lambda0) residual = " + sci(worst_g) +
             ", f g - h = " + sci(worst_fg) +
             ", balance = " + sci(worst_bal);
    return done == 20 && worst_g < 1e-7 && worst_fg < 1e-8 && worst_bal < 1e-8;
}

// 6. mu equivalence with the beta-criterion and the grid oracle.
bool criterion_mu(std::string& detail)
{
    testsup::reseed(0xACC6);
    int agreed = 0;
    int total = 0;
    for (int i = 0; total < 500 && i < 5000; ++i) {
        const int n = 2 + i % 7;
        PointGn p = (i % 2 == 0) ? rand_interior(n) : testsup::rand_exterior(n);
        if (i % 5 == 4) {
            // push toward the boundary: scale to a small positive/negative margin
            double lo = 0.2, hi = 3.0;
            for (int it = 0; it < 50; ++it) {
                const double mid = 0.5 * (lo + hi);
                PointGn s = p;
                for (auto& v : s.y)
                    v *= mid;
                if (in_gtilde(s).inside)
                    lo = mid;
                else
                    hi = mid;
            }
            const double t = (i % 10 == 4) ? lo * (1.0 - 1e-4) : hi * (1.0 + 1e-4);
            for (auto& v : p.y)
                v *= t;
        }
        const auto rep = in_gtilde(p);
        double margin = rep.q_margin;
        for (double m : rep.margins)
            margin = std::min(margin, m);
        if (std::abs(margin) < 1e-6)
            continue;
        ++total;
        if (mu_membership_check(p) == rep.inside)
            ++agreed;
    }

    double worst_mu = 0.0;
    for (int i = 0; i < 200; ++i) {
        const Mat2 b = rand_mat(1.5);
        const double bisect = mu_diag(b).value;
        const double grid = mu_grid(b, GridSpec());
        worst_mu = std::max(worst_mu, std::abs(bisect - grid) / std::max(1.0, grid));
    }
    detail = std::to_string(agreed) + "/" + std::to_string(total) +
             " membership agreements; max mu deviation = " + sci(worst_mu);
    return agreed == total && total == 500 && worst_mu < 1e-4;
}

// 7. Caratheodory = Lempert on J_n targets from the origin.
bool criterion_distances(std::string& detail)
{
    testsup::reseed(0xACC7);
    double worst_gap = 0.0;
    const int ns[] = {2, 3, 4, 5};
    for (int i = 0; i < 50; ++i) {
        const int n = ns[i % 4];
        PointGn y = PointGn::origin(2);
        if (n == 2) {
            const auto [s, p] = rand_g2_target();
            y = PointGn(2, {s}, p);
        } else {
            y = rand_jn_target(n);
        }
        const DistanceReport rep = dist_origin(y);
        if (!rep.upper || !rep.equal) {
            detail = "missing equality certificate on a constructive target (n = " +
                     std::to_string(n) + ")";
            return false;
        }
        worst_gap = std::max(worst_gap, std::abs(*rep.upper - rep.lower));
        for (int j = 1; j <= n - 1; ++j)
            for (int k = 0; k < 36; ++k) {
                const cplx w = std::polar(1.0, 2.0 * M_PI * k / 36.0);
                if (std::atanh(std::abs(phi(j, w, y))) > rep.lower + 1e-12) {
                    detail = "circle sample of Phi exceeded the lower bound";
                    return false;
                }
            }
    }
    // the lower bound dominates the candidate functions on general interior
    // points as well
    for (int i = 0; i < 50; ++i) {
        const PointGn y = rand_interior(2 + i % 7);
        const DistanceReport rep = dist_origin(y);
        for (int j = 1; j <= y.n - 1; ++j)
            for (int k = 0; k < 36; ++k) {
                const cplx w = std::polar(1.0, 2.0 * M_PI * k / 36.0);
                if (std::atanh(std::abs(phi(j, w, y))) > rep.lower + 1e-12) {
                    detail = "interior-point circle sample exceeded the lower bound";
                    return false;
                }
            }
    }
    detail = "max |upper - lower| = " + sci(worst_gap);
    return worst_gap < 1e-8;
}

// 8. Core algebra invariants at scale.
bool criterion_core(std::string& detail)
{
    testsup::reseed(0xACC8);
    double worst_rt = 0.0, worst_svd = 0.0, worst_herm = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const Mat2 z = rand_contraction(0.75);
        const Mat2 x = rand_contraction(0.9);
        const Mat2 y = mobius(z, x);
        if (!(op_norm(y) < 1.0)) {
            detail = "contraction not preserved";
            return false;
        }
        worst_rt = std::max(worst_rt, max_abs_diff(mobius(-z, y), x));

        const Mat2 m = rand_mat(2.0);
        const double want = testsup::svd_oracle_smax(m);
        if (want > 1e-12)
            worst_svd = std::max(worst_svd, std::abs(op_norm(m) - want) / want);

        const Mat2 k = k_matrix(z, uniform(0.0, 0.99));
        worst_herm = std::max(worst_herm, max_abs_diff(k, k.adjoint()));
    }
    detail = "max residuals: round trip = " + sci(worst_rt) +
             ", svd = " + sci(worst_svd) +
             ", hermitian = " + sci(worst_herm);
    return worst_rt < 1e-9 && worst_svd < 1e-12 && worst_herm < 1e-10;
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria = {
        {"1 admissibility window: ||Z_nu|| < 1 iff theta < nu^2 < vartheta, det K < 0 inside",
         criterion_window},
        {"2 appendix identities match direct matrix computation to 1e-9",
         criterion_appendix},
        {"3 interpolation endpoints (1e-10 / 1e-8) and 1e4-point membership sweep",
         criterion_interpolation},
        {"4 two admissible nu give distinct interpolants through the same nodes",
         criterion_nonuniqueness},
        {"5 characterize recovers G(lambda0) = Z to 1e-7 with balanced factors",
         criterion_characterize},
        {"6 mu-membership equivalence (500 pts) and grid-oracle agreement (1e-4)",
         criterion_mu},
        {"7 Caratheodory lower = construction-backed Lempert upper to 1e-8",
         criterion_distances},
        {"8 core algebra: Moebius round trip, op-norm vs SVD, K Hermitianity",
         criterion_core},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        std::printf("[%s] criterion %s (%.2fs) -- %s\n", ok ? "PASS" : "FAIL",
                    c.name.c_str(), secs, detail.c_str());
        std::fflush(stdout);
        failures += ok ? 0 : 1;
    }
    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all %zu criteria passed\n", criteria.size());
    return 0;
}
