// Command-line front end: every library capability behind JSON in / JSON or
// CSV out, with stable exit codes for scripting (0 ok, 2 hypothesis
// violation, 3 parse error).

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "sympd/sympd.hpp"

namespace {

using namespace sympd;

struct Options {
    std::string input;
    std::string output;
    double tol = 1e-8;
    int grid = 10000;
    std::string seed_hex = "5EED";
    bool force_json = false;
    bool force_csv = false;
};

uint32_t parse_seed(const std::string& hex)
{
    try {
        return static_cast<uint32_t>(std::stoul(hex, nullptr, 16));
    } catch (const std::exception&) {
        raise(errc::bad_input, "seed must be hexadecimal", hex);
    }
}

std::string read_input(const std::string& src)
{
    if (src.empty())
        raise(errc::bad_input, "no input given; use --input <path|-|inline json>");
    if (src == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    if (!src.empty() && (src[0] == '{' || src[0] == '['))
        return src; // inline JSON
    std::ifstream in(src);
    if (!in)
        raise(errc::bad_input, "cannot open input file", src);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const Options& opt, const std::string& text)
{
    if (opt.output.empty() || opt.output == "-") {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(opt.output);
    if (!out)
        raise(errc::bad_input, "cannot open output file", opt.output);
    out << text << "\n";
}

json parse_json(const std::string& text)
{
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        raise(errc::bad_input, "invalid JSON input", e.what());
    }
}

std::string fmt(double x)
{
    std::ostringstream ss;
    ss.precision(17);
    ss << x;
    return ss.str();
}

int run_membership(const Options& opt)
{
    const PointGn p = point_from_json(parse_json(read_input(opt.input)));
    json out = to_json(in_gtilde(p));
    out["in_closure"] = in_gamma_tilde(p);
    write_output(opt, canonical_dump(out));
    return 0;
}

int run_phinorm(const Options& opt)
{
    const PointGn p = point_from_json(parse_json(read_input(opt.input)));
    json norms = json::array();
    int argmax = 1;
    double best = -1.0;
    for (int j = 1; j <= p.n - 1; ++j) {
        const double s = phi_supnorm(j, p);
        norms.push_back(s);
        if (s > best) {
            best = s;
            argmax = j;
        }
    }
    write_output(opt, canonical_dump(json{{"norms", norms}, {"argmax_j", argmax}}));
    return 0;
}

int run_schwarz(const Options& opt)
{
    const json in = parse_json(read_input(opt.input));
    const PointGn p = point_from_json(in.at("point"));
    const cplx lam0 = cplx_from_json(in.at("lambda0"));
    const int j = in.value("j", 1);
    const SchwarzInstance inst(lam0, p, j);
    const SchwarzData d = compute_schwarz_data(inst);
    json out = to_json(d);
    out["feasible"] = true;
    out["j"] = j;
    if (in.contains("nu") && !in["nu"].is_null()) {
        const double nu = in["nu"].get<double>();
        const Mat2 z = z_matrix(inst, nu);
        out["nu"] = nu;
        out["Z"] = to_json(z);
        out["norm_Z"] = op_norm(z);
        out["nu_in_window"] = d.theta < nu * nu && nu * nu < d.vartheta;
        if (d.theta < nu * nu && nu * nu < d.vartheta) {
            const auto [kd, kd_det] = kappa_closed_form(inst, nu);
            out["K_det_scaled"] = kd_det;
            out["det_one_minus_zstarz"] = det_one_minus_zstarz(inst, nu);
            (void)kd;
        }
    }
    write_output(opt, canonical_dump(out));
    return 0;
}

Interpolant build_from_request(const json& in)
{
    const PointGn p = point_from_json(in.at("point"));
    const cplx lam0 = cplx_from_json(in.at("lambda0"));
    std::optional<double> nu;
    if (in.contains("nu") && !in["nu"].is_null())
        nu = in["nu"].get<double>();
    std::optional<SchurFunction> q;
    if (in.contains("Q") && !in["Q"].is_null())
        q = schur_from_json(in["Q"]);
    if (p.n == 2)
        return build_interpolant_g2(p.yc(1), p.q, lam0, nu, q);
    return build_interpolant_jn(p, lam0, nu, q);
}

int run_interpolate(const Options& opt)
{
    const json in = parse_json(read_input(opt.input));
    const Interpolant psi = build_from_request(in);
    const VerifyReport rep =
        verify_interpolant(psi, opt.grid, 360, parse_seed(opt.seed_hex));
    json out{{"interpolant", to_json(psi)}, {"verification", to_json(rep)}};
    write_output(opt, canonical_dump(out));
    return 0;
}

int run_eval(const Options& opt)
{
    const json in = parse_json(read_input(opt.input));
    const Interpolant psi = in.contains("interpolant")
                                ? interpolant_from_json(in["interpolant"])
                                : interpolant_from_json(in);
    const int samples = std::max(1, std::min(opt.grid, 100000));
    const uint32_t seed = parse_seed(opt.seed_hex);

    if (opt.force_json) {
        json rows = json::array();
        for (int i = 0; i < samples; ++i) {
            const double r = std::sqrt(halton_seq((seed & 0xFFFFu) + i + 1, 2)) * 0.999;
            const double t = 2.0 * M_PI * halton_seq((seed & 0xFFFFu) + i + 1, 3);
            const cplx lam = std::polar(r, t);
            const PointGn y = eval_interpolant(psi, lam);
            rows.push_back(json{{"lambda", to_json(lam)}, {"y", to_json(y)}});
        }
        write_output(opt, canonical_dump(rows));
        return 0;
    }

    std::ostringstream csv;
    csv << "lambda_re,lambda_im";
    for (int j = 1; j <= psi.n - 1; ++j)
        csv << ",y" << j << "_re,y" << j << "_im";
    csv << ",q_re,q_im,min_margin,max_factor_norm";
    for (int i = 0; i < samples; ++i) {
        const double r = std::sqrt(halton_seq((seed & 0xFFFFu) + i + 1, 2)) * 0.999;
        const double t = 2.0 * M_PI * halton_seq((seed & 0xFFFFu) + i + 1, 3);
        const cplx lam = std::polar(r, t);
        const PointGn y = eval_interpolant(psi, lam);
        const MembershipReport m = in_gtilde(y);
        double margin = m.q_margin;
        for (double mg : m.margins)
            margin = std::min(margin, mg);
        double fnorm = 0.0;
        for (const auto& fac : psi.factors)
            fnorm = std::max(fnorm, op_norm(eval_factor(fac, lam)));
        csv << "\n" << fmt(lam.real()) << "," << fmt(lam.imag());
        for (int j = 1; j <= y.n - 1; ++j)
            csv << "," << fmt(y.yc(j).real()) << "," << fmt(y.yc(j).imag());
        csv << "," << fmt(y.q.real()) << "," << fmt(y.q.imag());
        csv << "," << fmt(margin) << "," << fmt(fnorm);
    }
    write_output(opt, csv.str());
    return 0;
}

int run_characterize(const Options& opt)
{
    const json in = parse_json(read_input(opt.input));
    std::vector<PolyC> psi;
    for (const auto& c : in.at("psi"))
        psi.push_back(poly_from_json(c));
    const cplx lam0 = cplx_from_json(in.at("lambda0"));
    const CharacterizeResult res = characterize(psi, lam0);
    json factors = json::array();
    for (const auto& cf : res.factors)
        factors.push_back(to_json(cf));
    write_output(opt, canonical_dump(json{{"target", to_json(res.target)},
                                          {"factors", factors}}));
    return 0;
}

int run_mu(const Options& opt)
{
    const json in = parse_json(read_input(opt.input));
    const Mat2 b = in.is_array() ? mat2_from_json(in) : mat2_from_json(in.at("B"));
    json out = to_json(mu_diag(b));
    if (in.is_object() && in.value("with_oracle", false))
        out["grid_oracle"] = mu_grid(b, GridSpec(40, 200, parse_seed(opt.seed_hex)));
    write_output(opt, canonical_dump(out));
    return 0;
}

int run_distance(const Options& opt)
{
    const PointGn p = point_from_json(parse_json(read_input(opt.input)));
    write_output(opt, canonical_dump(to_json(dist_origin(p))));
    return 0;
}

int run_verify(const Options& opt)
{
    const json in = parse_json(read_input(opt.input));
    const Interpolant psi = in.contains("interpolant")
                                ? interpolant_from_json(in["interpolant"])
                                : interpolant_from_json(in);
    const VerifyReport rep =
        verify_interpolant(psi, opt.grid, 360, parse_seed(opt.seed_hex));

    // re-check the stored Schur data: Q in the ball, Q(0) constraint
    json checks = to_json(rep);
    bool pass = rep.origin_residual < 1e-10 && rep.target_residual < opt.tol &&
                rep.worst_margin > 0.0 && rep.worst_q_margin > 0.0 &&
                rep.worst_det_spread < 1e-9;
    double worst_q_constraint = 0.0;
    double worst_q_norm = 0.0;
    for (const auto& fac : psi.factors) {
        worst_q_norm = std::max(
            worst_q_norm, circle_sup_norm([&](cplx z) { return fac.q.eval(z); }, 0.999));
        const auto [u, v] = uv_vectors(fac.z, fac.alpha);
        const Vec2 lhs = fac.q.at_zero().adjoint().apply(u * std::conj(fac.lambda0));
        worst_q_constraint = std::max(worst_q_constraint, (lhs - v).norm());
    }
    checks["q_sup_norm"] = worst_q_norm;
    checks["q_constraint_residual"] = worst_q_constraint;
    pass = pass && worst_q_norm <= 1.0 + 1e-9 && worst_q_constraint < 1e-10;
    checks["pass"] = pass;
    write_output(opt, canonical_dump(checks));
    return pass ? 0 : 2;
}

int dispatch(const std::string& cmd, const Options& opt)
{
    if (cmd == "membership")
        return run_membership(opt);
    if (cmd == "phinorm")
        return run_phinorm(opt);
    if (cmd == "schwarz")
        return run_schwarz(opt);
    if (cmd == "interpolate")
        return run_interpolate(opt);
    if (cmd == "eval")
        return run_eval(opt);
    if (cmd == "characterize")
        return run_characterize(opt);
    if (cmd == "mu")
        return run_mu(opt);
    if (cmd == "distance")
        return run_distance(opt);
    if (cmd == "verify")
        return run_verify(opt);
    raise(errc::bad_input, "unknown subcommand", cmd);
}

json error_json(const error& e)
{
    return json{{"error", json{{"code", std::string(errc_name(e.code()))},
                               {"message", e.message()},
                               {"context", e.context()}}}};
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"extended symmetrized polydisc toolkit: membership, Schwarz "
                 "interpolation, structured singular values, invariant distances"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("-i,--input", opt.input, "input path, '-' for stdin, or inline JSON");
    app.add_option("-o,--output", opt.output, "output path (stdout when omitted)");
    app.add_option("--tol", opt.tol, "verification tolerance override")
        ->check(CLI::PositiveNumber);
    app.add_option("--grid", opt.grid, "sample count for sweeps")->check(CLI::PositiveNumber);
    app.add_option("--seed", opt.seed_hex, "hex seed for quasi-random grids");
    auto* jf = app.add_flag("--json", opt.force_json, "force JSON output");
    app.add_flag("--csv", opt.force_csv, "force CSV output (eval default)")->excludes(jf);

    for (const char* name : {"membership", "phinorm", "schwarz", "interpolate", "eval",
                             "characterize", "mu", "distance", "verify"})
        app.add_subcommand(name);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << json{{"error", json{{"code", "ParseError"},
                                         {"message", e.what()},
                                         {"context", ""}}}}
                         .dump()
                  << "\n";
        return 3;
    }

    try {
        return dispatch(app.get_subcommands().front()->get_name(), opt);
    } catch (const error& e) {
        std::cerr << error_json(e).dump() << "\n";
        return e.code() == errc::bad_input ? 3 : 2;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", json{{"code", "Internal"},
                                         {"message", e.what()},
                                         {"context", ""}}}}
                         .dump()
                  << "\n";
        return 1;
    }
}
