#ifndef SYMPD_SERIALIZATION_HPP
#define SYMPD_SERIALIZATION_HPP

#include <json.hpp>

#include "sympd/distances.hpp"
#include "sympd/domain.hpp"
#include "sympd/interpolant.hpp"
#include "sympd/mu.hpp"
#include "sympd/schwarz.hpp"

namespace sympd {

using json = nlohmann::json;

// complex numbers are always two-element arrays [re, im]
inline json to_json(cplx z)
{
    return json::array({z.real(), z.imag()});
}

inline cplx cplx_from_json(const json& j)
{
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        raise(errc::bad_input, "expected a complex number as [re, im]", j.dump());
    return {j[0].get<double>(), j[1].get<double>()};
}

// matrices are flat row-major arrays [[re,im] x 4]
inline json to_json(const Mat2& m)
{
    return json::array({to_json(m.a11), to_json(m.a12), to_json(m.a21), to_json(m.a22)});
}

inline Mat2 mat2_from_json(const json& j)
{
    if (!j.is_array() || j.size() != 4)
        raise(errc::bad_input, "expected a 2x2 matrix as [[re,im] x 4]", j.dump());
    return {cplx_from_json(j[0]), cplx_from_json(j[1]), cplx_from_json(j[2]),
            cplx_from_json(j[3])};
}

inline json to_json(const Vec2& v)
{
    return json::array({to_json(v.x), to_json(v.y)});
}

inline Vec2 vec2_from_json(const json& j)
{
    if (!j.is_array() || j.size() != 2)
        raise(errc::bad_input, "expected a vector as [[re,im], [re,im]]", j.dump());
    return {cplx_from_json(j[0]), cplx_from_json(j[1])};
}

inline json to_json(const PointGn& p)
{
    json y = json::array();
    for (int j = 1; j <= p.n - 1; ++j)
        y.push_back(to_json(p.yc(j)));
    return json{{"n", p.n}, {"y", y}, {"q", to_json(p.q)}};
}

inline PointGn point_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("n") || !j.contains("y") || !j.contains("q"))
        raise(errc::bad_input, "expected a point as {\"n\", \"y\", \"q\"}", j.dump());
    const int n = j["n"].get<int>();
    std::vector<cplx> y;
    for (const auto& v : j["y"])
        y.push_back(cplx_from_json(v));
    return PointGn(n, std::move(y), cplx_from_json(j["q"]));
}

inline double finite_or_clamp(double x)
{
    if (std::isfinite(x))
        return x;
    return x > 0 ? 1e308 : -1e308;
}

inline json to_json(const MembershipReport& r)
{
    json margins = json::array();
    for (double m : r.margins)
        margins.push_back(finite_or_clamp(m));
    return json{{"inside", r.inside}, {"margins", margins}, {"q_margin", r.q_margin}};
}

inline json to_json(const SchwarzData& d)
{
    return json{{"w", to_json(d.w)}, {"X_j", d.x_j},     {"X_nj", d.x_nj},
                {"R", d.r},          {"theta", d.theta}, {"vartheta", d.vartheta}};
}

inline json to_json(const MuResult& r)
{
    json j{{"value", r.value}, {"iterations", r.iterations}};
    if (r.witness)
        j["witness"] = json::array({to_json(r.witness->first), to_json(r.witness->second)});
    else
        j["witness"] = nullptr;
    return j;
}

inline json to_json(const DistanceReport& r)
{
    json j{{"lower", r.lower},
           {"equal", r.equal},
           {"argmax_j", r.argmax_j},
           {"lambda0_relaxed", r.lambda0_relaxed}};
    j["upper"] = r.upper ? json(*r.upper) : json(nullptr);
    return j;
}

inline json to_json(const VerifyReport& r)
{
    return json{{"origin_residual", r.origin_residual},
                {"target_residual", r.target_residual},
                {"worst_margin", finite_or_clamp(r.worst_margin)},
                {"worst_q_margin", finite_or_clamp(r.worst_q_margin)},
                {"worst_det_spread", r.worst_det_spread},
                {"pass", r.pass}};
}

inline json to_json(const PolyC& p)
{
    json c = json::array();
    for (const auto& v : p.c)
        c.push_back(to_json(v));
    return c;
}

inline PolyC poly_from_json(const json& j)
{
    if (!j.is_array() || j.empty())
        raise(errc::bad_input, "expected a polynomial as [[re,im], ...]", j.dump());
    std::vector<cplx> c;
    for (const auto& v : j)
        c.push_back(cplx_from_json(v));
    return PolyC(std::move(c));
}

inline json to_json(const SchurFunction& q)
{
    if (q.kind == SchurFunction::Kind::constant)
        return json{{"kind", "constant"}, {"q0", to_json(q.q0)}};
    json cs = json::array();
    for (const auto& m : q.coeffs)
        cs.push_back(to_json(m));
    return json{{"kind", "polynomial"}, {"coeffs", cs}};
}

inline SchurFunction schur_from_json(const json& j)
{
    const std::string kind = j.value("kind", "constant");
    if (kind == "constant")
        return SchurFunction::constant(mat2_from_json(j.at("q0")));
    if (kind == "polynomial") {
        std::vector<Mat2> cs;
        for (const auto& m : j.at("coeffs"))
            cs.push_back(mat2_from_json(m));
        return SchurFunction::polynomial(std::move(cs));
    }
    raise(errc::bad_input, "unknown Schur function kind", kind);
}

inline json to_json(const InterpolantFactor& f)
{
    return json{{"Z", to_json(f.z)},   {"lambda0", to_json(f.lambda0)},
                {"j", f.j},            {"nu", f.nu},
                {"alpha", to_json(f.alpha)}, {"Q", to_json(f.q)}};
}

inline InterpolantFactor factor_from_json(const json& j)
{
    InterpolantFactor f;
    f.z = mat2_from_json(j.at("Z"));
    f.lambda0 = cplx_from_json(j.at("lambda0"));
    f.j = j.value("j", 1);
    f.nu = j.value("nu", 1.0);
    if (j.contains("alpha") && !j["alpha"].is_null())
        f.alpha = vec2_from_json(j["alpha"]);
    f.q = schur_from_json(j.at("Q"));
    return f;
}

inline json to_json(const Interpolant& psi)
{
    json factors = json::array();
    for (const auto& f : psi.factors)
        factors.push_back(to_json(f));
    return json{{"n", psi.n},
                {"lambda0", to_json(psi.lambda0)},
                {"target", to_json(psi.target)},
                {"factors", factors}};
}

inline Interpolant interpolant_from_json(const json& j)
{
    Interpolant psi;
    psi.n = j.at("n").get<int>();
    psi.lambda0 = cplx_from_json(j.at("lambda0"));
    psi.target = point_from_json(j.at("target"));
    for (const auto& f : j.at("factors"))
        psi.factors.push_back(factor_from_json(f));
    if (static_cast<int>(psi.factors.size()) != psi.n / 2)
        raise(errc::length_mismatch, "interpolant needs [n/2] factors");
    return psi;
}

inline json to_json(const CharacterizedFactor& cf)
{
    json j{{"j", cf.j}, {"hypothesis_ok", cf.hypothesis_ok}};
    if (!cf.hypothesis_ok) {
        j["violation"] = cf.violation;
        return j;
    }
    json blaschke = json::array();
    for (cplx r : cf.factors.blaschke_roots)
        blaschke.push_back(to_json(r));
    json outside = json::array();
    for (cplx r : cf.factors.outside_roots)
        outside.push_back(to_json(r));
    j["factor_blaschke_roots"] = blaschke;
    j["factor_outside_roots"] = outside;
    j["factor_lead"] = to_json(cf.factors.lead);
    j["nu"] = cf.nu;
    j["theta"] = cf.theta;
    j["vartheta"] = cf.vartheta;
    j["nu_in_window"] = cf.nu_in_window;
    j["G_lambda0"] = to_json(cf.g_lambda0);
    j["Z_expected"] = to_json(cf.z_expected);
    j["G_residual"] = cf.g_residual;
    j["fg_residual"] = cf.fg_residual;
    j["balance_residual"] = cf.balance_residual;
    j["schur_margin"] = cf.schur_margin;
    return j;
}

/// Canonical text form: objects keep sorted keys (nlohmann stores std::map)
/// and doubles print as shortest round-trip decimals, so dump-parse-dump is
/// byte-identical.
inline std::string canonical_dump(const json& j)
{
    return j.dump();
}

} // namespace sympd

#endif
