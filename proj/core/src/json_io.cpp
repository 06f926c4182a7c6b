#include "qkwall/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace qkwall {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

namespace {

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

ordered num17(double v) { return ordered::parse(fmt17(v), nullptr, true); }

ordered cplx_pair(cplx v) { return ordered::array({num17(v.real()), num17(v.imag())}); }

cplx pair_to_cplx(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("expected a [re, im] pair");
    return cplx(j[0].get<double>(), j[1].get<double>());
}

ordered rat_str(const Rat& r) { return to_string(r); }

ordered monomial_json(const Monomial& m) {
    ordered j;
    j["c"] = cplx_pair(m.c);
    ordered ae = ordered::array();
    for (const Rat& e : m.aExp) ae.push_back(rat_str(e));
    j["aExp"] = ae;
    j["qExp"] = rat_str(m.qExp);
    j["sExp"] = rat_str(m.sExp);
    j["zExp"] = m.zExp;
    return j;
}

Monomial monomial_from(const json& j) {
    Monomial m;
    if (j.contains("c")) m.c = pair_to_cplx(j.at("c"));
    if (j.contains("aExp"))
        for (const auto& e : j.at("aExp")) m.aExp.push_back(parse_rational(e.get<std::string>()));
    if (j.contains("qExp")) m.qExp = parse_rational(j.at("qExp").get<std::string>());
    if (j.contains("sExp")) m.sExp = parse_rational(j.at("sExp").get<std::string>());
    if (j.contains("zExp")) m.zExp = j.at("zExp").get<int>();
    return m;
}

} // namespace

std::pair<GLSMData, QContext> model_from_json(const std::string& text) {
    const json j = json::parse(text);
    GLSMData m;
    for (const auto& w : j.at("weights")) m.weights.push_back(w.get<int>());
    for (const auto& r : j.at("rCharges")) m.rCharges.push_back(parse_rational(r.get<std::string>()));
    for (const auto& a : j.at("equivParams")) m.equivParams.push_back(pair_to_cplx(a));
    const std::string ph = j.at("phase").get<std::string>();
    if (ph == "+")
        m.phase = +1;
    else if (ph == "-")
        m.phase = -1;
    else
        throw std::invalid_argument("phase must be \"+\" or \"-\"");
    if (j.contains("genericityGap")) m.genericityGap = j.at("genericityGap").get<double>();
    m.validate();

    const double q = j.value("q", 0.1);
    const long long T = j.value("productTerms", 60);
    QContext ctx(q, T);
    if (j.contains("tolAbs")) ctx.tolAbs = j.at("tolAbs").get<double>();
    if (j.contains("tolRel")) ctx.tolRel = j.at("tolRel").get<double>();
    return {m, ctx};
}

std::pair<GLSMData, QContext> model_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return model_from_json(ss.str());
}

std::string model_to_json(const GLSMData& model, const QContext& ctx) {
    ordered j;
    j["weights"] = model.weights;
    ordered rc = ordered::array();
    for (const Rat& r : model.rCharges) rc.push_back(rat_str(r));
    j["rCharges"] = rc;
    ordered ap = ordered::array();
    for (cplx a : model.equivParams) ap.push_back(cplx_pair(a));
    j["equivParams"] = ap;
    j["phase"] = model.phase > 0 ? "+" : "-";
    j["genericityGap"] = num17(model.genericityGap);
    j["q"] = num17(ctx.q.real());
    j["productTerms"] = ctx.productTerms;
    j["tolAbs"] = num17(ctx.tolAbs);
    j["tolRel"] = num17(ctx.tolRel);
    return j.dump(2) + "\n";
}

std::string brane_to_json(const BraneExpr& B) {
    ordered j;
    j["pref"] = monomial_json(B.pref);
    ordered facs = ordered::array();
    for (const ThetaFactor& f : B.factors) {
        ordered e;
        e["arg"] = monomial_json(f.arg);
        e["power"] = f.power;
        facs.push_back(e);
    }
    j["factors"] = facs;
    return j.dump(2) + "\n";
}

BraneExpr brane_from_json(const std::string& text, const GLSMData& model) {
    const json j = json::parse(text);
    BraneExpr B;
    B.aValues = model.equivParams;
    if (j.contains("pref")) B.pref = monomial_from(j.at("pref"));
    for (const auto& f : j.at("factors"))
        B.factors.push_back({monomial_from(f.at("arg")), f.at("power").get<int>()});
    return B;
}

std::string series_to_json(const CentralChargeSeries& Z) {
    ordered j;
    j["direction"] = Z.direction;
    ordered comps = ordered::array();
    for (const CCComponent& c : Z.components) {
        ordered e;
        e["k"] = c.k;
        e["rootIndex"] = c.rootIndex;
        e["zetaRoot"] = cplx_pair(c.zetaRoot);
        e["fracShift"] = rat_str(c.fracShift);
        e["prefactorArg"] = cplx_pair(c.prefactorArg);
        ordered rows = ordered::array();
        for (const auto& [n, v] : c.coeffs)
            rows.push_back(ordered::array({ordered(n), num17(v.real()), num17(v.imag())}));
        e["coeffs"] = rows;
        comps.push_back(e);
    }
    j["components"] = comps;
    return j.dump(2) + "\n";
}

std::string series_to_csv(const CentralChargeSeries& Z) {
    std::ostringstream out;
    out << "component,n,re,im\n";
    int id = 0;
    for (const CCComponent& c : Z.components) {
        for (const auto& [n, v] : c.coeffs)
            out << id << "," << n << "," << fmt17(v.real()) << "," << fmt17(v.imag()) << "\n";
        ++id;
    }
    return out.str();
}

std::string operator_to_json(const QDifferenceOperator& L) {
    ordered j;
    j["order"] = L.order();
    ordered terms = ordered::array();
    for (const QDETerm& t : L.terms) {
        ordered e;
        e["coeff"] = monomial_json(t.coeff);
        e["zPower"] = t.zPower;
        e["shift"] = t.shift;
        terms.push_back(e);
    }
    j["terms"] = terms;
    return j.dump(2) + "\n";
}

std::string residue_diagnostics_json(const GLSMData& model, const BraneExpr& B, int phase,
                                     const Rat& maxBeta, cplx z, const QContext& ctx) {
    const ResidueBreakdown rb = residue_sum(model, B, phase, maxBeta, z, ctx);
    ordered j;
    j["phase"] = phase > 0 ? "+" : "-";
    j["z"] = cplx_pair(z);
    j["maxBeta"] = rat_str(maxBeta);
    ordered poles = ordered::array();
    for (const auto& [p, res] : rb.perPole) {
        ordered e;
        e["k"] = p.k;
        e["m"] = p.m;
        e["beta"] = rat_str(p.beta);
        e["location"] = cplx_pair(p.location);
        e["residue"] = cplx_pair(res);
        poles.push_back(e);
    }
    j["poles"] = poles;
    ordered partial = ordered::array();
    cplx acc(0.0);
    for (const auto& [beta, v] : rb.perBeta) {
        acc += v;
        ordered e;
        e["beta"] = rat_str(beta);
        e["sum"] = cplx_pair(v);
        e["cumulative"] = cplx_pair(acc);
        partial.push_back(e);
    }
    j["perBeta"] = partial;
    j["total"] = cplx_pair(rb.total);
    return j.dump(2) + "\n";
}

} // namespace qkwall
