#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qkwall/central_charge.hpp"
#include "qkwall/integrals.hpp"
#include "qkwall/json_io.hpp"
#include "qkwall/qde.hpp"

using namespace qkwall;
using ordered = nlohmann::ordered_json;

namespace {

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

ordered num17(double v) { return ordered::parse(fmt17(v), nullptr, true); }

cplx parse_cplx(const std::string& s) {
    double re = 0.0, im = 0.0;
    const auto comma = s.find(',');
    if (comma == std::string::npos) {
        re = std::stod(s);
    } else {
        re = std::stod(s.substr(0, comma));
        im = std::stod(s.substr(comma + 1));
    }
    return cplx(re, im);
}

int thread_count() {
    const char* env = std::getenv("QKLAB_THREADS");
    if (!env) return 1;
    const int n = std::atoi(env);
    if (n < 1) throw std::runtime_error("QKLAB_THREADS must be a positive integer");
    return n;
}

// selector grammar: geometric:K | lg:M,L | wallcross:<selector> | file:PATH | empty
BraneExpr parse_brane(const std::string& sel, const GLSMData& model) {
    if (sel == "empty") {
        BraneExpr B;
        B.aValues = model.equivParams;
        B.pref.c = cplx(0.0);
        return B;
    }
    if (sel.rfind("wallcross:", 0) == 0)
        return wall_cross(parse_brane(sel.substr(10), model));
    if (sel.rfind("geometric:", 0) == 0)
        return geometric_basis_brane(model, std::stoi(sel.substr(10)));
    if (sel.rfind("lg:", 0) == 0) {
        const std::string rest = sel.substr(3);
        const auto comma = rest.find(',');
        if (comma == std::string::npos)
            throw std::runtime_error("lg selector needs two labels: lg:M,L");
        return lg_basis_brane(model, std::stoi(rest.substr(0, comma)),
                              std::stoi(rest.substr(comma + 1)));
    }
    if (sel.rfind("file:", 0) == 0) {
        std::ifstream in(sel.substr(5));
        if (!in) throw std::runtime_error("cannot open brane file " + sel.substr(5));
        std::stringstream ss;
        ss << in.rdbuf();
        return brane_from_json(ss.str(), model);
    }
    throw std::runtime_error("unknown brane selector: " + sel);
}

void emit(const std::string& text, const std::string& outPath) {
    if (outPath.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(outPath);
        if (!out) throw std::runtime_error("cannot open " + outPath);
        out << text;
    }
}

struct CheckRow {
    std::string name;
    double residual = 0.0;
    double threshold = 0.0;
};

int report(const std::string& command, const std::vector<CheckRow>& rows,
           const std::string& outPath) {
    ordered j;
    j["command"] = command;
    bool all = true;
    ordered checks = ordered::array();
    for (const CheckRow& r : rows) {
        const bool ok = r.residual < r.threshold;
        all = all && ok;
        ordered e;
        e["name"] = r.name;
        e["residual"] = num17(r.residual);
        e["threshold"] = num17(r.threshold);
        e["pass"] = ok;
        checks.push_back(e);
    }
    j["checks"] = checks;
    j["pass"] = all;
    emit(j.dump(2) + "\n", outPath);
    return all ? 0 : 1;
}

int cmd_theta(const std::string& qArg, const std::string& xArg, int terms, long long n,
              bool doPoch) {
    const QContext ctx(parse_cplx(qArg), terms);
    const cplx x = parse_cplx(xArg);
    std::cout << "phi   " << fmt17(phi(x, ctx).real()) << " " << fmt17(phi(x, ctx).imag())
              << "\n";
    std::cout << "theta " << fmt17(theta(x, ctx).real()) << " "
              << fmt17(theta(x, ctx).imag()) << "\n";
    if (doPoch) {
        const cplx p = pochhammer(x, n, ctx);
        std::cout << "poch  " << fmt17(p.real()) << " " << fmt17(p.imag()) << "\n";
    }
    return 0;
}

int cmd_central_charge(const std::string& modelPath, const std::string& braneSel,
                       const std::string& method, long long maxBeta, int maxN,
                       const std::string& format, const std::string& outPath) {
    auto [model, ctx] = model_from_file(modelPath);
    CentralChargeSeries Z;
    if (method == "residue" || method == "pairing") {
        const BraneExpr B = parse_brane(braneSel, model);
        const LevelStructure R =
            (model.phase > 0) ? v_plus_dual(model) : v_plus_dual(mirrored(model));
        Z = (method == "residue")
                ? central_charge_series(model, B, R, Rat(maxBeta), ctx)
                : pairing_central_charge_series(model, B, R, Rat(maxBeta), ctx);
    } else if (method == "closed") {
        if (braneSel.rfind("geometric:", 0) == 0) {
            Z = geometric_example_series(model, std::stoi(braneSel.substr(10)), maxN, ctx);
        } else if (braneSel.rfind("lg:", 0) == 0) {
            const std::string rest = braneSel.substr(3);
            const auto comma = rest.find(',');
            Z = lg_example_series(model, std::stoi(rest.substr(0, comma)),
                                  std::stoi(rest.substr(comma + 1)), maxN, ctx);
        } else {
            throw std::runtime_error("closed forms exist for geometric:K and lg:M,L only");
        }
    } else {
        throw std::runtime_error("unknown method: " + method);
    }
    emit(format == "csv" ? series_to_csv(Z) : series_to_json(Z), outPath);
    return 0;
}

int cmd_check_contour(const std::string& modelPath, const std::string& braneSel,
                      long long maxBeta, const std::string& outPath) {
    auto [model, ctx] = model_from_file(modelPath);
    const BraneExpr B = parse_brane(braneSel, model);
    const double delta = default_delta(model, ctx);
    const cplx z = 0.05 * std::exp(cplx(0.0, 0.4));
    const cplx ci = contour_integral(model, B, z, delta, 256, ctx);
    const cplx rs = residue_sum(model, B, +1, Rat(maxBeta), z, ctx).total;
    CheckRow row{"contour_vs_residue_plus", std::abs(ci - rs) / std::abs(ci), 1e-6};
    return report("check contour", {row}, outPath);
}

int cmd_check_wallcross(const std::string& modelPath, const std::string& braneSel,
                        long long maxBeta, const std::string& outPath) {
    auto [model, ctx] = model_from_file(modelPath);
    // the selector names the + phase brane; the - region integrates its
    // wall-crossed image
    const BraneExpr B = parse_brane(braneSel, model);
    const BraneExpr W = wall_cross(B);
    const double delta = default_delta(model, ctx);
    std::vector<CheckRow> rows;
    {
        const cplx z = 0.05 * std::exp(cplx(0.0, 0.4));
        const cplx ci = contour_integral(model, B, z, delta, 256, ctx);
        const cplx rs = residue_sum(model, B, +1, Rat(maxBeta), z, ctx).total;
        rows.push_back({"geometric_region", std::abs(ci - rs) / std::abs(ci), 1e-6});
    }
    {
        const cplx z = 20.0 * std::exp(cplx(0.0, 0.4));
        const cplx ci = contour_integral(model, W, z, delta, 256, ctx);
        const cplx rs = residue_sum(model, W, -1, Rat(maxBeta), z, ctx).total;
        rows.push_back({"lg_region", std::abs(ci - rs) / std::abs(ci), 1e-6});
    }
    return report("check wallcross", {rows}, outPath);
}

int cmd_check_qde(const std::string& modelPath, const std::string& phase, int maxN,
                  const std::string& outPath) {
    auto [model, ctx] = model_from_file(modelPath);
    const int ph = (phase == "-") ? -1 : +1;
    const int r = -model.weights[model.n() - 1];
    std::vector<CentralChargeSeries> series;
    std::vector<std::string> names;
    if (ph > 0) {
        for (int k = 0; k < model.nPlus(); ++k) {
            series.push_back(geometric_example_series(model, k, maxN, ctx));
            names.push_back("geometric_k" + std::to_string(k));
        }
    } else {
        for (int m = 0; m < r; ++m)
            for (int l = 0; l < r; ++l) {
                series.push_back(lg_example_series(model, m, l, maxN, ctx));
                names.push_back("lg_m" + std::to_string(m) + "_l" + std::to_string(l));
            }
    }
    const double rad = (ph > 0) ? 0.05 : 20.0;
    std::vector<cplx> samples;
    for (int j = 0; j < 4; ++j)
        samples.push_back(rad * std::exp(cplx(0.0, 0.3 + 1.4 * j)));

    const int nThreads = thread_count();
    std::vector<CheckRow> rows(series.size());
    std::vector<std::future<double>> futs;
    for (size_t i = 0; i < series.size(); ++i) {
        auto job = [&, i] { return qde_residual(model, ph, series[i], samples, ctx); };
        if (nThreads > 1)
            futs.push_back(std::async(std::launch::async, job));
        else
            rows[i] = {names[i], job(), 1e-6};
    }
    if (nThreads > 1)
        for (size_t i = 0; i < series.size(); ++i) rows[i] = {names[i], futs[i].get(), 1e-6};
    return report("check qde", rows, outPath);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"qklab: numerical laboratory for K-theoretic wall-crossing"};
    app.require_subcommand(1);

    std::string qArg = "0.1", xArg = "0.5";
    int terms = 60;
    long long pochN = 0;
    bool doPoch = false;
    auto* th = app.add_subcommand("theta", "evaluate phi, theta, Pochhammer");
    th->add_option("--q", qArg, "nome, re or re,im");
    th->add_option("--x", xArg, "argument, re or re,im")->required();
    th->add_option("--productTerms", terms, "factors kept in infinite products");
    th->add_option("--n", pochN, "Pochhammer length")->each([&](const std::string&) {
        doPoch = true;
    });

    std::string modelPath, braneSel = "geometric:0", method = "residue", format = "json";
    std::string outPath;
    long long maxBeta = 8;
    int maxN = 8;
    auto* cc = app.add_subcommand("central-charge", "compute a central charge series");
    cc->add_option("--model", modelPath, "model config JSON")->required();
    cc->add_option("--brane", braneSel, "geometric:K | lg:M,L | wallcross:<sel> | file:PATH | empty");
    cc->add_option("--method", method, "residue | pairing | closed");
    cc->add_option("--maxBeta", maxBeta, "degree cutoff for residue/pairing");
    cc->add_option("--maxN", maxN, "coefficient cutoff for closed forms");
    cc->add_option("--format", format, "json | csv");
    cc->add_option("--out", outPath, "output file (default stdout)");

    std::string ckModel = "configs/n3r2.json", ckBrane = "geometric:0";
    std::string ckPhase = "+", ckOut;
    long long ckMaxBeta = 12;
    int ckMaxN = 20;
    auto* ck = app.add_subcommand("check", "verification suites with JSON reports");
    ck->require_subcommand(1);
    auto* ckc = ck->add_subcommand("contour", "contour integral vs residue sum");
    auto* ckw = ck->add_subcommand("wallcross", "both phases in their regions");
    auto* ckq = ck->add_subcommand("qde", "q-difference operator annihilates the series");
    for (auto* sub : {ckc, ckw, ckq}) {
        sub->add_option("--model", ckModel, "model config JSON");
        sub->add_option("--out", ckOut, "report file (default stdout)");
    }
    ckc->add_option("--brane", ckBrane, "brane selector");
    ckc->add_option("--maxBeta", ckMaxBeta, "residue lattice cutoff");
    ckw->add_option("--brane", ckBrane, "brane selector");
    ckw->add_option("--maxBeta", ckMaxBeta, "residue lattice cutoff");
    ckq->add_option("--phase", ckPhase, "+ | -");
    ckq->add_option("--maxN", ckMaxN, "series truncation");

    std::string dpPhase = "+", dpZ = "0.05,0.02";
    auto* dp = app.add_subcommand("dump-poles", "pole and residue diagnostics");
    dp->add_option("--model", modelPath, "model config JSON")->required();
    dp->add_option("--brane", braneSel, "brane selector");
    dp->add_option("--phase", dpPhase, "+ | -");
    dp->add_option("--maxBeta", maxBeta, "degree cutoff");
    dp->add_option("--z", dpZ, "Kahler variable, re or re,im");
    dp->add_option("--out", outPath, "output file (default stdout)");

    auto* op = app.add_subcommand("operator", "export the q-difference operator");
    op->add_option("--model", modelPath, "model config JSON")->required();
    op->add_option("--phase", dpPhase, "+ | -");
    op->add_option("--out", outPath, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        thread_count();
        if (th->parsed()) return cmd_theta(qArg, xArg, terms, pochN, doPoch);
        if (cc->parsed())
            return cmd_central_charge(modelPath, braneSel, method, maxBeta, maxN, format,
                                      outPath);
        if (ck->parsed()) {
            if (ckc->parsed()) return cmd_check_contour(ckModel, ckBrane, ckMaxBeta, ckOut);
            if (ckw->parsed()) return cmd_check_wallcross(ckModel, ckBrane, ckMaxBeta, ckOut);
            if (ckq->parsed()) return cmd_check_qde(ckModel, ckPhase, ckMaxN, ckOut);
        }
        if (dp->parsed()) {
            auto [model, ctx] = model_from_file(modelPath);
            const BraneExpr B = parse_brane(braneSel, model);
            const int ph = (dpPhase == "-") ? -1 : +1;
            emit(residue_diagnostics_json(model, B, ph, Rat(maxBeta), parse_cplx(dpZ), ctx),
                 outPath);
            return 0;
        }
        if (op->parsed()) {
            auto [model, ctx] = model_from_file(modelPath);
            const int ph = (dpPhase == "-") ? -1 : +1;
            emit(operator_to_json(qde_operator(model, ph)), outPath);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
