#include "qkwall/integrals.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qkwall {

cplx log_gamma_q(const GLSMData& model, cplx s, const QContext& ctx) {
    cplx t(0.0);
    const cplx ls = std::log(s);
    for (int i = 0; i < model.n(); ++i) {
        const cplx u = std::exp(-std::log(model.equivParams[i]) -
                                static_cast<double>(model.weights[i]) * ls) *
                       ctx.qpow(model.rCharges[i] / 2);
        t -= log_phi(u, ctx);
    }
    return t;
}

cplx gamma_q(const GLSMData& model, cplx s, const QContext& ctx) {
    return std::exp(log_gamma_q(model, s, ctx));
}

static cplx root_of_unity(int m, int D) {
    return std::exp(cplx(0.0, 2.0 * M_PI * m / std::abs(D)));
}

// zeta_m a_k^{-1/D_k} in the plane of the model passed in
static cplx base_point(const GLSMData& model, int k, int m) {
    const int Dk = model.weights[k];
    return root_of_unity(m, Dk) *
           std::exp(-std::log(model.equivParams[k]) / static_cast<double>(Dk));
}

// Pole towers of the working (phase +) model: (k, m, beta) with
// d_k(beta) a nonnegative integer.
static std::vector<PoleSpec> tower_poles(const GLSMData& work, const Rat& maxBeta,
                                         const QContext& ctx, bool invert) {
    std::vector<PoleSpec> out;
    if (maxBeta < Rat(0)) return out;
    for (int k = 0; k < work.nPlus(); ++k) {
        const int Dk = work.weights[k];
        for (long long num = 0;; ++num) {
            const Rat beta(num, Dk);
            if (beta > maxBeta) break;
            const Rat d = d_of(work, k, beta);
            if (!is_integer(d) || d < Rat(0)) continue;
            for (int m = 0; m < Dk; ++m) {
                PoleSpec p;
                p.k = k;
                p.beta = beta;
                p.m = m;
                cplx loc = base_point(work, k, m) * std::exp(rdouble(beta) * std::log(ctx.q));
                p.location = invert ? cplx(1.0) / loc : loc;
                out.push_back(p);
            }
        }
    }
    return out;
}

static void check_genericity(const std::vector<PoleSpec>& poles, double gap) {
    // relative separation: the lattice accumulates at 0 (or infinity), so an
    // absolute gap would always fail for deep towers
    for (size_t i = 0; i < poles.size(); ++i)
        for (size_t j = i + 1; j < poles.size(); ++j) {
            const double scale =
                std::max(std::abs(poles[i].location), std::abs(poles[j].location));
            if (std::abs(poles[i].location - poles[j].location) < gap * scale)
                throw std::runtime_error("pole separation below the genericity gap");
        }
}

std::vector<PoleSpec> enumerate_poles(const GLSMData& model, int phase, const Rat& maxBeta,
                                      const QContext& ctx) {
    std::vector<PoleSpec> poles =
        (phase > 0) ? tower_poles(model, maxBeta, ctx, false)
                    : tower_poles(mirrored(model), maxBeta, ctx, true);
    check_genericity(poles, model.genericityGap);
    return poles;
}

cplx numeric_residue(const std::function<cplx(cplx)>& f, cplx s0, double r, int M,
                     const QContext& ctx) {
    if (M < 64) throw std::invalid_argument("numeric_residue: M must be >= 64");
    double nodeMag = 0.0;
    auto quad = [&](int nodes) {
        cplx tot(0.0);
        for (int j = 0; j < nodes; ++j) {
            const cplx e = std::exp(cplx(0.0, 2.0 * M_PI * j / nodes));
            const cplx term = f(s0 + r * e) * (r * e);
            nodeMag = std::max(nodeMag, std::abs(term));
            tot += term;
        }
        return tot / static_cast<double>(nodes);
    };
    const cplx v1 = quad(M);
    const cplx v2 = quad(2 * M);
    // the summands themselves are accurate only to machine epsilon, so a
    // heavily cancelling residue cannot agree better than that
    const double floor = std::max({ctx.tolAbs, 1e-13 * nodeMag});
    if (std::abs(v2) > floor &&
        std::abs(v1 - v2) / std::abs(v2) > std::max(ctx.tolRel, 1e-9) &&
        std::abs(v1 - v2) > floor)
        throw std::runtime_error("numeric_residue: quadrature did not converge under M-doubling");
    return v2;
}

double default_delta(const GLSMData& model, const QContext& ctx) {
    double inner = 0.0;
    for (const PoleSpec& p : tower_poles(model, Rat(0), ctx, false))
        inner = std::max(inner, std::abs(p.location));
    double outer = std::numeric_limits<double>::infinity();
    const GLSMData mir = mirrored(model);
    Rat maxB(2);
    for (const PoleSpec& p : tower_poles(mir, maxB, ctx, true))
        outer = std::min(outer, std::abs(p.location));
    if (!(inner > 0.0) || !std::isfinite(outer) || inner >= outer)
        throw std::runtime_error("default_delta: no separating annulus between pole lattices");
    return std::sqrt(inner * outer);
}

cplx contour_integral(const GLSMData& model, const BraneExpr& B, cplx z, double delta,
                      int M, const QContext& ctx) {
    for (int ph : {+1, -1})
        for (const PoleSpec& p : enumerate_poles(model, ph, Rat(3), ctx))
            if (std::abs(std::abs(p.location) - delta) < model.genericityGap)
                throw std::runtime_error("contour_integral: contour touches a pole");
    auto quad = [&](int nodes) {
        cplx tot(0.0);
        for (int j = 0; j < nodes; ++j) {
            const cplx s = delta * std::exp(cplx(0.0, 2.0 * M_PI * j / nodes));
            tot += std::exp(log_gamma_q(model, s, ctx) + log_eval_brane(B, s, z, ctx));
        }
        return tot / static_cast<double>(nodes);
    };
    const cplx v1 = quad(M);
    const cplx v2 = quad(2 * M);
    const double scale = std::max(std::abs(v2), 1e-300);
    if (std::abs(v2) > ctx.tolAbs && std::abs(v1 - v2) / scale > std::max(ctx.tolRel, 1e-9))
        throw std::runtime_error("contour_integral: quadrature did not converge under M-doubling");
    return v2;
}

ResidueBreakdown residue_sum(const GLSMData& model, const BraneExpr& B, int phase,
                             const Rat& maxBeta, cplx z, const QContext& ctx) {
    ResidueBreakdown out;
    const double sign = (phase > 0) ? 1.0 : -1.0;
    std::vector<PoleSpec> poles =
        (phase > 0) ? tower_poles(model, maxBeta, ctx, false)
                    : tower_poles(mirrored(model), maxBeta, ctx, true);
    check_genericity(poles, model.genericityGap);
    auto f = [&](cplx s) {
        return std::exp(log_gamma_q(model, s, ctx) + log_eval_brane(B, s, z, ctx) -
                        std::log(s));
    };
    for (const PoleSpec& p : poles) {
        const double rad = 0.05 * std::abs(p.location);
        const cplx res = sign * numeric_residue(f, p.location, rad, 128, ctx);
        out.perPole.emplace_back(p, res);
        out.perBeta[p.beta] += res;
        out.total += res;
    }
    return out;
}

} // namespace qkwall
