#include "qkwall/central_charge.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <tuple>

#include "qkwall/integrals.hpp"

namespace qkwall {

LevelStructure v_plus_dual(const GLSMData& model) {
    LevelStructure R;
    for (int i = 0; i < model.nPlus(); ++i) {
        LevelTerm t;
        t.aExp.assign(model.n(), 0);
        t.aExp[i] = -1;
        t.sExp = -model.weights[i];
        t.wExp = -model.rCharges[i] / 2;
        t.mult = 1;
        R.terms.push_back(t);
    }
    return R;
}

int level_sign(const LevelStructure& R, const Rat& beta) {
    long long sigma = 0;
    for (const LevelTerm& t : R.terms)
        sigma += t.mult * rfloor(Rat(t.sExp) * beta - t.wExp);
    return (sigma % 2 == 0) ? +1 : -1;
}

cplx level_det_factor(const LevelStructure& R, const Rat& beta,
                      const std::vector<cplx>& a, cplx s, const QContext& ctx) {
    cplx v(1.0);
    for (const LevelTerm& t : R.terms) {
        const Rat x = Rat(t.sExp) * beta - t.wExp;
        cplx A = std::exp(static_cast<double>(t.sExp) * std::log(s));
        for (size_t i = 0; i < t.aExp.size(); ++i)
            if (t.aExp[i] != 0)
                A *= std::exp(static_cast<double>(t.aExp[i]) * std::log(a.at(i)));
        // theta(A q^{-x}) / theta(A q^{{-x}}), an exact shift monomial, times
        // (-A) when x is integral
        cplx term;
        if (is_integer(x)) {
            term = -A * theta_shift_factor(A, -x.numerator(), ctx);
        } else {
            const Rat fr = rfrac(-x);
            const cplx base = A * ctx.qpow(fr);
            term = theta_shift_factor(base, -rfloor(x) - 1, ctx);
        }
        for (int rep = 0; rep < std::abs(t.mult); ++rep)
            v = (t.mult > 0) ? v * term : v / term;
    }
    return static_cast<double>(level_sign(R, beta)) * v;
}

// Calibrated log-space engine for the beta summand of H^K_R at s.  When
// skipSelf >= 0 the vanishing pair (1 - U_k)/phi(U_k q^{-d_k}) is cancelled
// algebraically, for evaluation exactly at the fixed point.
static cplx log_hk(const GLSMData& model, const Rat& beta, const LevelStructure& R,
                   cplx s, int skipSelf, const QContext& ctx) {
    const Rat c = rfrac(beta);
    const cplx ls = std::log(s);
    const cplx lq = std::log(ctx.q);
    cplx t(0.0);

    // level monomial, orientation x = wExp - sExp*beta, signed base -A
    for (const LevelTerm& lt : R.terms) {
        const Rat x = lt.wExp - Rat(lt.sExp) * beta;
        const long long xf = rfloor(x);
        const Rat fx = rfrac(x);
        cplx lA = static_cast<double>(lt.sExp) * ls;
        for (size_t i = 0; i < lt.aExp.size(); ++i)
            if (lt.aExp[i] != 0)
                lA += static_cast<double>(lt.aExp[i]) * std::log(model.equivParams.at(i));
        const cplx A = std::exp(lA);
        cplx contrib = static_cast<double>(xf + 1) * std::log(-A * ctx.qpow(-fx)) -
                       0.5 * static_cast<double>(xf) * static_cast<double>(xf + 1) * lq;
        const bool fixed = is_integer(c * Rat(lt.sExp));
        if (fixed) contrib -= std::log(-A);
        t += static_cast<double>(lt.mult) * contrib;
    }

    // Gamma-class part
    for (int i = 0; i < model.n(); ++i) {
        const Rat d = d_of(model, i, beta);
        const cplx U = std::exp(-std::log(model.equivParams[i]) -
                                static_cast<double>(model.weights[i]) * ls);
        const bool fixed = is_integer(c * Rat(model.weights[i]));
        if (i == skipSelf) {
            if (!is_integer(d) || d < Rat(0))
                throw std::logic_error("log_hk: self-direction degree must be a nonnegative integer");
            const long long dd = d.numerator();
            for (long long j = 0; j < ctx.productTerms; ++j) {
                if (j == dd) continue;
                t -= std::log(cplx(1.0) - ctx.qpow(static_cast<double>(j - dd)) * U);
            }
            continue;
        }
        if (fixed) t += std::log(cplx(1.0) - U);
        t -= log_phi(U * ctx.qpow(-d), ctx);
    }
    return t;
}

cplx hk_coefficient(const GLSMData& model, const Rat& beta, const LevelStructure& R,
                    cplx s, const QContext& ctx) {
    return std::exp(log_hk(model, beta, R, s, -1, ctx));
}

cplx chern_restriction(const BraneExpr& B, const Sector& v, cplx s, cplx z,
                       const QContext& ctx) {
    return eval_brane(B, ctx.qpow(v.c) * s, z, ctx);
}

cplx pair_orbifold_euler(const GLSMData& model,
                         const std::function<cplx(const Sector&, cplx)>& f,
                         const QContext& ctx) {
    cplx total(0.0);
    for (const Sector& v : box_sectors(model)) {
        for (int i : v.fixedCoords) {
            if (i >= model.nPlus()) continue;
            const int Di = model.weights[i];
            for (int m = 0; m < Di; ++m) {
                const cplx s = std::exp(cplx(0.0, 2.0 * M_PI * m / Di)) *
                               std::exp(-std::log(model.equivParams[i]) / static_cast<double>(Di));
                cplx den(1.0);
                for (int j : v.fixedCoords) {
                    if (j == i) continue;
                    const cplx Uj = std::exp(-std::log(model.equivParams[j]) -
                                             static_cast<double>(model.weights[j]) * std::log(s));
                    den *= (cplx(1.0) - Uj);
                }
                if (std::abs(den) < model.genericityGap)
                    throw std::runtime_error("pair_orbifold_euler: degenerate localization denominator");
                total += f(v, s) / den;
            }
        }
    }
    return total;
}

namespace {

struct WorkSetup {
    GLSMData work;
    BraneExpr brane;
    cplx zstar;
    int direction;
};

WorkSetup make_work(const GLSMData& model, const BraneExpr& B) {
    WorkSetup w;
    if (model.phase > 0) {
        w.work = model;
        w.brane = B;
        w.zstar = 0.3 * std::exp(cplx(0.0, 0.7));
        w.direction = +1;
    } else {
        std::vector<int> perm;
        w.work = mirrored(model, &perm);
        w.work.phase = +1;
        w.brane = brane_mirror(B, perm);
        w.zstar = std::exp(cplx(0.0, -0.4)) / 30.0; // w = 1/z at |z| = 30
        w.direction = -1;
    }
    return w;
}

using CompKey = std::tuple<int, int, Rat>;

CCComponent& component_for(std::vector<CCComponent>& comps, int k, int m, const Rat& frac,
                           cplx s0base) {
    for (CCComponent& c : comps)
        if (c.k == k && c.rootIndex == m && c.fracShift == frac) return c;
    CCComponent c;
    c.k = k;
    c.rootIndex = m;
    c.zetaRoot = std::exp(cplx(0.0, 2.0 * M_PI * m / 1)); // set properly below
    c.fracShift = frac;
    c.prefactorArg = cplx(1.0) / s0base;
    comps.push_back(c);
    return comps.back();
}

bool default_level(const GLSMData& work, const LevelStructure& R) {
    const LevelStructure def = v_plus_dual(work);
    if (R.terms.size() != def.terms.size()) return false;
    for (size_t i = 0; i < R.terms.size(); ++i) {
        const LevelTerm &x = R.terms[i], &y = def.terms[i];
        if (x.aExp != y.aExp || x.sExp != y.sExp || x.wExp != y.wExp || x.mult != y.mult)
            return false;
    }
    return true;
}

} // namespace

CentralChargeSeries central_charge_series(const GLSMData& model, const BraneExpr& B,
                                          const LevelStructure& R, const Rat& maxBeta,
                                          const QContext& ctx) {
    WorkSetup w = make_work(model, B);
    if (!default_level(w.work, R) && !default_level(model, R))
        throw std::invalid_argument(
            "central_charge_series: residue assembly is defined for the default level V^dual");

    CentralChargeSeries out;
    out.direction = w.direction;

    auto f = [&](cplx s) {
        return std::exp(log_gamma_q(w.work, s, ctx) + log_eval_brane(w.brane, s, w.zstar, ctx) -
                        std::log(s));
    };

    for (int k = 0; k < w.work.nPlus(); ++k) {
        const int Dk = w.work.weights[k];
        for (int m = 0; m < Dk; ++m) {
            const cplx s0base = std::exp(cplx(0.0, 2.0 * M_PI * m / Dk)) *
                                std::exp(-std::log(w.work.equivParams[k]) / static_cast<double>(Dk));
            for (long long num = 0;; ++num) {
                const Rat beta(num, Dk);
                if (beta > maxBeta) break;
                const Rat d = d_of(w.work, k, beta);
                if (!is_integer(d) || d < Rat(0)) continue;
                const Rat frac = rfrac(beta);
                const long long n = rfloor(beta);
                const cplx loc = s0base * std::exp(rdouble(beta) * std::log(ctx.q));
                const cplx res = numeric_residue(f, loc, 0.05 * std::abs(loc), 128, ctx);
                const cplx pref = theta(cplx(1.0) / w.zstar, ctx) /
                                  theta(ctx.qpow(-frac) / (s0base * w.zstar), ctx) *
                                  std::pow(w.zstar, static_cast<double>(n));
                CCComponent& comp = component_for(out.components, k, m, frac, s0base);
                comp.zetaRoot = std::exp(cplx(0.0, 2.0 * M_PI * m / Dk));
                comp.coeffs[n] = res / pref;
            }
        }
    }
    return out;
}

CentralChargeSeries pairing_central_charge_series(const GLSMData& model, const BraneExpr& B,
                                                  const LevelStructure& R, const Rat& maxBeta,
                                                  const QContext& ctx) {
    WorkSetup w = make_work(model, B);
    const LevelStructure lvl = default_level(model, R) ? v_plus_dual(w.work) : R;

    CentralChargeSeries out;
    out.direction = w.direction;

    // restriction factors of E_+ = B * theta(s^-1 z^-1)/theta(z^-1)
    std::vector<ThetaFactor> facs = w.brane.factors;
    {
        Monomial num;
        num.sExp = Rat(-1);
        num.zExp = -1;
        facs.push_back({num, +1});
        Monomial den;
        den.zExp = -1;
        facs.push_back({den, -1});
    }

    const double lq = std::log(std::abs(ctx.q));

    for (int k = 0; k < w.work.nPlus(); ++k) {
        const int Dk = w.work.weights[k];
        for (int m = 0; m < Dk; ++m) {
            const cplx s0 = std::exp(cplx(0.0, 2.0 * M_PI * m / Dk)) *
                            std::exp(-std::log(w.work.equivParams[k]) / static_cast<double>(Dk));
            for (long long num = 0;; ++num) {
                const Rat beta(num, Dk);
                if (beta > maxBeta) break;
                const Rat d = d_of(w.work, k, beta);
                if (!is_integer(d) || d < Rat(0)) continue;
                const Rat frac = rfrac(beta);
                const long long n = rfloor(beta);

                const cplx lh = log_hk(w.work, beta, lvl, s0, k, ctx);

                cplx den(1.0);
                for (int j = 0; j < w.work.n(); ++j) {
                    if (j == k) continue;
                    if (!is_integer(frac * Rat(w.work.weights[j]))) continue;
                    const cplx Uj =
                        std::exp(-std::log(w.work.equivParams[j]) -
                                 static_cast<double>(w.work.weights[j]) * std::log(s0));
                    den *= (cplx(1.0) - Uj);
                }

                const cplx x0 = ctx.qpow(frac) * s0;
                cplx val = w.brane.pref.eval(w.brane.aValues, x0, w.zstar, ctx);
                cplx ucorr(1.0);
                int V = 0, order = 0;
                for (const ThetaFactor& fct : facs) {
                    const cplx arg = fct.arg.eval(w.brane.aValues, x0, w.zstar, ctx);
                    const double est = std::log(std::abs(arg)) / lq;
                    const long long M = std::llround(est);
                    const bool hit = std::abs(est - static_cast<double>(M)) < 0.45 &&
                                     std::abs(arg / ctx.qpow(static_cast<double>(M)) - cplx(1.0)) < 1e-8;
                    if (hit) {
                        order += fct.power;
                        const double slope = rdouble(fct.arg.sExp);
                        const cplx vf =
                            slope * ctx.qpow(static_cast<double>(M)) * theta_deriv_qpow(M, ctx);
                        const cplx uf = slope * ((M % 2 == 0) ? 1.0 : -1.0) *
                                        ctx.qpow(-0.5 * static_cast<double>(M) *
                                                 static_cast<double>(M - 1));
                        val *= std::pow(vf, fct.power);
                        ucorr *= std::pow(uf, fct.power);
                        if (fct.power > 0) ++V;
                    } else {
                        val *= std::pow(theta(arg, ctx), fct.power);
                    }
                }

                cplx coeff;
                if (order > 0) {
                    coeff = cplx(0.0);
                } else if (order < 0) {
                    throw std::runtime_error("pairing path: net pole in the brane restriction");
                } else {
                    const double sgn = (V % 2 == 0) ? 1.0 : -1.0;
                    coeff = sgn * std::exp(lh) * val / (ucorr * den);
                }
                CCComponent& comp = component_for(out.components, k, m, frac, s0);
                comp.zetaRoot = std::exp(cplx(0.0, 2.0 * M_PI * m / Dk));
                comp.coeffs[n] = coeff;
            }
        }
    }
    return out;
}

CentralChargeSeries geometric_example_series(const GLSMData& model, int k, int maxN,
                                             const QContext& ctx) {
    const int np = model.nPlus();
    const int N = model.n();
    const int r = -model.weights[N - 1];
    if (np != N - 1) throw std::invalid_argument("geometric_example_series: hypersurface family required");
    const cplx ak = model.equivParams[k];
    const cplx aN = model.equivParams[N - 1];

    CentralChargeSeries out;
    out.direction = +1;
    CCComponent comp;
    comp.k = k;
    comp.rootIndex = 0;
    comp.zetaRoot = cplx(1.0);
    comp.fracShift = Rat(0);
    comp.prefactorArg = ak;
    const cplx phq = phi(ctx.q, ctx);
    for (int n = 0; n <= maxN; ++n) {
        cplx c = ak / phq / pochhammer(ctx.q, n, ctx);
        for (int i = 0; i < np; ++i) {
            if (i == k) continue;
            c *= phi(ctx.qpow(n + 1.0) * model.equivParams[i] / ak, ctx);
        }
        c /= phi(ctx.qpow(static_cast<double>(r) * n + 1.0) /
                     (aN * std::pow(ak, static_cast<double>(r))),
                 ctx);
        comp.coeffs[n] = c;
    }
    out.components.push_back(comp);
    return out;
}

CentralChargeSeries lg_example_series(const GLSMData& model, int m, int l, int maxN,
                                      const QContext& ctx) {
    const int np = model.nPlus();
    const int N = model.n();
    const int r = -model.weights[N - 1];
    if (np != N - 1) throw std::invalid_argument("lg_example_series: hypersurface family required");
    const cplx aN = model.equivParams[N - 1];
    const cplx aNr = std::exp(std::log(aN) / static_cast<double>(r));
    const cplx zeta = std::exp(cplx(0.0, 2.0 * M_PI * m / r)) * ctx.qpow(Rat(l, r));

    CentralChargeSeries out;
    out.direction = -1;
    CCComponent comp;
    comp.k = 0;
    comp.rootIndex = m;
    comp.zetaRoot = std::exp(cplx(0.0, 2.0 * M_PI * m / r));
    comp.fracShift = Rat(l, r);
    comp.prefactorArg = std::exp(cplx(0.0, -2.0 * M_PI * m / r)) * aNr;
    const cplx phq = phi(ctx.q, ctx);
    for (int n = 0; n <= maxN; ++n) {
        cplx c = -phi(ctx.qpow(static_cast<double>(l + r * n)), ctx) / (phq * phq);
        for (int i = 0; i < np; ++i)
            c /= phi(zeta * ctx.qpow(static_cast<double>(n)) /
                         (model.equivParams[i] * aNr),
                     ctx);
        comp.coeffs[n] = c;
    }
    out.components.push_back(comp);
    return out;
}

CCEval eval_central_charge(const CentralChargeSeries& Z, cplx z, const QContext& ctx) {
    CCEval out;
    const cplx t = (Z.direction > 0) ? z : cplx(1.0) / z;
    for (const CCComponent& comp : Z.components) {
        const cplx pref = theta(cplx(1.0) / t, ctx) /
                          theta(ctx.qpow(-comp.fracShift) * comp.prefactorArg / t, ctx);
        // fixed summation order: ascending n
        std::vector<std::pair<long long, cplx>> terms(comp.coeffs.begin(), comp.coeffs.end());
        std::vector<double> mags;
        std::vector<cplx> vals;
        for (const auto& [n, c] : terms) {
            const cplx v = c * std::pow(t, static_cast<double>(n));
            vals.push_back(v);
            mags.push_back(std::abs(v));
        }
        // ratio test on the last three nonzero terms
        bool convergent = true;
        std::vector<double> nz;
        for (double mg : mags)
            if (mg > 0.0) nz.push_back(mg);
        if (nz.size() >= 3) {
            const double r1 = nz[nz.size() - 1] / std::max(nz[nz.size() - 2], 1e-300);
            const double r2 = nz[nz.size() - 2] / std::max(nz[nz.size() - 3], 1e-300);
            if (r1 > 1.0 && r2 > 1.0) convergent = false;
        }
        size_t cut = vals.size();
        if (!convergent) {
            // optimal truncation at the smallest term
            size_t best = 0;
            for (size_t i = 1; i < mags.size(); ++i)
                if (mags[i] < mags[best]) best = i;
            cut = best + 1;
            out.convergent = false;
        }
        cplx sum(0.0);
        for (size_t i = 0; i < cut; ++i) sum += vals[i];
        out.usedTerms += static_cast<int>(cut);
        out.value += pref * sum;
    }
    return out;
}

} // namespace qkwall
