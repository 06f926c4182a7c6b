#include "qkwall/branes.hpp"

#include <cmath>
#include <stdexcept>

namespace qkwall {

static Rat aexp_at(const Monomial& m, size_t i) {
    return i < m.aExp.size() ? m.aExp[i] : Rat(0);
}

cplx Monomial::eval(const std::vector<cplx>& a, cplx s, cplx z, const QContext& ctx) const {
    return std::exp(log_eval(a, s, z, ctx));
}

cplx Monomial::log_eval(const std::vector<cplx>& a, cplx s, cplx z, const QContext& ctx) const {
    cplx t = std::log(c);
    for (size_t i = 0; i < aExp.size(); ++i)
        if (aExp[i] != Rat(0)) t += rdouble(aExp[i]) * std::log(a.at(i));
    if (qExp != Rat(0)) t += rdouble(qExp) * std::log(ctx.q);
    if (sExp != Rat(0)) t += rdouble(sExp) * std::log(s);
    if (zExp != 0) t += static_cast<double>(zExp) * std::log(z);
    return t;
}

Monomial& Monomial::operator*=(const Monomial& o) {
    c *= o.c;
    if (o.aExp.size() > aExp.size()) aExp.resize(o.aExp.size(), Rat(0));
    for (size_t i = 0; i < o.aExp.size(); ++i) aExp[i] += o.aExp[i];
    qExp += o.qExp;
    sExp += o.sExp;
    zExp += o.zExp;
    return *this;
}

cplx eval_brane(const BraneExpr& B, cplx s, cplx z, const QContext& ctx) {
    cplx v = B.pref.eval(B.aValues, s, z, ctx);
    for (const ThetaFactor& f : B.factors) {
        cplx th = theta(f.arg.eval(B.aValues, s, z, ctx), ctx);
        if (f.power < 0 && std::abs(th) < ctx.tolAbs)
            throw std::domain_error("eval_brane: pole of a denominator theta factor");
        v *= std::pow(th, f.power);
    }
    return v;
}

cplx log_eval_brane(const BraneExpr& B, cplx s, cplx z, const QContext& ctx) {
    cplx t = B.pref.log_eval(B.aValues, s, z, ctx);
    for (const ThetaFactor& f : B.factors)
        t += static_cast<double>(f.power) *
             log_theta(f.arg.eval(B.aValues, s, z, ctx), ctx);
    return t;
}

Monomial s_shift_factor(const BraneExpr& B) {
    Monomial M;
    for (const ThetaFactor& f : B.factors) {
        if (!is_integer(f.arg.sExp))
            throw std::invalid_argument("s_shift_factor: non-integer s-exponent");
        const long long sigma = f.arg.sExp.numerator();
        if (sigma == 0) continue;
        // theta(q^sigma u)/theta(u) = (-u)^{-sigma} q^{-sigma(sigma-1)/2}
        Monomial ratio;
        ratio.c = std::pow(-f.arg.c, static_cast<double>(-sigma));
        ratio.aExp.resize(f.arg.aExp.size(), Rat(0));
        for (size_t i = 0; i < f.arg.aExp.size(); ++i) ratio.aExp[i] = -Rat(sigma) * f.arg.aExp[i];
        ratio.qExp = -Rat(sigma) * f.arg.qExp - Rat(sigma * (sigma - 1), 2);
        ratio.sExp = -Rat(sigma) * f.arg.sExp;
        ratio.zExp = static_cast<int>(-sigma) * f.arg.zExp;
        for (int rep = 0; rep < std::abs(f.power); ++rep) {
            if (f.power > 0) {
                M *= ratio;
            } else {
                Monomial inv;
                inv.c = cplx(1.0) / ratio.c;
                inv.aExp.resize(ratio.aExp.size(), Rat(0));
                for (size_t i = 0; i < ratio.aExp.size(); ++i) inv.aExp[i] = -ratio.aExp[i];
                inv.qExp = -ratio.qExp;
                inv.sExp = -ratio.sExp;
                inv.zExp = -ratio.zExp;
                M *= inv;
            }
        }
    }
    // the prefactor monomial s^{e} contributes q^{e}
    M.qExp += B.pref.sExp;
    return M;
}

bool check_grade_restriction(const BraneExpr& B, const GLSMData& model) {
    Rat total(0);
    for (const ThetaFactor& f : B.factors)
        total += Rat(f.power) * f.arg.sExp * f.arg.sExp;
    Rat target(0);
    if (model.phase > 0) {
        for (int i = 0; i < model.nPlus(); ++i)
            target += Rat(model.weights[i]) * Rat(model.weights[i]);
    } else {
        for (int i = model.nPlus(); i < model.n(); ++i)
            target += Rat(model.weights[i]) * Rat(model.weights[i]);
    }
    if (total != target) return false;
    // exactly one Poincare pair: theta(... s^m z^e)^{+1} / theta(... z^e)^{-1}
    int coupled = 0, partner = 0;
    int coupledZ = 0, partnerZ = 0;
    for (const ThetaFactor& f : B.factors) {
        if (f.arg.zExp == 0) continue;
        if (f.arg.sExp != Rat(0) && f.power == 1) {
            ++coupled;
            coupledZ = f.arg.zExp;
        } else if (f.arg.sExp == Rat(0) && f.power == -1) {
            ++partner;
            partnerZ = f.arg.zExp;
        }
    }
    return coupled == 1 && partner == 1 && coupledZ == partnerZ;
}

static void require_hypersurface(const GLSMData& model) {
    const int np = model.nPlus();
    if (np != model.n() - 1)
        throw std::invalid_argument("basis branes need a single negative weight");
    for (int i = 0; i < np; ++i)
        if (model.weights[i] != 1)
            throw std::invalid_argument("basis branes need unit positive weights");
}

static Monomial unit_a(const GLSMData& model, int i, const Rat& e) {
    Monomial m;
    m.aExp.assign(model.n(), Rat(0));
    m.aExp[i] = e;
    return m;
}

BraneExpr geometric_basis_brane(const GLSMData& model, int k) {
    require_hypersurface(model);
    const int np = model.nPlus();
    if (k < 0 || k >= np) throw std::invalid_argument("geometric_basis_brane: bad index");
    BraneExpr B;
    B.aValues = model.equivParams;
    Monomial num = unit_a(model, k, Rat(1));
    num.qExp = Rat(1);
    num.sExp = Rat(1);
    num.zExp = -1;
    B.factors.push_back({num, +1});
    Monomial den = unit_a(model, k, Rat(1));
    den.qExp = Rat(1);
    den.zExp = -1;
    B.factors.push_back({den, -1});
    for (int i = 0; i < np; ++i) {
        if (i == k) continue;
        Monomial f = unit_a(model, i, Rat(1));
        f.qExp = Rat(1);
        f.sExp = Rat(1);
        B.factors.push_back({f, +1});
    }
    return B;
}

BraneExpr lg_basis_brane(const GLSMData& model, int m, int l) {
    require_hypersurface(model);
    const int N = model.n();
    const int r = -model.weights[N - 1];
    if (m < 0 || m >= r || l < 0 || l >= r)
        throw std::invalid_argument("lg_basis_brane: torsion label out of range");
    // zeta^{-1} a_N^{1/r} = e^{-2 pi i m/r} q^{-l/r} a_N^{1/r}
    const cplx root = std::exp(cplx(0.0, -2.0 * M_PI * m / r));
    auto base = [&](Rat sExp, int zExp) {
        Monomial f = unit_a(model, N - 1, Rat(1, r));
        f.c = root;
        f.qExp = Rat(-l, r);
        f.sExp = sExp;
        f.zExp = zExp;
        return f;
    };
    BraneExpr B;
    B.aValues = model.equivParams;
    B.factors.push_back({base(Rat(-1), 1), +1});
    B.factors.push_back({base(Rat(0), 1), -1});
    B.factors.push_back({base(Rat(-1), 0), -1});
    Monomial last = unit_a(model, N - 1, Rat(1));
    last.sExp = Rat(-r);
    B.factors.push_back({last, +1});
    return B;
}

BraneExpr wall_cross(const BraneExpr& B) {
    BraneExpr W = B;
    Monomial num;
    num.sExp = Rat(-1);
    num.zExp = -1;
    W.factors.push_back({num, +1});
    Monomial den;
    den.zExp = -1;
    W.factors.push_back({den, -1});
    return W;
}

BraneExpr brane_mirror(const BraneExpr& B, const std::vector<int>& perm) {
    BraneExpr M = B;
    M.aValues.resize(perm.size());
    for (size_t j = 0; j < perm.size(); ++j) M.aValues[j] = B.aValues.at(perm[j]);
    auto flip = [&](Monomial& mo) {
        std::vector<Rat> ae(perm.size(), Rat(0));
        for (size_t j = 0; j < perm.size(); ++j) {
            size_t src = static_cast<size_t>(perm[j]);
            if (src < mo.aExp.size()) ae[j] = mo.aExp[src];
        }
        mo.aExp = std::move(ae);
        mo.sExp = -mo.sExp;
        mo.zExp = -mo.zExp;
    };
    flip(M.pref);
    for (ThetaFactor& f : M.factors) flip(f.arg);
    return M;
}

// Detects whether x is numerically q^M for some integer M; returns true and
// sets M on a hit.  Relies on model genericity for a clean separation.
static bool q_power_hit(cplx x, const QContext& ctx, long long& M) {
    const double lq = std::log(std::abs(ctx.q));
    const double est = std::log(std::abs(x)) / lq;
    const long long Mi = std::llround(est);
    if (std::abs(est - static_cast<double>(Mi)) > 0.45) return false;
    const cplx ratio = x / ctx.qpow(static_cast<double>(Mi));
    if (std::abs(ratio - cplx(1.0)) < 1e-8) {
        M = Mi;
        return true;
    }
    return false;
}

cplx restrict_to_fixed_point(const BraneExpr& B, const GLSMData& model, int k,
                             cplx zeta, cplx z, const QContext& ctx) {
    const int Dk = model.weights.at(k);
    const cplx s0 = zeta * std::exp(-std::log(model.equivParams[k]) / static_cast<double>(Dk));
    cplx val = B.pref.eval(B.aValues, s0, z, ctx);
    int order = 0;
    for (const ThetaFactor& f : B.factors) {
        const cplx arg = f.arg.eval(B.aValues, s0, z, ctx);
        long long M = 0;
        if (q_power_hit(arg, ctx, M)) {
            if (f.arg.sExp == Rat(0))
                throw std::domain_error("restrict_to_fixed_point: s-independent factor vanishes");
            order += f.power;
            // slope of the simple zero: d theta(arg)/d log s = m q^M theta'(q^M)
            const cplx v = rdouble(f.arg.sExp) * ctx.qpow(static_cast<double>(M)) *
                           theta_deriv_qpow(M, ctx);
            val *= std::pow(v, f.power);
        } else {
            val *= std::pow(theta(arg, ctx), f.power);
        }
    }
    if (order > 0) return cplx(0.0);
    if (order < 0) throw std::domain_error("restrict_to_fixed_point: net pole at the point");
    return val;
}

} // namespace qkwall
