#include "qkwall/qde.hpp"

#include <cmath>
#include <stdexcept>

namespace qkwall {

int QDifferenceOperator::order() const {
    int o = 0;
    for (const QDETerm& t : terms) o = std::max(o, std::abs(t.shift));
    return o;
}

namespace {

struct Factor {
    Monomial c;
    int shift = 0;
};

// expand prod (1 - c_f T^{shift_f}) into terms with the given overall
// monomial and z power
void expand(const std::vector<Factor>& facs, const Monomial& overall, double sign,
            int zPower, std::vector<QDETerm>& out) {
    const size_t n = facs.size();
    if (n > 24) throw std::invalid_argument("qde_operator: too many factors to expand");
    for (size_t mask = 0; mask < (size_t(1) << n); ++mask) {
        QDETerm t;
        t.coeff = overall;
        t.coeff.c *= sign;
        t.zPower = zPower;
        for (size_t f = 0; f < n; ++f) {
            if (!(mask & (size_t(1) << f))) continue;
            Monomial neg = facs[f].c;
            neg.c = -neg.c;
            t.coeff *= neg;
            t.shift += facs[f].shift;
        }
        out.push_back(t);
    }
}

QDifferenceOperator general_operator(const GLSMData& model) {
    const int np = model.nPlus();
    std::vector<Factor> plus, minus;
    for (int i = 0; i < np; ++i) {
        const int Di = model.weights[i];
        for (int k = 1; k <= Di; ++k) {
            Factor f;
            f.c.aExp.assign(model.n(), Rat(0));
            f.c.aExp[i] = Rat(1);
            f.c.qExp = Rat(k) - model.rCharges[i] / 2 - Rat(Di);
            f.shift = Di;
            plus.push_back(f);
        }
    }
    for (int i = np; i < model.n(); ++i) {
        const int Di = model.weights[i];
        for (int k = 0; k <= -Di - 1; ++k) {
            Factor f;
            f.c.aExp.assign(model.n(), Rat(0));
            f.c.aExp[i] = Rat(-1);
            f.c.qExp = Rat(k) + model.rCharges[i] / 2;
            f.shift = -Di;
            minus.push_back(f);
        }
    }
    QDifferenceOperator L;
    Monomial one;
    expand(plus, one, +1.0, 0, L.terms);
    expand(minus, one, -1.0, 1, L.terms);
    return L;
}

} // namespace

QDifferenceOperator qde_operator(const GLSMData& model, int phase) {
    if (phase > 0) return general_operator(model);
    std::vector<int> perm;
    const GLSMData mir = mirrored(model, &perm);
    QDifferenceOperator L = general_operator(mir);
    // T_w = T_z^{-1}, w = z^{-1}; carry exponents back to the original
    // parameter order
    for (QDETerm& t : L.terms) {
        t.shift = -t.shift;
        t.zPower = -t.zPower;
        std::vector<Rat> ae(model.n(), Rat(0));
        for (size_t j = 0; j < perm.size(); ++j) {
            if (j < t.coeff.aExp.size()) ae[perm[j]] = t.coeff.aExp[j];
        }
        t.coeff.aExp = std::move(ae);
    }
    return L;
}

cplx apply_operator(const QDifferenceOperator& L, const std::function<cplx(cplx)>& f,
                    cplx z, const std::vector<cplx>& a, const QContext& ctx) {
    cplx v(0.0);
    for (const QDETerm& t : L.terms) {
        const cplx c = t.coeff.eval(a, cplx(1.0), cplx(1.0), ctx);
        const cplx zp = std::exp(static_cast<double>(t.zPower) * std::log(z));
        v += c * zp * f(ctx.qpow(static_cast<double>(t.shift)) * z);
    }
    return v;
}

double verify_prefactor_relation(const Rat& beta, cplx c, cplx z, const QContext& ctx) {
    const Rat fr = rfrac(beta);
    const long long fl = rfloor(beta);
    auto pref = [&](cplx zz) {
        return theta(cplx(1.0) / zz, ctx) / theta(ctx.qpow(-fr) * c / zz, ctx) *
               std::exp(static_cast<double>(fl) * std::log(zz));
    };
    const cplx lhs = pref(ctx.q * z);
    const cplx rhs = ctx.qpow(beta) / c * pref(z);
    return std::abs(lhs - rhs) / std::max(std::abs(rhs), 1e-300);
}

double qde_residual(const GLSMData& model, int phase, const CentralChargeSeries& Z,
                    const std::vector<cplx>& zSamples, const QContext& ctx) {
    const QDifferenceOperator L = qde_operator(model, phase);
    auto f = [&](cplx z) { return eval_central_charge(Z, z, ctx).value; };
    double worst = 0.0;
    for (cplx z : zSamples) {
        double scale = 1e-300;
        for (const QDETerm& t : L.terms)
            scale = std::max(scale, std::abs(f(ctx.qpow(static_cast<double>(t.shift)) * z)));
        worst = std::max(worst, std::abs(apply_operator(L, f, z, model.equivParams, ctx)) / scale);
    }
    return worst;
}

} // namespace qkwall
