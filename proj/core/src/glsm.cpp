#include "qkwall/glsm.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qkwall {

int GLSMData::nPlus() const {
    int np = 0;
    while (np < n() && weights[np] > 0) ++np;
    return np;
}

void GLSMData::validate() const {
    const int N = n();
    if (rCharges.size() != weights.size() || equivParams.size() != weights.size())
        throw std::invalid_argument("GLSMData: field lengths differ");
    if (phase != +1 && phase != -1)
        throw std::invalid_argument("GLSMData: phase must be +1 or -1");
    for (int i = 0; i < N; ++i) {
        if (weights[i] == 0) throw std::invalid_argument("GLSMData: zero weight");
        if (rCharges[i] < Rat(0)) throw std::invalid_argument("GLSMData: negative R-charge");
        if (equivParams[i] == cplx(0.0)) throw std::invalid_argument("GLSMData: zero equivariant parameter");
    }
    const int np = nPlus();
    if (np == 0 || np == N)
        throw std::invalid_argument("GLSMData: need 0 < N_+ < N");
    for (int i = np; i < N; ++i)
        if (weights[i] > 0)
            throw std::invalid_argument("GLSMData: positive weights must come first");
}

GLSMData mirrored(const GLSMData& model, std::vector<int>* perm) {
    const int N = model.n();
    const int np = model.nPlus();
    GLSMData m;
    m.phase = -model.phase;
    m.genericityGap = model.genericityGap;
    std::vector<int> p;
    for (int i = np; i < N; ++i) p.push_back(i);
    for (int i = 0; i < np; ++i) p.push_back(i);
    for (int j : p) {
        m.weights.push_back(-model.weights[j]);
        m.rCharges.push_back(model.rCharges[j]);
        m.equivParams.push_back(model.equivParams[j]);
    }
    if (perm) *perm = p;
    return m;
}

std::vector<Rat> effective_classes(const GLSMData& model, const Rat& maxBeta) {
    std::set<Rat> out;
    if (maxBeta < Rat(0)) return {};
    for (int i = 0; i < model.nPlus(); ++i) {
        const long long D = model.weights[i];
        for (long long num = 0; Rat(num, D) <= maxBeta; ++num)
            out.insert(Rat(num, D));
    }
    return {out.begin(), out.end()};
}

static Sector make_sector(const GLSMData& model, const Rat& c) {
    Sector v;
    v.c = c;
    v.order = c.numerator() == 0 ? 1 : c.denominator();
    for (int i = 0; i < model.n(); ++i)
        if (is_integer(c * Rat(model.weights[i])))
            v.fixedCoords.push_back(i);
    return v;
}

std::vector<Sector> box_sectors(const GLSMData& model) {
    std::set<Rat> cs;
    for (int i = 0; i < model.nPlus(); ++i)
        for (int mm = 0; mm < model.weights[i]; ++mm)
            cs.insert(Rat(mm, model.weights[i]));
    std::vector<Sector> out;
    for (const Rat& c : cs) out.push_back(make_sector(model, c));
    return out;
}

Rat d_of(const GLSMData& model, int i, const Rat& beta) {
    return Rat(model.weights[i]) * beta - model.rCharges[i] / 2;
}

Sector sector_of_degree(const GLSMData& model, const Rat& beta) {
    return make_sector(model, rfrac(beta));
}

Rat age(const GLSMData& model, const Sector& v, int i) {
    return rfrac(v.c * Rat(model.weights[i]));
}

DefObs def_obs_weights(const GLSMData& model, const Rat& beta) {
    DefObs out;
    for (int i = 0; i < model.n(); ++i) {
        const Rat d = d_of(model, i, beta);
        const long long fl = rfloor(d);
        const Rat fr = rfrac(d);
        if (d >= Rat(0)) {
            for (long long k = 0; k <= fl; ++k)
                out.V.push_back({i, model.weights[i], -Rat(k) - fr});
        } else {
            for (long long k = 0; k <= -fl - 2; ++k)
                out.W.push_back({i, model.weights[i], Rat(k + 1) - fr});
        }
    }
    return out;
}

TeardropChi teardrop_euler(long long n, long long a) {
    if (a < 1) throw std::invalid_argument("teardrop_euler: a must be >= 1");
    TeardropChi chi;
    const Rat x(n, a);
    const long long fl = rfloor(x);
    const Rat fr = rfrac(x);
    if (n >= 0) {
        for (long long k = 0; k <= fl; ++k)
            chi.exponents.push_back(-fr - Rat(k));
    } else if (n < -a) {
        chi.sign = -1;
        for (long long k = 0; k <= -fl - 2; ++k)
            chi.exponents.push_back(Rat(k + 1) - fr);
    }
    // n in [-a, -1]: both cohomology groups vanish, empty list
    return chi;
}

cplx teardrop_chi_value(const TeardropChi& chi, const QContext& ctx) {
    cplx v(0.0);
    for (const Rat& e : chi.exponents) v += ctx.qpow(e);
    return static_cast<double>(chi.sign) * v;
}

} // namespace qkwall
