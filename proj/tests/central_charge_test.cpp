#include "doctest.h"

#include <cmath>

#include "models.hpp"
#include "qkwall/central_charge.hpp"
#include "qkwall/integrals.hpp"

using namespace qkwall;
using namespace qkwall::testmodels;

static const QContext ctx(cplx(0.1), 60);

TEST_CASE("level sign") {
    LevelStructure empty;
    CHECK(level_sign(empty, Rat(1)) == +1);
    CHECK(level_sign(empty, Rat(0)) == +1);

    const GLSMData qm = quintic();
    const LevelStructure R = v_plus_dual(qm);
    CHECK(R.terms.size() == 5);
    // sigma = sum_i floor(-1) = -5
    CHECK(level_sign(R, Rat(1)) == -1);
    CHECK(level_sign(R, Rat(0)) == +1);
}

TEST_CASE("level determinant factor") {
    LevelStructure empty;
    CHECK(std::abs(level_det_factor(empty, Rat(0), {}, cplx(0.7, 0.1), ctx) - cplx(1.0)) <
          1e-15);

    // beta = 0, wExp = 0: theta ratios cancel and only -A survives
    LevelStructure R;
    LevelTerm t;
    t.aExp = {1};
    t.sExp = 2;
    t.wExp = Rat(0);
    t.mult = 1;
    R.terms.push_back(t);
    const cplx a0(0.9, 0.3);
    const cplx s(0.8, -0.2);
    const cplx expect = -a0 * s * s;
    const cplx got = level_det_factor(R, Rat(0), {a0}, s, ctx);
    CHECK(std::abs(got - expect) / std::abs(expect) < 1e-12);
}

TEST_CASE("hk coefficient hand assembly") {
    GLSMData m;
    m.weights = {1, -1};
    m.rCharges = {Rat(0), Rat(0)};
    m.equivParams = {unit(0.31), unit(0.53)};
    LevelStructure empty;
    const cplx s(1.3, 0.4);
    const cplx u1 = cplx(1.0) / (m.equivParams[0] * s);
    const cplx u2 = s / m.equivParams[1];
    // trivial sector: every coordinate keeps its (1 - U_i) numerator
    const cplx expect =
        (cplx(1.0) - u1) * (cplx(1.0) - u2) / (phi(u1, ctx) * phi(u2, ctx));
    const cplx got = hk_coefficient(m, Rat(0), empty, s, ctx);
    CHECK(std::abs(got - expect) / std::abs(expect) < 1e-12);
}

TEST_CASE("chern restriction sector shifts") {
    const GLSMData m = n3r2();
    BraneExpr B;
    B.aValues = m.equivParams;
    Monomial arg;
    arg.sExp = Rat(1);
    B.factors.push_back({arg, +1});

    const cplx s(0.7, 0.5), z(1.0, 0.0);
    Sector v0;
    v0.c = Rat(0);
    CHECK(std::abs(chern_restriction(B, v0, s, z, ctx) - theta(s, ctx)) < 1e-14);
    for (int j = 1; j < 3; ++j) {
        Sector v;
        v.c = Rat(j, 3);
        const cplx got = chern_restriction(B, v, s, z, ctx);
        const cplx expect = theta(ctx.qpow(Rat(j, 3)) * s, ctx);
        CHECK(std::abs(got - expect) / std::abs(expect) < 1e-12);
    }
    // composing shifts c and c' matches the combined shift
    Sector va, vb, vab;
    va.c = Rat(1, 3);
    vb.c = Rat(1, 3);
    vab.c = Rat(2, 3);
    const cplx two = chern_restriction(B, vb, ctx.qpow(va.c) * s, z, ctx);
    const cplx one = chern_restriction(B, vab, s, z, ctx);
    CHECK(std::abs(two - one) / std::abs(one) < 1e-12);
}

TEST_CASE("orbifold Euler pairing agrees with the residue theorem") {
    GLSMData m;
    m.weights = {1, 1, -2};
    m.rCharges = {Rat(0), Rat(0), Rat(2)};
    m.equivParams = {unit(0.31), unit(1.13), unit(0.53)};

    // cancel the negative-coordinate denominator so the pairing reduces to
    // the rational form 1/Lambda V_+^dual on the sphere
    auto f = [&](const Sector& v, cplx s) {
        cplx w(1.0);
        for (int j : v.fixedCoords)
            if (j >= m.nPlus())
                w *= (cplx(1.0) -
                      std::exp(-std::log(m.equivParams[j]) -
                               static_cast<double>(m.weights[j]) * std::log(s)));
        return w;
    };
    const cplx paired = pair_orbifold_euler(m, f, ctx);

    auto form = [&](cplx s) {
        cplx den(1.0);
        for (int i = 0; i < m.nPlus(); ++i)
            den *= (cplx(1.0) - cplx(1.0) / (m.equivParams[i] * s));
        return cplx(1.0) / (s * den);
    };
    const cplx big = numeric_residue(form, cplx(0.0), 10.0, 256, ctx);
    const cplx small = numeric_residue(form, cplx(0.0), 0.01, 256, ctx);
    CHECK(std::abs(paired - (big - small)) / std::abs(paired) < 1e-10);

    // a factor vanishing at pt_1 kills that term
    auto g = [&](const Sector& v, cplx s) {
        return f(v, s) * (cplx(1.0) - cplx(1.0) / (m.equivParams[0] * s));
    };
    auto h = [&](cplx s) {
        return form(s) * (cplx(1.0) - cplx(1.0) / (m.equivParams[0] * s));
    };
    const cplx paired2 = pair_orbifold_euler(m, g, ctx);
    const cplx big2 = numeric_residue(h, cplx(0.0), 10.0, 256, ctx);
    const cplx small2 = numeric_residue(h, cplx(0.0), 0.01, 256, ctx);
    CHECK(std::abs(paired2 - (big2 - small2)) < 1e-10 * std::max(1.0, std::abs(paired2)));
}

TEST_CASE("geometric closed form n=0 coefficient") {
    const GLSMData m = n3r2();
    const int k = 1;
    const CentralChargeSeries Z = geometric_example_series(m, k, 4, ctx);
    REQUIRE(Z.components.size() == 1);
    const cplx ak = m.equivParams[k];
    cplx expect = ak / phi(ctx.q, ctx);
    for (int i = 0; i < 3; ++i) {
        if (i == k) continue;
        expect *= phi(ctx.q * m.equivParams[i] / ak, ctx);
    }
    expect /= phi(ctx.q / (m.equivParams[3] * ak * ak), ctx);
    const cplx got = Z.components[0].coeffs.at(0);
    CHECK(std::abs(got - expect) / std::abs(expect) < 1e-13);
}

TEST_CASE("lg closed form leading terms") {
    const GLSMData lg = n3r2(-1);
    // l = 0 labels have no n = 0 term: phi(q^0) = 0
    for (int mm = 0; mm < 2; ++mm) {
        const CentralChargeSeries Z = lg_example_series(lg, mm, 0, 4, ctx);
        CHECK(std::abs(Z.components[0].coeffs.at(0)) < 1e-15);
        CHECK(std::abs(Z.components[0].coeffs.at(1)) > 1e-12);
    }
    // l != 0 labels do start at n = 0
    const CentralChargeSeries Z = lg_example_series(lg, 1, 1, 4, ctx);
    CHECK(std::abs(Z.components[0].coeffs.at(0)) > 1e-12);
    CHECK(Z.direction == -1);
    CHECK(Z.components[0].fracShift == Rat(1, 2));
}

TEST_CASE("empty brane gives a zero series") {
    const GLSMData m = n3r2();
    BraneExpr zero;
    zero.aValues = m.equivParams;
    zero.pref.c = cplx(0.0);
    const CentralChargeSeries Z =
        central_charge_series(m, zero, v_plus_dual(m), Rat(2), ctx);
    for (const CCComponent& c : Z.components)
        for (const auto& [n, v] : c.coeffs) CHECK(std::abs(v) < 1e-13);
}

TEST_CASE("series evaluation") {
    CCComponent comp;
    comp.prefactorArg = cplx(0.4, 0.1);
    comp.coeffs[0] = cplx(1.0);
    CentralChargeSeries Z;
    Z.direction = +1;
    Z.components.push_back(comp);
    const cplx z(0.3, 0.2);
    const cplx expect =
        theta(cplx(1.0) / z, ctx) / theta(comp.prefactorArg / z, ctx);
    const CCEval ev = eval_central_charge(Z, z, ctx);
    CHECK(ev.convergent);
    CHECK(std::abs(ev.value - expect) / std::abs(expect) < 1e-13);

    // truncation stability of the closed-form series
    const GLSMData m = n3r2();
    const cplx z2 = 0.05 * std::exp(cplx(0.0, 0.4));
    const cplx v8 = eval_central_charge(geometric_example_series(m, 0, 8, ctx), z2, ctx).value;
    const cplx v16 =
        eval_central_charge(geometric_example_series(m, 0, 16, ctx), z2, ctx).value;
    CHECK(std::abs(v8 - v16) / std::abs(v16) < 1e-10);
}
