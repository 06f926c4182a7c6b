#include "doctest.h"

#include <random>

#include "models.hpp"
#include "qkwall/branes.hpp"
#include "qkwall/json_io.hpp"

using namespace qkwall;
using namespace qkwall::testmodels;

static const QContext ctx(cplx(0.1), 60);

TEST_CASE("brane evaluation recomposes from theta factors") {
    const GLSMData m = n3r2();
    const BraneExpr B = geometric_basis_brane(m, 1);
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> rad(0.5, 1.5), ang(0.0, 6.28);
    for (int t = 0; t < 10; ++t) {
        const cplx s = rad(rng) * std::exp(cplx(0.0, ang(rng)));
        const cplx z = rad(rng) * std::exp(cplx(0.0, ang(rng)));
        const cplx a1 = m.equivParams[0], a2 = m.equivParams[1], a3 = m.equivParams[2];
        const cplx manual = theta(ctx.q * a2 * s / z, ctx) / theta(ctx.q * a2 / z, ctx) *
                            theta(ctx.q * a1 * s, ctx) * theta(ctx.q * a3 * s, ctx);
        const cplx v = eval_brane(B, s, z, ctx);
        CHECK(std::abs(v - manual) / std::abs(manual) < 1e-12);
        CHECK(std::abs(std::exp(log_eval_brane(B, s, z, ctx)) - manual) / std::abs(manual) <
              1e-12);
    }
}

TEST_CASE("grade restriction accounting") {
    const GLSMData m = n3r2();
    for (int k = 0; k < 3; ++k) {
        const BraneExpr B = geometric_basis_brane(m, k);
        CHECK(check_grade_restriction(B, m));
        GLSMData minus = m;
        minus.phase = -1;
        CHECK_FALSE(check_grade_restriction(B, minus));
        // raising the s-degree by one breaks the rule
        BraneExpr raised = B;
        Monomial extra;
        extra.sExp = Rat(1);
        raised.factors.push_back({extra, +1});
        CHECK_FALSE(check_grade_restriction(raised, m));
    }
    BraneExpr constant;
    constant.aValues = m.equivParams;
    CHECK_FALSE(check_grade_restriction(constant, m));
    const GLSMData lg = n3r2(-1);
    for (int mm = 0; mm < 2; ++mm)
        for (int l = 0; l < 2; ++l)
            CHECK(check_grade_restriction(lg_basis_brane(lg, mm, l), lg));
}

TEST_CASE("s shift factor") {
    const GLSMData m = n3r2();
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> rad(0.6, 1.4), ang(0.0, 6.28);
    for (const BraneExpr& B :
         {geometric_basis_brane(m, 0), wall_cross(geometric_basis_brane(m, 2)),
          lg_basis_brane(n3r2(-1), 1, 1)}) {
        const Monomial M = s_shift_factor(B);
        for (int t = 0; t < 5; ++t) {
            const cplx s = rad(rng) * std::exp(cplx(0.0, ang(rng)));
            const cplx z = rad(rng) * std::exp(cplx(0.0, ang(rng)));
            const cplx lhs = eval_brane(B, ctx.q * s, z, ctx);
            const cplx rhs = M.eval(B.aValues, s, z, ctx) * eval_brane(B, s, z, ctx);
            CHECK(std::abs(lhs - rhs) / std::abs(rhs) < 1e-11);
        }
    }
}

TEST_CASE("fixed point restrictions vanish off the diagonal") {
    const GLSMData m = n3r2();
    const cplx z = 0.3 * std::exp(cplx(0.0, 0.7));
    for (int k = 0; k < 3; ++k) {
        const BraneExpr B = geometric_basis_brane(m, k);
        for (int j = 0; j < 3; ++j) {
            const cplx v = restrict_to_fixed_point(B, m, j, cplx(1.0), z, ctx);
            if (j == k)
                CHECK(std::abs(v) > 1e-6);
            else
                CHECK(v == cplx(0.0));
        }
    }
}

TEST_CASE("mirror involution on evaluations") {
    const GLSMData m = n3r2();
    std::vector<int> perm;
    const GLSMData mir = mirrored(m, &perm);
    const BraneExpr B = wall_cross(geometric_basis_brane(m, 1));
    const BraneExpr Bm = brane_mirror(B, perm);
    const cplx s(0.8, 0.3), z(1.2, -0.4);
    const cplx lhs = eval_brane(B, s, z, ctx);
    const cplx rhs = eval_brane(Bm, cplx(1.0) / s, cplx(1.0) / z, ctx);
    CHECK(std::abs(lhs - rhs) / std::abs(lhs) < 1e-12);
}

TEST_CASE("brane JSON round trip") {
    const GLSMData m = n3r2();
    const BraneExpr B = wall_cross(lg_basis_brane(n3r2(-1), 1, 0));
    const std::string text = brane_to_json(B);
    const BraneExpr C = brane_from_json(text, m);
    const cplx s(0.9, 0.2), z(0.5, 0.1);
    const cplx lhs = eval_brane(B, s, z, ctx);
    const cplx rhs = eval_brane(C, s, z, ctx);
    CHECK(std::abs(lhs - rhs) / std::abs(lhs) < 1e-14);
}
