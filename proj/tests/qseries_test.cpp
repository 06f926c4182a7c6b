#include "doctest.h"

#include <cmath>
#include <random>

#include "qkwall/qseries.hpp"

using namespace qkwall;

static const QContext ctx(cplx(0.1), 60);

TEST_CASE("phi basics") {
    CHECK(std::abs(phi(cplx(0.0), ctx) - cplx(1.0)) < 1e-15);
    CHECK(std::abs(phi(cplx(1.0), ctx)) < 1e-15);
    // frozen long-product oracle at q = 0.1
    CHECK(std::abs(phi(cplx(0.5), ctx) - cplx(0.4723624438165722)) < 1e-15);
    CHECK(std::abs(std::exp(log_phi(cplx(0.5, 0.2), ctx)) - phi(cplx(0.5, 0.2), ctx)) < 1e-14);
}

TEST_CASE("theta basics") {
    CHECK(std::abs(theta(cplx(1.0), ctx)) < 1e-15);
    CHECK(std::abs(theta(cplx(0.3, 0.1), ctx) - cplx(0.46736998332995516)) < 1e-14);
    CHECK_THROWS(theta(cplx(0.0), ctx));
}

TEST_CASE("theta quasi-periodicity and inversion") {
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> rad(0.2, 2.0), ang(0.0, 6.28);
    for (int t = 0; t < 50; ++t) {
        const cplx x = rad(rng) * std::exp(cplx(0.0, ang(rng)));
        const cplx tx = theta(x, ctx);
        CHECK(std::abs(theta(ctx.q * x, ctx) + tx / x) / std::abs(tx) < 1e-12);
        CHECK(std::abs(theta(ctx.q / x, ctx) - tx) / std::abs(tx) < 1e-12);
        CHECK(std::abs(theta(cplx(1.0) / x, ctx) + tx / x) / std::abs(tx) < 1e-12);
    }
}

TEST_CASE("theta shift closed form") {
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> rad(0.5, 1.5), ang(0.0, 6.28);
    for (int t = 0; t < 20; ++t) {
        const cplx x = rad(rng) * std::exp(cplx(0.0, ang(rng)));
        for (long long n = -5; n <= 5; ++n) {
            const cplx lhs = theta(ctx.qpow(static_cast<double>(n)) * x, ctx) / theta(x, ctx);
            const cplx rhs = theta_shift_factor(x, n, ctx);
            CHECK(std::abs(lhs - rhs) / std::abs(rhs) < 1e-11);
        }
    }
    // n = 1: theta(qx)/theta(x) = -x^{-1}
    const cplx x(0.7, 0.3);
    CHECK(std::abs(theta_shift_factor(x, 1, ctx) + cplx(1.0) / x) < 1e-15);
}

TEST_CASE("pochhammer") {
    const cplx x(0.4, 0.2);
    CHECK(std::abs(pochhammer(x, 0, ctx) - cplx(1.0)) < 1e-15);
    // (x;q)_n = phi(x)/phi(q^n x), both directions
    for (long long n : {3LL, 7LL, -2LL, -5LL}) {
        const cplx lhs = pochhammer(x, n, ctx);
        const cplx rhs = phi(x, ctx) / phi(ctx.qpow(static_cast<double>(n)) * x, ctx);
        CHECK(std::abs(lhs - rhs) / std::abs(rhs) < 1e-13);
    }
}

TEST_CASE("theta derivative at q powers") {
    // theta'(q^M) against a central difference
    const cplx ph2 = phi(ctx.q, ctx) * phi(ctx.q, ctx);
    CHECK(std::abs(theta_deriv_qpow(0, ctx) + ph2) / std::abs(ph2) < 1e-14);
    for (long long M : {-2LL, -1LL, 0LL, 1LL, 2LL, 3LL}) {
        const cplx x0 = ctx.qpow(static_cast<double>(M));
        const double h = 1e-7 * std::abs(x0);
        const cplx num = (theta(x0 + h, ctx) - theta(x0 - h, ctx)) / (2.0 * h);
        CHECK(std::abs(num - theta_deriv_qpow(M, ctx)) / std::abs(num) < 1e-5);
    }
}

TEST_CASE("context validation") {
    CHECK_THROWS(QContext(cplx(1.5)));
    CHECK_THROWS(QContext(cplx(1.0)));
    CHECK_THROWS(QContext(cplx(0.1), 0));
    CHECK(ctx.phi_tail_bound(2.0) < 1e-15);
}

TEST_CASE("rationals") {
    CHECK(parse_rational("3/4") == Rat(3, 4));
    CHECK(parse_rational("-7/2") == Rat(-7, 2));
    CHECK(parse_rational("5") == Rat(5));
    CHECK(rfloor(Rat(-1, 2)) == -1);
    CHECK(rfrac(Rat(-1, 2)) == Rat(1, 2));
    CHECK(rfloor(Rat(7, 2)) == 3);
    CHECK(to_string(Rat(-3, 2)) == "-3/2");
    CHECK(to_string(Rat(4)) == "4");
}
