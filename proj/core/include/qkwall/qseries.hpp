#pragma once

#include <complex>
#include <stdexcept>

#include "qkwall/rational.hpp"

namespace qkwall {

using cplx = std::complex<double>;

// Numerical regime shared by every computation: the nome q, the number of
// factors kept in infinite products, and comparison tolerances.
struct QContext {
    cplx q;
    int productTerms = 60;
    double tolAbs = 1e-12;
    double tolRel = 1e-10;

    QContext() : q(0.1, 0.0) {}
    QContext(cplx q_, int terms = 60, double tolAbs_ = 1e-12, double tolRel_ = 1e-10)
        : q(q_), productTerms(terms), tolAbs(tolAbs_), tolRel(tolRel_) {
        if (!(std::abs(q) < 1.0))
            throw std::invalid_argument("QContext: |q| must be < 1");
        if (productTerms < 1)
            throw std::invalid_argument("QContext: productTerms must be >= 1");
        if (tolAbs <= 0 || tolRel <= 0)
            throw std::invalid_argument("QContext: tolerances must be positive");
    }

    // Principal-branch power q^e. For real positive q this is the real root.
    cplx qpow(double e) const { return std::exp(e * std::log(q)); }
    cplx qpow(const Rat& e) const { return qpow(rdouble(e)); }

    // Upper bound on the truncation error of phi(x) relative to the kept
    // product, |x| <= R: dropping factors (1 - q^i x), i >= productTerms.
    double phi_tail_bound(double R) const {
        double aq = std::abs(q);
        double tail = R * std::pow(aq, productTerms) / (1.0 - aq);
        return std::exp(tail) - 1.0;
    }
};

// phi(x) = prod_{i=0}^{T-1} (1 - q^i x)
cplx phi(cplx x, const QContext& ctx);

// theta(x) = phi(x) phi(q/x); domain error at x = 0
cplx theta(cplx x, const QContext& ctx);

// log phi / log theta, summed factor by factor.  All residue and contour
// machinery goes through these: plain products overflow long before the
// pole lattice is exhausted.
cplx log_phi(cplx x, const QContext& ctx);
cplx log_theta(cplx x, const QContext& ctx);

// (x;q)_n for any integer n; pole error when a denominator factor vanishes.
cplx pochhammer(cplx x, long long n, const QContext& ctx);

// Exact closed form of theta(q^n x)/theta(x) = (-x)^{-n} q^{-n(n-1)/2}.
cplx theta_shift_factor(cplx x, long long n, const QContext& ctx);

// theta'(q^M) = (-1)^{M+1} q^{-M(M+1)/2} phi(q)^2, exact
cplx theta_deriv_qpow(long long M, const QContext& ctx);

} // namespace qkwall
