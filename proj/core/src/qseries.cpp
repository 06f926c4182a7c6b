#include "qkwall/qseries.hpp"

#include <cmath>
#include <sstream>

namespace qkwall {

Rat parse_rational(const std::string& s) {
    auto bad = [&] { throw std::invalid_argument("malformed rational: '" + s + "'"); };
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            size_t pos = 0;
            long long p = std::stoll(s, &pos);
            if (pos != s.size()) bad();
            return Rat(p);
        }
        size_t pos = 0;
        long long p = std::stoll(s.substr(0, slash), &pos);
        if (pos != slash) bad();
        long long q = std::stoll(s.substr(slash + 1), &pos);
        if (pos != s.size() - slash - 1 || q == 0) bad();
        return Rat(p, q);
    } catch (const std::logic_error&) {
        bad();
    }
    return Rat(0); // unreachable
}

std::string to_string(const Rat& x) {
    std::ostringstream os;
    os << x.numerator();
    if (x.denominator() != 1) os << '/' << x.denominator();
    return os.str();
}

cplx phi(cplx x, const QContext& ctx) {
    cplx p(1.0, 0.0), qi(1.0, 0.0);
    for (int i = 0; i < ctx.productTerms; ++i) {
        p *= (cplx(1.0) - qi * x);
        qi *= ctx.q;
    }
    return p;
}

cplx theta(cplx x, const QContext& ctx) {
    if (x == cplx(0.0)) throw std::domain_error("theta: x = 0");
    return phi(x, ctx) * phi(ctx.q / x, ctx);
}

cplx log_phi(cplx x, const QContext& ctx) {
    cplx t(0.0), qi(1.0, 0.0);
    for (int i = 0; i < ctx.productTerms; ++i) {
        t += std::log(cplx(1.0) - qi * x);
        qi *= ctx.q;
    }
    return t;
}

cplx log_theta(cplx x, const QContext& ctx) {
    if (x == cplx(0.0)) throw std::domain_error("log_theta: x = 0");
    return log_phi(x, ctx) + log_phi(ctx.q / x, ctx);
}

cplx pochhammer(cplx x, long long n, const QContext& ctx) {
    cplx p(1.0, 0.0);
    if (n >= 0) {
        cplx qi(1.0, 0.0);
        for (long long k = 0; k < n; ++k) {
            p *= (cplx(1.0) - qi * x);
            qi *= ctx.q;
        }
        return p;
    }
    cplx qi = cplx(1.0) / ctx.q;
    for (long long k = 1; k <= -n; ++k) {
        cplx factor = cplx(1.0) - qi * x;
        if (std::abs(factor) < ctx.tolAbs)
            throw std::domain_error("pochhammer: vanishing denominator factor");
        p /= factor;
        qi /= ctx.q;
    }
    return p;
}

cplx theta_shift_factor(cplx x, long long n, const QContext& ctx) {
    if (x == cplx(0.0)) throw std::domain_error("theta_shift_factor: x = 0");
    // theta(q^n x)/theta(x) = (-x)^{-n} q^{-n(n-1)/2}
    double e = -0.5 * static_cast<double>(n) * static_cast<double>(n - 1);
    return std::exp(-static_cast<double>(n) * std::log(-x)) * ctx.qpow(e);
}

cplx theta_deriv_qpow(long long M, const QContext& ctx) {
    cplx p2 = phi(ctx.q, ctx);
    p2 *= p2;
    double e = -0.5 * static_cast<double>(M) * static_cast<double>(M + 1);
    double sign = (M % 2 == 0) ? -1.0 : 1.0;
    return sign * ctx.qpow(e) * p2;
}

} // namespace qkwall
