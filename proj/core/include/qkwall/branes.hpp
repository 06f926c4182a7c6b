#pragma once

#include <vector>

#include "qkwall/glsm.hpp"
#include "qkwall/qseries.hpp"

namespace qkwall {

// c * prod_i a_i^{aExp_i} * q^{qExp} * s^{sExp} * z^{zExp}
struct Monomial {
    cplx c{1.0, 0.0};
    std::vector<Rat> aExp; // may be shorter than N; missing entries are 0
    Rat qExp{0};
    Rat sExp{0};
    int zExp = 0;

    cplx eval(const std::vector<cplx>& a, cplx s, cplx z, const QContext& ctx) const;
    cplx log_eval(const std::vector<cplx>& a, cplx s, cplx z, const QContext& ctx) const;
    Monomial& operator*=(const Monomial& o);
};

// theta(arg)^power
struct ThetaFactor {
    Monomial arg;
    int power = 1;
};

// An elliptic brane as an explicit quasi-periodic function of (s, z):
// prefactor monomial times a product of theta factors.  The equivariant
// parameter values are carried so a brane evaluates standalone.
struct BraneExpr {
    std::vector<ThetaFactor> factors;
    Monomial pref;
    std::vector<cplx> aValues;
};

cplx eval_brane(const BraneExpr& B, cplx s, cplx z, const QContext& ctx);
cplx log_eval_brane(const BraneExpr& B, cplx s, cplx z, const QContext& ctx);

// Exact monomial M with B(q s, z) = M(s, z) B(s, z).  Requires integer
// s-exponents in every theta factor.
Monomial s_shift_factor(const BraneExpr& B);

// Degree accounting of the elliptic grade restriction rule:
// sum_f power_f sExp_f^2 must match the gauge degree of V on the stable
// side, and exactly one Poincare factor pair must couple s to z.
bool check_grade_restriction(const BraneExpr& B, const GLSMData& model);

// Basis branes of the hypersurface family (weights (1,...,1,-r)).
BraneExpr geometric_basis_brane(const GLSMData& model, int k);
// zeta = e^{2 pi i m/r} q^{l/r} labels a point of E[r]
BraneExpr lg_basis_brane(const GLSMData& model, int m, int l);

// Limit of B at s0 = zeta * a_k^{-1/D_k}.  Removable 0/0 pairs of theta
// factors are resolved by exact slope matching (theta'(q^M) closed form);
// a net zero gives 0, a net pole throws.
cplx restrict_to_fixed_point(const BraneExpr& B, const GLSMData& model, int k,
                             cplx zeta, cplx z, const QContext& ctx);

// Appends the factor pair theta(s^{-1}z^{-1})/theta(z^{-1}).
BraneExpr wall_cross(const BraneExpr& B);

// Mirror-coordinate image of a brane: s -> s^{-1}, z -> z^{-1}, with the
// a-exponents permuted by perm (from mirrored()).
BraneExpr brane_mirror(const BraneExpr& B, const std::vector<int>& perm);

} // namespace qkwall
