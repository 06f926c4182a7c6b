#pragma once

#include <functional>
#include <map>
#include <vector>

#include "qkwall/branes.hpp"
#include "qkwall/glsm.hpp"

namespace qkwall {

// R = sum_t mult_t * a^{aExp} s^{sExp} w^{wExp}
struct LevelTerm {
    std::vector<long long> aExp;
    long long sExp = 0;
    Rat wExp{0};
    int mult = 1;
};
struct LevelStructure {
    std::vector<LevelTerm> terms;
};

// The default level: R = V_+^dual (V_-^dual after mirroring).
LevelStructure v_plus_dual(const GLSMData& model);

// (-1)^{sigma_R(beta)}, sigma_R = sum_t mult_t floor(sExp*beta - wExp)
int level_sign(const LevelStructure& R, const Rat& beta);

// det f*_C R as the displayed product of monomials and theta-shift ratios.
cplx level_det_factor(const LevelStructure& R, const Rat& beta,
                      const std::vector<cplx>& a, cplx s, const QContext& ctx);

// The beta summand of the level-R H-function without the z prefactor,
// evaluated at s (level monomial x numerator over age-0 coordinates over
// the phi product).  Calibrated against the contour integral.
cplx hk_coefficient(const GLSMData& model, const Rat& beta, const LevelStructure& R,
                    cplx s, const QContext& ctx);

// Sector-wise elliptic Chern character: B evaluated at q^{c(v)} s.
cplx chern_restriction(const BraneExpr& B, const Sector& v, cplx s, cplx z,
                       const QContext& ctx);

// Orbifold Euler pairing by fixed-point localization:
// sum over sectors v, fixed i, D_i-th roots zeta of
// f(v, s) / prod_{j != i fixed in v} (1 - a_j^{-1} s^{-D_j}) at s = zeta a_i^{-1/D_i}.
cplx pair_orbifold_euler(const GLSMData& model,
                         const std::function<cplx(const Sector&, cplx)>& f,
                         const QContext& ctx);

// One fixed-point tower of a central charge: prefactor
// theta(z^-1)/theta(q^{-fracShift} prefactorArg z^-1) and a power series.
struct CCComponent {
    int k = 0;
    int rootIndex = 0;
    cplx zetaRoot{1.0, 0.0};
    Rat fracShift{0};
    cplx prefactorArg{1.0, 0.0};
    std::map<long long, cplx> coeffs;
};

// direction +1: series in z (phase +); -1: series in w = z^-1 (phase -),
// with prefactors evaluated in w.
struct CentralChargeSeries {
    int direction = +1;
    std::vector<CCComponent> components;
};

// Residue assembly (solid-torus theorem): per-pole residues divided by the
// component prefactor at a fixed extraction point.
CentralChargeSeries central_charge_series(const GLSMData& model, const BraneExpr& B,
                                          const LevelStructure& R, const Rat& maxBeta,
                                          const QContext& ctx);

// Pairing path: chi(H^K_R (x) ch_orb(B)) through hk_coefficient, slope-
// normalized brane restrictions and the localized Euler pairing.
CentralChargeSeries pairing_central_charge_series(const GLSMData& model, const BraneExpr& B,
                                                  const LevelStructure& R, const Rat& maxBeta,
                                                  const QContext& ctx);

// Closed forms of the hypersurface example.
CentralChargeSeries geometric_example_series(const GLSMData& model, int k, int maxN,
                                             const QContext& ctx);
CentralChargeSeries lg_example_series(const GLSMData& model, int m, int l, int maxN,
                                      const QContext& ctx);

struct CCEval {
    cplx value{0.0, 0.0};
    bool convergent = true;
    int usedTerms = 0;
};

// Prefactored summation with a ratio test on the last three coefficients;
// divergent tails are truncated at the smallest term and flagged.
CCEval eval_central_charge(const CentralChargeSeries& Z, cplx z, const QContext& ctx);

} // namespace qkwall
