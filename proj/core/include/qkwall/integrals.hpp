#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "qkwall/branes.hpp"
#include "qkwall/glsm.hpp"

namespace qkwall {

// A simple pole of the q-Gamma factor: s = zeta_m a_k^{-1/D_k} q^beta.
struct PoleSpec {
    cplx location;
    int k = 0;
    Rat beta{0};
    int m = 0;
    int order = 1;
};

// 1 / prod_i phi(a_i^{-1} s^{-D_i} q^{q_i/2})
cplx gamma_q(const GLSMData& model, cplx s, const QContext& ctx);
cplx log_gamma_q(const GLSMData& model, cplx s, const QContext& ctx);

// Pole lattice of the chosen phase up to maxBeta.  Phase - mirrors the
// lattice toward s -> infinity (locations still in the original s plane).
std::vector<PoleSpec> enumerate_poles(const GLSMData& model, int phase, const Rat& maxBeta,
                                      const QContext& ctx);

// (1/2 pi i) contour integral of f over |s - s0| = r, M-point trapezoid.
// Doubles M once as a convergence check and throws on disagreement.
cplx numeric_residue(const std::function<cplx(cplx)>& f, cplx s0, double r, int M,
                     const QContext& ctx);

// Radius for C_delta separating the two pole lattices; throws when no
// separating annulus exists.
double default_delta(const GLSMData& model, const QContext& ctx);

// (1/2 pi i) contour integral over |s| = delta of ds/s Gamma_q E_z.
cplx contour_integral(const GLSMData& model, const BraneExpr& B, cplx z, double delta,
                      int M, const QContext& ctx);

struct ResidueBreakdown {
    cplx total{0.0, 0.0};
    std::map<Rat, cplx> perBeta;
    std::vector<std::pair<PoleSpec, cplx>> perPole;
};

// Sum of residues of ds/s Gamma_q E_z over the phase's pole lattice, signed
// +1 for phase + (contour shrinks to 0) and -1 for phase - (contour grows).
ResidueBreakdown residue_sum(const GLSMData& model, const BraneExpr& B, int phase,
                             const Rat& maxBeta, cplx z, const QContext& ctx);

} // namespace qkwall
