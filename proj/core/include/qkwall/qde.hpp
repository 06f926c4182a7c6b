#pragma once

#include <functional>
#include <vector>

#include "qkwall/branes.hpp"
#include "qkwall/central_charge.hpp"
#include "qkwall/glsm.hpp"

namespace qkwall {

// coeff * z^{zPower} * T_z^{shift}
struct QDETerm {
    Monomial coeff; // in a and q only
    int zPower = 0;
    int shift = 0;
};

struct QDifferenceOperator {
    std::vector<QDETerm> terms;
    int order() const;
};

// The quantum q-difference operator of the model.  Phase - applies the
// general formula to the mirrored model and maps T_w = T_z^{-1}, w = z^{-1}.
QDifferenceOperator qde_operator(const GLSMData& model, int phase);

cplx apply_operator(const QDifferenceOperator& L, const std::function<cplx(cplx)>& f,
                    cplx z, const std::vector<cplx>& a, const QContext& ctx);

// Relative residual of T_z[theta(z^-1)/theta(q^{-{beta}} c z^-1) z^{floor(beta)}]
// = q^{beta} c^{-1} * (same).
double verify_prefactor_relation(const Rat& beta, cplx c, cplx z, const QContext& ctx);

// Max relative residual of the phase operator applied to the series over
// the given z samples, normalization floored at 1e-300.
double qde_residual(const GLSMData& model, int phase, const CentralChargeSeries& Z,
                    const std::vector<cplx>& zSamples, const QContext& ctx);

} // namespace qkwall
