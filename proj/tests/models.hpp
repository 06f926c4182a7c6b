#pragma once

#include <cmath>
#include <complex>

#include "qkwall/glsm.hpp"

namespace qkwall::testmodels {

inline cplx unit(double th) { return std::exp(cplx(0.0, th)); }

inline GLSMData hypersurface(int np, int r, int phase) {
    static const double angles[] = {0.31, 1.13, -0.71, 1.87, -1.29};
    GLSMData m;
    for (int i = 0; i < np; ++i) {
        m.weights.push_back(1);
        m.rCharges.push_back(Rat(0));
        m.equivParams.push_back(unit(angles[i]));
    }
    m.weights.push_back(-r);
    m.rCharges.push_back(Rat(2));
    m.equivParams.push_back(unit(0.53));
    m.phase = phase;
    return m;
}

inline GLSMData n3r2(int phase = +1) { return hypersurface(3, 2, phase); }
inline GLSMData n4r2(int phase = +1) { return hypersurface(4, 2, phase); }
inline GLSMData quintic(int phase = +1) { return hypersurface(5, 5, phase); }

} // namespace qkwall::testmodels
