#pragma once

#include <vector>

#include "qkwall/qseries.hpp"
#include "qkwall/rational.hpp"

namespace qkwall {

// Model data for an abelian GLSM with one-dimensional gauge group:
// gauge weights D_i (positives first), R-charges q_i, equivariant
// parameters a_i, and the chosen phase.
struct GLSMData {
    std::vector<int> weights;      // D_i, no zeros, positives first
    std::vector<Rat> rCharges;     // q_i >= 0
    std::vector<cplx> equivParams; // a_i, generic nonzero
    int phase = +1;                // +1 or -1
    double genericityGap = 1e-6;

    int n() const { return static_cast<int>(weights.size()); }
    int nPlus() const;
    void validate() const; // throws std::invalid_argument on malformed data
};

// The mirrored model used for every minus-phase computation: weights of the
// unstable side negated and moved to the front, a_i and q_i carried along.
// perm[j] = original index of mirrored coordinate j.
GLSMData mirrored(const GLSMData& model, std::vector<int>* perm = nullptr);

// An inertia sector: g(v) = e^{2 pi i c}, with the coordinates it fixes.
struct Sector {
    Rat c;
    std::vector<int> fixedCoords;
    long long order = 1;
};

// Eff = union over i <= N_+ of (1/D_i) Z_{>=0}, up to and including maxBeta.
std::vector<Rat> effective_classes(const GLSMData& model, const Rat& maxBeta);

// All sectors c = m/D_i, i <= N_+, 0 <= m < D_i, deduplicated.
std::vector<Sector> box_sectors(const GLSMData& model);

// d_i(beta) = D_i beta - q_i/2, exact
Rat d_of(const GLSMData& model, int i, const Rat& beta);

Sector sector_of_degree(const GLSMData& model, const Rat& beta);

// {c * D_i} in [0,1)
Rat age(const GLSMData& model, const Sector& v, int i);

// Deformation/obstruction weights of a degree-beta quasimap.
struct WeightEntry {
    int i;
    int sExp;
    Rat qExp;
};
struct DefObs {
    std::vector<WeightEntry> V; // deformations
    std::vector<WeightEntry> W; // obstructions
};
DefObs def_obs_weights(const GLSMData& model, const Rat& beta);

// chi_{C*_q}(P(a:1), O(n/a)) as a signed list of q-exponents:
// sign * sum_e q^e.  Empty for n in [-a, -1].
struct TeardropChi {
    std::vector<Rat> exponents;
    int sign = +1;
};
TeardropChi teardrop_euler(long long n, long long a);
cplx teardrop_chi_value(const TeardropChi& chi, const QContext& ctx);

} // namespace qkwall
