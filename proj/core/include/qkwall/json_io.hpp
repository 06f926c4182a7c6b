#pragma once

#include <string>
#include <utility>

#include "qkwall/branes.hpp"
#include "qkwall/central_charge.hpp"
#include "qkwall/glsm.hpp"
#include "qkwall/integrals.hpp"
#include "qkwall/qde.hpp"

namespace qkwall {

// Model + context document, schema in docs/schema.md.
std::pair<GLSMData, QContext> model_from_json(const std::string& text);
std::pair<GLSMData, QContext> model_from_file(const std::string& path);
std::string model_to_json(const GLSMData& model, const QContext& ctx);

std::string brane_to_json(const BraneExpr& B);
BraneExpr brane_from_json(const std::string& text, const GLSMData& model);

// Series rows (component id, n, Re, Im) with prefactor metadata header.
std::string series_to_json(const CentralChargeSeries& Z);
std::string series_to_csv(const CentralChargeSeries& Z);

std::string operator_to_json(const QDifferenceOperator& L);

// Pole list, per-pole residues, per-beta partial sums, quadrature table.
std::string residue_diagnostics_json(const GLSMData& model, const BraneExpr& B, int phase,
                                     const Rat& maxBeta, cplx z, const QContext& ctx);

} // namespace qkwall
