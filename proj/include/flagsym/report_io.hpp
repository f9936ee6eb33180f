#pragma once

#include <string>

#include "json.hpp"

#include "flagsym/survey.hpp"

namespace flagsym {

using Json = nlohmann::ordered_json;

/// Record schema: family, rank, painted, dim_g, dim_M, symmetric, exception,
/// index, coindex, leaf {u, k_factors, name}, checks {oracle_agree,
/// diagram_agree, hprime_closed, kprime_commutes}.
Json to_json(const EnumerationEntry& e);

/// The record plus spec, symmetry roots, leaf details, xi sample and failures.
Json to_detailed_json(const EnumerationEntry& e);

/// {"entries": [...], "summary": {...}}
Json to_json(const EnumerationReport& report);

Json to_json(const VerificationResult& result);

/// Human-readable summary of one entry.
std::string describe(const EnumerationEntry& e);

/// Writes <stem>.dot (painted diagram) and <stem>_extended.dot into dir.
void write_dot_files(const PaintedDiagram& pd, const std::string& dir);

}  // namespace flagsym
