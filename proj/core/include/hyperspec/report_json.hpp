#pragma once

#include <nlohmann/json.hpp>

#include "hyperspec/bounds.hpp"
#include "hyperspec/spectra.hpp"
#include "hyperspec/surgery.hpp"

namespace hyperspec {

using Json = nlohmann::ordered_json;

/// Rounded to 12 significant digits so that reports are stable across
/// platforms; -0 prints as 0.
double report_number(double x);

std::string to_string(ParityStatus s);

/// {"n", "eigenvalues", "exact_integers": [[value, multiplicity], ...],
///  "energy", "parity", "exact_energy", "residual"}
Json to_json(const EnergyReport& report);

/// {"before", "after", "gap", "bound", "holds", "strict"}
Json to_json(const GapReport& report);

/// {"parameters", "bounds", "comparisons"}
Json to_json(const BoundsReport& report);

}  // namespace hyperspec
