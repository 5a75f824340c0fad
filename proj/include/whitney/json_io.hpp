#pragma once

#include "whitney/families.hpp"
#include "whitney/ideals.hpp"
#include "whitney/poset.hpp"
#include "whitney/rank_polynomial.hpp"
#include "whitney/sequence_analysis.hpp"

#include <json.hpp>

#include <string>

namespace whitney {

/// Poset wire format: {"elements": ["z1", ...], "covers": [["z1","z2"], ...]}.
nlohmann::json poset_to_json(const Poset& p);
Poset poset_from_json(const nlohmann::json& j);
Poset load_poset_file(const std::string& path);

/// {"family":"fence","n":5}; ap carries mu/nu, fap carries w/x/y/z.
nlohmann::json family_to_json(const FamilySpec& spec);

/// Family fields plus "counts" (decimal strings) and the computation "path".
nlohmann::json table_to_json(const FamilySpec& spec, const WhitneyTable& table,
                             const std::string& path_label);
nlohmann::json table_to_json(const std::string& source, const WhitneyTable& table,
                             const std::string& path_label);

/// Family fields plus {"coeffs": [decimal strings]}.
nlohmann::json polynomial_to_json(const FamilySpec& spec, const RankPolynomial& poly);

nlohmann::json report_to_json(const ConjectureReport& report);

}  // namespace whitney
