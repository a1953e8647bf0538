#pragma once

#include <set>
#include <string>

#include <json.hpp>

#include "locrep/catalog.hpp"
#include "locrep/fingerprint.hpp"
#include "locrep/presentation.hpp"
#include "locrep/quad.hpp"

namespace locrep {

// {"generators": n, "relators": [...]} with relators in word syntax.
nlohmann::json to_json(const GroupPresentation& p);
GroupPresentation presentation_from_json(const nlohmann::json& j);

// {"abelianization": [...], "hom_counts": {name: count}}.
nlohmann::json to_json(const Fingerprint& f);
Fingerprint fingerprint_from_json(const nlohmann::json& j);

// Invariant output: presentation fields plus fingerprint fields, and the
// simplified presentation under "simplified".
nlohmann::json invariant_json(const GroupPresentation& p, const GroupPresentation& simplified,
                              const Fingerprint& f);

// {"max_len": L, "count": N, "classes": [{"quad": "A,B,C,D", "families": [...]}]}.
nlohmann::json classify_json(int max_len, const std::set<Quad>& classes);
std::set<Quad> classes_from_json(const nlohmann::json& j);

// {"quad", "valid", "tau_basis", "kappa_basis", "equations": {...}, "families"}.
nlohmann::json verify_json(const Quad& q, const QuadReport& r, const std::vector<FamilyId>& ids);

}  // namespace locrep
