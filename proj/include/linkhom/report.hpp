#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "linkhom/geometry.hpp"
#include "linkhom/string_link.hpp"

namespace linkhom {

// Structured-output schema version; bump on any breaking field change.
inline constexpr int kSchemaVersion = 1;

// Coefficients are serialized as decimal strings (arbitrary precision),
// term lists in (degree, lexicographic) order, matching the text output.
nlohmann::json to_json(const ReducedPolynomial& p);
nlohmann::json to_json(const InvariantVector& v);

nlohmann::json invariant_report_json(const StringLink& s,
                                     const std::string& braid_text,
                                     const std::vector<Monomial>& mu_requests);
std::string invariant_report_text(const StringLink& s,
                                  const std::string& braid_text,
                                  const std::vector<Monomial>& mu_requests);

// "mu(1,2,3): 1 != 0" with the strand as the final index.
std::string describe(const InvariantDifference& d);

nlohmann::json equality_report_json(bool equal,
                                    const std::optional<InvariantDifference>& witness);

nlohmann::json to_json(const GeomStringLink& g);
nlohmann::json to_json(const ClosedLink& link);
nlohmann::json to_json(const ConditionReport& report);

}  // namespace linkhom
