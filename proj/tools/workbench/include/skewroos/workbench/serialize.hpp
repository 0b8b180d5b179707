#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "skewroos/bounds.hpp"
#include "skewroos/distance.hpp"
#include "skewroos/skew_code.hpp"
#include "skewroos/tower.hpp"

namespace skewroos::workbench {

using Json = nlohmann::ordered_json;

/// {"pow": k} when the field has a log table and x != 0, else {"coords": [...]}.
Json element_to_json(const Field& field, Elem x);
/// Accepts {"pow": k}, {"coords": [...]} or the text form.
Elem element_from_json(const Field& field, const Json& j);

/// "0", "1", "a", "a^k" (power of the generator), or a sum "2*a^3 + a + 1" of
/// coordinate terms when the field has no log table.
std::string element_to_text(const Field& field, Elem x);
/// Sum of terms c, sym, sym^k, c*sym^k with c a base-field code; sym is the
/// field's symbol and sym^k means the k-th power of its generator.
Elem parse_element(const Field& field, std::string_view text);

/// c0 + c1*x + c2*x^2 + ..., zero terms skipped, unit coefficients dropped.
std::string poly_to_text(const SkewPoly& f);
SkewPoly parse_poly(const FieldPtr& field, std::int64_t twist, std::string_view text);
/// {"field": "F"|"E", "twist": t, "coeffs": [elem]}.
Json poly_to_json(const Tower& tower, const SkewPoly& f);
SkewPoly poly_from_json(const Tower& tower, const Json& j);

/// {"q", "mu", "nu", "modF", "modE", "embed_hint", "alpha"}; modK for non-prime q.
TowerParams tower_params_from_json(const Json& j);
Json tower_to_json(const Tower& tower, std::optional<Elem> alpha = std::nullopt);

Json certificate_to_json(const RoosCertificate& c);
RoosCertificate certificate_from_json(const Json& j);

Json distance_value_to_json(const DistanceValue& v);
std::optional<DistanceValue> distance_value_from_json(const Json& j);

/// {"n", "k", "g", "T", "T_F"}; g in text form.
Json code_report(const SkewCyclicCode& code);
Json bound_report_to_json(const BoundReport& r);

/// Reads a whole file; throws InvalidInput when it cannot be opened or parsed.
Json read_json_file(const std::string& path);

}  // namespace skewroos::workbench
