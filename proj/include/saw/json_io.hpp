#ifndef SAW_JSON_IO_HPP
#define SAW_JSON_IO_HPP

#include "saw/enumerate.hpp"
#include "saw/gadget.hpp"
#include "saw/patch.hpp"
#include "saw/polynomial.hpp"
#include "saw/relations.hpp"
#include "saw/transform.hpp"

#include <json.hpp>

#include <string>

namespace saw {

// File formats are UTF-8 JSON with alphabetically ordered keys, so a
// serialize -> parse -> serialize round trip is byte-identical. Counts and
// coefficients are decimal strings; the unbounded depth/horizon sentinel is
// written as -1.

nlohmann::json patch_to_json(const FinitePatch& patch);
FinitePatch patch_from_json(const nlohmann::json& j);

nlohmann::json gadget_to_json(const Gadget& g);
Gadget gadget_from_json(const nlohmann::json& j);

nlohmann::json polynomial_to_json(const CountPolynomial& p);
CountPolynomial polynomial_from_json(const nlohmann::json& j);

nlohmann::json series_to_json(const SawSeries& s);
SawSeries series_from_json(const nlohmann::json& j);

nlohmann::json transformed_to_json(const TransformedPatch& tp);
TransformedPatch transformed_from_json(const nlohmann::json& j);

nlohmann::json validation_to_json(const GadgetValidation& v);
nlohmann::json verification_to_json(const VerificationReport& r);

std::string dump_canonical(const nlohmann::json& j);

nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);

} // namespace saw

#endif
