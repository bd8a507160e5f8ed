#ifndef PFOUR_SERIALIZE_HPP
#define PFOUR_SERIALIZE_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "pfour/classify.hpp"
#include "pfour/tables.hpp"

// JSON and CSV forms of the library's data. Parsers throw
// std::invalid_argument on malformed input.

namespace pfour {

using Json = nlohmann::ordered_json;

/// {"p":3,"shape":"p2xp","n":3,"tau":[[1,3],[0,1]],"v":[0,0]}
Json to_json(const ExtensionType& t);
/// Structural parse only; run validate_type on the result.
ExtensionType extension_type_from_json(const Json& j);
ExtensionType read_extension_type(const std::string& path);

Json to_json(const Fingerprint& f);
Fingerprint fingerprint_from_json(const Json& j);

/// {"orders":{"1":1,"3":26},"census_le_p":27}
Json census_to_json(const FiniteGroup& g);

/// First line is the group order, then one comma-separated row per element.
std::string cayley_csv(const FiniteGroup& g);
FiniteGroup cayley_from_csv(const std::string& text);

/// {"p", "classes":[{"label","tau","v","fingerprint","merged_labels"}], "counts"}
Json to_json(const ClassificationResult& r);
ClassificationResult classification_from_json(const Json& j);
/// Header plus one line per class; list fields are joined with ';'.
std::string fingerprint_csv(const ClassificationResult& r);

Json to_json(const Table1& t);
Json to_json(const Table2& t);

}  // namespace pfour

#endif
