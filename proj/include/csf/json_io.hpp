#pragma once

#include "json.hpp"
#include <string>

#include "csf/expansion.hpp"
#include "csf/inference.hpp"

namespace csf {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits are numbers, larger ones are decimal strings.
Json integer_to_json(const Integer& z);
Integer integer_from_json(const Json& j);

/// [4, 2, 1, 1]
Json partition_to_json(const Partition& p);
/// Accepts a list or a "4+2+1+1" string.
Partition partition_from_json(const Json& j);

/// {"n": 8, "coeffs": [{"partition": [...], "c": ...}, ...]} in increasing lex order.
Json expansion_to_json(const StarExpansion& x);
StarExpansion expansion_from_json(const Json& j);
StarExpansion parse_expansion(std::string_view text);

Json report_to_json(const StructuralReport& rep);

}  // namespace csf
