#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "numsg/semigroup.hpp"

namespace numsg {

using Json = nlohmann::json;

/// "⟨a1,a2,…⟩" with sorted minimal generators; ℕ prints as "⟨1⟩".
std::string to_text(const NumericalSemigroup& s);
std::string to_text(const std::vector<Int>& values);  // "{a,b,c}"

/// {"frobenius":F,"gaps":[…],"genus":g,"msg":[…]}; keys sort canonically.
Json to_json(const NumericalSemigroup& s);
/// Inverse of to_json. InvalidInput when the fields disagree.
NumericalSemigroup semigroup_from_json(const Json& j);

/// "a,b,c" (generators) or "gaps:g1,g2,…"; "gaps:" alone is ℕ.
NumericalSemigroup parse_semigroup(std::string_view spec);
/// Comma-separated integers; InvalidInput on anything else.
std::vector<Int> parse_int_list(std::string_view text);

}  // namespace numsg
