#pragma once

// FiniteGroup <-> structured text:
//   {"order": n, "identity": e, "table": [[...], ...], "label": "..."}
// Keys are emitted in that order; parsing rebuilds and revalidates the group.

#include <string>
#include <string_view>

#include <json.hpp>

#include "cyclicity/finite_group.hpp"

namespace cyclicity {

using Json = nlohmann::ordered_json;

Json to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const Json& doc, std::size_t cap = kDefaultTableCap);

/// Compact single-line document.
std::string serialize(const FiniteGroup& g);
/// Throws InvalidGroup on malformed text or a table that fails validation.
FiniteGroup deserialize(std::string_view text, std::size_t cap = kDefaultTableCap);

}  // namespace cyclicity
