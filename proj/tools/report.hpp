#pragma once

#include <json.hpp>
#include <ostream>

namespace labgraph::cli {

using Report = nlohmann::ordered_json;

// Plain-text rendering: "key: value" lines, "key(sub)=value" for flat
// objects, one "- k=v, ..." line per record in arrays of objects.
void RenderText(const Report& report, std::ostream& out, int indent = 0);

}  // namespace labgraph::cli
