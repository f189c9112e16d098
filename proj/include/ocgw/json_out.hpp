#pragma once

#include <string>

#include "json.hpp"

namespace ocgw {

using ojson = nlohmann::ordered_json;

// Serializes with floating values printed as %.17g so that equal inputs give equal bytes.
std::string dump_json(const ojson& j, int indent = -1);

}  // namespace ocgw
