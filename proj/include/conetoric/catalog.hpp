#pragma once

#include "conetoric/document.hpp"

#include <optional>
#include <string>
#include <vector>

namespace conetoric {

// Built-in named examples (orthants, the real-projective-3-space wedge, the
// degenerate pair, the non-good pairs, full spaces). The CONETORIC_CATALOG
// environment variable, when set, points to a directory of NAME.json files
// that replaces the built-in set.
std::vector<std::string> catalog_names();
std::optional<ConeDocument> catalog_lookup(const std::string& name);

}  // namespace conetoric
