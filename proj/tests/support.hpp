#pragma once

#include <string>

#include "hextet/catalog.hpp"

namespace hextet::testing {

/// The full catalog, built once and cached under the build tree.
const Catalog& catalog();

const CatalogEntry& entry(const std::string& id);

}  // namespace hextet::testing
