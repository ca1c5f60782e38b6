#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vknot/gauss.hpp"

namespace vknot {

struct CatalogKnot {
  std::string name;  ///< Green-table style name such as "2.1"
  std::string code;  ///< representative signed Gauss code
};

/// Named virtual knots known to the library.
const std::vector<CatalogKnot>& catalog();

/// Diagram for a catalog name, or nullopt.
std::optional<Diagram> catalog_diagram(std::string_view name);

}  // namespace vknot
