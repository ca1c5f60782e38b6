#include "vknot/catalog.hpp"

#include <algorithm>

namespace vknot {

const std::vector<CatalogKnot>& catalog() {
  static const std::vector<CatalogKnot> knots{
      {"2.1", "O1+O2+U1+U2+"},
      {"3.2", "O1+O3-U2-U1+O2-U3-"},
  };
  return knots;
}

std::optional<Diagram> catalog_diagram(std::string_view name) {
  const auto& knots = catalog();
  const auto it = std::find_if(knots.begin(), knots.end(), [&](const CatalogKnot& k) { return k.name == name; });
  if (it == knots.end()) return std::nullopt;
  return parse(it->code);
}

}  // namespace vknot
