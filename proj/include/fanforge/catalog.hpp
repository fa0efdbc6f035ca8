#ifndef FANFORGE_CATALOG_HPP
#define FANFORGE_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "fanforge/fan.hpp"
#include "fanforge/matroid.hpp"
#include "fanforge/repr.hpp"

namespace fanforge {

struct CatalogEntry {
  std::string name;
  std::string note;  // construction provenance, one line
  Matroid matroid;
  std::optional<ReprMatroid> repr;
  /// Distinguished fan family, when the entry has one (N12 carries its
  /// three disjoint 4-element fans).
  std::optional<FanFamily> fans;
};

/// Names of the fixed entries. Parametric names wheel<r> and whirl<r>
/// are also accepted by catalog_get.
const std::vector<std::string>& catalog_names();

bool catalog_has(const std::string& name);

/// Deterministic construction of a named matroid; input_error for
/// unknown names.
CatalogEntry catalog_get(const std::string& name);

}  // namespace fanforge

#endif  // FANFORGE_CATALOG_HPP
