#pragma once

#include <optional>
#include <string>
#include <vector>

#include "invtheory/grouprep/instance.hpp"

namespace invtheory {

/// A named built-in instance. The group acts by its defining matrices.
struct CatalogEntry {
  InstanceSpec spec;
  std::string family;        // trivial, z2, z3, z4, s2, klein4, s3, char2-swap
  std::size_t order = 0;
  bool cyclic = false;
  bool faithful_character = false;  // one-dimensional faithful action
};

/// Every built-in, in a fixed order.
const std::vector<CatalogEntry>& catalog();

/// Entries of the non-modular families over gf5, gf7, gf13 and q.
std::vector<CatalogEntry> coprime_catalog();

std::optional<CatalogEntry> find_entry(const std::string& name);

/// Resolves a catalog name or reads an instance JSON file.
InstanceSpec load_instance(const std::string& name_or_path);

}  // namespace invtheory
