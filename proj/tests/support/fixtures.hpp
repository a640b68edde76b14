#pragma once

#include <string>

#include "factorspec/harness.hpp"

#ifndef FACTORSPEC_CATALOG_DIR
#error "FACTORSPEC_CATALOG_DIR must point at the generated catalogs"
#endif

namespace fixtures {

inline std::string catalog_path(const std::string &name) {
  return std::string(FACTORSPEC_CATALOG_DIR) + "/" + name;
}

inline std::vector<factorspec::Graph> load(const std::string &name) {
  return factorspec::read_catalog_file(catalog_path(name));
}

} // namespace fixtures
