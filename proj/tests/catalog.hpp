#pragma once
// Catalog groups shipped under catalog/, loaded through the spec constructor.

#include "basetwo/cli/construct.hpp"

#include <algorithm>
#include <filesystem>
#include <string>
#include <vector>

namespace testcatalog {

inline std::string path(const std::string& name) { return std::string(BASETWO_CATALOG_DIR) + "/" + name + ".json"; }

inline std::shared_ptr<const basetwo::PermGroup> load(const std::string& name) {
  return basetwo::cli::construct(basetwo::cli::load_spec(path(name)));
}

inline std::vector<std::string> names() {
  std::vector<std::string> out;
  for (const auto& e : std::filesystem::directory_iterator(BASETWO_CATALOG_DIR))
    if (e.path().extension() == ".json") out.push_back(e.path().stem().string());
  std::sort(out.begin(), out.end());
  return out;
}

/// Names of catalog groups of order at most `bound`.
inline std::vector<std::string> names_up_to(std::uint64_t bound) {
  std::vector<std::string> out;
  for (const auto& n : names())
    if (load(n)->order() <= bound) out.push_back(n);
  return out;
}

}  // namespace testcatalog
