#pragma once

#include "basetwo/lattice.hpp"

#include <optional>
#include <string>

namespace basetwo::cli {

/// Cache file name for G: hash of the tool version and canonical generator list.
std::string cache_key(const PermGroup& g);

struct LatticeSource {
  Lattice lattice;
  bool from_cache = false;
};

/// Reads the lattice of G from `cache_dir` when a matching entry exists;
/// otherwise computes it and, for complete lattices, writes an entry.
/// The order bound applies either way.
LatticeSource obtain_lattice(const std::shared_ptr<const PermGroup>& g, const LatticeOptions& opts,
                             const std::optional<std::string>& cache_dir);

}  // namespace basetwo::cli
