#pragma once

#include "basetwo/bigint.hpp"
#include "basetwo/perm_group.hpp"

#include <json.hpp>

#include <memory>
#include <optional>
#include <string>

namespace basetwo::cli {

inline constexpr int spec_version = 1;

/**
 * @brief A validated group description. Kinds:
 *   perm-generators  {degree, generators: [[cycle, ...], ...] or ["(0 1)(2 3)", ...]}
 *   named            {family: sym|alt|cyclic|dihedral (n) | psl2|sz (q)}
 *   affine           {p, d, matrices: [...], singer: bool}
 *   direct-product   {factors: [spec, ...]}
 *   semidirect-linear {modules: [{p, d}, ...], generators: [[matrix or "singer" per module], ...]}
 * Every document carries "version": 1 and may carry a display "name".
 */
class GroupSpec {
 public:
  /// Throws Errc::invalid_argument on any schema or parameter problem.
  static GroupSpec parse(const nlohmann::json& doc);

  const nlohmann::json& doc() const noexcept { return doc_; }
  std::string kind() const { return doc_.at("kind"); }
  std::string label() const;

 private:
  nlohmann::json doc_;
};

GroupSpec load_spec(const std::string& path);

std::shared_ptr<const PermGroup> construct(const GroupSpec& spec);

/// Closed-form order for named families and pure Singer affine groups.
std::optional<BigInt> closed_form_order(const GroupSpec& spec);

/// 64-bit FNV-1a over bytes; used for cache keys and the bundled-data pin.
std::uint64_t fnv1a(const std::string& bytes);
/// Generator images joined into one canonical string.
std::string canonical_generators(const PermGroup& g);

/// Bundled Sz(8) generator file (JSON: degree, order, generators as image
/// lists). The canonical generator string must hash to the pinned value.
std::shared_ptr<const PermGroup> load_sz8(const std::string& path);
std::string default_sz8_path();

}  // namespace basetwo::cli
