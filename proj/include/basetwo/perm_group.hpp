#pragma once

#include "basetwo/bigint.hpp"
#include "basetwo/permutation.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

namespace basetwo {

/// One level of a stabilizer chain. `transversal[k]` maps `base_point` to `orbit[k]`.
struct ChainLevel {
  Point base_point = 0;
  std::vector<Permutation> generators;
  std::vector<Point> orbit;
  std::vector<std::int32_t> orbit_pos;
  std::vector<Permutation> transversal;
  std::vector<Permutation> inverse_transversal;
};

/**
 * @brief A permutation group given by generators, with a stabilizer chain
 * built by deterministic Schreier-Sims.
 *
 * Base points are taken from `base_prefix` first and then as the smallest
 * point moved by the element that forced a new level. Immutable after
 * construction.
 */
class PermGroup {
 public:
  PermGroup(std::size_t degree, std::vector<Permutation> generators,
            std::span<const Point> base_prefix = {});

  static PermGroup trivial(std::size_t degree) { return PermGroup(degree, {}); }

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const std::vector<ChainLevel>& chain() const noexcept { return chain_; }
  std::vector<Point> base() const;
  const BigInt& order() const noexcept { return order_; }
  bool is_trivial() const noexcept { return order_ == 1; }

  struct SiftResult {
    Permutation residue;
    std::size_t level;  // chain().size() when every level was passed
  };
  SiftResult sift(const Permutation& g, std::size_t start_level = 0) const;
  bool contains(const Permutation& g) const;

  std::vector<Point> orbit(Point x) const;

  /// Visits every element; stops early when `fn` returns false.
  void for_each_element(const std::function<bool(const Permutation&)>& fn) const;
  /// All elements; throws Errc::bound_exceeded when the order exceeds `bound`.
  std::vector<Permutation> elements(std::uint64_t bound) const;

 private:
  void build(std::span<const Point> base_prefix);
  void compute_orbit(ChainLevel& level) const;

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<ChainLevel> chain_;
  BigInt order_ = 1;
};

/**
 * @brief A subgroup H of a parent group G. Every generator is checked for
 * membership in the parent and |H| is checked to divide |G|.
 */
class SubgroupHandle {
 public:
  SubgroupHandle(std::shared_ptr<const PermGroup> parent, std::vector<Permutation> generators);

  const PermGroup& parent() const noexcept { return *parent_; }
  const std::shared_ptr<const PermGroup>& parent_ptr() const noexcept { return parent_; }
  const PermGroup& group() const noexcept { return group_; }
  const std::vector<Permutation>& generators() const noexcept { return group_.generators(); }
  const BigInt& order() const noexcept { return group_.order(); }
  bool contains(const Permutation& g) const { return group_.contains(g); }
  bool same_parent(const SubgroupHandle& other) const noexcept;
  /// Equal as sets (same parent required).
  bool equals(const SubgroupHandle& other) const;

 private:
  std::shared_ptr<const PermGroup> parent_;
  PermGroup group_;
};

SubgroupHandle whole_group(const std::shared_ptr<const PermGroup>& g);
SubgroupHandle trivial_subgroup(const std::shared_ptr<const PermGroup>& g);

struct KernelOptions {
  /// Largest group that may be enumerated element by element.
  std::uint64_t element_bound = 2'000'000;
  /// Intersections switch from element filtering to chain backtrack above this.
  std::uint64_t filter_threshold = 100'000;
};

struct ConjugacyClass {
  Permutation representative;
  std::uint64_t size = 0;
};

/// Element conjugacy classes, ordered by the enumeration rank of their first member.
std::vector<ConjugacyClass> conjugacy_classes(const PermGroup& g, const KernelOptions& opts = {});

SubgroupHandle intersection(const SubgroupHandle& a, const SubgroupHandle& b,
                            const KernelOptions& opts = {});

/// Smallest normal subgroup of the parent containing `s`.
SubgroupHandle normal_closure(const SubgroupHandle& s);

/// N_G(H) where G is the parent of `h`. Enumerates conjugates of H, so |H|
/// must respect `opts.element_bound`.
SubgroupHandle normalizer(const SubgroupHandle& h, const KernelOptions& opts = {});

/// Builds a group from a list of elements, adding only those not yet generated.
PermGroup group_from_elements(std::size_t degree, std::span<const Permutation> elements);

}  // namespace basetwo
