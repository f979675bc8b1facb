#pragma once

#include "basetwo/perm_group.hpp"

#include <bit>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace basetwo {

/// Index of an element of an EnumeratedGroup (its rank in chain order).
using Elem = std::uint32_t;

/// Fixed-universe bitset over element indices.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : n_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const noexcept { return n_; }
  bool test(Elem i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(Elem i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(Elem i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  std::size_t count() const noexcept;
  bool is_subset_of(const ElementSet& o) const noexcept;
  bool intersects(const ElementSet& o) const noexcept;

  ElementSet& operator&=(const ElementSet& o) noexcept;
  ElementSet& operator|=(const ElementSet& o) noexcept;
  friend ElementSet operator&(ElementSet a, const ElementSet& b) noexcept { return a &= b; }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) noexcept { return a |= b; }
  friend bool operator==(const ElementSet&, const ElementSet&) = default;

  template <class F>
  void for_each(F&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      for (std::uint64_t bits = words_[w]; bits; bits &= bits - 1)
        fn(static_cast<Elem>(w * 64 + std::countr_zero(bits)));
  }
  std::vector<Elem> to_vector() const;
  std::size_t hash() const noexcept;
  /// Sorted-element-list order: A < B iff the least element of A xor B lies in A.
  bool lex_less(const ElementSet& o) const noexcept;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// A subgroup of an EnumeratedGroup as an explicit element set.
struct Subgroup {
  ElementSet elements;
  std::vector<Elem> generators;
  std::uint64_t order = 0;

  bool contains(Elem e) const noexcept { return elements.test(e); }
};

/**
 * @brief A permutation group small enough to list, with elements indexed by
 * their rank in the stabilizer chain. Products are computed from base images
 * alone, so no hash lookups are needed.
 */
class EnumeratedGroup {
 public:
  EnumeratedGroup(std::shared_ptr<const PermGroup> group, std::uint64_t bound);

  const PermGroup& group() const noexcept { return *group_; }
  const std::shared_ptr<const PermGroup>& group_ptr() const noexcept { return group_; }
  std::uint64_t size() const noexcept { return perms_.size(); }
  const Permutation& element(Elem i) const noexcept { return perms_[i]; }

  /// Rank of g; throws Errc::invalid_argument when g is not in the group.
  Elem index_of(const Permutation& g) const;
  std::optional<Elem> find(const Permutation& g) const;

  Elem identity() const noexcept { return 0; }
  Elem mul(Elem a, Elem b) const noexcept;
  Elem inv(Elem a) const noexcept { return inverse_[a]; }
  /// g^-1 a g.
  Elem conj(Elem a, Elem g) const noexcept { return mul(mul(inverse_[g], a), g); }
  Elem power(Elem a, std::int64_t k) const noexcept;
  Elem commutator(Elem a, Elem b) const noexcept { return mul(mul(inverse_[a], inverse_[b]), mul(a, b)); }
  std::uint32_t element_order(Elem a) const noexcept { return orders_[a]; }
  const std::vector<Elem>& generator_indices() const noexcept { return gens_; }

  // Element conjugacy classes, numbered by their smallest member.
  std::size_t class_count() const noexcept { return class_reps_.size(); }
  std::uint32_t class_of(Elem e) const noexcept { return class_of_[e]; }
  Elem class_rep(std::size_t c) const noexcept { return class_reps_[c]; }
  const std::vector<Elem>& class_members(std::size_t c) const noexcept { return class_members_[c]; }

  Subgroup trivial() const;
  Subgroup whole() const;
  Subgroup generate(const std::vector<Elem>& gens) const;
  /// <H, x>; nullopt once the closure exceeds `cap` elements.
  std::optional<Subgroup> extend(const Subgroup& h, Elem x,
                                 std::uint64_t cap = UINT64_MAX) const;
  Subgroup join(const Subgroup& a, const Subgroup& b) const;
  /// Subgroup with the given element set; generators chosen greedily by index.
  Subgroup from_set(const ElementSet& s) const;
  Subgroup intersect(const Subgroup& a, const Subgroup& b) const { return from_set(a.elements & b.elements); }

  ElementSet conjugate_set(const ElementSet& s, Elem g) const;
  Subgroup conjugate(const Subgroup& h, Elem g) const;
  bool normalizes(const Subgroup& h, Elem g) const;
  bool is_normal(const Subgroup& h) const;
  /// Normal closure of `seeds` inside `within`.
  Subgroup normal_closure(const std::vector<Elem>& seeds, const Subgroup& within) const;
  Subgroup normal_closure(const Subgroup& s) const { return normal_closure(s.generators, whole()); }
  Subgroup normalizer(const Subgroup& h) const;
  Subgroup centralizer(const Subgroup& h) const;
  /// Largest normal subgroup of G inside h: the union of the classes it contains.
  Subgroup core(const Subgroup& h) const;
  Subgroup derived(const Subgroup& h) const;
  bool is_abelian(const Subgroup& h) const;

  Subgroup from_handle(const SubgroupHandle& h) const;
  SubgroupHandle to_handle(const Subgroup& h) const;

 private:
  // Consumes img[0..base length); the base has at most 32 points since |G| < 2^32.
  Elem rank_of_images(Point* img) const noexcept;

  std::shared_ptr<const PermGroup> group_;
  std::vector<Point> base_;
  std::vector<Permutation> perms_;
  std::vector<Elem> inverse_;
  std::vector<std::uint32_t> orders_;
  std::vector<std::uint64_t> stride_;
  std::vector<Elem> gens_;
  std::vector<std::uint32_t> class_of_;
  std::vector<Elem> class_reps_;
  std::vector<std::vector<Elem>> class_members_;
};

}  // namespace basetwo
