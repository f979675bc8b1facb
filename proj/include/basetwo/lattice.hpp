#pragma once

#include "basetwo/enumerated.hpp"

#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

namespace basetwo {

/// Conjugacy invariant used to order classes and to short-circuit conjugacy tests.
struct Fingerprint {
  std::uint64_t order = 0;
  std::vector<std::uint32_t> class_counts;  // elements met in each element class
  std::uint64_t derived_order = 0;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
  friend auto operator<=>(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const EnumeratedGroup& g, const Subgroup& h);

struct SubgroupClass {
  Subgroup representative;  // least conjugate in sorted-element order
  std::uint64_t class_size = 0;
  bool normal = false;
  bool core_free = false;
  bool large = false;
  bool maximal = false;
  Fingerprint fp;
};

struct LatticeOptions {
  /// Refuse groups above this order.
  std::uint64_t bound = 50'000;
  /// Stop after this many classes and mark the lattice incomplete (0 = no limit).
  std::size_t class_limit = 0;
};

/// What a lattice cache keeps per class: enough to rebuild everything else.
struct StoredClass {
  std::vector<Elem> generators;
  bool maximal = false;
};

/**
 * @brief All subgroups of G up to conjugacy, built by cyclic extension:
 * every class representative is joined with one prime-power cyclic subgroup
 * from each orbit of its normalizer.
 */
class Lattice {
 public:
  const EnumeratedGroup& group() const noexcept { return *group_; }
  const std::shared_ptr<const EnumeratedGroup>& group_ptr() const noexcept { return group_; }
  const std::vector<SubgroupClass>& classes() const noexcept { return classes_; }
  bool complete() const noexcept { return complete_; }
  std::uint64_t total_subgroups() const;

  struct Location {
    std::size_t cls;
    Elem conjugator;  // representative^conjugator equals the queried subgroup
  };
  /// Class of an arbitrary subgroup of G.
  std::optional<Location> locate(const Subgroup& h) const;

  std::size_t trivial_class() const noexcept { return 0; }
  std::size_t whole_class() const noexcept { return classes_.size() - 1; }

 private:
  friend Lattice subgroup_classes(std::shared_ptr<const EnumeratedGroup>, const LatticeOptions&);
  friend Lattice restore_lattice(std::shared_ptr<const EnumeratedGroup>, const std::vector<StoredClass>&);

  std::shared_ptr<const EnumeratedGroup> group_;
  std::vector<SubgroupClass> classes_;
  bool complete_ = true;
  std::unordered_multimap<std::size_t, Location> conjugates_;
};

Lattice subgroup_classes(std::shared_ptr<const EnumeratedGroup> g, const LatticeOptions& opts = {});
/// Rebuilds a complete lattice from stored classes, in stored order. Throws
/// Errc::integrity when a stored representative is not canonical or repeats.
Lattice restore_lattice(std::shared_ptr<const EnumeratedGroup> g, const std::vector<StoredClass>& stored);
std::vector<StoredClass> store_lattice(const Lattice& l);
/// Convenience overload; enumerates G under `opts.bound`.
Lattice subgroup_classes(std::shared_ptr<const PermGroup> g, const LatticeOptions& opts = {});

std::vector<std::size_t> maximal_subgroups(const Lattice& l);
std::vector<std::size_t> corefree_classes(const Lattice& l);

/// Maximal classes recomputed by explicit containment search, for cross-checking.
std::vector<std::size_t> maximal_by_containment(const Lattice& l);

/// Some g with a^g contained in b.
std::optional<Elem> contained_up_to_conjugacy(const EnumeratedGroup& g, const Subgroup& a,
                                              const Subgroup& b);

/// g with a^g = b, or nullopt; differing fingerprints short-circuit.
std::optional<Elem> conjugate_test(const EnumeratedGroup& g, const Subgroup& a, const Subgroup& b);
std::optional<Permutation> conjugate_test(const SubgroupHandle& a, const SubgroupHandle& b,
                                          std::uint64_t bound = 2'000'000);

/// All distinct conjugates of h with a conjugator for each, in discovery order.
struct ConjugateOrbit {
  std::vector<Subgroup> members;
  std::vector<Elem> conjugators;
};
ConjugateOrbit conjugates(const EnumeratedGroup& g, const Subgroup& h);

}  // namespace basetwo
