#pragma once

#include "basetwo/enumerated.hpp"
#include "basetwo/lattice.hpp"

#include <optional>
#include <unordered_map>
#include <string>
#include <vector>

namespace basetwo {

struct BaseCertificate {
  std::uint32_t value = 0;
  /// g_2..g_b with H ∩ H^{g_2} ∩ ... ∩ H^{g_b} = 1.
  std::vector<Elem> witnesses;
  /// "order-bound" or "pairwise-nontrivial" when value >= 3.
  std::optional<std::string> lower_bound_reason;
};

/// Conjugates of H produced lazily by breadth-first search over the generators
/// of G; each new subgroup comes with the conjugator that produced it.
class ConjugateStream {
 public:
  ConjugateStream(const EnumeratedGroup& g, const Subgroup& h);
  /// Next unseen conjugate, or false when the orbit is exhausted.
  bool next(ElementSet& out, Elem& conjugator);

 private:
  const EnumeratedGroup& g_;
  std::vector<ElementSet> found_;
  std::vector<Elem> conj_;
  std::unordered_multimap<std::size_t, std::size_t> index_;
  std::size_t emitted_ = 0;
  std::size_t expand_ = 0;
  std::size_t gen_ = 0;
};

/// Some g with H ∩ H^g = 1.
std::optional<Elem> exists_trivial_pair(const EnumeratedGroup& g, const Subgroup& h);

/// |H|^2 > |normal closure of H|.
bool lower_bound_check(const EnumeratedGroup& g, const Subgroup& h);

/// Exact b(G, H) by breadth-first search over intersections of conjugates.
/// Throws Errc::not_core_free when H has a nontrivial core.
BaseCertificate base_size(const EnumeratedGroup& g, const Subgroup& h);
BaseCertificate base_size(const SubgroupHandle& h, std::uint64_t bound = 2'000'000);

/// H ∩ H^{g_2} ∩ ... is trivial.
bool replay(const EnumeratedGroup& g, const Subgroup& h, const std::vector<Elem>& witnesses);

struct ClassBase {
  std::size_t cls = 0;
  BaseCertificate cert;
};

struct AlphaReport {
  std::uint64_t alpha = 0;
  std::uint64_t beta = 0;
  /// Core-free classes with b >= 3.
  std::vector<ClassBase> witnesses;
  /// Large core-free classes.
  std::vector<std::size_t> beta_classes;
  /// Every core-free class, in lattice order.
  std::vector<ClassBase> per_class;
};

struct AlphaOptions {
  unsigned jobs = 1;
};

/// Needs a complete lattice.
AlphaReport alpha(const Lattice& l, const AlphaOptions& opts = {});
std::vector<std::size_t> beta(const Lattice& l);

}  // namespace basetwo
