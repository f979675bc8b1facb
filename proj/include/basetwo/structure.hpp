#pragma once

#include "basetwo/enumerated.hpp"
#include "basetwo/lattice.hpp"

#include <map>
#include <optional>
#include <vector>

namespace basetwo {

std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
/// Largest power of p dividing n.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);
bool is_prime(std::uint64_t n);

/// Largest normal subgroup of the parent inside h.
SubgroupHandle core(const SubgroupHandle& h, std::uint64_t bound = 2'000'000);

/// Sylow p-subgroup grown greedily from p-elements in index order.
Subgroup sylow(const EnumeratedGroup& g, std::uint64_t p);

/// Inclusion-minimal normal closures of prime-order elements, one per class.
std::vector<Subgroup> minimal_normal_subgroups(const EnumeratedGroup& g);
std::vector<SubgroupHandle> minimal_normal_subgroups(const std::shared_ptr<const PermGroup>& g,
                                                     std::uint64_t bound = 2'000'000);

/// Every normal subgroup, ordered by (order, sorted elements).
std::vector<Subgroup> normal_subgroups(const EnumeratedGroup& g);

struct MinimalNormal {
  Subgroup group;
  std::uint64_t prime = 0;  // 0 when nonabelian
  unsigned rank = 0;        // log_p of the order; 0 when nonabelian
};
std::vector<MinimalNormal> classify_minimal_normals(const EnumeratedGroup& g);

struct Radicals {
  std::map<std::uint64_t, Subgroup> p_cores;
  std::map<std::uint64_t, Subgroup> p_prime_cores;
  Subgroup fitting;
  Subgroup socle;
  std::optional<Subgroup> layer;        // only when the Frattini subgroup is trivial
  std::optional<Subgroup> gen_fitting;  // E(G)F(G), same condition
};

/// `frattini` may be absent, in which case the layer is not computed.
Radicals radicals(const EnumeratedGroup& g, const std::optional<Subgroup>& frattini);

/// Product of the nonabelian minimal normal subgroups; refuses unless the
/// Frattini subgroup is trivial.
Subgroup layer(const EnumeratedGroup& g, const Subgroup& frattini);

/// Intersection of all maximal subgroups; needs a complete lattice.
Subgroup frattini(const Lattice& l);
/// Same, without a lattice for groups that are simple (then the answer is 1).
Subgroup frattini(const EnumeratedGroup& g, const Lattice* l);

struct ModuleStats {
  std::map<std::uint64_t, unsigned> c_per_prime;
  unsigned c = 0;
  bool c_defined = false;  // false when F(G) = 1
  unsigned r = 0;
};
/// Requires a trivial Frattini subgroup.
ModuleStats module_stats(const EnumeratedGroup& g, const Subgroup& frattini);

/// First class in canonical lattice order of order |G|/|F| meeting F trivially.
Subgroup fitting_complement(const Lattice& l, const Subgroup& fitting);

struct ActionDiagnostics {
  bool regular_orbit_exists = false;
  std::optional<Elem> regular_point;
  std::vector<std::pair<Elem, std::uint64_t>> scalar_elements;  // (element, k) acting as v -> v^k
};
/// L acting on the abelian V by conjugation.
ActionDiagnostics action_diagnostics(const EnumeratedGroup& g, const Subgroup& l, const Subgroup& v);

/// Z(H).
Subgroup center(const EnumeratedGroup& g, const Subgroup& h);
/// Involutions of h in index order.
std::vector<Elem> involutions(const EnumeratedGroup& g, const Subgroup& h);
std::uint64_t exponent(const EnumeratedGroup& g, const Subgroup& h);
bool is_cyclic(const EnumeratedGroup& g, const Subgroup& h);
/// All subgroups of h are normal in G.
bool all_subgroups_normal(const EnumeratedGroup& g, const Subgroup& h);
/// Largest subgroup of h of order coprime to p, for abelian h.
Subgroup hall_part(const EnumeratedGroup& g, const Subgroup& h, std::uint64_t p, bool coprime);

/// Everything the certifiers use about G.
struct StructuralProfile {
  Subgroup frattini;
  Subgroup fitting;
  std::optional<Subgroup> layer;
  std::optional<Subgroup> gen_fitting;
  Subgroup socle;
  std::map<std::uint64_t, Subgroup> p_cores;
  std::map<std::uint64_t, Subgroup> p_prime_cores;
  std::vector<MinimalNormal> min_normals;
  std::optional<Subgroup> complement;
  ModuleStats stats;
  bool frattini_trivial = false;
};

}  // namespace basetwo
