#pragma once

// Elementary abelian normal subgroups viewed as F_p-modules. Everything is
// phrased through group operations: submodules are subgroups invariant under
// conjugation by an acting subgroup.

#include "basetwo/enumerated.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace basetwo {

struct ElementaryAbelian {
  std::uint64_t p = 0;
  unsigned rank = 0;
  std::vector<Elem> basis;
};

/// Prime and rank when v is a nontrivial elementary abelian p-group.
std::optional<ElementaryAbelian> elementary_abelian(const EnumeratedGroup& g, const Subgroup& v);

/// k with x^-1 v x = v^k for every v in V (V abelian), or nullopt. k = 1 means trivial action.
std::optional<std::uint64_t> scalar_of(const EnumeratedGroup& g, const Subgroup& v, Elem x);

/// Smallest subgroup containing `seeds` and invariant under `acting`.
Subgroup invariant_closure(const EnumeratedGroup& g, const std::vector<Elem>& seeds,
                           const Subgroup& acting);

std::vector<Subgroup> lines(const EnumeratedGroup& g, const Subgroup& v);
std::vector<Subgroup> hyperplanes(const EnumeratedGroup& g, const Subgroup& v);

bool is_invariant(const EnumeratedGroup& g, const Subgroup& w, const Subgroup& acting);
bool is_irreducible(const EnumeratedGroup& g, const Subgroup& v, const Subgroup& acting);
bool is_cyclic_module(const EnumeratedGroup& g, const Subgroup& v, const Subgroup& acting);

/// Minimal invariant subgroups of an abelian V.
std::vector<Subgroup> minimal_submodules(const EnumeratedGroup& g, const Subgroup& v,
                                         const Subgroup& acting);
/// V is the product of its minimal invariant subgroups.
bool acts_semisimply(const EnumeratedGroup& g, const Subgroup& v, const Subgroup& acting);

/// A and B irreducible, A ∩ B = 1: an invariant diagonal of A × B exists.
bool modules_isomorphic(const EnumeratedGroup& g, const Subgroup& a, const Subgroup& b,
                        const Subgroup& acting);

/// Pairs of lines {l1, l2} with V = l1 × l2 whose union is invariant under `acting`
/// while neither line is. Rank 2 only.
std::vector<std::pair<Subgroup, Subgroup>> imprimitivity_pairs(const EnumeratedGroup& g,
                                                               const Subgroup& v,
                                                               const Subgroup& acting);

/// [J, V] = <[j, v]>.
Subgroup commutator_subgroup(const EnumeratedGroup& g, const Subgroup& j, const Subgroup& v);
/// C_V(J).
Subgroup fixed_points(const EnumeratedGroup& g, const Subgroup& v, const Subgroup& j);

}  // namespace basetwo
