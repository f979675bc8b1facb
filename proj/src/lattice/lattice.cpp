#include "basetwo/lattice.hpp"

#include "basetwo/error.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace basetwo {

namespace {

bool is_prime_power(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      return n == 1;
    }
  return true;
}

struct SetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

}  // namespace

Fingerprint fingerprint(const EnumeratedGroup& g, const Subgroup& h) {
  Fingerprint f;
  f.order = h.order;
  f.class_counts.assign(g.class_count(), 0);
  h.elements.for_each([&](Elem e) { ++f.class_counts[g.class_of(e)]; });
  f.derived_order = g.derived(h).order;
  return f;
}

ConjugateOrbit conjugates(const EnumeratedGroup& g, const Subgroup& h) {
  ConjugateOrbit orb;
  std::unordered_set<ElementSet, SetHash> seen;
  seen.insert(h.elements);
  orb.members.push_back(h);
  orb.conjugators.push_back(g.identity());
  for (std::size_t k = 0; k < orb.members.size(); ++k)
    for (Elem s : g.generator_indices()) {
      Subgroup c = g.conjugate(orb.members[k], s);
      if (!seen.insert(c.elements).second) continue;
      orb.conjugators.push_back(g.mul(orb.conjugators[k], s));
      orb.members.push_back(std::move(c));
    }
  return orb;
}

std::uint64_t Lattice::total_subgroups() const {
  std::uint64_t t = 0;
  for (const auto& c : classes_) t += c.class_size;
  return t;
}

std::optional<Lattice::Location> Lattice::locate(const Subgroup& h) const {
  auto [lo, hi] = conjugates_.equal_range(h.elements.hash());
  for (auto it = lo; it != hi; ++it) {
    const auto& rep = classes_[it->second.cls].representative;
    if (rep.order != h.order) continue;
    if (group_->conjugate_set(rep.elements, it->second.conjugator) == h.elements) return it->second;
  }
  return std::nullopt;
}

Lattice subgroup_classes(std::shared_ptr<const PermGroup> g, const LatticeOptions& opts) {
  if (g->order() > opts.bound)
    throw Error(Errc::bound_exceeded, "order " + g->order().str() + " exceeds lattice bound " +
                                          std::to_string(opts.bound));
  return subgroup_classes(std::make_shared<const EnumeratedGroup>(g, opts.bound), opts);
}

Lattice subgroup_classes(std::shared_ptr<const EnumeratedGroup> gp, const LatticeOptions& opts) {
  const EnumeratedGroup& g = *gp;
  const std::uint64_t n = g.size();
  if (n > opts.bound)
    throw Error(Errc::bound_exceeded, "order " + std::to_string(n) + " exceeds lattice bound " +
                                          std::to_string(opts.bound));
  Lattice lat;
  lat.group_ = gp;

  // Prime-power cyclic subgroups, each named by its least generator.
  constexpr std::uint32_t none = UINT32_MAX;
  std::vector<std::uint32_t> zid(n, none);
  std::vector<Elem> zgen;
  for (Elem e = 0; e < n; ++e) {
    if (zid[e] != none || !is_prime_power(g.element_order(e))) continue;
    auto id = static_cast<std::uint32_t>(zgen.size());
    zgen.push_back(e);
    std::uint32_t o = g.element_order(e);
    for (std::uint32_t k = 1; k < o; ++k)
      if (std::gcd(k, o) == 1) zid[g.power(e, k)] = id;
  }

  std::vector<bool> joins_proper;
  auto add_class = [&](const Subgroup& j) {
    std::size_t idx = lat.classes_.size();
    auto orb = conjugates(g, j);
    std::size_t c = 0;
    for (std::size_t i = 1; i < orb.members.size(); ++i)
      if (orb.members[i].elements.lex_less(orb.members[c].elements)) c = i;
    Elem back = g.inv(orb.conjugators[c]);
    for (std::size_t i = 0; i < orb.members.size(); ++i)
      lat.conjugates_.emplace(orb.members[i].elements.hash(),
                              Lattice::Location{idx, g.mul(back, orb.conjugators[i])});
    SubgroupClass sc;
    sc.representative = std::move(orb.members[c]);
    sc.class_size = orb.members.size();
    lat.classes_.push_back(std::move(sc));
    joins_proper.push_back(false);
    return idx;
  };

  add_class(g.trivial());
  std::vector<std::uint32_t> uf(zgen.size());
  auto find = [&](std::uint32_t x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };

  for (std::size_t i = 0; i < lat.classes_.size(); ++i) {
    if (opts.class_limit && lat.classes_.size() >= opts.class_limit) {
      lat.complete_ = false;
      break;
    }
    const Subgroup h = lat.classes_[i].representative;
    if (h.order == n) continue;
    Subgroup nh = g.normalizer(h);
    std::iota(uf.begin(), uf.end(), 0u);
    for (Elem s : nh.generators)
      for (std::uint32_t z = 0; z < zgen.size(); ++z) {
        if (h.contains(zgen[z])) continue;
        std::uint32_t a = find(z), b = find(zid[g.conj(zgen[z], s)]);
        if (a != b) uf[std::max(a, b)] = std::min(a, b);
      }
    for (std::uint32_t z = 0; z < zgen.size(); ++z) {
      if (h.contains(zgen[z]) || find(z) != z) continue;
      auto j = g.extend(h, zgen[z], n / 2);
      if (!j) continue;  // the join is G
      joins_proper[i] = true;
      if (!lat.locate(*j)) add_class(*j);
    }
  }
  if (n > 1) add_class(g.whole());
  // a class added after the limit was hit has unexplored joins
  const std::size_t explored = lat.classes_.size();

  std::vector<std::size_t> perm(lat.classes_.size());
  std::iota(perm.begin(), perm.end(), 0);
  for (auto& c : lat.classes_) {
    c.fp = fingerprint(g, c.representative);
    c.normal = c.class_size == 1;
    c.core_free = g.core(c.representative).order == 1;
    c.large = c.representative.order < n && c.representative.order * c.representative.order > n;
  }
  for (std::size_t i = 0; i < lat.classes_.size(); ++i) {
    auto& c = lat.classes_[i];
    c.maximal = lat.complete_ && i < explored && c.representative.order < n && !joins_proper[i];
  }
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    const auto& A = lat.classes_[a];
    const auto& B = lat.classes_[b];
    if (A.fp != B.fp) return A.fp < B.fp;
    return A.representative.elements.lex_less(B.representative.elements);
  });
  std::vector<std::size_t> where(perm.size());
  std::vector<SubgroupClass> sorted;
  sorted.reserve(perm.size());
  for (std::size_t k = 0; k < perm.size(); ++k) {
    where[perm[k]] = k;
    sorted.push_back(std::move(lat.classes_[perm[k]]));
  }
  lat.classes_ = std::move(sorted);
  for (auto& [hash, loc] : lat.conjugates_) loc.cls = where[loc.cls];
  for (auto& c : lat.classes_) c.representative = g.from_set(c.representative.elements);
  return lat;
}

Lattice restore_lattice(std::shared_ptr<const EnumeratedGroup> gp, const std::vector<StoredClass>& stored) {
  const EnumeratedGroup& g = *gp;
  Lattice lat;
  lat.group_ = gp;
  for (const auto& s : stored) {
    Subgroup h = g.generate(s.generators);
    if (lat.locate(h)) throw Error(Errc::integrity, "stored lattice repeats a class");
    auto orb = conjugates(g, h);
    for (std::size_t i = 1; i < orb.members.size(); ++i)
      if (orb.members[i].elements.lex_less(h.elements))
        throw Error(Errc::integrity, "stored representative is not canonical");
    const std::size_t idx = lat.classes_.size();
    for (std::size_t i = 0; i < orb.members.size(); ++i)
      lat.conjugates_.emplace(orb.members[i].elements.hash(), Lattice::Location{idx, orb.conjugators[i]});
    SubgroupClass c;
    c.class_size = orb.members.size();
    c.representative = g.from_set(h.elements);
    c.fp = fingerprint(g, c.representative);
    c.normal = c.class_size == 1;
    c.core_free = g.core(c.representative).order == 1;
    c.large = h.order < g.size() && h.order * h.order > g.size();
    c.maximal = s.maximal;
    lat.classes_.push_back(std::move(c));
  }
  for (std::size_t i = 1; i < lat.classes_.size(); ++i) {
    const auto& a = lat.classes_[i - 1];
    const auto& b = lat.classes_[i];
    if (b.fp < a.fp || (b.fp == a.fp && !a.representative.elements.lex_less(b.representative.elements)))
      throw Error(Errc::integrity, "stored classes are out of order");
  }
  if (lat.classes_.empty() || lat.classes_.front().representative.order != 1 ||
      lat.classes_.back().representative.order != g.size())
    throw Error(Errc::integrity, "stored lattice is malformed");
  return lat;
}

std::vector<StoredClass> store_lattice(const Lattice& l) {
  if (!l.complete()) throw Error(Errc::lattice_incomplete, "only complete lattices are stored");
  std::vector<StoredClass> out;
  for (const auto& c : l.classes()) out.push_back({c.representative.generators, c.maximal});
  return out;
}

std::vector<std::size_t> maximal_subgroups(const Lattice& l) {
  if (!l.complete()) throw Error(Errc::lattice_incomplete, "maximal subgroups");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < l.classes().size(); ++i)
    if (l.classes()[i].maximal) out.push_back(i);
  return out;
}

std::vector<std::size_t> corefree_classes(const Lattice& l) {
  if (!l.complete()) throw Error(Errc::lattice_incomplete, "core-free classes");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < l.classes().size(); ++i)
    if (l.classes()[i].core_free) out.push_back(i);
  return out;
}

std::optional<Elem> contained_up_to_conjugacy(const EnumeratedGroup& g, const Subgroup& a,
                                              const Subgroup& b) {
  if (a.order > b.order || b.order % a.order != 0) return std::nullopt;
  for (Elem t = 0; t < g.size(); ++t) {
    bool inside = std::all_of(a.generators.begin(), a.generators.end(),
                              [&](Elem x) { return b.contains(g.conj(x, t)); });
    if (inside) return t;
  }
  return std::nullopt;
}

std::vector<std::size_t> maximal_by_containment(const Lattice& l) {
  const auto& cls = l.classes();
  const std::uint64_t n = l.group().size();
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cls.size(); ++i) {
    if (cls[i].representative.order == n) continue;
    bool covered = false;
    for (std::size_t j = 0; j < cls.size() && !covered; ++j) {
      const auto& cj = cls[j].representative;
      if (cj.order == n || cj.order <= cls[i].representative.order) continue;
      covered = contained_up_to_conjugacy(l.group(), cls[i].representative, cj).has_value();
    }
    if (!covered) out.push_back(i);
  }
  return out;
}

std::optional<Elem> conjugate_test(const EnumeratedGroup& g, const Subgroup& a, const Subgroup& b) {
  if (a.order != b.order) return std::nullopt;
  if (fingerprint(g, a) != fingerprint(g, b)) return std::nullopt;
  return contained_up_to_conjugacy(g, a, b);
}

std::optional<Permutation> conjugate_test(const SubgroupHandle& a, const SubgroupHandle& b,
                                          std::uint64_t bound) {
  if (!a.same_parent(b)) throw Error(Errc::parent_mismatch, "conjugate_test");
  EnumeratedGroup g(a.parent_ptr(), bound);
  auto t = conjugate_test(g, g.from_handle(a), g.from_handle(b));
  if (!t) return std::nullopt;
  return g.element(*t);
}

}  // namespace basetwo
