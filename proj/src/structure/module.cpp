#include "basetwo/module.hpp"

#include "basetwo/error.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace basetwo {

namespace {

bool same_elements_seen(std::vector<ElementSet>& seen, const ElementSet& s) {
  for (const auto& t : seen)
    if (t == s) return true;
  seen.push_back(s);
  return false;
}

// One generator per line of an elementary abelian group.
std::vector<Elem> line_generators(const EnumeratedGroup& g, const Subgroup& v) {
  std::vector<Elem> gens;
  ElementSet covered(g.size());
  v.elements.for_each([&](Elem x) {
    if (x == g.identity() || covered.test(x)) return;
    gens.push_back(x);
    Elem y = x;
    do {
      covered.set(y);
      y = g.mul(y, x);
    } while (y != g.identity());
  });
  return gens;
}

}  // namespace

std::optional<ElementaryAbelian> elementary_abelian(const EnumeratedGroup& g, const Subgroup& v) {
  if (v.order <= 1 || !g.is_abelian(v)) return std::nullopt;
  std::uint64_t p = 0;
  bool ok = true;
  v.elements.for_each([&](Elem x) {
    if (x == g.identity()) return;
    std::uint64_t o = g.element_order(x);
    if (p == 0) p = o;
    if (o != p) ok = false;
  });
  if (!ok) return std::nullopt;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return std::nullopt;
  ElementaryAbelian ea;
  ea.p = p;
  Subgroup span = g.trivial();
  v.elements.for_each([&](Elem x) {
    if (span.contains(x)) return;
    ea.basis.push_back(x);
    span = *g.extend(span, x);
  });
  ea.rank = static_cast<unsigned>(ea.basis.size());
  return ea;
}

std::optional<std::uint64_t> scalar_of(const EnumeratedGroup& g, const Subgroup& v, Elem x) {
  std::uint64_t e = 1;
  for (Elem y : v.generators) e = std::lcm(e, std::uint64_t{g.element_order(y)});
  for (std::uint64_t k = 1; k <= e; ++k) {
    bool ok = std::all_of(v.generators.begin(), v.generators.end(), [&](Elem y) {
      return g.conj(y, x) == g.power(y, static_cast<std::int64_t>(k));
    });
    if (ok) return k;
  }
  return std::nullopt;
}

Subgroup invariant_closure(const EnumeratedGroup& g, const std::vector<Elem>& seeds,
                           const Subgroup& acting) {
  return g.normal_closure(seeds, acting);
}

std::vector<Subgroup> lines(const EnumeratedGroup& g, const Subgroup& v) {
  std::vector<Subgroup> out;
  for (Elem x : line_generators(g, v)) out.push_back(g.generate({x}));
  return out;
}

std::vector<Subgroup> hyperplanes(const EnumeratedGroup& g, const Subgroup& v) {
  auto ea = elementary_abelian(g, v);
  if (!ea) throw Error(Errc::invalid_argument, "hyperplanes need an elementary abelian group");
  const std::uint64_t p = ea->p;
  const unsigned d = ea->rank;
  // Coordinates of every element with respect to the basis.
  std::vector<std::pair<Elem, std::vector<std::uint64_t>>> coords;
  std::vector<std::uint64_t> c(d, 0);
  for (;;) {
    Elem x = g.identity();
    for (unsigned i = 0; i < d; ++i) x = g.mul(x, g.power(ea->basis[i], static_cast<std::int64_t>(c[i])));
    coords.emplace_back(x, c);
    unsigned i = 0;
    while (i < d && ++c[i] == p) c[i++] = 0;
    if (i == d) break;
  }
  std::vector<Subgroup> out;
  std::vector<std::uint64_t> f(d, 0);
  for (;;) {
    unsigned i = 0;
    while (i < d && ++f[i] == p) f[i++] = 0;
    if (i == d) break;
    // Keep functionals whose last nonzero coordinate is 1.
    unsigned last = d;
    while (last > 0 && f[last - 1] == 0) --last;
    if (f[last - 1] != 1) continue;
    ElementSet s(g.size());
    for (const auto& [x, cx] : coords) {
      std::uint64_t dot = 0;
      for (unsigned j = 0; j < d; ++j) dot = (dot + f[j] * cx[j]) % p;
      if (dot == 0) s.set(x);
    }
    out.push_back(g.from_set(s));
  }
  return out;
}

bool is_invariant(const EnumeratedGroup& g, const Subgroup& w, const Subgroup& acting) {
  for (Elem a : acting.generators)
    for (Elem x : w.generators)
      if (!w.contains(g.conj(x, a))) return false;
  return true;
}

bool is_irreducible(const EnumeratedGroup& g, const Subgroup& v, const Subgroup& acting) {
  if (v.order <= 1) return false;
  for (Elem x : line_generators(g, v))
    if (invariant_closure(g, {x}, acting).order != v.order) return false;
  return true;
}

bool is_cyclic_module(const EnumeratedGroup& g, const Subgroup& v, const Subgroup& acting) {
  if (v.order <= 1) return true;
  bool found = false;
  v.elements.for_each([&](Elem x) {
    if (!found && invariant_closure(g, {x}, acting).order == v.order) found = true;
  });
  return found;
}

std::vector<Subgroup> minimal_submodules(const EnumeratedGroup& g, const Subgroup& v,
                                         const Subgroup& acting) {
  std::vector<Subgroup> cands;
  std::vector<ElementSet> seen;
  v.elements.for_each([&](Elem x) {
    if (x == g.identity()) return;
    std::uint32_t o = g.element_order(x);
    for (std::uint32_t d = 2; d * d <= o; ++d)
      if (o % d == 0) return;
    Subgroup w = invariant_closure(g, {x}, acting);
    if (!same_elements_seen(seen, w.elements)) cands.push_back(std::move(w));
  });
  std::vector<Subgroup> out;
  for (const auto& w : cands) {
    bool minimal = std::none_of(cands.begin(), cands.end(), [&](const Subgroup& u) {
      return u.order < w.order && u.elements.is_subset_of(w.elements);
    });
    if (minimal) out.push_back(w);
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    return a.order != b.order ? a.order < b.order : a.elements.lex_less(b.elements);
  });
  return out;
}

bool acts_semisimply(const EnumeratedGroup& g, const Subgroup& v, const Subgroup& acting) {
  if (!g.is_abelian(v)) throw Error(Errc::invalid_argument, "module must be abelian");
  Subgroup soc = g.trivial();
  for (const auto& w : minimal_submodules(g, v, acting)) soc = g.join(soc, w);
  return soc.order == v.order;
}

bool modules_isomorphic(const EnumeratedGroup& g, const Subgroup& a, const Subgroup& b,
                        const Subgroup& acting) {
  if (a.order != b.order || a.order <= 1) return false;
  if (a.elements == b.elements) return true;
  Elem a0 = a.generators.front();
  bool iso = false;
  b.elements.for_each([&](Elem y) {
    if (iso || y == g.identity()) return;
    if (invariant_closure(g, {g.mul(a0, y)}, acting).order == a.order) iso = true;
  });
  return iso;
}

std::vector<std::pair<Subgroup, Subgroup>> imprimitivity_pairs(const EnumeratedGroup& g,
                                                               const Subgroup& v,
                                                               const Subgroup& acting) {
  auto ea = elementary_abelian(g, v);
  if (!ea || ea->rank != 2)
    throw Error(Errc::unsupported, "imprimitivity is implemented for rank 2 only");
  auto ls = lines(g, v);
  std::vector<std::pair<Subgroup, Subgroup>> out;
  for (std::size_t i = 0; i < ls.size(); ++i)
    for (std::size_t j = i + 1; j < ls.size(); ++j) {
      bool closed = true, swapped = false;
      for (Elem a : acting.generators) {
        ElementSet li = g.conjugate_set(ls[i].elements, a);
        if (li == ls[i].elements) {
          if (!(g.conjugate_set(ls[j].elements, a) == ls[j].elements)) closed = false;
        } else if (li == ls[j].elements) {
          if (!(g.conjugate_set(ls[j].elements, a) == ls[i].elements)) closed = false;
          swapped = true;
        } else {
          closed = false;
        }
        if (!closed) break;
      }
      if (closed && swapped) out.emplace_back(ls[i], ls[j]);
    }
  return out;
}

Subgroup commutator_subgroup(const EnumeratedGroup& g, const Subgroup& j, const Subgroup& v) {
  std::vector<Elem> seeds;
  std::unordered_set<Elem> seen;
  j.elements.for_each([&](Elem x) {
    v.elements.for_each([&](Elem y) {
      Elem c = g.commutator(x, y);
      if (c != g.identity() && seen.insert(c).second) seeds.push_back(c);
    });
  });
  std::sort(seeds.begin(), seeds.end());
  return g.generate(seeds);
}

Subgroup fixed_points(const EnumeratedGroup& g, const Subgroup& v, const Subgroup& j) {
  ElementSet s(g.size());
  v.elements.for_each([&](Elem y) {
    bool fixed = std::all_of(j.generators.begin(), j.generators.end(),
                             [&](Elem x) { return g.conj(y, x) == y; });
    if (fixed) s.set(y);
  });
  return g.from_set(s);
}

}  // namespace basetwo
