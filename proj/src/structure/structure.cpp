#include "basetwo/structure.hpp"

#include "basetwo/error.hpp"
#include "basetwo/module.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace basetwo {

namespace {

bool order_lex_less(const Subgroup& a, const Subgroup& b) {
  return a.order != b.order ? a.order < b.order : a.elements.lex_less(b.elements);
}

bool is_p_power(std::uint64_t n, std::uint64_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

unsigned log_p(std::uint64_t n, std::uint64_t p) {
  unsigned k = 0;
  while (n > 1) {
    n /= p;
    ++k;
  }
  return k;
}

bool is_prime_order(const EnumeratedGroup& g, Elem x) {
  return x != g.identity() && is_prime(g.element_order(x));
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t q = 1;
  while (n % p == 0) {
    n /= p;
    q *= p;
  }
  return q;
}

SubgroupHandle core(const SubgroupHandle& h, std::uint64_t bound) {
  EnumeratedGroup g(h.parent_ptr(), bound);
  return g.to_handle(g.core(g.from_handle(h)));
}

Subgroup sylow(const EnumeratedGroup& g, std::uint64_t p) {
  const std::uint64_t target = p_part(g.size(), p);
  Subgroup s = g.trivial();
  while (s.order < target) {
    const std::uint64_t before = s.order;
    for (Elem x = 0; x < g.size() && s.order < target; ++x)
      if (!s.contains(x) && is_p_power(g.element_order(x), p) && g.normalizes(s, x))
        s = *g.extend(s, x);
    if (s.order == before) throw Error(Errc::integrity, "Sylow growth stalled");
  }
  return s;
}

std::vector<Subgroup> minimal_normal_subgroups(const EnumeratedGroup& g) {
  std::vector<Subgroup> cands;
  for (std::size_t c = 0; c < g.class_count(); ++c) {
    Elem x = g.class_rep(c);
    if (!is_prime_order(g, x)) continue;
    Subgroup n = g.normal_closure({x}, g.whole());
    bool dup = std::any_of(cands.begin(), cands.end(),
                           [&](const Subgroup& m) { return m.elements == n.elements; });
    if (!dup) cands.push_back(std::move(n));
  }
  std::vector<Subgroup> out;
  for (const auto& n : cands)
    if (std::none_of(cands.begin(), cands.end(), [&](const Subgroup& m) {
          return m.order < n.order && m.elements.is_subset_of(n.elements);
        }))
      out.push_back(n);
  std::sort(out.begin(), out.end(), order_lex_less);
  return out;
}

std::vector<SubgroupHandle> minimal_normal_subgroups(const std::shared_ptr<const PermGroup>& g,
                                                     std::uint64_t bound) {
  EnumeratedGroup eg(g, bound);
  std::vector<SubgroupHandle> out;
  for (const auto& n : minimal_normal_subgroups(eg)) out.push_back(eg.to_handle(n));
  return out;
}

std::vector<Subgroup> normal_subgroups(const EnumeratedGroup& g) {
  std::vector<Subgroup> out{g.trivial()};
  std::unordered_multimap<std::size_t, std::size_t> index;
  auto add = [&](Subgroup s) {
    auto [lo, hi] = index.equal_range(s.elements.hash());
    for (auto it = lo; it != hi; ++it)
      if (out[it->second].elements == s.elements) return;
    index.emplace(s.elements.hash(), out.size());
    out.push_back(std::move(s));
  };
  index.emplace(out[0].elements.hash(), 0);
  for (std::size_t c = 1; c < g.class_count(); ++c) add(g.normal_closure({g.class_rep(c)}, g.whole()));
  // Every normal subgroup is a join of normal closures of single classes.
  const std::size_t seeds = out.size();
  for (std::size_t i = 1; i < out.size(); ++i)
    for (std::size_t j = 1; j < seeds; ++j)
      if (!out[j].elements.is_subset_of(out[i].elements)) add(g.join(out[i], out[j]));
  std::sort(out.begin(), out.end(), order_lex_less);
  return out;
}

std::vector<MinimalNormal> classify_minimal_normals(const EnumeratedGroup& g) {
  std::vector<MinimalNormal> out;
  for (auto& n : minimal_normal_subgroups(g)) {
    MinimalNormal m{n, 0, 0};
    if (g.is_abelian(n)) {
      auto ea = elementary_abelian(g, n);
      if (!ea) throw Error(Errc::integrity, "abelian minimal normal subgroup is not elementary");
      m.prime = ea->p;
      m.rank = ea->rank;
    }
    out.push_back(std::move(m));
  }
  return out;
}

Subgroup layer(const EnumeratedGroup& g, const Subgroup& frattini) {
  if (frattini.order != 1)
    throw Error(Errc::unsupported, "the layer is only computed when the Frattini subgroup is trivial");
  Subgroup e = g.trivial();
  for (const auto& n : minimal_normal_subgroups(g))
    if (!g.is_abelian(n)) e = g.join(e, n);
  return e;
}

Radicals radicals(const EnumeratedGroup& g, const std::optional<Subgroup>& frattini) {
  Radicals r;
  r.fitting = g.trivial();
  const auto normals = normal_subgroups(g);
  for (std::uint64_t p : prime_divisors(g.size())) {
    Subgroup op = g.core(sylow(g, p));
    r.fitting = g.join(r.fitting, op);
    r.p_cores.emplace(p, std::move(op));
    // Normal p'-subgroups are closed under joins, so the largest one is unique.
    const Subgroup* best = &normals.front();
    for (const auto& n : normals)
      if (n.order % p != 0 && n.order > best->order) best = &n;
    r.p_prime_cores.emplace(p, *best);
  }
  r.socle = g.trivial();
  for (const auto& n : minimal_normal_subgroups(g)) r.socle = g.join(r.socle, n);
  if (frattini && frattini->order == 1) {
    r.layer = layer(g, *frattini);
    r.gen_fitting = g.join(*r.layer, r.fitting);
  }
  return r;
}

Subgroup frattini(const Lattice& l) {
  if (!l.complete()) throw Error(Errc::lattice_incomplete, "Frattini subgroup needs the full lattice");
  const auto& g = l.group();
  ElementSet phi = g.whole().elements;
  for (std::size_t c : maximal_subgroups(l)) phi &= g.core(l.classes()[c].representative).elements;
  return g.from_set(phi);
}

Subgroup frattini(const EnumeratedGroup& g, const Lattice* l) {
  if (l) return frattini(*l);
  if (g.size() == 1) return g.trivial();
  bool simple = true;
  for (std::size_t c = 1; c < g.class_count() && simple; ++c)
    if (g.normal_closure({g.class_rep(c)}, g.whole()).order != g.size()) simple = false;
  if (!simple) throw Error(Errc::lattice_incomplete, "Frattini subgroup needs a lattice unless G is simple");
  return g.trivial();
}

ModuleStats module_stats(const EnumeratedGroup& g, const Subgroup& frattini) {
  if (frattini.order != 1)
    throw Error(Errc::unsupported, "module statistics need a trivial Frattini subgroup");
  ModuleStats st;
  for (std::uint64_t p : prime_divisors(g.size())) {
    Subgroup op = g.core(sylow(g, p));
    if (op.order == 1) continue;
    unsigned cp = 0;
    for (std::size_t c = 1; c < g.class_count(); ++c) {
      Elem x = g.class_rep(c);
      if (!op.contains(x)) continue;
      cp = std::max(cp, log_p(g.normal_closure({x}, g.whole()).order, p));
    }
    st.c_per_prime[p] = cp;
    st.c = std::max(st.c, cp);
    st.c_defined = true;
  }
  for (const auto& m : classify_minimal_normals(g)) st.r = std::max(st.r, m.rank);
  return st;
}

Subgroup fitting_complement(const Lattice& l, const Subgroup& fitting) {
  const auto& g = l.group();
  const std::uint64_t want = g.size() / fitting.order;
  for (const auto& cls : l.classes()) {
    const auto& h = cls.representative;
    if (h.order == want && (h.elements & fitting.elements).count() == 1)
      return h;
  }
  throw Error(Errc::integrity, "no complement to the Fitting subgroup");
}

ActionDiagnostics action_diagnostics(const EnumeratedGroup& g, const Subgroup& l, const Subgroup& v) {
  if (!g.is_abelian(v)) throw Error(Errc::invalid_argument, "action_diagnostics needs an abelian V");
  ActionDiagnostics d;
  std::vector<Elem> lel = l.elements.to_vector();
  v.elements.for_each([&](Elem x) {
    if (d.regular_orbit_exists) return;
    bool regular = std::all_of(lel.begin(), lel.end(),
                               [&](Elem y) { return y == g.identity() || g.conj(x, y) != x; });
    if (regular) {
      d.regular_orbit_exists = true;
      d.regular_point = x;
    }
  });
  if (v.order > 1)
    for (Elem y : lel)
      if (auto k = scalar_of(g, v, y)) d.scalar_elements.emplace_back(y, *k);
  return d;
}

Subgroup center(const EnumeratedGroup& g, const Subgroup& h) {
  return g.intersect(h, g.centralizer(h));
}

std::vector<Elem> involutions(const EnumeratedGroup& g, const Subgroup& h) {
  std::vector<Elem> out;
  h.elements.for_each([&](Elem x) {
    if (g.element_order(x) == 2) out.push_back(x);
  });
  return out;
}

std::uint64_t exponent(const EnumeratedGroup& g, const Subgroup& h) {
  std::uint64_t e = 1;
  h.elements.for_each([&](Elem x) { e = std::lcm(e, std::uint64_t{g.element_order(x)}); });
  return e;
}

bool is_cyclic(const EnumeratedGroup& g, const Subgroup& h) {
  bool found = false;
  h.elements.for_each([&](Elem x) {
    if (g.element_order(x) == h.order) found = true;
  });
  return found;
}

bool all_subgroups_normal(const EnumeratedGroup& g, const Subgroup& h) {
  // A subgroup is normal once each cyclic subgroup is.
  bool ok = true;
  h.elements.for_each([&](Elem x) {
    if (ok && !g.is_normal(g.generate({x}))) ok = false;
  });
  return ok;
}

Subgroup hall_part(const EnumeratedGroup& g, const Subgroup& h, std::uint64_t p, bool coprime) {
  if (!g.is_abelian(h)) throw Error(Errc::invalid_argument, "hall_part needs an abelian subgroup");
  ElementSet s(g.size());
  h.elements.for_each([&](Elem x) {
    bool pe = is_p_power(g.element_order(x), p);
    if (coprime ? g.element_order(x) % p != 0 : pe) s.set(x);
  });
  return g.from_set(s);
}

}  // namespace basetwo
