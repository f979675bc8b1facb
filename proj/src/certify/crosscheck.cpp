#include "basetwo/certify.hpp"

#include "basetwo/module.hpp"

namespace basetwo {

namespace {

std::uint64_t ipow(std::uint64_t p, unsigned k) {
  std::uint64_t r = 1;
  while (k--) r *= p;
  return r;
}

bool trivially_meet(const Subgroup& a, const Subgroup& b) { return (a.elements & b.elements).count() == 1; }

}  // namespace

std::vector<CountRow> count_crosscheck(const EnumeratedGroup& g, std::uint64_t p) {
  const Subgroup ps = g.core(sylow(g, p));
  auto ea = elementary_abelian(g, ps);
  if (!ea || ea->rank < 2) return {};
  std::vector<MinimalNormal> mins;
  for (auto& m : classify_minimal_normals(g))
    if (m.prime == p && m.group.elements.is_subset_of(ps.elements)) mins.push_back(std::move(m));

  std::optional<CountRow> row;
  auto set = [&](std::string formula, std::uint64_t value) {
    if (!row) row = CountRow{std::move(formula), value, 0, false};
  };
  const auto& whole = g.whole();
  for (const auto& m : mins)
    if (m.group.order == ps.order) {
      if (m.rank == 3) set("p^2+p+1", p * p + p + 1);
      if (m.rank == 4) set("(p^4-1)/(p-1)", (ipow(p, 4) - 1) / (p - 1));
    }
  for (std::size_t i = 0; i < mins.size() && !row; ++i)
    for (std::size_t j = 0; j < mins.size() && !row; ++j) {
      const auto& a = mins[i];
      const auto& b = mins[j];
      if (i == j || a.group.order * b.group.order != ps.order || !trivially_meet(a.group, b.group)) continue;
      if (a.rank == 2 && b.rank == 2 && i < j) {
        if (modules_isomorphic(g, a.group, b.group, whole))
          set("p(p^2-1)", p * (p * p - 1));
        else
          set("(p+1)^2(p-1)", (p + 1) * (p + 1) * (p - 1));
      }
      if (a.rank == 2 && b.rank == 1) set("p^2-1", p * p - 1);
    }
  if (!row && ea->rank == 3 && mins.size() == 3 &&
      g.join(g.join(mins[0].group, mins[1].group), mins[2].group).order == ps.order &&
      !modules_isomorphic(g, mins[0].group, mins[1].group, whole) &&
      !modules_isomorphic(g, mins[0].group, mins[2].group, whole) &&
      !modules_isomorphic(g, mins[1].group, mins[2].group, whole))
    set("(p-1)^2", (p - 1) * (p - 1));
  if (!row) return {};

  for (const auto& h : hyperplanes(g, ps))
    if (g.core(h).order == 1) ++row->enumerated;
  row->match = row->enumerated == row->predicted;
  return {*row};
}

}  // namespace basetwo
