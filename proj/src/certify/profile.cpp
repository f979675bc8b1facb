#include "basetwo/certify.hpp"
#include "basetwo/error.hpp"
#include "basetwo/module.hpp"

namespace basetwo {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw Error(Errc::integrity, std::string("profile invariant violated: ") + what);
}

}  // namespace

StructuralProfile profile(const Lattice& l) {
  const auto& g = l.group();
  StructuralProfile p;
  p.frattini = frattini(l);
  p.frattini_trivial = p.frattini.order == 1;
  auto rad = radicals(g, p.frattini_trivial ? std::optional<Subgroup>(p.frattini) : std::nullopt);
  p.fitting = rad.fitting;
  p.layer = rad.layer;
  p.gen_fitting = rad.gen_fitting;
  p.socle = rad.socle;
  p.p_cores = std::move(rad.p_cores);
  p.p_prime_cores = std::move(rad.p_prime_cores);
  p.min_normals = classify_minimal_normals(g);
  if (p.frattini_trivial) {
    p.stats = module_stats(g, p.frattini);
    if (p.layer->order == 1) {
      p.complement = fitting_complement(l, p.fitting);
    } else {
      try {
        p.complement = fitting_complement(l, p.fitting);
      } catch (const Error&) {
      }
    }
  }

  for (const auto& m : p.min_normals)
    if (m.prime) {
      auto ea = elementary_abelian(g, m.group);
      require(ea && ea->p == m.prime && ea->rank == m.rank, "abelian minimal normal subgroup rank");
    }
  if (p.frattini_trivial) {
    require(p.socle.order == p.layer->order * p.fitting.order, "socle = E(G) x F(G)");
    require(p.gen_fitting->elements == p.socle.elements, "F*(G) = socle");
    if (p.fitting.order > 1) require(1 <= p.stats.r && p.stats.r <= p.stats.c, "1 <= r <= c");
  }
  if (p.complement) {
    require((p.complement->elements & p.fitting.elements).count() == 1, "L meets F(G) trivially");
    require(p.complement->order * p.fitting.order == g.size(), "L F(G) = G");
  }
  return p;
}

}  // namespace basetwo
