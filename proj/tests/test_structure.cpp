#include "doctest.h"
#include "brute.hpp"
#include "groups.hpp"

#include "basetwo/error.hpp"
#include "basetwo/module.hpp"
#include "basetwo/structure.hpp"

using namespace basetwo;
using testbrute::Brute;

namespace {

std::shared_ptr<EnumeratedGroup> enumerate(std::shared_ptr<const PermGroup> g) {
  return std::make_shared<EnumeratedGroup>(std::move(g), 100000);
}

std::vector<bool> as_brute(const Brute& b, const EnumeratedGroup& g, const Subgroup& h) {
  std::vector<bool> r(b.el.size(), false);
  h.elements.for_each([&](Elem e) {
    auto im = g.element(e).images();
    r[b.idx.at({im.begin(), im.end()})] = true;
  });
  return r;
}

bool is_prime_power_of(std::size_t n, std::uint64_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

std::vector<bool> brute_normal_closure(const Brute& b, int x) {
  std::vector<int> seeds;
  for (std::size_t g = 0; g < b.el.size(); ++g)
    seeds.push_back(b.table[b.table[b.inverse[g]][x]][g]);
  return b.close(seeds);
}

unsigned log_base(std::size_t n, std::uint64_t p) {
  unsigned k = 0;
  while (n > 1) {
    n /= p;
    ++k;
  }
  return k;
}

auto small_groups() {
  using namespace testgroups;
  return std::vector{s3(), c6(), c4(), v4(), d8(), q8(), a4(), s4(), c5c4(), a4xc2(), s4xc3(),
                     a5(), s3xs3(), d10(), d12(), c2_4(), c7c3(), agl1_8(), psl27()};
}

}  // namespace

TEST_CASE("core examples") {
  auto s4 = testgroups::s4();
  auto s3 = SubgroupHandle(s4, {parse_cycles(4, "(0 1)"), parse_cycles(4, "(0 1 2)")});
  CHECK(core(s3).order() == 1);
  auto d8 = SubgroupHandle(s4, {parse_cycles(4, "(0 1 2 3)"), parse_cycles(4, "(0 2)")});
  auto k = core(d8);
  CHECK(k.order() == 4);
  CHECK(k.contains(parse_cycles(4, "(0 1)(2 3)")));
  CHECK(core(whole_group(s4)).order() == 24);
}

TEST_CASE("cores, normal subgroups and minimal normals agree with brute force") {
  for (auto pg : small_groups()) {
    auto g = enumerate(pg);
    Brute b(*pg);
    CAPTURE(g->size());
    auto bn = b.normals();
    auto ns = normal_subgroups(*g);
    REQUIRE(ns.size() == bn.size());
    for (auto& n : ns) CHECK(std::find(bn.begin(), bn.end(), as_brute(b, *g, n)) != bn.end());

    auto lat = subgroup_classes(std::shared_ptr<const EnumeratedGroup>(g));
    for (auto& cls : lat.classes()) {
      auto c = g->core(cls.representative);
      CHECK(as_brute(b, *g, c) == b.core(as_brute(b, *g, cls.representative)));
      CHECK(g->is_normal(c));
      for (auto& n : ns)
        if (n.elements.is_subset_of(cls.representative.elements))
          CHECK(n.elements.is_subset_of(c.elements));
    }

    std::vector<std::vector<bool>> bmin;
    for (auto& n : bn) {
      if (b.size(n) == 1) continue;
      bool minimal = true;
      for (auto& m : bn)
        if (b.size(m) > 1 && b.size(m) < b.size(n) && b.subset(m, n)) minimal = false;
      if (minimal) bmin.push_back(n);
    }
    auto mins = minimal_normal_subgroups(*g);
    REQUIRE(mins.size() == bmin.size());
    for (auto& m : mins) CHECK(std::find(bmin.begin(), bmin.end(), as_brute(b, *g, m)) != bmin.end());
  }
}

TEST_CASE("minimal normal subgroup examples") {
  using namespace testgroups;
  CHECK(minimal_normal_subgroups(a5()).size() == 1);
  auto s4m = minimal_normal_subgroups(s4());
  REQUIRE(s4m.size() == 1);
  CHECK(s4m[0].order() == 4);
  auto c6m = minimal_normal_subgroups(c6());
  REQUIRE(c6m.size() == 2);
  CHECK(c6m[0].order() == 2);
  CHECK(c6m[1].order() == 3);
}

TEST_CASE("radicals agree with brute force") {
  for (auto pg : small_groups()) {
    auto g = enumerate(pg);
    Brute b(*pg);
    CAPTURE(g->size());
    auto r = radicals(*g, std::nullopt);
    CHECK(!r.layer);
    std::size_t fit = 1;
    for (auto& [p, op] : r.p_cores) {
      std::size_t best = 1, best_coprime = 1;
      for (auto& n : b.normals()) {
        if (is_prime_power_of(b.size(n), p)) best = std::max(best, b.size(n));
        if (b.size(n) % p != 0) best_coprime = std::max(best_coprime, b.size(n));
      }
      CHECK(op.order == best);
      CHECK(g->is_normal(op));
      CHECK(r.p_prime_cores.at(p).order == best_coprime);
      CHECK(g->is_normal(r.p_prime_cores.at(p)));
      fit *= best;
    }
    CHECK(r.fitting.order == fit);
  }
}

TEST_CASE("radical examples") {
  using namespace testgroups;
  auto s4g = enumerate(s4());
  auto r = radicals(*s4g, s4g->trivial());
  CHECK(r.p_cores.at(2).order == 4);
  CHECK(r.p_cores.at(3).order == 1);
  CHECK(r.fitting.order == 4);
  CHECK(r.layer->order == 1);
  CHECK(r.socle.order == 4);

  auto a5g = enumerate(a5());
  auto ra = radicals(*a5g, a5g->trivial());
  CHECK(ra.fitting.order == 1);
  CHECK(ra.layer->order == 60);
  CHECK(ra.gen_fitting->order == 60);

  auto c6g = enumerate(c6());
  auto rc = radicals(*c6g, c6g->trivial());
  CHECK(rc.fitting.order == 6);
  CHECK(rc.socle.order == 6);
  CHECK(rc.layer->order == 1);

  auto c4g = enumerate(c4());
  CHECK_THROWS_AS(layer(*c4g, c4g->generate({c4g->generator_indices()[0]})), Error);
}

TEST_CASE("Frattini subgroup agrees with brute force") {
  for (auto pg : small_groups()) {
    auto g = enumerate(pg);
    Brute b(*pg);
    CAPTURE(g->size());
    auto lat = subgroup_classes(std::shared_ptr<const EnumeratedGroup>(g));
    std::vector<bool> phi(b.el.size(), true);
    for (auto& m : b.maximals()) phi = b.meet(phi, m);
    CHECK(as_brute(b, *g, frattini(lat)) == phi);
  }
  using namespace testgroups;
  CHECK(frattini(subgroup_classes(c4())).order == 2);
  CHECK(frattini(subgroup_classes(s4())).order == 1);
  CHECK(frattini(subgroup_classes(c2_4())).order == 1);
  CHECK(frattini(subgroup_classes(q8())).order == 2);
  auto a5g = enumerate(a5());
  CHECK(frattini(*a5g, nullptr).order == 1);
  auto s4g = enumerate(s4());
  CHECK_THROWS_AS(frattini(*s4g, nullptr), Error);
}

TEST_CASE("module statistics") {
  using namespace testgroups;
  auto s4g = enumerate(s4());
  auto st = module_stats(*s4g, s4g->trivial());
  CHECK(st.c_per_prime.at(2) == 2);
  CHECK(st.c == 2);
  CHECK(st.r == 2);
  CHECK(st.c_defined);

  auto ag = enumerate(agl1_8());
  CHECK(module_stats(*ag, ag->trivial()).c_per_prime.at(2) == 3);

  auto c7 = enumerate(c(7));
  auto s7 = module_stats(*c7, c7->trivial());
  CHECK(s7.c == 1);
  CHECK(s7.r == 1);

  auto a5g = enumerate(a5());
  auto sa = module_stats(*a5g, a5g->trivial());
  CHECK(!sa.c_defined);
  CHECK(sa.c == 0);

  auto c4g = enumerate(c4());
  auto lat = subgroup_classes(std::shared_ptr<const EnumeratedGroup>(c4g));
  CHECK_THROWS_AS(module_stats(*c4g, frattini(lat)), Error);

  for (auto pg : {s4(), a4xc2(), s3xs3(), c2_4(), agl1_8(), s4xc3(), d10(), c7c3()}) {
    auto g = enumerate(pg);
    Brute b(*pg);
    auto ms = module_stats(*g, g->trivial());
    auto r = radicals(*g, g->trivial());
    for (auto& [p, op] : r.p_cores) {
      if (op.order == 1) continue;
      unsigned best = 0;
      for (int x : b.members(as_brute(b, *g, op)))
        best = std::max(best, log_base(b.size(brute_normal_closure(b, x)), p));
      CHECK(ms.c_per_prime.at(p) == best);
      for (auto& m : classify_minimal_normals(*g))
        if (m.prime == p) CHECK(ms.c_per_prime.at(p) >= m.rank);
    }
    CHECK(1 <= ms.r);
    CHECK(ms.r <= ms.c);
  }
}

TEST_CASE("Fitting complement") {
  using namespace testgroups;
  auto check = [](std::shared_ptr<const PermGroup> pg, std::uint64_t want) {
    auto lat = subgroup_classes(pg);
    const auto& g = lat.group();
    auto f = radicals(g, std::nullopt).fitting;
    auto l = fitting_complement(lat, f);
    CHECK(l.order == want);
    CHECK(l.order * f.order == g.size());
    CHECK((l.elements & f.elements).count() == 1);
  };
  check(s4(), 6);
  check(a4xc2(), 3);
  check(v4(), 1);
  check(agl1_8(), 7);
  check(s3xs3(), 4);
}

TEST_CASE("action diagnostics") {
  using namespace testgroups;
  auto s4g = enumerate(s4());
  auto v = radicals(*s4g, std::nullopt).fitting;
  auto s3 = s4g->generate({s4g->index_of(parse_cycles(4, "(0 1)")), s4g->index_of(parse_cycles(4, "(0 1 2)"))});
  auto d = action_diagnostics(*s4g, s3, v);
  CHECK(!d.regular_orbit_exists);
  REQUIRE(d.scalar_elements.size() == 1);
  CHECK(d.scalar_elements[0].first == s4g->identity());

  auto c3 = s4g->generate({s4g->index_of(parse_cycles(4, "(0 1 2)"))});
  auto d3 = action_diagnostics(*s4g, c3, v);
  CHECK(d3.regular_orbit_exists);
  CHECK(d3.regular_point.has_value());

  CHECK(action_diagnostics(*s4g, s4g->trivial(), v).regular_orbit_exists);
  CHECK_THROWS_AS(action_diagnostics(*s4g, c3, s3), Error);
}

TEST_CASE("module helpers") {
  using namespace testgroups;
  auto s4g = enumerate(s4());
  auto v = radicals(*s4g, std::nullopt).fitting;
  auto ea = elementary_abelian(*s4g, v);
  REQUIRE(ea);
  CHECK(ea->p == 2);
  CHECK(ea->rank == 2);
  CHECK(lines(*s4g, v).size() == 3);
  CHECK(hyperplanes(*s4g, v).size() == 3);
  CHECK(is_irreducible(*s4g, v, s4g->whole()));
  CHECK(imprimitivity_pairs(*s4g, v, s4g->whole()).empty());
  CHECK(!elementary_abelian(*s4g, s4g->whole()));

  auto ag = enumerate(agl1_8());
  auto t = radicals(*ag, std::nullopt).fitting;
  CHECK(hyperplanes(*ag, t).size() == 7);
  CHECK(is_irreducible(*ag, t, ag->whole()));
  CHECK(!is_irreducible(*ag, t, t));
  CHECK(acts_semisimply(*ag, t, t));

  // C3 x S3: two normal subgroups of order 3 with different actions.
  auto g = enumerate(make(6, {"(0 1 2)", "(3 4 5)", "(3 4)"}));
  auto mins = minimal_normal_subgroups(*g);
  REQUIRE(mins.size() == 2);
  CHECK(!modules_isomorphic(*g, mins[0], mins[1], g->whole()));
  auto v4g = enumerate(v4());
  auto vm = minimal_normal_subgroups(*v4g);
  REQUIRE(vm.size() == 3);
  CHECK(modules_isomorphic(*v4g, vm[0], vm[1], v4g->whole()));

  // (C3)^2 with the coordinate swap: one swapped pair of lines.
  auto w = enumerate(make(6, {"(0 1 2)", "(3 4 5)", "(0 3)(1 4)(2 5)"}));
  auto base = w->generate({w->index_of(parse_cycles(6, "(0 1 2)")), w->index_of(parse_cycles(6, "(3 4 5)"))});
  CHECK(imprimitivity_pairs(*w, base, w->whole()).size() == 1);
  CHECK(!is_irreducible(*w, base, w->whole()));
  CHECK(is_cyclic_module(*w, base, w->whole()));

  // (C3)^2 with inversion: -1 is a scalar.
  auto inv = enumerate(make(6, {"(0 1 2)", "(3 4 5)", "(1 2)(4 5)"}));
  auto bi = inv->generate({inv->index_of(parse_cycles(6, "(0 1 2)")), inv->index_of(parse_cycles(6, "(3 4 5)"))});
  CHECK(scalar_of(*inv, bi, inv->index_of(parse_cycles(6, "(1 2)(4 5)"))) == 2u);
  CHECK(scalar_of(*inv, bi, inv->identity()) == 1u);
  CHECK(!is_cyclic_module(*inv, bi, inv->whole()));
  CHECK(commutator_subgroup(*inv, inv->whole(), bi).order == 9);
  CHECK(fixed_points(*inv, bi, inv->whole()).order == 1);
}

TEST_CASE("socle splits as layer times Fitting when the Frattini subgroup is trivial") {
  using namespace testgroups;
  for (auto pg : {s4(), a5(), a5xc2(), s5(), psl27(), agl1_8(), a4xc2(), s3xs3(), c2_4()}) {
    auto lat = subgroup_classes(pg);
    const auto& g = lat.group();
    auto phi = frattini(lat);
    REQUIRE(phi.order == 1);
    auto r = radicals(g, phi);
    CHECK(r.socle.order == r.layer->order * r.fitting.order);
    CHECK(r.gen_fitting->elements == r.socle.elements);
    CHECK((r.layer->elements & r.fitting.elements).count() == 1);
  }
}

TEST_CASE("composite order implies a proper subgroup of at least square-root order") {
  for (auto pg : small_groups()) {
    auto lat = subgroup_classes(pg);
    const std::uint64_t n = lat.group().size();
    if (is_prime(n)) continue;
    bool found = false;
    for (auto& c : lat.classes()) {
      const auto h = c.representative.order;
      if (h < n && h * h >= n) found = true;
    }
    CHECK(found);
  }
}
