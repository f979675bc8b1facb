#include "doctest.h"
#include "catalog.hpp"
#include "groups.hpp"

#include "basetwo/certify.hpp"
#include "basetwo/error.hpp"
#include "basetwo/module.hpp"

#include <map>

using namespace basetwo;

namespace {

struct Analysed {
  Lattice lat;
  StructuralProfile prof;
};

Analysed analyse(const std::shared_ptr<const PermGroup>& g) {
  auto lat = subgroup_classes(g);
  auto prof = profile(lat);
  return {std::move(lat), std::move(prof)};
}

Verdict verdict(const std::string& name, const std::string& theorem) {
  auto a = analyse(testcatalog::load(name));
  return check_conditions(theorem, a.lat, a.prof);
}

// Catalog groups small enough to analyse quickly, all with complete lattices.
const std::vector<std::string>& small_catalog() {
  static const auto names = testcatalog::names_up_to(8000);
  return names;
}

std::uint32_t base_of(const Lattice& l, std::size_t cls) {
  return base_size(l.group(), l.classes()[cls].representative).value;
}

}  // namespace

TEST_CASE("prediction text round-trips") {
  for (auto p : {Prediction{}, Prediction::exactly(0), Prediction::exactly(1), Prediction::at_least(2)})
    CHECK(parse_prediction(p.to_string()) == p);
  CHECK(Prediction::at_least(2).admits(5));
  CHECK_FALSE(Prediction::at_least(2).admits(1));
  CHECK(Prediction::exactly(1).admits(1));
  CHECK_FALSE(Prediction::exactly(1).admits(0));
  CHECK(Prediction{}.admits(7));
  CHECK_THROWS_AS(parse_prediction("~3"), Error);
}

TEST_CASE("certifier examples") {
  auto c1 = verdict("c5c4", "c1");
  CHECK(c1.hypotheses_met);
  CHECK(c1.predicted == Prediction::exactly(0));

  CHECK(verdict("a4", "prim2").predicted == Prediction::exactly(0));
  CHECK(verdict("s4", "prim2").predicted == Prediction::exactly(1));
  CHECK(verdict("s4xc3", "regorbit").predicted == Prediction::exactly(1));
  CHECK(verdict("c11^2_sl2_3", "evenderived").predicted == Prediction::exactly(1));
  CHECK(verdict("c7^2_q16", "evenderived").predicted == Prediction::exactly(1));
  CHECK(verdict("c3^2_q8", "evenderived").predicted == Prediction::exactly(1));
  CHECK(verdict("singer_2", "c3").predicted == Prediction::exactly(1));
  CHECK(verdict("singer_3", "c3").predicted == Prediction::exactly(1));
  CHECK(verdict("c2^4xc7_c15", "c4").predicted == Prediction::exactly(1));
  CHECK(verdict("c2^2xc2^2xc7_c3xc3", "c4").predicted == Prediction::exactly(1));
  CHECK(verdict("a4xa4", "c4").predicted == Prediction::at_least(2));
  CHECK(verdict("psl2_23", "main1").predicted == Prediction::exactly(1));
  CHECK(verdict("a5", "main1").predicted == Prediction::at_least(2));

  auto c3 = verdict("c3^3xc5_c2^2", "c3");
  CHECK(c3.predicted == Prediction::exactly(1));
  REQUIRE(c3.conditions.size() == 5);
  CHECK(c3.conditions[4].holds);  // three pairwise non-isomorphic factors

  // hypotheses not met: no prediction, and the failing hypothesis is reported
  auto un = verdict("a5", "c1");
  CHECK_FALSE(un.hypotheses_met);
  CHECK(un.predicted == Prediction{});
  CHECK_FALSE(un.hypotheses.back().holds);
  CHECK_THROWS_AS(verdict("a4", "nonsense"), Error);
}

TEST_CASE("incomplete lattices are refused") {
  LatticeOptions limited;
  limited.class_limit = 3;
  auto lat = subgroup_classes(testgroups::s4(), limited);
  auto full = analyse(testgroups::s4());
  CHECK_THROWS_AS(check_conditions("ql", lat, full.prof), Error);
}

TEST_CASE("certifier predictions agree with direct alpha on the catalog") {
  for (const auto& name : small_catalog()) {
    CAPTURE(name);
    auto a = analyse(testcatalog::load(name));
    auto rep = consistency(a.lat, a.prof);
    CHECK(rep.ok());
    CHECK(rep.verdicts.size() == theorem_ids().size());
    for (const auto& v : rep.verdicts) {
      CAPTURE(v.theorem);
      if (!v.hypotheses_met) CHECK(v.predicted == Prediction{});
      if (v.hypotheses_met && v.predicted.kind != Prediction::Kind::none) {
        CHECK(v.predicted.admits(rep.alpha.alpha));
      }
      // the same verdict comes back from a standalone run
      CHECK(check_conditions(v.theorem, a.lat, a.prof) == v);
    }
  }
}

TEST_CASE("normal-J restriction does not change the alpha = 0 criterion") {
  CertifyOptions all;
  all.normal_j = false;
  std::size_t met = 0;
  for (const auto& name : small_catalog()) {
    CAPTURE(name);
    auto a = analyse(testcatalog::load(name));
    auto restricted = check_conditions("a0", a.lat, a.prof);
    auto full = check_conditions("a0", a.lat, a.prof, all);
    CHECK(restricted.predicted == full.predicted);
    met += restricted.hypotheses_met;
  }
  CHECK(met >= 5);
}

TEST_CASE("alpha >= 1 iff a core-free H has |H|^2 >= |ncl(H)| and b >= 3") {
  for (const auto& name : small_catalog()) {
    CAPTURE(name);
    auto a = analyse(testcatalog::load(name));
    if (!a.prof.frattini_trivial) continue;
    const auto& g = a.lat.group();
    bool exists = false;
    for (std::size_t k = 0; k < a.lat.classes().size(); ++k) {
      const auto& c = a.lat.classes()[k];
      const auto& h = c.representative;
      if (c.core_free && h.order > 1 && h.order * h.order >= g.normal_closure(h).order && base_of(a.lat, k) >= 3)
        exists = true;
    }
    CHECK((alpha(a.lat).alpha >= 1) == exists);
  }
}

TEST_CASE("a core-free subgroup of F(G) with b >= 3 forces alpha >= 2") {
  for (const auto& name : small_catalog()) {
    CAPTURE(name);
    auto a = analyse(testcatalog::load(name));
    const auto& p = a.prof;
    if (!p.frattini_trivial || p.layer->order != 1 || p.stats.c != 2 || !p.complement) continue;
    const auto& g = a.lat.group();
    if (g.derived(*p.complement).order % 2 == 0) continue;
    bool inside = false;
    for (std::size_t k = 0; k < a.lat.classes().size(); ++k) {
      const auto& c = a.lat.classes()[k];
      if (c.core_free && c.representative.order > 1 && c.representative.elements.is_subset_of(p.fitting.elements) &&
          base_of(a.lat, k) >= 3)
        inside = true;
    }
    if (inside) CHECK(alpha(a.lat).alpha >= 2);
  }
}

TEST_CASE("abelian subgroups acting semisimply on F(G) have base size at most 2") {
  std::size_t checked = 0;
  for (const auto& name : small_catalog()) {
    CAPTURE(name);
    auto a = analyse(testcatalog::load(name));
    const auto& p = a.prof;
    if (!p.frattini_trivial || p.layer->order != 1) continue;
    const auto& g = a.lat.group();
    const auto direct = alpha(a.lat).alpha;
    for (std::size_t k = 0; k < a.lat.classes().size(); ++k) {
      const auto& h = a.lat.classes()[k].representative;
      if (!g.is_abelian(h) || (h.elements & p.fitting.elements).count() != 1) continue;
      const auto b = base_of(a.lat, k);
      if (acts_semisimply(g, p.fitting, h)) {
        CHECK(b <= 2);
        ++checked;
      }
      if (b >= 3) CHECK(direct >= 2);
    }
  }
  CHECK(checked > 50);
}

TEST_CASE("every subgroup of F(G) normal and E(G) = 1 gives alpha = 0") {
  std::size_t hits = 0;
  for (const auto& name : small_catalog()) {
    CAPTURE(name);
    auto a = analyse(testcatalog::load(name));
    const auto& p = a.prof;
    if (!p.frattini_trivial || p.layer->order != 1) continue;
    if (!all_subgroups_normal(a.lat.group(), p.fitting)) continue;
    CHECK(alpha(a.lat).alpha == 0);
    ++hits;
  }
  CHECK(hits >= 10);
}

TEST_CASE("core-free hyperplane counts match the closed forms") {
  // independent count: classes of core-free subgroups of index p in O_p(G)
  auto lattice_count = [](const Lattice& l, std::uint64_t p) {
    const auto& g = l.group();
    const auto op = g.core(sylow(g, p));
    std::uint64_t n = 0;
    for (const auto& c : l.classes())
      if (c.core_free && c.representative.order * p == op.order &&
          c.representative.elements.is_subset_of(op.elements))
        n += c.class_size;
    return n;
  };
  struct Case {
    std::string name;
    std::uint64_t p, expected;
    std::string formula;
  };
  const std::vector<Case> cases{
      {"singer_2", 2, 2 * 2 + 2 + 1, "p^2+p+1"},
      {"singer_3", 3, 3 * 3 + 3 + 1, "p^2+p+1"},
      {"singer_5", 5, 5 * 5 + 5 + 1, "p^2+p+1"},
      {"c2^4xc7_c15", 2, 15, "(p^4-1)/(p-1)"},
      {"a4xa4", 2, 3 * 3 * 1, "(p+1)^2(p-1)"},
      {"c2^2xc2^2xc7_c3xc3", 2, 9, "(p+1)^2(p-1)"},
      {"c2^2xc2^2_s3", 2, 2 * 3, "p(p^2-1)"},
      {"c3^2xc3^2_q8", 3, 3 * 8, "p(p^2-1)"},
      {"c2^2xc2_c3", 2, 3, "p^2-1"},
      {"c3^3xc5_c2^2", 3, 4, "(p-1)^2"},
  };
  for (const auto& c : cases) {
    CAPTURE(c.name);
    auto lat = subgroup_classes(testcatalog::load(c.name));
    auto rows = count_crosscheck(lat.group(), c.p);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].formula == c.formula);
    CHECK(rows[0].predicted == c.expected);
    CHECK(rows[0].enumerated == c.expected);
    CHECK(rows[0].match);
    CHECK(lattice_count(lat, c.p) == c.expected);
  }
  auto s4 = subgroup_classes(testgroups::s4());
  CHECK(count_crosscheck(s4.group(), 3).empty());
}

TEST_CASE("profile invariants") {
  for (const auto& name : small_catalog()) {
    CAPTURE(name);
    auto a = analyse(testcatalog::load(name));
    const auto& p = a.prof;
    const auto& g = a.lat.group();
    if (!p.frattini_trivial) {
      CHECK_FALSE(p.layer);
      continue;
    }
    CHECK(p.socle.order == p.layer->order * p.fitting.order);
    CHECK(p.stats.c_defined == (p.fitting.order > 1));
    if (p.complement) {
      CHECK((p.complement->elements & p.fitting.elements).count() == 1);
      CHECK(p.complement->order * p.fitting.order == g.size());
    }
  }
}
