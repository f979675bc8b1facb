#include "doctest.h"
#include "groups.hpp"
#include "brute.hpp"

#include "basetwo/error.hpp"
#include "basetwo/lattice.hpp"

#include <map>
#include <set>

using namespace basetwo;

namespace {

using testbrute::Brute;

std::multiset<std::pair<std::size_t, std::size_t>> shape(const Lattice& l) {
  std::multiset<std::pair<std::size_t, std::size_t>> out;
  for (auto& c : l.classes()) out.insert({c.representative.order, c.class_size});
  return out;
}

}  // namespace

TEST_CASE("lattice examples") {
  CHECK(subgroup_classes(testgroups::trivial()).classes().size() == 1);
  CHECK(subgroup_classes(testgroups::s4()).classes().size() == 11);
  CHECK(subgroup_classes(testgroups::a4()).classes().size() == 5);
}

TEST_CASE("lattice agrees with brute-force enumeration for small groups") {
  using namespace testgroups;
  for (auto g : {s3(), c6(), c4(), v4(), d8(), q8(), a4(), s4(), c5c4(), a4xc2(), s4xc3(), a5(),
                 s3xs3(), d10(), d12(), c2_4(), c7c3(), agl1_8(), psl27()}) {
    auto lat = subgroup_classes(g);
    Brute b(*g);
    CAPTURE(g->order());
    CHECK(lat.complete());
    CHECK(shape(lat) == b.classes());
    CHECK(lat.total_subgroups() == b.subs.size());
    CHECK(lat.classes().front().representative.order == 1);
    CHECK(lat.classes().back().representative.order == g->order());
  }
}

TEST_CASE("lattice flags") {
  using namespace testgroups;
  for (auto g : {s4(), a5(), s4xc3(), a4xc2(), c2_4(), psl27(), agl1_8(), s5()}) {
    auto lat = subgroup_classes(g);
    const auto& e = lat.group();
    auto maxes = maximal_subgroups(lat);
    CHECK(maxes == maximal_by_containment(lat));
    for (std::size_t i = 0; i < lat.classes().size(); ++i) {
      const auto& c = lat.classes()[i];
      CHECK(c.class_size * e.normalizer(c.representative).order == e.size());
      CHECK(c.normal == e.is_normal(c.representative));
      CHECK(c.core_free == (e.core(c.representative).order == 1));
      CHECK(c.large == (c.representative.order < e.size() &&
                        c.representative.order * c.representative.order > e.size()));
      auto loc = lat.locate(c.representative);
      REQUIRE(loc);
      CHECK(loc->cls == i);
      // large is inherited by proper overgroups
      if (c.large)
        for (auto& d : lat.classes())
          if (d.representative.order < e.size() && d.representative.order > c.representative.order &&
              contained_up_to_conjugacy(e, c.representative, d.representative))
            CHECK(d.large);
    }
    // Frattini = intersection of maximal subgroups
    ElementSet phi = e.whole().elements;
    for (auto m : maxes) phi &= e.core(lat.classes()[m].representative).elements;
    if (g->order() == 24) CHECK(phi.count() == 1);
  }
}

TEST_CASE("maximal and core-free classes in S4 and A5") {
  auto s4 = subgroup_classes(testgroups::s4());
  std::multiset<std::uint64_t> orders;
  for (auto i : maximal_subgroups(s4)) orders.insert(s4.classes()[i].representative.order);
  CHECK(orders == std::multiset<std::uint64_t>{6, 8, 12});
  CHECK(corefree_classes(s4).size() == 7);

  auto a5 = subgroup_classes(testgroups::a5());
  orders.clear();
  for (auto i : maximal_subgroups(a5)) orders.insert(a5.classes()[i].representative.order);
  CHECK(orders == std::multiset<std::uint64_t>{6, 10, 12});
  CHECK(corefree_classes(a5).size() == a5.classes().size() - 1);

  auto cp = subgroup_classes(testgroups::c(7));
  REQUIRE(maximal_subgroups(cp).size() == 1);
  CHECK(cp.classes()[maximal_subgroups(cp)[0]].representative.order == 1);
  CHECK(corefree_classes(subgroup_classes(testgroups::c6())).size() == 1);
}

TEST_CASE("conjugate_test") {
  auto s4 = testgroups::s4();
  SubgroupHandle st3(s4, {parse_cycles(4, "(0 1)"), parse_cycles(4, "(0 1 2)")});
  SubgroupHandle st0(s4, {parse_cycles(4, "(1 2)"), parse_cycles(4, "(1 2 3)")});
  auto t = conjugate_test(st3, st3);
  REQUIRE(t);
  CHECK(t->is_identity());
  auto u = conjugate_test(st3, st0);
  REQUIRE(u);
  for (auto& x : st3.generators()) CHECK(st0.contains(conjugate(x, *u)));
  SubgroupHandle v4n(s4, {parse_cycles(4, "(0 1)(2 3)"), parse_cycles(4, "(0 2)(1 3)")});
  SubgroupHandle v4o(s4, {parse_cycles(4, "(0 1)"), parse_cycles(4, "(2 3)")});
  CHECK_FALSE(conjugate_test(v4n, v4o));
  CHECK_THROWS_AS(conjugate_test(st3, whole_group(testgroups::a4())), Error);
}

TEST_CASE("bounds and incomplete lattices") {
  LatticeOptions small;
  small.bound = 100;
  CHECK_THROWS_AS(subgroup_classes(testgroups::s5(), small), Error);
  LatticeOptions limited;
  limited.class_limit = 3;
  auto lat = subgroup_classes(testgroups::s4(), limited);
  CHECK_FALSE(lat.complete());
  CHECK_THROWS_AS(maximal_subgroups(lat), Error);
}

TEST_CASE("lattice is deterministic") {
  auto a = subgroup_classes(testgroups::s4xc3());
  auto b = subgroup_classes(testgroups::s4xc3());
  REQUIRE(a.classes().size() == b.classes().size());
  for (std::size_t i = 0; i < a.classes().size(); ++i) {
    CHECK(a.classes()[i].representative.elements == b.classes()[i].representative.elements);
    CHECK(a.classes()[i].representative.generators == b.classes()[i].representative.generators);
  }
}
