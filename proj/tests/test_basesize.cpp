#include "doctest.h"
#include "naive_base.hpp"
#include "groups.hpp"

#include "basetwo/basesize.hpp"
#include "basetwo/error.hpp"

using namespace basetwo;

namespace {

std::vector<bool> as_table(const testnaive::Table& t, const EnumeratedGroup& g, const Subgroup& h) {
  std::vector<bool> r(t.el.size(), false);
  h.elements.for_each([&](Elem e) { r[t.index(g.element(e).images())] = true; });
  return r;
}

auto groups_to_500() {
  using namespace testgroups;
  return std::vector{s3(), c6(), c4(), v4(), d8(), q8(), a4(), s4(), c5c4(), a4xc2(), s4xc3(), a5(),
                     s3xs3(), d10(), d12(), c2_4(), c7c3(), agl1_8(), psl27(), s5(), a5xc2()};
}

Subgroup sub(const EnumeratedGroup& g, std::size_t deg, std::vector<std::string> gens) {
  std::vector<Elem> e;
  for (auto& s : gens) e.push_back(g.index_of(parse_cycles(deg, s)));
  return g.generate(e);
}

}  // namespace

TEST_CASE("trivial pair examples") {
  EnumeratedGroup g(testgroups::s4(), 1000);
  CHECK(exists_trivial_pair(g, g.trivial()) == g.identity());
  CHECK(!exists_trivial_pair(g, sub(g, 4, {"(0 1)", "(0 1 2)"})));
  auto c4 = sub(g, 4, {"(0 1 2 3)"});
  auto w = exists_trivial_pair(g, c4);
  REQUIRE(w);
  CHECK((c4.elements & g.conjugate_set(c4.elements, *w)).count() == 1);
}

TEST_CASE("base size examples") {
  EnumeratedGroup g(testgroups::s4(), 1000);
  auto s3 = sub(g, 4, {"(0 1)", "(0 1 2)"});
  auto c = base_size(g, s3);
  CHECK(c.value == 3);
  CHECK(c.witnesses.size() == 2);
  CHECK(replay(g, s3, c.witnesses));
  CHECK(!replay(g, s3, {c.witnesses[0]}));
  CHECK(c.lower_bound_reason == "order-bound");

  CHECK(base_size(g, g.trivial()).value == 1);
  CHECK(base_size(g, sub(g, 4, {"(0 1 2 3)"})).value == 2);
  CHECK_THROWS_AS(base_size(g, sub(g, 4, {"(0 1 2 3)", "(0 2)"})), Error);
  CHECK_THROWS_AS(base_size(g, g.whole()), Error);

  auto h = SubgroupHandle(testgroups::s4(), {parse_cycles(4, "(0 1)"), parse_cycles(4, "(1 2)")});
  CHECK(base_size(h).value == 3);
}

TEST_CASE("lower bound check") {
  EnumeratedGroup g(testgroups::s4(), 1000);
  CHECK(!lower_bound_check(g, sub(g, 4, {"(0 1)", "(2 3)"})));
  CHECK(lower_bound_check(g, sub(g, 4, {"(0 1)", "(0 1 2)"})));
  CHECK(!lower_bound_check(g, g.trivial()));
}

TEST_CASE("base size agrees with naive coset search") {
  for (auto pg : groups_to_500()) {
    auto lat = subgroup_classes(pg);
    const auto& g = lat.group();
    testnaive::Table t(*pg);
    CAPTURE(g.size());
    for (std::size_t i = 0; i < lat.classes().size(); ++i) {
      const auto& cls = lat.classes()[i];
      if (!cls.core_free) continue;
      const auto& h = cls.representative;
      CAPTURE(h.order);
      auto cert = base_size(g, h);
      CHECK(cert.value == testnaive::naive_base(t, as_table(t, g, h)));
      CHECK(cert.witnesses.size() == cert.value - 1);
      CHECK(replay(g, h, cert.witnesses));
      if (lower_bound_check(g, h) || (h.order > 1 && h.order * h.order >= g.size())) CHECK(cert.value >= 3);
      CHECK(cert.lower_bound_reason.has_value() == (cert.value >= 3));
    }
  }
}

TEST_CASE("base size is monotone under containment") {
  using namespace testgroups;
  for (auto pg : {s4(), a5(), s5(), psl27(), agl1_8(), s4xc3()}) {
    auto lat = subgroup_classes(pg);
    const auto& g = lat.group();
    std::vector<std::uint32_t> b(lat.classes().size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i)
      if (lat.classes()[i].core_free) b[i] = base_size(g, lat.classes()[i].representative).value;
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (!b[i] || !b[j]) continue;
        const auto& hi = lat.classes()[i].representative;
        const auto& hj = lat.classes()[j].representative;
        if (hi.order < hj.order && contained_up_to_conjugacy(g, hi, hj)) CHECK(b[i] <= b[j]);
      }
  }
}

TEST_CASE("alpha and beta") {
  using namespace testgroups;
  CHECK(alpha(subgroup_classes(a4())).alpha == 0);
  auto rs4 = alpha(subgroup_classes(s4()));
  CHECK(rs4.alpha == 1);
  REQUIRE(rs4.witnesses.size() == 1);
  CHECK(rs4.witnesses[0].cert.value == 3);
  CHECK(alpha(subgroup_classes(s4xc3())).alpha == 1);
  CHECK(alpha(subgroup_classes(c(7))).beta == 0);
  CHECK(beta(subgroup_classes(a5())).size() >= 2);

  for (auto pg : groups_to_500()) {
    auto lat = subgroup_classes(pg);
    auto r = alpha(lat);
    CHECK(r.alpha >= r.beta);
    for (auto& w : r.witnesses) CHECK(lat.classes()[w.cls].core_free);
    auto par = alpha(lat, {3});
    CHECK(par.alpha == r.alpha);
    REQUIRE(par.per_class.size() == r.per_class.size());
    for (std::size_t i = 0; i < r.per_class.size(); ++i)
      CHECK(par.per_class[i].cert.witnesses == r.per_class[i].cert.witnesses);
  }

  auto partial = subgroup_classes(s4(), {50'000, 3});
  CHECK_THROWS_AS(alpha(partial), Error);
}
