// Acceptance run: one PASS/FAIL line per criterion. Criterion 12 is a stretch
// goal and does not affect the exit status.

#include "catalog.hpp"
#include "groups.hpp"
#include "naive_base.hpp"

#include "basetwo/basesize.hpp"
#include "basetwo/certify.hpp"
#include "basetwo/cli/construct.hpp"
#include "basetwo/error.hpp"
#include "basetwo/structure.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

using namespace basetwo;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    detail += (detail.empty() ? "" : "; ") + what;
  }
};

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string fmt(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", s);
  return buf;
}

Lattice lattice_of(const std::string& name, std::uint64_t bound = 50'000) {
  LatticeOptions o;
  o.bound = bound;
  return subgroup_classes(testcatalog::load(name), o);
}

// alpha of a catalog group, with its runtime checked against a limit
void alpha_is(Outcome& out, const std::string& name, std::uint64_t expected, double limit) {
  auto t = Clock::now();
  auto a = alpha(lattice_of(name)).alpha;
  double s = since(t);
  out.require(a == expected, "alpha(" + name + ") = " + std::to_string(a));
  out.require(s < limit, name + " took " + fmt(s));
  out.detail += (out.detail.empty() ? "" : ", ") + name + " " + fmt(s);
}

Outcome criterion1() {
  Outcome o;
  alpha_is(o, "a4", 0, 1);
  alpha_is(o, "s4", 1, 1);
  return o;
}

Outcome criterion2() {
  Outcome o;
  auto t = Clock::now();
  auto lat = lattice_of("s4xc3");
  auto prof = profile(lat);
  auto r = alpha(lat);
  o.require(r.alpha == 1, "alpha = " + std::to_string(r.alpha));
  o.require(prof.complement && prof.complement->order == 6, "no complement of order 6 to F(G)");
  if (r.witnesses.size() == 1 && prof.complement)
    o.require(conjugate_test(lat.group(), lat.classes()[r.witnesses[0].cls].representative, *prof.complement)
                  .has_value(),
              "witness not conjugate to the S3 complement");
  o.require(since(t) < 5, "took " + fmt(since(t)));
  return o;
}

Outcome criterion3() {
  Outcome o;
  alpha_is(o, "singer_2", 1, 30);
  alpha_is(o, "singer_3", 1, 30);
  return o;
}

Outcome criterion4() {
  Outcome o;
  alpha_is(o, "c2^4xc7_c15", 1, 600);
  alpha_is(o, "c2^2xc2^2xc7_c3xc3", 1, 600);
  return o;
}

Outcome criterion5() {
  Outcome o;
  alpha_is(o, "c3^3xc5_c2^2", 1, 300);
  return o;
}

Outcome criterion6() {
  Outcome o;
  auto t = Clock::now();
  auto lat = lattice_of("c11^2_sl2_3");
  o.require(lat.group().size() == 2904, "order " + std::to_string(lat.group().size()));
  auto prof = profile(lat);
  auto v = check_conditions("evenderived", lat, prof);
  o.require(v.hypotheses_met && v.predicted == Prediction::exactly(1), "evenderived predicts " + v.predicted.to_string());
  auto rep = consistency(lat, prof);
  o.require(rep.alpha.alpha == 1, "alpha = " + std::to_string(rep.alpha.alpha));
  o.require(rep.ok(), std::to_string(rep.mismatches.size()) + " mismatches");
  o.require(since(t) < 600, "took " + fmt(since(t)));
  o.detail += (o.detail.empty() ? "" : ", ") + fmt(since(t));
  return o;
}

Outcome criterion7() {
  Outcome o;
  auto t = Clock::now();
  for (auto [name, expect_one] : {std::pair{"psl2_23", true}, {"psl2_47", true}, {"psl2_25", false}}) {
    auto b = beta(lattice_of(name, 60'000)).size();
    if (expect_one)
      o.require(b == 1, std::string("beta(") + name + ") = " + std::to_string(b));
    else
      o.require(b >= 2, std::string("beta(") + name + ") = " + std::to_string(b));
  }
  o.require(since(t) < 900, "took " + fmt(since(t)));
  o.detail += (o.detail.empty() ? "" : ", ") + fmt(since(t));
  return o;
}

Outcome criterion8() {
  Outcome o;
  auto t = Clock::now();
  auto pg = testcatalog::load("sz8");
  o.require(pg->degree() == 65 && pg->order() == 29120, "unexpected Sz(8) construction");
  EnumeratedGroup g(pg, 50'000);
  // Borel = point stabilizer; U = its 2-elements; V = Z(U); T = a torus C7
  ElementSet borel(g.size()), unip(g.size());
  std::optional<Elem> torus;
  for (Elem e = 0; e < g.size(); ++e) {
    if (g.element(e)(0) != 0) continue;
    borel.set(e);
    auto ord = g.element_order(e);
    if ((ord & (ord - 1)) == 0) unip.set(e);
    if (ord == 7 && !torus) torus = e;
  }
  auto b = g.from_set(borel);
  auto u = g.from_set(unip);
  auto v = center(g, u);
  o.require(b.order == 448 && u.order == 64 && v.order == 8 && torus.has_value(), "unexpected Borel structure");
  if (!o.pass) return o;
  auto vt = g.extend(v, *torus);
  o.require(vt && vt->order == 56, "V:T does not have order 56");
  if (!o.pass) return o;

  o.require(lower_bound_check(g, b), "lower_bound_check(Borel) is false");
  auto cb = base_size(g, b);
  o.require(cb.value >= 3, "b(G, Borel) = " + std::to_string(cb.value));
  auto cu = base_size(g, u);
  o.require(cu.value == 2 && replay(g, u, cu.witnesses), "b(G, U) = " + std::to_string(cu.value));
  auto cv = base_size(g, *vt);
  o.require(cv.value == 2 && replay(g, *vt, cv.witnesses), "b(G, V:T) = " + std::to_string(cv.value));
  o.require(since(t) < 900, "took " + fmt(since(t)));
  o.detail += (o.detail.empty() ? "" : ", ") + fmt(since(t));
  return o;
}

// classes of core-free subgroups of index p in O_p(G), counted from the lattice
std::uint64_t hyperplanes(const Lattice& l, std::uint64_t p) {
  const auto& g = l.group();
  const auto op = g.core(sylow(g, p));
  std::uint64_t n = 0;
  for (const auto& c : l.classes())
    if (c.core_free && c.representative.order * p == op.order && c.representative.elements.is_subset_of(op.elements))
      n += c.class_size;
  return n;
}

Outcome criterion9() {
  Outcome o;
  auto t = Clock::now();
  struct Case {
    const char* name;
    std::uint64_t p, expected;
  };
  for (auto c : {Case{"singer_2", 2, 7}, {"singer_3", 3, 13}, {"singer_5", 5, 31}, {"c2^4xc7_c15", 2, 15},
                 {"c2^2xc2^2xc7_c3xc3", 2, 9}, {"c2^2xc2^2_s3", 2, 6}, {"c3^2xc3^2_q8", 3, 24}}) {
    auto lat = lattice_of(c.name);
    auto rows = count_crosscheck(lat.group(), c.p);
    bool ok = rows.size() == 1 && rows[0].match && rows[0].predicted == c.expected &&
              rows[0].enumerated == c.expected && hyperplanes(lat, c.p) == c.expected;
    o.require(ok, std::string(c.name) + " count mismatch");
  }
  o.require(since(t) < 60, "took " + fmt(since(t)));
  o.detail += (o.detail.empty() ? "" : ", ") + fmt(since(t));
  return o;
}

Outcome criterion10() {
  Outcome o;
  auto t = Clock::now();
  std::size_t groups = 0, lemma_checks = 0;
  for (const auto& name : testcatalog::names_up_to(2000)) {
    auto lat = lattice_of(name);
    auto prof = profile(lat);
    if (!prof.frattini_trivial) continue;
    ++groups;
    const auto& g = lat.group();
    const auto n = g.size();
    auto r = alpha(lat);
    std::vector<std::uint32_t> b(lat.classes().size(), 0);
    for (const auto& pc : r.per_class) b[pc.cls] = pc.cert.value;

    // core-free H < N normal with |H|^2 > |N| has b >= 3; also |H|^2 >= |G| does
    for (const auto& nrm : normal_subgroups(g))
      for (std::size_t k = 0; k < lat.classes().size(); ++k) {
        const auto& c = lat.classes()[k];
        const auto& h = c.representative;
        if (!c.core_free || h.order >= nrm.order || !h.elements.is_subset_of(nrm.elements)) continue;
        if (h.order * h.order > nrm.order) {
          ++lemma_checks;
          o.require(b[k] >= 3, name + ": class " + std::to_string(k) + " inside a normal subgroup has b < 3");
        }
      }
    for (std::size_t k = 0; k < lat.classes().size(); ++k) {
      const auto& c = lat.classes()[k];
      if (c.core_free && c.representative.order > 1 && c.representative.order * c.representative.order >= n)
        o.require(b[k] >= 3, name + ": class " + std::to_string(k) + " with |H|^2 >= |G| has b < 3");
    }

    // alpha >= 1 iff some core-free H has |H|^2 >= |ncl(H)| and b >= 3
    bool exists = false;
    for (std::size_t k = 0; k < lat.classes().size(); ++k) {
      const auto& c = lat.classes()[k];
      const auto& h = c.representative;
      if (c.core_free && h.order > 1 && h.order * h.order >= g.normal_closure(h).order && b[k] >= 3) exists = true;
    }
    o.require((r.alpha >= 1) == exists, name + ": biconditional fails");
    auto ql = check_conditions("ql", lat, prof);
    o.require(ql.predicted.admits(r.alpha), name + ": ql verdict " + ql.predicted.to_string());

    o.require(r.alpha >= r.beta, name + ": alpha < beta");

    if (prof.layer && prof.layer->order == 1 && all_subgroups_normal(g, prof.fitting))
      o.require(r.alpha == 0, name + ": every subgroup of F(G) normal but alpha = " + std::to_string(r.alpha));

    if (n > 1 && !is_prime(n)) {
      bool big = false;
      for (const auto& c : lat.classes())
        if (c.representative.order < n && c.representative.order * c.representative.order >= n) big = true;
      o.require(big, name + ": no proper H with |H|^2 >= |G|");
    }
  }
  o.require(groups >= 20, "only " + std::to_string(groups) + " groups checked");
  o.require(since(t) < 1800, "took " + fmt(since(t)));
  o.detail += (o.detail.empty() ? "" : ", ") + std::to_string(groups) + " groups, " + std::to_string(lemma_checks) +
              " normal-subgroup bounds, " + fmt(since(t));
  return o;
}

Outcome criterion11() {
  Outcome o;
  auto t = Clock::now();
  std::vector<std::shared_ptr<const PermGroup>> groups;
  for (const auto& name : testcatalog::names_up_to(500)) groups.push_back(testcatalog::load(name));
  using namespace testgroups;
  for (auto g : {s3(), c6(), c4(), v4(), d8(), q8(), a4(), s4(), c5c4(), a4xc2(), s4xc3(), a5(), s3xs3(), d10(),
                 d12(), c2_4(), c7c3(), agl1_8(), psl27(), s5(), a5xc2()})
    groups.push_back(g);
  std::size_t classes = 0, mismatches = 0;
  for (const auto& pg : groups) {
    auto lat = subgroup_classes(pg);
    const auto& g = lat.group();
    testnaive::Table table(*pg, 500);
    for (const auto& c : lat.classes()) {
      if (!c.core_free) continue;
      std::vector<bool> h(table.el.size(), false);
      c.representative.elements.for_each([&](Elem e) { h[table.index(g.element(e).images())] = true; });
      ++classes;
      if (base_size(g, c.representative).value != testnaive::naive_base(table, h)) ++mismatches;
    }
  }
  o.require(mismatches == 0, std::to_string(mismatches) + " mismatches");
  o.require(since(t) < 600, "took " + fmt(since(t)));
  o.detail += (o.detail.empty() ? "" : ", ") + std::to_string(groups.size()) + " groups, " + std::to_string(classes) +
              " core-free classes, " + fmt(since(t));
  return o;
}

Outcome criterion12() {
  Outcome o;
  auto t = Clock::now();
  auto lat = lattice_of("sz8");
  o.require(lat.complete(), "lattice incomplete");
  auto r = alpha(lat);
  o.require(r.alpha == 1, "alpha = " + std::to_string(r.alpha));
  o.detail += (o.detail.empty() ? "" : ", ") + std::to_string(lat.classes().size()) + " classes, " + fmt(since(t));
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 alpha(A4) = 0, alpha(S4) = 1", criterion1},
      {"2 alpha(S4 x C3) = 1, witness is the S3 complement", criterion2},
      {"3 alpha((C2)^3:C7) = alpha((C3)^3:C13) = 1", criterion3},
      {"4 alpha = 1 for the groups of order 1680 and 1008", criterion4},
      {"5 alpha(((C3)^3 x C5):(C2)^2) = 1", criterion5},
      {"6 alpha((C11)^2:SL2(3)) = 1, evenderived predicts 1, consistent", criterion6},
      {"7 beta(L2(23)) = beta(L2(47)) = 1, beta(L2(25)) >= 2", criterion7},
      {"8 Sz(8): b(Borel) >= 3, b(U) = 2, b(V:T) = 2", criterion8},
      {"9 core-free hyperplane counts", criterion9},
      {"10 property suite on catalog groups with |G| <= 2000 and trivial Frattini", criterion10},
      {"11 base size equals naive tuple search for |G| <= 500", criterion11},
      {"12 (stretch) alpha(Sz(8)) = 1", criterion12},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const bool stretch = name.front() == '1' && name[1] == '2';
    std::cout << (o.pass ? "PASS " : "FAIL ") << name;
    if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
    if (!o.pass && stretch) std::cout << " [stretch, non-blocking]";
    std::cout << std::endl;
    if (!o.pass && !stretch) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
