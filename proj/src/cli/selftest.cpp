#include "basetwo/cli/commands.hpp"

#include "basetwo/error.hpp"
#include "basetwo/structure.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace basetwo::cli {

using nlohmann::json;

namespace {

using Check = std::function<std::string()>;  // empty string = pass

std::shared_ptr<const PermGroup> perm_group(std::size_t n, const std::vector<std::string>& gens) {
  std::vector<Permutation> g;
  for (const auto& s : gens) g.push_back(parse_cycles(n, s));
  return std::make_shared<const PermGroup>(n, std::move(g));
}

std::shared_ptr<const EnumeratedGroup> enumerate(std::size_t n, const std::vector<std::string>& gens) {
  return std::make_shared<const EnumeratedGroup>(perm_group(n, gens), 100000);
}

Subgroup sub(const EnumeratedGroup& g, const std::vector<std::string>& gens) {
  std::vector<Elem> idx;
  for (const auto& s : gens) idx.push_back(g.index_of(parse_cycles(g.group().degree(), s)));
  return g.generate(idx);
}

json named_spec(const std::string& fam, const char* key, int v) {
  return {{"version", 1}, {"kind", "named"}, {"family", fam}, {key, v}};
}

std::string expect(bool ok, const std::string& detail) { return ok ? "" : detail; }

std::multiset<std::size_t> class_sizes(const EnumeratedGroup& g) {
  std::multiset<std::size_t> out;
  for (std::size_t c = 0; c < g.class_count(); ++c) out.insert(g.class_members(c).size());
  return out;
}

std::multiset<std::uint64_t> orders_of(const Lattice& l, const std::vector<std::size_t>& cls) {
  std::multiset<std::uint64_t> out;
  for (auto i : cls) out.insert(l.classes()[i].representative.order);
  return out;
}

const char* s4_gens[] = {"(0 1 2 3)", "(0 1)"};

std::shared_ptr<const EnumeratedGroup> s4() { return enumerate(4, {s4_gens[0], s4_gens[1]}); }

}  // namespace

std::vector<SelftestLine> selftest(const RunOptions& opts) {
  std::vector<std::pair<std::string, Check>> checks;
  auto add = [&](std::string name, Check c) { checks.emplace_back(std::move(name), std::move(c)); };

  // permutations and groups
  add("compose identity(4) with (0 1)", [] {
    return expect(Permutation::identity(4) * parse_cycles(4, "(0 1)") == parse_cycles(4, "(0 1)"), "wrong product");
  });
  add("(0 1) squared is the identity", [] {
    auto t = parse_cycles(2, "(0 1)");
    return expect((t * t).is_identity(), "not the identity");
  });
  add("(0 1 2) then (0 1) applies left to right", [] {
    auto r = parse_cycles(3, "(0 1 2)") * parse_cycles(3, "(0 1)");
    return expect(r(0) == 0 && r(1) == 2 && r(2) == 1, "got " + r.to_string());
  });
  add("<identity(3)> has order 1", [] {
    return expect(PermGroup(3, {Permutation::identity(3)}).order() == 1, "wrong order");
  });
  add("<(0 1), (0 1 2)> has order 6", [] { return expect(perm_group(3, {"(0 1)", "(0 1 2)"})->order() == 6, "wrong order"); });
  add("<(0 1)(2 3), (0 2)(1 3)> has order 4",
      [] { return expect(perm_group(4, {"(0 1)(2 3)", "(0 2)(1 3)"})->order() == 4, "wrong order"); });
  add("trivial group has one class of size 1",
      [] { return expect(class_sizes(*enumerate(1, {})) == std::multiset<std::size_t>{1}, "wrong classes"); });
  add("S3 class sizes 1, 2, 3", [] {
    return expect(class_sizes(*enumerate(3, {"(0 1)", "(0 1 2)"})) == std::multiset<std::size_t>{1, 2, 3}, "wrong sizes");
  });
  add("A4 class sizes 1, 3, 4, 4", [] {
    return expect(class_sizes(*enumerate(4, {"(0 1 2)", "(1 2 3)"})) == std::multiset<std::size_t>{1, 3, 4, 4},
                  "wrong sizes");
  });
  add("intersections in S4", [] {
    auto g = s4();
    auto a = sub(*g, {"(0 1 2 3)"});
    bool ok = g->intersect(a, a).elements == a.elements;
    ok = ok && g->intersect(a, sub(*g, {"(0 1 3 2)"})).order == 1;
    ok = ok && g->intersect(sub(*g, {"(0 1)(2 3)", "(0 2)(1 3)"}), sub(*g, {"(0 1)", "(0 1 2)"})).order == 1;
    return expect(ok, "wrong intersection");
  });
  add("normal closures", [] {
    auto c6 = enumerate(5, {"(0 1)(2 3 4)"});
    auto h = sub(*c6, {"(2 3 4)"});
    auto g = s4();
    bool ok = c6->normal_closure(h).order == 3;
    ok = ok && g->normal_closure(sub(*g, {"(0 1)"})).order == 24;
    ok = ok && g->normal_closure(sub(*g, {"(0 1)(2 3)"})).order == 4;
    return expect(ok, "wrong closure");
  });
  add("normalizers in S4", [] {
    auto g = s4();
    bool ok = g->normalizer(g->whole()).order == 24;
    ok = ok && g->normalizer(sub(*g, {"(0 1 2 3)"})).order == 8;
    ok = ok && g->normalizer(sub(*g, {"(0 1)", "(0 1 2)"})).order == 6;
    return expect(ok, "wrong normalizer");
  });

  // structure
  add("cores in S4", [] {
    auto g = s4();
    bool ok = g->core(sub(*g, {"(0 1)(2 3)", "(0 2)(1 3)"})).order == 4;
    ok = ok && g->core(sub(*g, {"(0 1)", "(0 1 2)"})).order == 1;
    ok = ok && g->core(sub(*g, {"(0 1 2 3)", "(0 2)"})).order == 4;
    return expect(ok, "wrong core");
  });
  add("minimal normal subgroups of A5, S4, C6", [] {
    auto a5 = minimal_normal_subgroups(*enumerate(5, {"(0 1 2)", "(0 1 2 3 4)"}));
    auto s = minimal_normal_subgroups(*s4());
    auto c6 = minimal_normal_subgroups(*enumerate(5, {"(0 1)(2 3 4)"}));
    bool ok = a5.size() == 1 && a5[0].order == 60 && s.size() == 1 && s[0].order == 4 && c6.size() == 2 &&
              c6[0].order * c6[1].order == 6;
    return expect(ok, "wrong minimal normal subgroups");
  });
  add("radicals of C6, S4, A5", [] {
    auto c6 = enumerate(5, {"(0 1)(2 3 4)"});
    auto rc = radicals(*c6, c6->trivial());
    auto g = s4();
    auto rs = radicals(*g, g->trivial());
    auto a5 = enumerate(5, {"(0 1 2)", "(0 1 2 3 4)"});
    auto ra = radicals(*a5, a5->trivial());
    bool ok = rc.fitting.order == 6 && rc.socle.order == 6 && rc.layer->order == 1;
    ok = ok && rs.p_cores.at(2).order == 4 && rs.fitting.order == 4 && rs.layer->order == 1 && rs.socle.order == 4;
    ok = ok && ra.fitting.order == 1 && ra.layer->order == 60 && ra.gen_fitting->order == 60;
    return expect(ok, "wrong radicals");
  });
  add("Frattini subgroups of (C2)^2, C4, S4", [] {
    bool ok = frattini(subgroup_classes(enumerate(4, {"(0 1)(2 3)", "(0 2)(1 3)"}))).order == 1;
    ok = ok && frattini(subgroup_classes(enumerate(4, {"(0 1 2 3)"}))).order == 2;
    ok = ok && frattini(subgroup_classes(s4())).order == 1;
    return expect(ok, "wrong Frattini subgroup");
  });
  add("module statistics of C5, S4, (C2)^3:C7", [] {
    auto c5 = enumerate(5, {"(0 1 2 3 4)"});
    auto m5 = module_stats(*c5, c5->trivial());
    auto g = s4();
    auto ms = module_stats(*g, g->trivial());
    auto a = enumerate(8, {"(0 1)(2 3)(4 5)(6 7)", "(0 2)(1 3)(4 6)(5 7)", "(0 4)(1 5)(2 6)(3 7)",
                           "(1 2 4)(3 6 5)", "(1 3 7 6 2 5 4)"});
    auto ma = module_stats(*a, a->trivial());
    bool ok = m5.c == 1 && m5.r == 1 && m5.c_per_prime.at(5) == 1;
    ok = ok && ms.c == 2 && ms.r == 2 && ma.c_per_prime.at(2) == 3;
    return expect(ok, "wrong c or r");
  });
  add("Fitting complements of C6, S4, A4 x C2", [] {
    auto c6 = subgroup_classes(enumerate(5, {"(0 1)(2 3 4)"}));
    auto s = subgroup_classes(s4());
    auto a = subgroup_classes(enumerate(6, {"(0 1 2)", "(1 2 3)", "(4 5)"}));
    auto f = [](const Lattice& l) { return radicals(l.group(), l.group().trivial()).fitting; };
    bool ok = fitting_complement(c6, f(c6)).order == 1 && fitting_complement(s, f(s)).order == 6 &&
              fitting_complement(a, f(a)).order == 3;
    return expect(ok, "wrong complement");
  });
  add("regular orbits of 1, S3 and C3 on (C2)^2", [] {
    auto g = s4();
    auto v = sub(*g, {"(0 1)(2 3)", "(0 2)(1 3)"});
    bool ok = action_diagnostics(*g, g->trivial(), v).regular_orbit_exists;
    ok = ok && !action_diagnostics(*g, sub(*g, {"(0 1)", "(0 1 2)"}), v).regular_orbit_exists;
    ok = ok && action_diagnostics(*g, sub(*g, {"(0 1 2)"}), v).regular_orbit_exists;
    return expect(ok, "wrong diagnostics");
  });

  // lattice
  add("class counts: trivial 1, S4 11, A4 5", [] {
    bool ok = subgroup_classes(enumerate(1, {})).classes().size() == 1 &&
              subgroup_classes(s4()).classes().size() == 11 &&
              subgroup_classes(enumerate(4, {"(0 1 2)", "(1 2 3)"})).classes().size() == 5;
    return expect(ok, "wrong class count");
  });
  add("maximal subgroups of C5, S4, A5", [] {
    auto c5 = subgroup_classes(enumerate(5, {"(0 1 2 3 4)"}));
    auto s = subgroup_classes(s4());
    auto a = subgroup_classes(enumerate(5, {"(0 1 2)", "(0 1 2 3 4)"}));
    bool ok = orders_of(c5, maximal_subgroups(c5)) == std::multiset<std::uint64_t>{1};
    ok = ok && orders_of(s, maximal_subgroups(s)) == std::multiset<std::uint64_t>{6, 8, 12};
    ok = ok && orders_of(a, maximal_subgroups(a)) == std::multiset<std::uint64_t>{6, 10, 12};
    return expect(ok, "wrong maximal subgroups");
  });
  add("core-free classes of A5, S4, C6", [] {
    auto a = subgroup_classes(enumerate(5, {"(0 1 2)", "(0 1 2 3 4)"}));
    auto s = subgroup_classes(s4());
    auto c6 = subgroup_classes(enumerate(5, {"(0 1)(2 3 4)"}));
    bool ok = corefree_classes(a).size() == a.classes().size() - 1 && corefree_classes(s).size() == 7 &&
              corefree_classes(c6).size() == 1;
    return expect(ok, "wrong core-free classes");
  });
  add("conjugacy tests in S4", [] {
    auto g = s4();
    auto st3 = sub(*g, {"(0 1)", "(0 1 2)"});
    auto st0 = sub(*g, {"(1 2)", "(1 2 3)"});
    auto x = conjugate_test(*g, st3, st0);
    bool ok = conjugate_test(*g, st3, st3).has_value() && x && g->conjugate(st3, *x).elements == st0.elements;
    ok = ok && !conjugate_test(*g, sub(*g, {"(0 1)(2 3)", "(0 2)(1 3)"}), sub(*g, {"(0 1)", "(2 3)"}));
    return expect(ok, "wrong conjugacy test");
  });

  // base sizes
  add("trivial pairs: 1, S3 and C4 in S4", [] {
    auto g = s4();
    bool ok = exists_trivial_pair(*g, g->trivial()).has_value();
    ok = ok && !exists_trivial_pair(*g, sub(*g, {"(0 1)", "(0 1 2)"}));
    ok = ok && exists_trivial_pair(*g, sub(*g, {"(0 1 2 3)"})).has_value();
    return expect(ok, "wrong pair search");
  });
  add("base sizes b(S4, 1) = 1 and b(S4, S3) = 3", [] {
    auto g = s4();
    auto c = base_size(*g, sub(*g, {"(0 1)", "(0 1 2)"}));
    bool ok = base_size(*g, g->trivial()).value == 1 && c.value == 3 && replay(*g, sub(*g, {"(0 1)", "(0 1 2)"}), c.witnesses);
    return expect(ok, "wrong base size");
  });
  add("lower bound check on small subgroups of S4", [] {
    auto g = s4();
    bool ok = !lower_bound_check(*g, sub(*g, {"(0 1)"})) && !lower_bound_check(*g, sub(*g, {"(0 1)", "(2 3)"}));
    return expect(ok, "unexpected lower bound");
  });
  add("beta(C5) = 0", [] { return expect(beta(subgroup_classes(enumerate(5, {"(0 1 2 3 4)"}))).empty(), "nonzero"); });

  // certify
  add("profiles of S4, A5 x C2, C5", [] {
    auto ps = profile(subgroup_classes(s4()));
    auto pa = profile(subgroup_classes(enumerate(7, {"(0 1 2)", "(0 1 2 3 4)", "(5 6)"})));
    auto pc = profile(subgroup_classes(enumerate(5, {"(0 1 2 3 4)"})));
    bool ok = ps.frattini_trivial && ps.fitting.order == 4 && ps.layer->order == 1 && ps.complement->order == 6 &&
              ps.stats.c == 2 && ps.stats.r == 2;
    ok = ok && pa.layer->order == 60 && pa.fitting.order == 2;
    ok = ok && pc.fitting.order == 5 && pc.layer->order == 1 && pc.stats.c == 1;
    return expect(ok, "wrong profile");
  });

  // cli
  add("named sym(4): order 24 on 4 points", [] {
    auto g = construct(GroupSpec::parse(named_spec("sym", "n", 4)));
    return expect(g->order() == 24 && g->degree() == 4, "got " + to_string(g->order()));
  });
  add("named psl2(7): order 168 on 8 points", [] {
    auto g = construct(GroupSpec::parse(named_spec("psl2", "q", 7)));
    return expect(g->order() == 168 && g->degree() == 8, "got " + to_string(g->order()));
  });
  add("affine p=2, d=3, Singer: order 56 on 8 points", [] {
    auto g = construct(GroupSpec::parse({{"version", 1}, {"kind", "affine"}, {"p", 2}, {"d", 3}, {"singer", true}}));
    return expect(g->order() == 56 && g->degree() == 8, "got " + to_string(g->order()));
  });
  add("closed-form orders of named families", [] {
    std::vector<json> specs{named_spec("sym", "n", 5),    named_spec("alt", "n", 6),     named_spec("dihedral", "n", 7),
                            named_spec("cyclic", "n", 9), named_spec("psl2", "q", 8),    named_spec("psl2", "q", 9),
                            named_spec("psl2", "q", 11),  named_spec("sz", "q", 8),
                            {{"version", 1}, {"kind", "affine"}, {"p", 3}, {"d", 3}, {"singer", true}}};
    for (const auto& s : specs) {
      auto spec = GroupSpec::parse(s);
      if (construct(spec)->order() != *closed_form_order(spec)) return "mismatch for " + spec.label();
    }
    return std::string();
  });
  add("alpha of A4 is 0", [&] {
    auto r = alpha_command(GroupSpec::parse(named_spec("alt", "n", 4)), opts);
    return expect(r.alpha && r.alpha->alpha == 0, "wrong alpha");
  });
  add("certify c1 on C5:C4 predicts 0 and is consistent", [&] {
    RunOptions o = opts;
    o.theorem = "c1";
    auto r = certify_command(GroupSpec::parse({{"version", 1},
                                               {"kind", "perm-generators"},
                                               {"degree", 5},
                                               {"generators", {"(0 1 2 3 4)", "(1 2 4 3)"}}}),
                             o);
    bool ok = r.verdicts.size() == 1 && r.verdicts[0].hypotheses_met &&
              r.verdicts[0].predicted == Prediction::exactly(0) && r.consistency && r.consistency->ok;
    return expect(ok, "wrong verdict");
  });
  add("sweep over Singer affine p = 2, 3 gives alpha 1 twice", [&] {
    json doc = {{"version", 1},
                {"base", {{"kind", "affine"}, {"d", 3}, {"singer", true}}},
                {"vary", {{"p", {2, 3}}}}};
    auto r = sweep_command(doc, opts);
    bool ok = r.rows.size() == 2 && r.rows[0].alpha == 1 && r.rows[1].alpha == 1 && r.rows[0].consistent &&
              r.rows[1].consistent;
    return expect(ok, "wrong rows");
  });
  add("empty sweep is a valid document with no rows", [&] {
    auto r = sweep_command({{"version", 1}, {"specs", json::array()}}, opts);
    auto back = sweep_from_json(json::parse(emit(r, "json")));
    return expect(r.rows.empty() && back == r, "round trip failed");
  });
  add("S4 analyze report round-trips", [&] {
    auto r = analyze(GroupSpec::parse(named_spec("sym", "n", 4)), opts);
    return expect(report_from_json(json::parse(emit(r, "json"))) == r, "round trip failed");
  });
  add("alpha witness replays from a parsed report", [&] {
    auto spec = GroupSpec::parse(named_spec("sym", "n", 4));
    auto parsed = report_from_json(json::parse(emit(alpha_command(spec, opts), "json")));
    EnumeratedGroup g(construct(spec), opts.bound);
    if (!parsed.alpha || parsed.alpha->witnesses.empty()) return std::string("no witness");
    for (const auto& w : parsed.alpha->witnesses)
      if (!replay_record(g, w)) return "replay failed for class " + std::to_string(*w.cls);
    return std::string();
  });

  std::vector<SelftestLine> out;
  for (auto& [name, check] : checks) {
    SelftestLine line{name, false, ""};
    try {
      line.detail = check();
      line.pass = line.detail.empty();
    } catch (const std::exception& e) {
      line.detail = std::string("exception: ") + e.what();
    }
    out.push_back(std::move(line));
  }
  return out;
}

}  // namespace basetwo::cli
