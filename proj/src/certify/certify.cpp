#include "basetwo/certify.hpp"

#include "basetwo/error.hpp"
#include "basetwo/module.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace basetwo {

bool Prediction::admits(std::uint64_t alpha) const {
  switch (kind) {
    case Kind::none: return true;
    case Kind::exact: return alpha == value;
    case Kind::at_least: return alpha >= value;
  }
  return true;
}

std::string Prediction::to_string() const {
  switch (kind) {
    case Kind::none: return "none";
    case Kind::exact: return "=" + std::to_string(value);
    case Kind::at_least: return ">=" + std::to_string(value);
  }
  return "none";
}

Prediction parse_prediction(const std::string& s) {
  if (s == "none") return {};
  if (s.rfind(">=", 0) == 0) return Prediction::at_least(std::stoull(s.substr(2)));
  if (s.rfind('=', 0) == 0) return Prediction::exactly(std::stoull(s.substr(1)));
  throw Error(Errc::invalid_argument, "bad prediction: " + s);
}

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids{"evenderived", "c5",       "c4", "c3",   "c1", "main1",
                                            "prim",        "prim2",    "regorbit", "a0", "subF", "ql"};
  return ids;
}

namespace {

struct Ctx {
  const Lattice& l;
  const EnumeratedGroup& g;
  const StructuralProfile& pr;
  const CertifyOptions& opts;
  std::map<std::size_t, std::uint32_t>& bases;
  const AlphaReport* known_alpha = nullptr;  // alpha(G), when already computed
  mutable std::optional<std::vector<Subgroup>> normals;

  std::uint32_t base_of(std::size_t cls) const {
    auto it = bases.find(cls);
    if (it != bases.end()) return it->second;
    auto b = base_size(g, l.classes()[cls].representative).value;
    bases.emplace(cls, b);
    return b;
  }
  const std::vector<Subgroup>& normal_list() const {
    if (!normals) normals = normal_subgroups(g);
    return *normals;
  }
};

std::string num(std::uint64_t n) { return std::to_string(n); }

std::string elem_str(const EnumeratedGroup& g, Elem e) { return g.element(e).to_string(); }

std::string sub_str(const EnumeratedGroup& g, const Subgroup& h) {
  std::string s = "order " + num(h.order);
  if (!h.generators.empty()) {
    s += " <";
    for (std::size_t i = 0; i < h.generators.size(); ++i)
      s += (i ? ", " : "") + elem_str(g, h.generators[i]);
    s += ">";
  }
  return s;
}

class Builder {
 public:
  explicit Builder(std::string id) { v_.theorem = std::move(id); }
  bool hyp(std::string label, bool holds, std::string witness = {}) {
    v_.hypotheses.push_back({std::move(label), holds, std::move(witness)});
    return holds;
  }
  bool cond(std::string label, bool holds, std::string witness = {}) {
    v_.conditions.push_back({std::move(label), holds, std::move(witness)});
    return holds;
  }
  Verdict finish(Prediction p) {
    v_.hypotheses_met = std::all_of(v_.hypotheses.begin(), v_.hypotheses.end(),
                                    [](const Condition& c) { return c.holds; });
    v_.predicted = v_.hypotheses_met ? p : Prediction{};
    return std::move(v_);
  }

 private:
  Verdict v_;
};

bool centralizes(const EnumeratedGroup& g, Elem x, const Subgroup& h) {
  return std::all_of(h.generators.begin(), h.generators.end(),
                     [&](Elem y) { return g.mul(x, y) == g.mul(y, x); });
}

Subgroup centralizer_in(const EnumeratedGroup& g, const Subgroup& l, const Subgroup& h) {
  return g.intersect(l, g.centralizer(h));
}

bool squarefree(std::uint64_t n) {
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % (d * d) == 0) return false;
  return true;
}

// Phi(G) = 1, then E(G) = 1 or E(G) != 1, then optionally a complement.
bool standard_hyps(Builder& b, const Ctx& c, bool layer_trivial, bool need_complement) {
  if (!b.hyp("Phi(G) = 1", c.pr.frattini_trivial, c.pr.frattini_trivial ? "" : sub_str(c.g, c.pr.frattini)))
    return false;
  const bool e1 = c.pr.layer->order == 1;
  if (layer_trivial) {
    if (!b.hyp("E(G) = 1", e1, sub_str(c.g, *c.pr.layer))) return false;
  } else if (!b.hyp("E(G) != 1", !e1)) {
    return false;
  }
  if (need_complement && !b.hyp("F(G) has a complement L", c.pr.complement.has_value())) return false;
  return true;
}

bool c_is(Builder& b, const Ctx& c, const std::string& label, std::function<bool(unsigned)> pred) {
  const bool ok = c.pr.stats.c_defined && pred(c.pr.stats.c);
  return b.hyp(label, ok, c.pr.stats.c_defined ? "c = " + num(c.pr.stats.c) : "F(G) = 1, c undefined");
}

std::uint64_t prime_with_c(const Ctx& c, unsigned value) {
  for (auto [p, cp] : c.pr.stats.c_per_prime)
    if (cp == value) return p;
  throw Error(Errc::integrity, "no prime attains c(G)");
}

// Transitive with |L| = |X| under conjugation.
std::pair<bool, std::string> regular_on(const EnumeratedGroup& g, const Subgroup& l,
                                        const std::vector<Subgroup>& x) {
  if (x.empty()) return {false, "X is empty"};
  if (x.size() != l.order) return {false, "|X| = " + num(x.size()) + ", |L| = " + num(l.order)};
  std::vector<bool> hit(x.size(), false);
  std::size_t reached = 0;
  l.elements.for_each([&](Elem y) {
    ElementSet im = g.conjugate_set(x[0].elements, y);
    for (std::size_t i = 0; i < x.size(); ++i)
      if (!hit[i] && x[i].elements == im) {
        hit[i] = true;
        ++reached;
      }
  });
  if (reached != x.size()) return {false, "orbit of length " + num(reached) + " on " + num(x.size()) + " subgroups"};
  return {true, "|X| = " + num(x.size())};
}

std::vector<Subgroup> corefree_hyperplanes(const EnumeratedGroup& g, const Subgroup& p) {
  std::vector<Subgroup> out;
  for (auto& h : hyperplanes(g, p))
    if (g.core(h).order == 1) out.push_back(std::move(h));
  return out;
}

std::vector<MinimalNormal> minimal_normals_in(const Ctx& c, const Subgroup& p) {
  std::vector<MinimalNormal> out;
  for (const auto& m : c.pr.min_normals)
    if (m.group.elements.is_subset_of(p.elements)) out.push_back(m);
  return out;
}

bool direct_pq(const Subgroup& f, const Subgroup& p, const Subgroup& q) {
  return q.elements.is_subset_of(f.elements) && p.order * q.order == f.order;
}

// Element of L, other than 1, acting as a scalar on `scalar_on` and trivially on `trivial_on`.
std::optional<Elem> scalar_and_trivial(const EnumeratedGroup& g, const Subgroup& l, const Subgroup& scalar_on,
                                       const Subgroup& trivial_on) {
  std::optional<Elem> found;
  l.elements.for_each([&](Elem y) {
    if (found || y == g.identity()) return;
    if (scalar_of(g, scalar_on, y) && centralizes(g, y, trivial_on)) found = y;
  });
  return found;
}

bool primitive_on(const EnumeratedGroup& g, const Subgroup& l, const Subgroup& v) {
  return is_irreducible(g, v, l) && imprimitivity_pairs(g, v, l).empty();
}

std::optional<Elem> nontrivial_scalar(const EnumeratedGroup& g, const Subgroup& l, const Subgroup& v) {
  std::optional<Elem> found;
  l.elements.for_each([&](Elem y) {
    if (!found && y != g.identity() && scalar_of(g, v, y)) found = y;
  });
  return found;
}

std::optional<Elem> element_of_order(const EnumeratedGroup& g, const Subgroup& h, std::uint64_t n) {
  std::optional<Elem> found;
  h.elements.for_each([&](Elem y) {
    if (!found && g.element_order(y) == n) found = y;
  });
  return found;
}

std::string describe_l(const EnumeratedGroup& g, const Subgroup& l) {
  return "|L| = " + num(l.order) + ", |L'| = " + num(g.derived(l).order) + ", |Z(L)| = " +
         num(center(g, l).order) + (g.is_abelian(l) ? ", abelian" : ", nonabelian");
}

// ---------------------------------------------------------------------------

Verdict evenderived(const Ctx& c) {
  Builder b("evenderived");
  const auto& g = c.g;
  bool ok = standard_hyps(b, c, true, true);
  if (ok) ok = b.hyp("r(G) = 2", c.pr.stats.r == 2, "r = " + num(c.pr.stats.r));
  if (ok) {
    auto d = g.derived(*c.pr.complement).order;
    ok = b.hyp("|L'| is even", d % 2 == 0, "|L'| = " + num(d));
  }
  if (!ok) return b.finish({});
  const auto& l = *c.pr.complement;
  const auto& f = c.pr.fitting;
  const std::string iii_label = "(iii) F(G) = P x Q, Q = O_p'(G) of odd order, every subgroup of Q normal in G";
  const std::string iv_label =
      "(iv) |L| = 2(p+1) and L is 2.D_{p+1}, or 2.S4 with p = 23, or SL2(3) with p = 11, or SL2(5) with p = 59";
  auto inv = involutions(g, l);
  bool i = b.cond("(i) L has a unique involution x", inv.size() == 1, num(inv.size()) + " involutions in L");
  if (!i) {
    b.cond("(ii) P = [x, F(G)] = (C_p)^2 = O_p(G) is minimal normal, p = 3 mod 4", false, "no unique involution");
    b.cond(iii_label, false, "no unique involution");
    b.cond(iv_label, false, "no unique involution");
    return b.finish(Prediction::at_least(2));
  }
  Subgroup p_sub = commutator_subgroup(g, g.generate({inv[0]}), f);
  auto ea = elementary_abelian(g, p_sub);
  const bool shape = ea && ea->rank == 2;
  const std::uint64_t p = ea ? ea->p : 0;
  const bool is_op = shape && c.pr.p_cores.at(p).elements == p_sub.elements;
  const bool minimal = shape && g.is_normal(p_sub) && is_irreducible(g, p_sub, g.whole());
  bool ii = b.cond("(ii) P = [x, F(G)] = (C_p)^2 = O_p(G) is minimal normal, p = 3 mod 4",
                   shape && is_op && minimal && p % 4 == 3,
                   "[x, F(G)] has " + sub_str(g, p_sub) + (shape ? ", p = " + num(p) : "") +
                       (shape && !is_op ? ", not O_p(G)" : "") + (shape && !minimal ? ", not minimal normal" : ""));
  bool iii = false, iv = false;
  if (shape) {
    const auto& q = c.pr.p_prime_cores.at(p);
    const bool direct = direct_pq(f, p_sub, q);
    const bool odd = q.order % 2 == 1;
    const bool alln = all_subgroups_normal(g, q);
    iii = b.cond(iii_label, direct && odd && alln,
                 "|Q| = " + num(q.order) + (direct ? "" : ", F(G) != P x Q") +
                     (alln ? "" : ", Q has a non-normal subgroup"));
    const std::uint64_t d = g.derived(l).order, e = exponent(g, l);
    const bool order = l.order == 2 * (p + 1);
    const bool dic = d == (p + 1) / 2 && e == p + 1;
    const bool bin_oct = p == 23 && d == 24;
    const bool sl23 = p == 11 && d == 8;
    const bool sl25 = p == 59 && d == 120;
    iv = b.cond(iv_label, order && (dic || bin_oct || sl23 || sl25),
                describe_l(g, l) + ", exponent " + num(e));
  } else {
    b.cond(iii_label, false, "[x, F(G)] is not (C_p)^2");
    b.cond(iv_label, false, "[x, F(G)] is not (C_p)^2");
  }
  return b.finish(i && ii && iii && iv ? Prediction::exactly(1) : Prediction::at_least(2));
}

Verdict c5(const Ctx& c) {
  Builder b("c5");
  if (standard_hyps(b, c, true, false)) c_is(b, c, "c(G) >= 5", [](unsigned v) { return v >= 5; });
  return b.finish(Prediction::at_least(2));
}

Verdict c1(const Ctx& c) {
  Builder b("c1");
  if (standard_hyps(b, c, true, false)) c_is(b, c, "c(G) = 1", [](unsigned v) { return v == 1; });
  return b.finish(Prediction::exactly(0));
}

Verdict c4(const Ctx& c) {
  Builder b("c4");
  if (!standard_hyps(b, c, true, true) || !c_is(b, c, "c(G) = 4", [](unsigned v) { return v == 4; }))
    return b.finish({});
  const auto& g = c.g;
  const auto& l = *c.pr.complement;
  const std::uint64_t p = prime_with_c(c, 4);
  const auto& ps = c.pr.p_cores.at(p);
  const auto& q = c.pr.p_prime_cores.at(p);
  const bool direct = direct_pq(c.pr.fitting, ps, q);
  const bool alln = all_subgroups_normal(g, q);
  bool i = b.cond("(i) F(G) = P x Q with |P| = 16 and every subgroup of Q = O_2'(G) normal in G",
                  direct && ps.order == 16 && alln,
                  "p = " + num(p) + ", |P| = " + num(ps.order) + ", |Q| = " + num(q.order) +
                      (direct ? "" : ", F(G) != P x Q") + (alln ? "" : ", Q has a non-normal subgroup"));
  bool ii = false;
  if (ps.order == 16) {
    auto [reg, w] = regular_on(g, l, corefree_hyperplanes(g, ps));
    ii = b.cond("(ii) L acts regularly on the core-free subgroups of P of order 8", reg, w);
  } else {
    b.cond("(ii) L acts regularly on the core-free subgroups of P of order 8", false, "|P| != 16");
  }
  // (iii)(a)
  bool a = false;
  {
    std::string w;
    const bool pmin = ps.order == 16 && is_irreducible(g, ps, g.whole());
    auto x = element_of_order(g, l, 15);
    const bool lc15 = l.order == 15 && x.has_value();
    bool faithful = false;
    if (lc15) faithful = !centralizes(g, g.power(*x, 5), q);
    if (!pmin) w += "P is not a minimal normal (C2)^4; ";
    if (!lc15) w += describe_l(g, l) + "; ";
    if (lc15 && !faithful) w += "x^5 centralizes Q";
    a = b.cond("(iii)(a) P = (C2)^4 minimal normal, L = <x> = C15, <x^5> faithful on Q", pmin && lc15 && faithful, w);
  }
  // (iii)(b)
  bool bb = false;
  {
    std::string w = "no decomposition P = A x B into non-isomorphic minimal normal (C2)^2";
    bool lshape = l.order == 9 && g.is_abelian(l) && exponent(g, l) == 3;
    auto mins = minimal_normals_in(c, ps);
    auto clq = centralizer_in(g, l, q);
    for (std::size_t s = 0; s < mins.size() && !bb; ++s)
      for (std::size_t t = s + 1; t < mins.size() && !bb; ++t) {
        const auto& ma = mins[s].group;
        const auto& mb = mins[t].group;
        if (mins[s].rank != 2 || mins[t].rank != 2 || ma.order * mb.order != ps.order) continue;
        if ((ma.elements & mb.elements).count() != 1) continue;
        if (modules_isomorphic(g, ma, mb, g.whole())) continue;
        w = "P = A x B found";
        const bool cent = clq.elements.is_subset_of(centralizer_in(g, l, ma).elements) ||
                          clq.elements.is_subset_of(centralizer_in(g, l, mb).elements);
        if (!lshape) w += "; " + describe_l(g, l);
        if (!cent) w += "; C_L(Q) lies in neither C_L(A) nor C_L(B)";
        bb = lshape && cent;
      }
    b.cond("(iii)(b) P = A x B, A, B non-isomorphic minimal normal (C2)^2, L = (C3)^2, C_L(Q) in C_L(A) or C_L(B)",
           bb, bb ? "" : w);
  }
  return b.finish(i && ii && (a || bb) ? Prediction::exactly(1) : Prediction::at_least(2));
}

bool has_prime_divisor(std::uint64_t n, const std::function<bool(std::uint64_t)>& pred) {
  auto ps = prime_divisors(n);
  return std::any_of(ps.begin(), ps.end(), pred);
}

Verdict c3(const Ctx& c) {
  Builder b("c3");
  if (!standard_hyps(b, c, true, true) || !c_is(b, c, "c(G) = 3", [](unsigned v) { return v == 3; }))
    return b.finish({});
  const auto& g = c.g;
  const auto& l = *c.pr.complement;
  const std::uint64_t p = prime_with_c(c, 3);
  const auto& ps = c.pr.p_cores.at(p);
  const auto& q = c.pr.p_prime_cores.at(p);
  const bool direct = direct_pq(c.pr.fitting, ps, q);
  const bool alln = all_subgroups_normal(g, q);
  const bool cube = ps.order == p * p * p;
  bool i = b.cond("(i) F(G) = P x Q with |P| = p^3 and every subgroup of Q = O_p'(G) normal in G",
                  direct && cube && alln,
                  "p = " + num(p) + ", |P| = " + num(ps.order) + ", |Q| = " + num(q.order) +
                      (direct ? "" : ", F(G) != P x Q") + (alln ? "" : ", Q has a non-normal subgroup"));
  bool ii = false;
  if (cube) {
    auto [reg, w] = regular_on(g, l, corefree_hyperplanes(g, ps));
    auto sc = nontrivial_scalar(g, l, ps);
    if (sc) w += "; scalar element " + elem_str(g, *sc);
    ii = b.cond("(ii) L acts regularly on the core-free subgroups of P of order p^2 (so L has no nontrivial scalar on P)",
                reg && !sc, w);
  } else {
    b.cond("(ii) L acts regularly on the core-free subgroups of P of order p^2 (so L has no nontrivial scalar on P)",
           false, "|P| != p^3");
  }
  // (iii)(a)
  bool a;
  {
    const bool pmin = cube && is_irreducible(g, ps, g.whole());
    const bool lc = is_cyclic(g, l) && l.order == p * p + p + 1;
    std::string w;
    if (!pmin) w += "P is not a minimal normal (C_p)^3; ";
    if (!lc) w += describe_l(g, l) + "; ";
    if (p % 3 == 1) w += "p = 1 mod 3";
    a = b.cond("(iii)(a) P = (C_p)^3 minimal normal, L = C_{p^2+p+1}, p != 1 mod 3", pmin && lc && p % 3 != 1, w);
  }
  auto mins = minimal_normals_in(c, ps);
  // (iii)(b)
  bool bb = false;
  {
    std::string w = "no decomposition P = A x B with A = (C_p)^2, B = C_p minimal normal";
    for (const auto& ma : mins)
      for (const auto& mb : mins) {
        if (bb || ma.rank != 2 || mb.rank != 1 || ma.group.order * mb.group.order != ps.order) continue;
        if ((ma.group.elements & mb.group.elements).count() != 1) continue;
        w = "P = A x B found";
        const bool prim = primitive_on(g, l, ma.group);
        auto bad = scalar_and_trivial(g, l, ma.group, g.join(mb.group, q));
        bool extra = true;
        if (p >= 3)
          extra = p % 4 == 3 && has_prime_divisor(q.order, [](std::uint64_t r) { return r % 8 == 1; });
        if (!prim) w += "; L is not primitive on A";
        if (bad) w += "; " + elem_str(g, *bad) + " is scalar on A and trivial on B x Q";
        if (!extra) w += "; p >= 3 needs p = 3 mod 4 and a prime r = 1 mod 8 dividing |Q|";
        bb = prim && !bad && extra;
      }
    b.cond("(iii)(b) P = A x B, A = (C_p)^2 and B = C_p minimal normal, L primitive on A, no scalar-on-A element "
           "trivial on B x Q, and p = 3 mod 4 with r = 1 mod 8 dividing |Q| when p >= 3",
           bb, bb ? "" : w);
  }
  // (iii)(c)
  bool cc = false;
  {
    std::string w = "no decomposition P = A x B x C into pairwise non-isomorphic normal subgroups";
    if (p < 3) w = "p = 2";
    for (std::size_t s = 0; s < mins.size() && !cc && p >= 3; ++s)
      for (std::size_t t = s + 1; t < mins.size() && !cc; ++t)
        for (std::size_t u = t + 1; u < mins.size() && !cc; ++u) {
          const Subgroup* parts[3] = {&mins[s].group, &mins[t].group, &mins[u].group};
          if (g.join(g.join(*parts[0], *parts[1]), *parts[2]).order != ps.order) continue;
          if (modules_isomorphic(g, *parts[0], *parts[1], g.whole()) ||
              modules_isomorphic(g, *parts[0], *parts[2], g.whole()) ||
              modules_isomorphic(g, *parts[1], *parts[2], g.whole()))
            continue;
          w = "P = A x B x C found";
          const bool odd = has_prime_divisor(q.order, [](std::uint64_t r) { return r % 2 == 1; });
          std::optional<Elem> bad;
          for (int k = 0; k < 3 && !bad; ++k) {
            const Subgroup& x = *parts[(k + 1) % 3];
            const Subgroup& y = *parts[(k + 2) % 3];
            bad = scalar_and_trivial(g, l, g.join(x, y), g.join(*parts[k], q));
          }
          if (!odd) w += "; |Q| has no odd prime divisor";
          if (bad) w += "; " + elem_str(g, *bad) + " is scalar on two factors and trivial on the rest";
          cc = odd && !bad;
        }
    b.cond("(iii)(c) p >= 3, P = A x B x C pairwise non-isomorphic, an odd prime divides |Q|, no element scalar on "
           "two factors and trivial on the third and Q",
           cc, cc ? "" : w);
  }
  return b.finish(i && ii && (a || bb || cc) ? Prediction::exactly(1) : Prediction::at_least(2));
}

bool is_simple_subgroup(const EnumeratedGroup& g, const Subgroup& n) {
  if (n.order <= 1) return false;
  for (std::size_t k = 1; k < g.class_count(); ++k) {
    Elem x = g.class_rep(k);
    if (n.contains(x) && g.normal_closure({x}, n).order != n.order) return false;
  }
  return true;
}

Verdict main1(const Ctx& c) {
  Builder b("main1");
  if (!standard_hyps(b, c, false, false)) return b.finish({});
  const auto& g = c.g;
  const auto& e = *c.pr.layer;
  const bool simple = is_simple_subgroup(g, e);
  bool i = b.cond("(i) E(G) = T is simple", simple, simple ? "" : sub_str(g, e) + " is not simple");
  auto cent = g.centralizer(e);
  const bool split = e.order * cent.order == g.size();
  const bool ab = g.is_abelian(cent);
  const bool sqf = ab && squarefree(exponent(g, cent));
  bool ii = b.cond("(ii) G = T x C_{p1} x ... x C_{pk}", split && ab && sqf,
                   "C_G(T) " + sub_str(g, cent) + (split ? "" : ", |T||C_G(T)| != |G|") +
                       (ab ? "" : ", nonabelian") + (ab && !sqf ? ", exponent not squarefree" : ""));
  bool iii = false;
  if (simple && e.order == g.size() && c.known_alpha) {
    const auto at = c.known_alpha->alpha;
    iii = b.cond("(iii) alpha(T) = 1", at == 1, "alpha(T) = " + num(at));
  } else if (simple) {
    std::vector<Permutation> gens;
    for (Elem x : e.generators) gens.push_back(g.element(x));
    auto t = std::make_shared<const PermGroup>(g.group().degree(), gens);
    auto lt = subgroup_classes(t, LatticeOptions{std::max<std::uint64_t>(g.size(), 1), 0});
    auto at = alpha(lt).alpha;
    iii = b.cond("(iii) alpha(T) = 1", at == 1, "alpha(T) = " + num(at));
  } else {
    b.cond("(iii) alpha(T) = 1", false, "T not simple");
  }
  return b.finish(i && ii && iii ? Prediction::exactly(1) : Prediction::at_least(2));
}

Verdict prim(const Ctx& c) {
  Builder b("prim");
  const auto& g = c.g;
  std::optional<std::size_t> corefree_max;
  for (std::size_t k : maximal_subgroups(c.l))
    if (c.l.classes()[k].core_free && !corefree_max) corefree_max = k;
  if (!b.hyp("G has a core-free maximal subgroup", corefree_max.has_value())) return b.finish({});
  const auto& mins = c.pr.min_normals;
  const bool unique = mins.size() == 1;
  const auto* n = unique ? &mins[0] : nullptr;

  const bool i = b.cond("(i) G = N is simple", unique && !n->prime && n->group.order == g.size(),
                        num(mins.size()) + " minimal normal subgroups");
  const bool affine = unique && n->prime && c.pr.complement.has_value();
  const std::uint64_t p = affine ? n->prime : 0;
  const unsigned d = affine ? n->rank : 0;
  const Subgroup* l = affine ? &*c.pr.complement : nullptr;
  std::string lw = affine ? "N = (C_" + num(p) + ")^" + num(d) + ", " + describe_l(g, *l) : "socle not abelian";

  const bool ii = b.cond("(ii) N = (C_p)^3, L = C_{p^2+p+1}, p != 1 mod 3",
                         affine && d == 3 && is_cyclic(g, *l) && l->order == p * p + p + 1 && p % 3 != 1, lw);
  const bool two = affine && d == 2;
  const bool iiia = b.cond("(iii)(a) N = (C_2)^2 and L = C3 or S3", two && p == 2 && (l->order == 3 || l->order == 6), lw);
  bool iiib = false, iiic = false, iiid = false;
  if (two) {
    const bool ab = g.is_abelian(*l);
    const bool primv = primitive_on(g, *l, n->group);
    const auto sc = nontrivial_scalar(g, *l, n->group);
    iiib = b.cond("(iii)(b) N = (C_p)^2, p >= 3, L has no nontrivial scalar, L abelian or primitive",
                  p >= 3 && !sc && (ab || primv),
                  lw + (sc ? ", scalar " + elem_str(g, *sc) : "") + (primv ? ", primitive" : ", imprimitive"));
    const std::uint64_t r = l->order / 2;
    iiic = b.cond("(iii)(c) N = (C_p)^2, p >= 7, L = D_{2r} imprimitive, r an odd prime dividing p-1",
                  p >= 7 && !ab && l->order % 2 == 0 && r % 2 == 1 && is_prime(r) && !primv && (p - 1) % r == 0, lw);
    iiid = b.cond("(iii)(d) N = (C_p)^2, p = 3 mod 4, |L| = 2(p+1), L cyclic or Z(L) = C2 with L primitive",
                  p % 4 == 3 && l->order == 2 * (p + 1) &&
                      (is_cyclic(g, *l) || (center(g, *l).order == 2 && primv)),
                  lw);
  } else {
    b.cond("(iii)(b) N = (C_p)^2, p >= 3, L has no nontrivial scalar, L abelian or primitive", false, lw);
    b.cond("(iii)(c) N = (C_p)^2, p >= 7, L = D_{2r} imprimitive, r an odd prime dividing p-1", false, lw);
    b.cond("(iii)(d) N = (C_p)^2, p = 3 mod 4, |L| = 2(p+1), L cyclic or Z(L) = C2 with L primitive", false, lw);
  }
  const bool iv = b.cond("(iv) N = C_p", affine && d == 1, lw);

  Prediction pred = Prediction::at_least(2);
  if (i) pred = Prediction::at_least(1);
  else if (ii) pred = Prediction::exactly(1);
  else if (iiia) pred = Prediction::exactly(l->order == 3 ? 0 : 1);
  else if (iiib) pred = Prediction::exactly(0);
  else if (iiic || iiid) pred = Prediction::exactly(1);
  else if (iv) pred = Prediction::exactly(0);
  return b.finish(pred);
}

Verdict prim2(const Ctx& c) {
  Builder b("prim2");
  const auto& g = c.g;
  bool ok = standard_hyps(b, c, true, true);
  std::optional<ElementaryAbelian> ea;
  if (ok) {
    ea = elementary_abelian(g, c.pr.fitting);
    ok = b.hyp("F(G) = (C_p)^2", ea && ea->rank == 2, sub_str(g, c.pr.fitting));
  }
  if (ok) ok = b.hyp("L is irreducible on F(G)", is_irreducible(g, c.pr.fitting, *c.pr.complement));
  if (ok) {
    auto d = g.derived(*c.pr.complement).order;
    ok = b.hyp("|L'| is odd", d % 2 == 1, "|L'| = " + num(d));
  }
  if (!ok) return b.finish({});
  const auto& l = *c.pr.complement;
  const auto& f = c.pr.fitting;
  const std::uint64_t p = ea->p;
  const std::string lw = describe_l(g, l);
  if (p == 2) {
    const bool c3 = b.cond("(i) p = 2 and L = C3", l.order == 3, lw);
    const bool s3 = b.cond("(i) p = 2 and L = S3", l.order == 6, lw);
    return b.finish(c3 ? Prediction::exactly(0) : s3 ? Prediction::exactly(1) : Prediction::at_least(2));
  }
  const bool ab = g.is_abelian(l);
  const auto sc = nontrivial_scalar(g, l, f);
  const std::string scw = sc ? "scalar " + elem_str(g, *sc) : "no nontrivial scalar";
  if (ab) {
    b.cond("(ii) L abelian", true, lw);
    const bool zero = b.cond("(ii) L meets Z(GL2(p)) trivially", !sc, scw);
    const bool one = b.cond("(ii) p = 3 mod 4 and L = C_{2(p+1)}", p % 4 == 3 && is_cyclic(g, l) && l.order == 2 * (p + 1), lw);
    return b.finish(zero ? Prediction::exactly(0) : one ? Prediction::exactly(1) : Prediction::at_least(2));
  }
  const bool primv = primitive_on(g, l, f);
  if (!primv) {
    b.cond("(iii) L nonabelian and imprimitive", true, lw);
    const std::uint64_t r = l.order / 2;
    const bool one = b.cond("(iii) L = D_{2r} with r an odd prime dividing p-1",
                            l.order % 2 == 0 && r % 2 == 1 && is_prime(r) && (p - 1) % r == 0, lw);
    return b.finish(one ? Prediction::exactly(1) : Prediction::at_least(2));
  }
  b.cond("(iv) L nonabelian and primitive", true, lw);
  const bool zero = b.cond("(iv) L meets Z(GL2(p)) trivially", !sc, scw);
  const bool one = b.cond("(iv) p = 3 mod 4, |L| = 2(p+1) and Z(L) = C2",
                          p % 4 == 3 && l.order == 2 * (p + 1) && center(g, l).order == 2, lw);
  return b.finish(zero ? Prediction::exactly(0) : one ? Prediction::exactly(1) : Prediction::at_least(2));
}

bool odd_derived_hyps(Builder& b, const Ctx& c, const std::string& c_label,
                      std::function<bool(unsigned)> c_pred) {
  if (!standard_hyps(b, c, true, true) || !c_is(b, c, c_label, std::move(c_pred))) return false;
  auto d = c.g.derived(*c.pr.complement).order;
  return b.hyp("|L'| is odd", d % 2 == 1, "|L'| = " + num(d));
}

Verdict regorbit(const Ctx& c) {
  Builder b("regorbit");
  const auto& g = c.g;
  if (!odd_derived_hyps(b, c, "c(G) <= 2", [](unsigned v) { return v <= 2; })) return b.finish({});
  auto diag = action_diagnostics(g, *c.pr.complement, c.pr.fitting);
  if (!b.hyp("L has no regular orbit on F(G)", !diag.regular_orbit_exists,
             diag.regular_point ? "regular point " + elem_str(g, *diag.regular_point) : ""))
    return b.finish({});
  auto z = center(g, g.whole());
  bool holds = false;
  std::string w = "|Z(G)| = " + num(z.order);
  if (z.order % 2 == 1 && g.size() == 24 * z.order) {
    for (const auto& cls : c.l.classes()) {
      const auto& s = cls.representative;
      if (s.order != 24 || (s.elements & z.elements).count() != 1) continue;
      if (center(g, s).order == 1 && g.derived(s).order == 12) {
        holds = true;
        w = "S4 = " + sub_str(g, s) + ", A = Z(G) of order " + num(z.order);
        break;
      }
    }
  }
  b.cond("G = S4 x A with A abelian of odd order", holds, w);
  return b.finish(holds ? Prediction::exactly(1) : Prediction::at_least(2));
}

// V_q decomposes into rank-2 cyclic G-submodules accepted by `piece`, for every prime q.
bool decomposes(const Ctx& c, const Subgroup& v, const std::function<bool(const Subgroup&)>& piece) {
  const auto& g = c.g;
  for (std::uint64_t q : prime_divisors(v.order)) {
    Subgroup vq = hall_part(g, v, q, false);
    std::vector<const Subgroup*> cands;
    for (const auto& n : c.normal_list())
      if (n.order == q * q && n.elements.is_subset_of(vq.elements) && is_cyclic_module(g, n, g.whole()) && piece(n))
        cands.push_back(&n);
    std::function<bool(std::size_t, const Subgroup&)> dfs = [&](std::size_t from, const Subgroup& cur) {
      if (cur.order == vq.order) return true;
      for (std::size_t k = from; k < cands.size(); ++k)
        if ((cands[k]->elements & cur.elements).count() == 1 && dfs(k + 1, g.join(cur, *cands[k]))) return true;
      return false;
    };
    if (!dfs(0, g.trivial())) return false;
  }
  return true;
}

bool normal_in(const EnumeratedGroup& g, const Subgroup& j, const Subgroup& l) {
  return std::all_of(l.generators.begin(), l.generators.end(),
                     [&](Elem x) { return g.conjugate_set(j.elements, x) == j.elements; });
}

Verdict a0(const Ctx& c) {
  Builder b("a0");
  const auto& g = c.g;
  if (!odd_derived_hyps(b, c, "c(G) = 2", [](unsigned v) { return v == 2; })) return b.finish({});
  const auto& l = *c.pr.complement;
  const auto& f = c.pr.fitting;
  const std::string scope = c.opts.normal_j ? " (J normal in L)" : "";

  auto diag = action_diagnostics(g, l, f);
  const bool i = b.cond("(i) L has a regular orbit on F(G)", diag.regular_orbit_exists,
                        diag.regular_point ? "regular point " + elem_str(g, *diag.regular_point)
                                           : "every point of F(G) has a nontrivial stabilizer in L");

  bool ii = true;
  std::string iiw;
  for (const auto& cls : c.l.classes()) {
    const auto& h = cls.representative;
    if (!cls.core_free || h.order == 1 || !h.elements.is_subset_of(f.elements)) continue;
    bool found = false;
    l.elements.for_each([&](Elem x) {
      if (!found && (h.elements & g.conjugate_set(h.elements, x)).count() == 1) found = true;
    });
    if (!found) {
      ii = false;
      iiw = "H = " + sub_str(g, h);
      break;
    }
  }
  b.cond("(ii) every core-free H <= F(G) has H meet H^x = 1 for some x in L", ii, iiw);

  // (iii)
  std::vector<ElementSet> seen;
  std::optional<Elem> bad_y;
  l.elements.for_each([&](Elem y) {
    if (bad_y || y == g.identity() || !is_prime(g.element_order(y))) return;
    Subgroup j = g.generate({y});
    if (std::find(seen.begin(), seen.end(), j.elements) != seen.end()) return;
    seen.push_back(j.elements);
    if (c.opts.normal_j && !normal_in(g, j, l)) return;
    Subgroup v = commutator_subgroup(g, j, f);
    Subgroup cf = fixed_points(g, f, j);
    if (v.order * cf.order != f.order || (v.elements & cf.elements).count() != 1 || !g.is_normal(v)) return;
    auto piece = [&](const Subgroup& w) {
      const std::uint64_t q = g.element_order(w.generators.front());
      if (auto k = scalar_of(g, w, y); k && *k % q != 1) return true;
      if (!is_irreducible(g, w, g.whole()) || centralizes(g, y, w)) return false;
      for (const auto& [l1, l2] : imprimitivity_pairs(g, w, g.whole()))
        if (g.conjugate_set(l1.elements, y) == l1.elements && g.conjugate_set(l2.elements, y) == l2.elements)
          return true;
      return false;
    };
    if (decomposes(c, v, piece)) bad_y = y;
  });
  const bool iii = b.cond("(iii) no prime-order J = <y> <= L with F(G) = [y, F(G)] x C_F(y), [y, F(G)] a product of "
                          "cyclic (C_q)^2 modules on which y is a nontrivial scalar or fixes both lines of a block "
                          "pair" + scope,
                          !bad_y, bad_y ? "y = " + elem_str(g, *bad_y) : "");

  // (iv)
  Subgroup o2 = c.pr.p_cores.count(2) ? c.pr.p_cores.at(2) : g.trivial();
  std::optional<Subgroup> bad_j;
  seen.clear();
  if (o2.order == 4)
    l.elements.for_each([&](Elem x3) {
      if (bad_j || g.element_order(x3) != 3) return;
      l.elements.for_each([&](Elem t) {
        if (bad_j || g.element_order(t) != 2 || g.conj(x3, t) != g.inv(x3)) return;
        Subgroup j = g.generate({x3, t});
        if (std::find(seen.begin(), seen.end(), j.elements) != seen.end()) return;
        seen.push_back(j.elements);
        if (c.opts.normal_j && !normal_in(g, j, l)) return;
        Subgroup v = commutator_subgroup(g, j, f);
        if (!o2.elements.is_subset_of(v.elements)) return;
        Subgroup u = hall_part(g, v, 2, true);
        if (u.order * 4 != v.order) return;
        bool ok = true;
        j.elements.for_each([&](Elem z) {
          if (!ok || z == g.identity()) return;
          if (centralizes(g, z, o2)) ok = false;
          if (g.element_order(z) == 3 && !centralizes(g, z, u)) ok = false;
          if (g.element_order(z) == 2)
            for (Elem w : u.generators)
              if (g.conj(w, z) != g.inv(w)) ok = false;
        });
        if (ok && decomposes(c, u, [](const Subgroup&) { return true; })) bad_j = j;
      });
    });
  const bool iv = b.cond("(iv) no J = S3 <= L with [J, F(G)] = O_2(G) x U, J faithful on O_2(G) = (C2)^2, inverting U, "
                         "U a product of cyclic (C_q)^2 modules" + scope,
                         !bad_j, bad_j ? "J = " + sub_str(g, *bad_j) : (o2.order == 4 ? "" : "|O_2(G)| != 4"));
  return b.finish(i && ii && iii && iv ? Prediction::exactly(0) : Prediction::at_least(1));
}

Verdict subf(const Ctx& c) {
  Builder b("subF");
  const auto& g = c.g;
  if (!odd_derived_hyps(b, c, "c(G) = 2", [](unsigned v) { return v == 2; })) return b.finish({});
  std::optional<std::size_t> found;
  for (std::size_t k = 0; k < c.l.classes().size() && !found; ++k) {
    const auto& cls = c.l.classes()[k];
    if (cls.core_free && cls.representative.order > 1 &&
        cls.representative.elements.is_subset_of(c.pr.fitting.elements) && c.base_of(k) >= 3)
      found = k;
  }
  b.cond("F(G) contains a core-free H with b(G,H) >= 3", found.has_value(),
         found ? "H = " + sub_str(g, c.l.classes()[*found].representative) : "");
  return b.finish(found ? Prediction::at_least(2) : Prediction{});
}

Verdict ql(const Ctx& c) {
  Builder b("ql");
  const auto& g = c.g;
  if (!b.hyp("Phi(G) = 1", c.pr.frattini_trivial, c.pr.frattini_trivial ? "" : sub_str(g, c.pr.frattini)))
    return b.finish({});
  std::optional<std::size_t> found;
  for (std::size_t k = 0; k < c.l.classes().size() && !found; ++k) {
    const auto& cls = c.l.classes()[k];
    const auto& h = cls.representative;
    if (!cls.core_free || h.order == 1) continue;
    if (h.order * h.order >= g.normal_closure(h).order && c.base_of(k) >= 3) found = k;
  }
  b.cond("some core-free H has |H|^2 >= |normal closure of H| and b(G,H) >= 3", found.has_value(),
         found ? "H = " + sub_str(g, c.l.classes()[*found].representative) : "");
  return b.finish(found ? Prediction::at_least(1) : Prediction::exactly(0));
}

Verdict dispatch(const std::string& id, const Ctx& c) {
  if (id == "evenderived") return evenderived(c);
  if (id == "c5") return c5(c);
  if (id == "c4") return c4(c);
  if (id == "c3") return c3(c);
  if (id == "c1") return c1(c);
  if (id == "main1") return main1(c);
  if (id == "prim") return prim(c);
  if (id == "prim2") return prim2(c);
  if (id == "regorbit") return regorbit(c);
  if (id == "a0") return a0(c);
  if (id == "subF") return subf(c);
  if (id == "ql") return ql(c);
  throw Error(Errc::invalid_argument, "unknown theorem id: " + id);
}

}  // namespace

Verdict check_conditions(const std::string& theorem, const Lattice& l, const StructuralProfile& prof,
                         const CertifyOptions& opts) {
  if (!l.complete()) throw Error(Errc::lattice_incomplete, "certifiers need the full lattice");
  std::map<std::size_t, std::uint32_t> bases;
  Ctx c{l, l.group(), prof, opts, bases, nullptr, std::nullopt};
  return dispatch(theorem, c);
}

ConsistencyReport consistency(const Lattice& l, const StructuralProfile& prof, const AlphaOptions& aopts,
                              const CertifyOptions& copts) {
  ConsistencyReport r;
  r.alpha = alpha(l, aopts);
  std::map<std::size_t, std::uint32_t> bases;
  for (const auto& cb : r.alpha.per_class) bases.emplace(cb.cls, cb.cert.value);
  Ctx c{l, l.group(), prof, copts, bases, &r.alpha, std::nullopt};
  for (const auto& id : theorem_ids()) {
    r.verdicts.push_back(dispatch(id, c));
    const auto& v = r.verdicts.back();
    if (v.hypotheses_met && !v.predicted.admits(r.alpha.alpha))
      r.mismatches.push_back({id, v.predicted, r.alpha.alpha});
  }
  return r;
}

}  // namespace basetwo
