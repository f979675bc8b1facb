#include "basetwo/cli/report.hpp"

#include "basetwo/error.hpp"

#include <sstream>

namespace basetwo::cli {

using nlohmann::json;

GroupInfo group_info(const GroupSpec& spec, const PermGroup& g) {
  return {spec.doc(), spec.label(), to_string(g.order()), g.degree()};
}

ProfileSummary summarize(const StructuralProfile& p) {
  ProfileSummary s;
  s.frattini_trivial = p.frattini_trivial;
  s.frattini = p.frattini.order;
  s.fitting = p.fitting.order;
  s.socle = p.socle.order;
  if (p.layer) s.layer = p.layer->order;
  if (p.complement) s.complement = p.complement->order;
  for (const auto& [q, sub] : p.p_cores) s.p_cores[q] = sub.order;
  for (const auto& m : p.min_normals) s.minimal_normals.push_back({m.group.order, m.prime, m.rank});
  s.c_per_prime = p.stats.c_per_prime;
  s.c_defined = p.stats.c_defined;
  s.c = p.stats.c;
  s.r = p.stats.r;
  return s;
}

CertificateRecord certificate_record(const EnumeratedGroup& g, const Subgroup& h, const BaseCertificate& cert,
                                     std::optional<std::size_t> cls) {
  CertificateRecord r;
  r.cls = cls;
  r.order = h.order;
  for (Elem x : h.generators) r.generators.push_back(g.element(x).to_string());
  r.base = cert.value;
  for (Elem x : cert.witnesses) r.witnesses.push_back(g.element(x).to_string());
  r.lower_bound_reason = cert.lower_bound_reason;
  return r;
}

AlphaSummary summarize(const Lattice& l, const AlphaReport& a) {
  AlphaSummary s;
  s.alpha = a.alpha;
  s.beta = a.beta;
  s.classes = l.classes().size();
  s.core_free_classes = a.per_class.size();
  for (const auto& w : a.witnesses)
    s.witnesses.push_back(certificate_record(l.group(), l.classes()[w.cls].representative, w.cert, w.cls));
  s.beta_classes = a.beta_classes;
  return s;
}

ConsistencySummary summarize(const ConsistencyReport& c) {
  ConsistencySummary s;
  s.ok = c.ok();
  for (const auto& m : c.mismatches) s.mismatches.push_back({m.theorem, m.predicted.to_string(), m.direct});
  return s;
}

bool replay_record(const EnumeratedGroup& g, const CertificateRecord& r) {
  const std::size_t n = g.group().degree();
  std::vector<Elem> gens, wit;
  for (const auto& s : r.generators) gens.push_back(g.index_of(parse_cycles(n, s)));
  for (const auto& s : r.witnesses) wit.push_back(g.index_of(parse_cycles(n, s)));
  Subgroup h = g.generate(gens);
  if (h.order != r.order) return false;
  if (wit.size() + 1 != r.base) return false;
  return replay(g, h, wit);
}

namespace {

template <class T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> get_opt(const json& j, const char* key) {
  const auto& v = j.at(key);
  if (v.is_null()) return std::nullopt;
  return v.get<T>();
}

json to_json(const GroupInfo& g) {
  return {{"spec", g.spec}, {"label", g.label}, {"order", g.order}, {"degree", g.degree}};
}

GroupInfo group_from(const json& j) {
  return {j.at("spec"), j.at("label"), j.at("order"), j.at("degree")};
}

// JSON object keys are strings, so numeric maps are stored as [key, value] pairs.
template <class V>
json pairs(const std::map<std::uint64_t, V>& m) {
  json a = json::array();
  for (const auto& [k, v] : m) a.push_back({k, v});
  return a;
}

template <class V>
std::map<std::uint64_t, V> unpairs(const json& a) {
  std::map<std::uint64_t, V> m;
  for (const auto& kv : a) m[kv.at(0).get<std::uint64_t>()] = kv.at(1).get<V>();
  return m;
}

json to_json(const ProfileSummary& p) {
  json mins = json::array();
  for (const auto& m : p.minimal_normals) mins.push_back({{"order", m.order}, {"prime", m.prime}, {"rank", m.rank}});
  return {{"frattini_trivial", p.frattini_trivial}, {"frattini", p.frattini}, {"fitting", p.fitting},
          {"socle", p.socle}, {"layer", opt(p.layer)}, {"complement", opt(p.complement)},
          {"p_cores", pairs(p.p_cores)}, {"minimal_normals", mins}, {"c_per_prime", pairs(p.c_per_prime)},
          {"c_defined", p.c_defined}, {"c", p.c}, {"r", p.r}};
}

ProfileSummary profile_from(const json& j) {
  ProfileSummary p;
  p.frattini_trivial = j.at("frattini_trivial");
  p.frattini = j.at("frattini");
  p.fitting = j.at("fitting");
  p.socle = j.at("socle");
  p.layer = get_opt<std::uint64_t>(j, "layer");
  p.complement = get_opt<std::uint64_t>(j, "complement");
  p.p_cores = unpairs<std::uint64_t>(j.at("p_cores"));
  for (const auto& m : j.at("minimal_normals")) p.minimal_normals.push_back({m.at("order"), m.at("prime"), m.at("rank")});
  p.c_per_prime = unpairs<unsigned>(j.at("c_per_prime"));
  p.c_defined = j.at("c_defined");
  p.c = j.at("c");
  p.r = j.at("r");
  return p;
}

json to_json(const CertificateRecord& r) {
  return {{"class", opt(r.cls)},         {"order", r.order}, {"generators", r.generators}, {"base", r.base},
          {"witnesses", r.witnesses}, {"lower_bound_reason", opt(r.lower_bound_reason)}};
}

CertificateRecord record_from(const json& j) {
  CertificateRecord r;
  r.cls = get_opt<std::size_t>(j, "class");
  r.order = j.at("order");
  r.generators = j.at("generators").get<std::vector<std::string>>();
  r.base = j.at("base");
  r.witnesses = j.at("witnesses").get<std::vector<std::string>>();
  r.lower_bound_reason = get_opt<std::string>(j, "lower_bound_reason");
  return r;
}

json to_json(const AlphaSummary& a) {
  json w = json::array();
  for (const auto& r : a.witnesses) w.push_back(to_json(r));
  return {{"alpha", a.alpha},   {"beta", a.beta}, {"classes", a.classes}, {"core_free_classes", a.core_free_classes},
          {"witnesses", w}, {"beta_classes", a.beta_classes}};
}

AlphaSummary alpha_from(const json& j) {
  AlphaSummary a;
  a.alpha = j.at("alpha");
  a.beta = j.at("beta");
  a.classes = j.at("classes");
  a.core_free_classes = j.at("core_free_classes");
  for (const auto& r : j.at("witnesses")) a.witnesses.push_back(record_from(r));
  a.beta_classes = j.at("beta_classes").get<std::vector<std::size_t>>();
  return a;
}

json to_json(const Condition& c) { return {{"label", c.label}, {"holds", c.holds}, {"witness", c.witness}}; }

Condition condition_from(const json& j) { return {j.at("label"), j.at("holds"), j.at("witness")}; }

json to_json(const Verdict& v) {
  json h = json::array(), c = json::array();
  for (const auto& x : v.hypotheses) h.push_back(to_json(x));
  for (const auto& x : v.conditions) c.push_back(to_json(x));
  return {{"theorem", v.theorem},   {"hypotheses_met", v.hypotheses_met}, {"predicted", v.predicted.to_string()},
          {"hypotheses", h}, {"conditions", c}};
}

Verdict verdict_from(const json& j) {
  Verdict v;
  v.theorem = j.at("theorem");
  v.hypotheses_met = j.at("hypotheses_met");
  v.predicted = parse_prediction(j.at("predicted"));
  for (const auto& x : j.at("hypotheses")) v.hypotheses.push_back(condition_from(x));
  for (const auto& x : j.at("conditions")) v.conditions.push_back(condition_from(x));
  return v;
}

json to_json(const ConsistencySummary& c) {
  json m = json::array();
  for (const auto& x : c.mismatches) m.push_back({{"theorem", x.theorem}, {"predicted", x.predicted}, {"direct", x.direct}});
  return {{"ok", c.ok}, {"mismatches", m}};
}

ConsistencySummary consistency_from(const json& j) {
  ConsistencySummary c;
  c.ok = j.at("ok");
  for (const auto& x : j.at("mismatches")) c.mismatches.push_back({x.at("theorem"), x.at("predicted"), x.at("direct")});
  return c;
}

template <class T, class F>
json opt_obj(const std::optional<T>& v, F&& f) {
  return v ? f(*v) : json(nullptr);
}

void check_header(const json& j) {
  if (!j.contains("schema_version") || j.at("schema_version") != schema_version)
    throw Error(Errc::invalid_argument, "unsupported report schema");
}

}  // namespace

json to_json(const Report& r) {
  json verdicts = json::array();
  for (const auto& v : r.verdicts) verdicts.push_back(to_json(v));
  return {{"schema_version", r.schema_version},
          {"tool_version", r.tool_version},
          {"seed", r.seed},
          {"command", r.command},
          {"group", to_json(r.group)},
          {"profile", opt_obj(r.profile, [](const auto& p) { return to_json(p); })},
          {"alpha", opt_obj(r.alpha, [](const auto& a) { return to_json(a); })},
          {"verdicts", verdicts},
          {"consistency", opt_obj(r.consistency, [](const auto& c) { return to_json(c); })},
          {"basesize", opt_obj(r.basesize, [](const auto& b) { return to_json(b); })},
          {"timing_seconds", opt(r.timing_seconds)}};
}

Report report_from_json(const json& j) {
  try {
    check_header(j);
    Report r;
    r.schema_version = j.at("schema_version");
    r.tool_version = j.at("tool_version");
    r.seed = j.at("seed");
    r.command = j.at("command");
    r.group = group_from(j.at("group"));
    if (!j.at("profile").is_null()) r.profile = profile_from(j.at("profile"));
    if (!j.at("alpha").is_null()) r.alpha = alpha_from(j.at("alpha"));
    for (const auto& v : j.at("verdicts")) r.verdicts.push_back(verdict_from(v));
    if (!j.at("consistency").is_null()) r.consistency = consistency_from(j.at("consistency"));
    if (!j.at("basesize").is_null()) r.basesize = record_from(j.at("basesize"));
    r.timing_seconds = get_opt<double>(j, "timing_seconds");
    return r;
  } catch (const json::exception& e) {
    throw Error(Errc::invalid_argument, std::string("malformed report: ") + e.what());
  }
}

json to_json(const SweepReport& r) {
  json rows = json::array();
  for (const auto& x : r.rows)
    rows.push_back({{"group", to_json(x.group)}, {"alpha", x.alpha}, {"beta", x.beta}, {"consistent", x.consistent}});
  return {{"schema_version", r.schema_version}, {"tool_version", r.tool_version}, {"seed", r.seed}, {"rows", rows}};
}

SweepReport sweep_from_json(const json& j) {
  try {
    check_header(j);
    SweepReport r;
    r.schema_version = j.at("schema_version");
    r.tool_version = j.at("tool_version");
    r.seed = j.at("seed");
    for (const auto& x : j.at("rows"))
      r.rows.push_back({group_from(x.at("group")), x.at("alpha"), x.at("beta"), x.at("consistent")});
    return r;
  } catch (const json::exception& e) {
    throw Error(Errc::invalid_argument, std::string("malformed sweep report: ") + e.what());
  }
}

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void text_record(std::ostringstream& o, const CertificateRecord& r) {
  o << "  class " << (r.cls ? std::to_string(*r.cls) : "-") << "  order " << r.order << "  b = " << r.base;
  if (r.lower_bound_reason) o << "  (" << *r.lower_bound_reason << ")";
  o << "\n    generators:";
  for (const auto& g : r.generators) o << " " << g;
  o << "\n    witnesses: ";
  for (const auto& w : r.witnesses) o << " " << w;
  o << "\n";
}

}  // namespace

std::string emit(const Report& r, const std::string& format) {
  if (format == "json") return to_json(r).dump(2) + "\n";
  if (format != "text") throw Error(Errc::invalid_argument, "unknown format " + format);
  std::ostringstream o;
  o << "basetwo " << r.tool_version << "  command " << r.command << "  seed " << r.seed << "\n";
  o << "group " << r.group.label << "  order " << r.group.order << "  degree " << r.group.degree << "\n";
  if (r.profile) {
    const auto& p = *r.profile;
    o << "\nprofile\n  Phi(G) trivial  " << yes_no(p.frattini_trivial) << "\n  |Phi(G)|  " << p.frattini
      << "\n  |F(G)|    " << p.fitting << "\n  |E(G)|    " << (p.layer ? std::to_string(*p.layer) : "-")
      << "\n  |soc(G)|  " << p.socle << "\n  |L|       " << (p.complement ? std::to_string(*p.complement) : "-")
      << "\n  c(G)      " << (p.c_defined ? std::to_string(p.c) : "undefined") << "\n  r(G)      " << p.r << "\n";
    o << "  minimal normal subgroups:";
    for (const auto& m : p.minimal_normals)
      o << " " << (m.prime ? "(C" + std::to_string(m.prime) + ")^" + std::to_string(m.rank) : "T" + std::to_string(m.order));
    o << "\n";
  }
  if (r.alpha) {
    const auto& a = *r.alpha;
    o << "\nalpha " << a.alpha << "  beta " << a.beta << "  classes " << a.classes << "  core-free "
      << a.core_free_classes << "\n";
    for (const auto& w : a.witnesses) text_record(o, w);
  }
  if (!r.verdicts.empty()) o << "\nverdicts\n";
  for (const auto& v : r.verdicts) {
    o << "  " << v.theorem << "  hypotheses " << (v.hypotheses_met ? "met" : "not met") << "  predicted "
      << v.predicted.to_string() << "\n";
    for (const auto& c : v.hypotheses)
      o << "    H [" << (c.holds ? "x" : " ") << "] " << c.label << (c.witness.empty() ? "" : "  -- " + c.witness) << "\n";
    for (const auto& c : v.conditions)
      o << "    C [" << (c.holds ? "x" : " ") << "] " << c.label << (c.witness.empty() ? "" : "  -- " + c.witness) << "\n";
  }
  if (r.consistency) {
    o << "\nconsistency " << (r.consistency->ok ? "pass" : "FAIL") << "\n";
    for (const auto& m : r.consistency->mismatches)
      o << "  " << m.theorem << " predicted " << m.predicted << " but alpha = " << m.direct << "\n";
  }
  if (r.basesize) {
    o << "\nbase size\n";
    text_record(o, *r.basesize);
  }
  if (r.timing_seconds) o << "\ntime " << *r.timing_seconds << " s\n";
  return o.str();
}

std::string emit(const SweepReport& r, const std::string& format) {
  if (format == "json") return to_json(r).dump(2) + "\n";
  if (format != "text") throw Error(Errc::invalid_argument, "unknown format " + format);
  std::ostringstream o;
  o << "basetwo " << r.tool_version << "  sweep  seed " << r.seed << "  rows " << r.rows.size() << "\n";
  o << "group                          order      alpha  beta  consistent\n";
  for (const auto& x : r.rows) {
    std::string label = x.group.label;
    label.resize(std::max<std::size_t>(label.size(), 30), ' ');
    std::string order = x.group.order;
    order.resize(std::max<std::size_t>(order.size(), 10), ' ');
    o << label << " " << order << " " << x.alpha << "      " << x.beta << "     " << yes_no(x.consistent) << "\n";
  }
  return o.str();
}

}  // namespace basetwo::cli
