#include "basetwo/cli/commands.hpp"

#include "basetwo/cli/cache.hpp"
#include "basetwo/error.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>

namespace basetwo::cli {

using nlohmann::json;

namespace {

class Stopwatch {
 public:
  explicit Stopwatch(bool on) : on_(on), start_(std::chrono::steady_clock::now()) {}
  std::optional<double> seconds() const {
    if (!on_) return std::nullopt;
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  bool on_;
  std::chrono::steady_clock::time_point start_;
};

Report header(const std::string& command, const GroupSpec& spec, const PermGroup& g, const RunOptions& opts) {
  Report r;
  r.command = command;
  r.seed = opts.seed;
  r.group = group_info(spec, g);
  return r;
}

Lattice lattice_for(const std::shared_ptr<const PermGroup>& g, const RunOptions& opts) {
  LatticeOptions lo;
  lo.bound = opts.bound;
  return obtain_lattice(g, lo, opts.cache_dir).lattice;
}

AlphaOptions alpha_options(const RunOptions& opts) {
  AlphaOptions a;
  a.jobs = opts.jobs;
  return a;
}

}  // namespace

Report analyze(const GroupSpec& spec, const RunOptions& opts) {
  Stopwatch sw(opts.timing);
  auto g = construct(spec);
  Report r = header("analyze", spec, *g, opts);
  Lattice l = lattice_for(g, opts);
  auto prof = profile(l);
  r.profile = summarize(prof);
  auto c = consistency(l, prof, alpha_options(opts));
  r.alpha = summarize(l, c.alpha);
  for (auto& v : c.verdicts)
    if (v.hypotheses_met) r.verdicts.push_back(std::move(v));
  r.consistency = summarize(c);
  r.timing_seconds = sw.seconds();
  return r;
}

Report alpha_command(const GroupSpec& spec, const RunOptions& opts) {
  Stopwatch sw(opts.timing);
  auto g = construct(spec);
  Report r = header("alpha", spec, *g, opts);
  Lattice l = lattice_for(g, opts);
  r.alpha = summarize(l, alpha(l, alpha_options(opts)));
  r.timing_seconds = sw.seconds();
  return r;
}

Report certify_command(const GroupSpec& spec, const RunOptions& opts) {
  Stopwatch sw(opts.timing);
  auto g = construct(spec);
  Report r = header("certify", spec, *g, opts);
  Lattice l = lattice_for(g, opts);
  auto prof = profile(l);
  r.profile = summarize(prof);
  if (opts.theorem &&
      std::find(theorem_ids().begin(), theorem_ids().end(), *opts.theorem) == theorem_ids().end())
    throw Error(Errc::invalid_argument, "unknown theorem id: " + *opts.theorem);
  auto c = consistency(l, prof, alpha_options(opts));
  r.alpha = summarize(l, c.alpha);
  for (auto& v : c.verdicts)
    if (!opts.theorem || v.theorem == *opts.theorem) r.verdicts.push_back(std::move(v));
  ConsistencySummary s;
  for (const auto& v : r.verdicts)
    if (v.hypotheses_met && !v.predicted.admits(c.alpha.alpha))
      s.mismatches.push_back({v.theorem, v.predicted.to_string(), c.alpha.alpha});
  s.ok = s.mismatches.empty();
  r.consistency = s;
  r.timing_seconds = sw.seconds();
  return r;
}

Report basesize_command(const GroupSpec& spec, const SubgroupSelector& sel, const RunOptions& opts) {
  Stopwatch sw(opts.timing);
  auto g = construct(spec);
  Report r = header("basesize", spec, *g, opts);
  if (sel.cls) {
    Lattice l = lattice_for(g, opts);
    if (*sel.cls >= l.classes().size())
      throw Error(Errc::invalid_argument, "class index " + std::to_string(*sel.cls) + " out of range");
    const auto& h = l.classes()[*sel.cls].representative;
    r.basesize = certificate_record(l.group(), h, base_size(l.group(), h), sel.cls);
  } else {
    EnumeratedGroup eg(g, opts.bound);
    std::vector<Elem> gens;
    for (const auto& s : sel.generators) gens.push_back(eg.index_of(parse_cycles(g->degree(), s)));
    Subgroup h = eg.generate(gens);
    r.basesize = certificate_record(eg, h, base_size(eg, h), std::nullopt);
  }
  r.timing_seconds = sw.seconds();
  return r;
}

SweepReport sweep_command(const json& doc, const RunOptions& opts) {
  if (!doc.is_object() || doc.value("version", 0) != spec_version)
    throw Error(Errc::invalid_argument, "sweep document needs \"version\": 1");
  std::vector<json> specs;
  if (doc.contains("specs")) {
    if (!doc.at("specs").is_array()) throw Error(Errc::invalid_argument, "specs must be an array");
    for (const auto& s : doc.at("specs")) specs.push_back(s);
  } else if (doc.contains("base")) {
    specs.push_back(doc.at("base"));
    if (doc.contains("vary"))
      for (const auto& [key, values] : doc.at("vary").items()) {
        if (!values.is_array()) throw Error(Errc::invalid_argument, "vary." + key + " must be an array");
        std::vector<json> next;
        for (const auto& s : specs)
          for (const auto& v : values) {
            json t = s;
            t[key] = v;
            next.push_back(std::move(t));
          }
        specs = std::move(next);
      }
  } else {
    throw Error(Errc::invalid_argument, "sweep document needs \"specs\" or \"base\"");
  }
  SweepReport out;
  out.seed = opts.seed;
  for (auto s : specs) {
    if (!s.contains("version")) s["version"] = spec_version;
    auto spec = GroupSpec::parse(s);
    auto g = construct(spec);
    Lattice l = lattice_for(g, opts);
    auto c = consistency(l, profile(l), alpha_options(opts));
    out.rows.push_back({group_info(spec, *g), c.alpha.alpha, c.alpha.beta, c.ok()});
  }
  return out;
}

namespace {

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io, "cannot open " + path);
  try {
    json j;
    in >> j;
    return j;
  } catch (const json::exception& e) {
    throw Error(Errc::invalid_argument, path + ": " + e.what());
  }
}

int exit_code(Errc c) {
  switch (c) {
    case Errc::bound_exceeded:
    case Errc::lattice_incomplete: return 3;
    case Errc::integrity: return 4;
    default: return 2;
  }
}

}  // namespace

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Base sizes of finite permutation groups on cosets of core-free subgroups"};
  app.require_subcommand(1);
  RunOptions opts;
  std::string cache_dir;
  std::string theorem;
  auto add_common = [&](CLI::App* s) {
    s->add_option("--bound", opts.bound, "largest group order the lattice builder accepts");
    s->add_option("--seed", opts.seed, "recorded in the report");
    s->add_option("--cache-dir", cache_dir, "directory for cached lattices");
    s->add_option("--format", opts.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    s->add_option("--jobs", opts.jobs, "worker threads for base size searches")->check(CLI::PositiveNumber);
    s->add_flag("--timing", opts.timing, "include wall-clock time in the report");
  };
  std::string spec_path;
  auto* an = app.add_subcommand("analyze", "profile, alpha, applicable verdicts and consistency");
  auto* al = app.add_subcommand("alpha", "alpha and beta with witness certificates");
  auto* ce = app.add_subcommand("certify", "certifier verdicts checked against the direct alpha");
  auto* bs = app.add_subcommand("basesize", "base size of one subgroup");
  auto* sw = app.add_subcommand("sweep", "run a grid of group specs");
  auto* st = app.add_subcommand("selftest", "run the built-in example corpus");
  for (auto* s : {an, al, ce, bs, sw, st}) add_common(s);
  for (auto* s : {an, al, ce, bs}) s->add_option("spec", spec_path, "group spec JSON file")->required();
  ce->add_option("--theorem", theorem, "only this certifier");
  std::size_t cls = 0;
  std::vector<std::string> gens;
  auto* cls_opt = bs->add_option("--class", cls, "class index in the lattice");
  auto* gen_opt = bs->add_option("--generator", gens, "subgroup generator in cycle notation (repeatable)");
  cls_opt->excludes(gen_opt);
  std::string sweep_path;
  sw->add_option("grid", sweep_path, "sweep JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }
  if (!cache_dir.empty()) opts.cache_dir = cache_dir;
  if (!theorem.empty()) opts.theorem = theorem;

  try {
    if (st->parsed()) {
      bool ok = true;
      for (const auto& line : selftest(opts)) {
        out << (line.pass ? "PASS " : "FAIL ") << line.name << (line.detail.empty() ? "" : ": " + line.detail) << "\n";
        ok = ok && line.pass;
      }
      return ok ? 0 : 1;
    }
    if (sw->parsed()) {
      auto rep = sweep_command(read_json(sweep_path), opts);
      out << emit(rep, opts.format);
      bool ok = std::all_of(rep.rows.begin(), rep.rows.end(), [](const SweepRow& r) { return r.consistent; });
      return ok ? 0 : 1;
    }
    auto spec = load_spec(spec_path);
    Report rep;
    if (an->parsed()) rep = analyze(spec, opts);
    if (al->parsed()) rep = alpha_command(spec, opts);
    if (ce->parsed()) rep = certify_command(spec, opts);
    if (bs->parsed()) {
      if (cls_opt->count() == 0 && gens.empty()) throw Error(Errc::invalid_argument, "basesize needs --class or --generator");
      SubgroupSelector sel;
      if (cls_opt->count()) sel.cls = cls;
      sel.generators = gens;
      rep = basesize_command(spec, sel, opts);
    }
    out << emit(rep, opts.format);
    return rep.consistency && !rep.consistency->ok ? 1 : 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.code());
  }
}

}  // namespace basetwo::cli
