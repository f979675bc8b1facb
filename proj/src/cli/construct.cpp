#include "basetwo/cli/construct.hpp"

#include "basetwo/cli/finite_field.hpp"
#include "basetwo/error.hpp"

#include <fstream>
#include <numeric>

namespace basetwo::cli {

using nlohmann::json;

namespace {

constexpr std::uint64_t sz8_pin = 0x1dbc5dfe5faa54eaULL;

[[noreturn]] void bad(const std::string& what) { throw Error(Errc::invalid_argument, what); }

bool is_natural(const json& x) { return x.is_number_unsigned() || (x.is_number_integer() && x.get<std::int64_t>() >= 0); }

std::uint64_t get_uint(const json& j, const char* key, std::uint64_t lo, std::uint64_t hi) {
  if (!j.contains(key) || !is_natural(j.at(key))) bad(std::string("missing or non-integer field '") + key + "'");
  const auto v = j.at(key).get<std::uint64_t>();
  if (v < lo || v > hi)
    bad(std::string("field '") + key + "' = " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " +
        std::to_string(hi) + "]");
  return v;
}

bool is_prime32(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Permutation parse_perm(std::size_t degree, const json& g) {
  if (g.is_string()) return parse_cycles(degree, g.get<std::string>());
  if (!g.is_array()) bad("a permutation is a cycle list or a cycle string");
  std::vector<std::vector<Point>> cycles;
  for (const auto& c : g) {
    if (!c.is_array()) bad("cycles are arrays of points");
    std::vector<Point> cyc;
    for (const auto& x : c) {
      if (!is_natural(x) || x.get<std::uint64_t>() >= degree) bad("cycle point out of range");
      cyc.push_back(x.get<Point>());
    }
    cycles.push_back(std::move(cyc));
  }
  return Permutation::from_cycles(degree, cycles);
}

Matrix parse_matrix(const json& m, std::uint32_t p, unsigned d) {
  if (!m.is_array() || m.size() != d) bad("matrix must have " + std::to_string(d) + " rows");
  Matrix out;
  for (const auto& row : m) {
    if (!row.is_array() || row.size() != d) bad("matrix rows must have " + std::to_string(d) + " entries");
    std::vector<std::uint32_t> r;
    for (const auto& x : row) {
      if (!x.is_number_integer()) bad("matrix entries are integers");
      const auto v = x.get<std::int64_t>();
      r.push_back(static_cast<std::uint32_t>(((v % p) + p) % p));
    }
    out.push_back(std::move(r));
  }
  if (determinant(out, p) == 0) bad("matrix is not invertible mod " + std::to_string(p));
  return out;
}

struct Module {
  std::uint32_t p;
  unsigned d;
  std::uint32_t size;
};

Matrix module_matrix(const json& m, const Module& mod) {
  if (m.is_string()) {
    if (m == "singer") return singer_matrix(mod.p, mod.d);
    if (m == "identity") return identity_matrix(mod.d);
    bad("unknown matrix keyword " + m.get<std::string>());
  }
  return parse_matrix(m, mod.p, mod.d);
}

// Modules are laid out one after another; a vector is its base-p number.
std::shared_ptr<const PermGroup> build_linear(const std::vector<Module>& mods,
                                              const std::vector<std::vector<Matrix>>& gens) {
  std::size_t degree = 0;
  std::vector<std::size_t> offset;
  for (const auto& m : mods) {
    offset.push_back(degree);
    degree += m.size;
  }
  auto decode = [](std::uint32_t x, const Module& m) {
    std::vector<std::uint32_t> v(m.d);
    for (unsigned i = 0; i < m.d; ++i, x /= m.p) v[i] = x % m.p;
    return v;
  };
  auto encode = [](const std::vector<std::uint32_t>& v, const Module& m) {
    std::uint32_t x = 0;
    for (unsigned i = m.d; i-- > 0;) x = x * m.p + v[i];
    return x;
  };
  std::vector<Permutation> perms;
  for (std::size_t k = 0; k < mods.size(); ++k) {
    const auto& m = mods[k];
    for (unsigned b = 0; b < m.d; ++b) {
      std::vector<Point> img(degree);
      std::iota(img.begin(), img.end(), Point{0});
      for (std::uint32_t x = 0; x < m.size; ++x) {
        auto v = decode(x, m);
        v[b] = (v[b] + 1) % m.p;
        img[offset[k] + x] = static_cast<Point>(offset[k] + encode(v, m));
      }
      perms.emplace_back(std::move(img));
    }
  }
  for (const auto& g : gens) {
    std::vector<Point> img(degree);
    for (std::size_t k = 0; k < mods.size(); ++k) {
      const auto& m = mods[k];
      for (std::uint32_t x = 0; x < m.size; ++x) {
        auto v = decode(x, m);
        std::vector<std::uint32_t> w(m.d, 0);
        for (unsigned i = 0; i < m.d; ++i)
          for (unsigned j = 0; j < m.d; ++j) w[i] = (w[i] + g[k][i][j] * v[j]) % m.p;
        img[offset[k] + x] = static_cast<Point>(offset[k] + encode(w, m));
      }
    }
    perms.emplace_back(std::move(img));
  }
  return std::make_shared<const PermGroup>(degree, std::move(perms));
}

Module parse_module(const json& j) {
  Module m;
  m.p = static_cast<std::uint32_t>(get_uint(j, "p", 2, 1000));
  if (!is_prime32(m.p)) bad("module characteristic " + std::to_string(m.p) + " is not prime");
  m.d = static_cast<unsigned>(get_uint(j, "d", 1, 12));
  std::uint64_t size = 1;
  for (unsigned i = 0; i < m.d; ++i) size *= m.p;
  if (size > 10000) bad("module of size " + std::to_string(size) + " is too large");
  m.size = static_cast<std::uint32_t>(size);
  return m;
}

// Rewrites an affine document as a single-module semidirect-linear one.
std::pair<std::vector<Module>, std::vector<std::vector<Matrix>>> linear_data(const json& j) {
  std::vector<Module> mods;
  std::vector<std::vector<Matrix>> gens;
  if (j.at("kind") == "affine") {
    mods.push_back(parse_module(j));
    if (j.contains("matrices")) {
      if (!j.at("matrices").is_array()) bad("'matrices' must be an array");
      for (const auto& m : j.at("matrices")) gens.push_back({module_matrix(m, mods[0])});
    }
    if (j.value("singer", false)) gens.push_back({singer_matrix(mods[0].p, mods[0].d)});
    return {mods, gens};
  }
  if (!j.contains("modules") || !j.at("modules").is_array() || j.at("modules").empty())
    bad("'modules' must be a nonempty array");
  for (const auto& m : j.at("modules")) mods.push_back(parse_module(m));
  if (!j.contains("generators") || !j.at("generators").is_array()) bad("'generators' must be an array");
  for (const auto& g : j.at("generators")) {
    if (!g.is_array() || g.size() != mods.size()) bad("each generator lists one matrix per module");
    std::vector<Matrix> tuple;
    for (std::size_t k = 0; k < mods.size(); ++k) tuple.push_back(module_matrix(g[k], mods[k]));
    gens.push_back(std::move(tuple));
  }
  return {mods, gens};
}

std::shared_ptr<const PermGroup> psl2(std::uint32_t q) {
  GaloisField f(q);
  const std::size_t n = q + 1;  // points 0..q-1 are field elements, q is infinity
  const std::uint32_t inf = q;
  const std::uint32_t w2 = f.mul(f.primitive(), f.primitive());
  std::vector<Point> t(n), m(n), s(n);
  for (std::uint32_t x = 0; x < q; ++x) {
    t[x] = f.add(x, 1);
    m[x] = f.mul(w2, x);
    s[x] = x == 0 ? inf : f.neg(f.inv(x));
  }
  t[inf] = m[inf] = inf;
  s[inf] = 0;
  return std::make_shared<const PermGroup>(n, std::vector<Permutation>{Permutation(t), Permutation(m), Permutation(s)});
}

std::shared_ptr<const PermGroup> named(const json& j) {
  const std::string fam = j.at("family");
  auto perm_from = [](std::size_t n, std::vector<std::vector<Point>> cycles) {
    return Permutation::from_cycles(n, cycles);
  };
  if (fam == "sym" || fam == "alt" || fam == "cyclic" || fam == "dihedral") {
    const std::size_t n = get_uint(j, "n", fam == "dihedral" ? 3 : 1, 1000);
    std::vector<Point> all(n);
    std::iota(all.begin(), all.end(), Point{0});
    std::vector<Permutation> gens;
    if (fam == "cyclic") {
      gens.push_back(perm_from(n, {all}));
    } else if (fam == "dihedral") {
      gens.push_back(perm_from(n, {all}));
      std::vector<std::vector<Point>> refl;
      for (std::size_t i = 1; i < n - i; ++i) refl.push_back({Point(i), Point(n - i)});
      gens.push_back(perm_from(n, refl));
    } else if (fam == "sym") {
      if (n >= 2) gens = {perm_from(n, {all}), perm_from(n, {{0, 1}})};
    } else if (n >= 3) {
      for (std::size_t i = 2; i < n; ++i) gens.push_back(perm_from(n, {{0, 1, Point(i)}}));
    }
    return std::make_shared<const PermGroup>(n, std::move(gens));
  }
  if (fam == "psl2") {
    const auto q = static_cast<std::uint32_t>(get_uint(j, "q", 2, 81));
    if (!prime_power(q)) bad("psl2 needs a prime power q");
    return psl2(q);
  }
  if (fam == "sz") {
    get_uint(j, "q", 8, 8);
    return load_sz8(j.contains("path") ? j.at("path").get<std::string>() : default_sz8_path());
  }
  bad("unknown family '" + fam + "'");
}

std::shared_ptr<const PermGroup> direct_product(const std::vector<std::shared_ptr<const PermGroup>>& fs) {
  std::size_t degree = 0;
  for (const auto& f : fs) degree += f->degree();
  std::vector<Permutation> gens;
  std::size_t off = 0;
  for (const auto& f : fs) {
    for (const auto& g : f->generators()) {
      std::vector<Point> img(degree);
      std::iota(img.begin(), img.end(), Point{0});
      for (std::size_t i = 0; i < f->degree(); ++i) img[off + i] = static_cast<Point>(off + g(static_cast<Point>(i)));
      gens.emplace_back(std::move(img));
    }
    off += f->degree();
  }
  return std::make_shared<const PermGroup>(degree, std::move(gens));
}

void validate(const json& j);

std::shared_ptr<const PermGroup> build(const json& j) {
  const std::string kind = j.at("kind");
  if (kind == "perm-generators") {
    const std::size_t n = get_uint(j, "degree", 1, 10000);
    std::vector<Permutation> gens;
    for (const auto& g : j.at("generators")) gens.push_back(parse_perm(n, g));
    return std::make_shared<const PermGroup>(n, std::move(gens));
  }
  if (kind == "named") return named(j);
  if (kind == "affine" || kind == "semidirect-linear") {
    auto [mods, gens] = linear_data(j);
    return build_linear(mods, gens);
  }
  if (kind == "direct-product") {
    std::vector<std::shared_ptr<const PermGroup>> fs;
    for (const auto& f : j.at("factors")) fs.push_back(build(f));
    return direct_product(fs);
  }
  bad("unknown kind '" + kind + "'");
}

void validate(const json& j) {
  if (!j.is_object()) bad("a group spec is a JSON object");
  if (!j.contains("kind") || !j.at("kind").is_string()) bad("missing 'kind'");
  if (j.contains("name") && !j.at("name").is_string()) bad("'name' must be a string");
  const std::string kind = j.at("kind");
  if (kind == "perm-generators") {
    const std::size_t n = get_uint(j, "degree", 1, 10000);
    if (!j.contains("generators") || !j.at("generators").is_array()) bad("'generators' must be an array");
    for (const auto& g : j.at("generators")) parse_perm(n, g);
  } else if (kind == "named") {
    if (!j.contains("family") || !j.at("family").is_string()) bad("missing 'family'");
    const std::string fam = j.at("family");
    if (fam == "psl2") {
      const auto q = get_uint(j, "q", 2, 81);
      if (!prime_power(static_cast<std::uint32_t>(q))) bad("psl2 needs a prime power q");
    } else if (fam == "sz") {
      get_uint(j, "q", 8, 8);
    } else if (fam == "sym" || fam == "alt" || fam == "cyclic") {
      get_uint(j, "n", 1, 1000);
    } else if (fam == "dihedral") {
      get_uint(j, "n", 3, 1000);
    } else {
      bad("unknown family '" + fam + "'");
    }
  } else if (kind == "affine" || kind == "semidirect-linear") {
    linear_data(j);
  } else if (kind == "direct-product") {
    if (!j.contains("factors") || !j.at("factors").is_array() || j.at("factors").empty())
      bad("'factors' must be a nonempty array");
    for (const auto& f : j.at("factors")) validate(f);
  } else {
    bad("unknown kind '" + kind + "'");
  }
}

}  // namespace

GroupSpec GroupSpec::parse(const json& doc) {
  if (!doc.is_object() || !doc.contains("version")) bad("group spec needs a 'version' field");
  if (doc.at("version") != spec_version) bad("unsupported spec version " + doc.at("version").dump());
  validate(doc);
  GroupSpec s;
  s.doc_ = doc;
  return s;
}

std::string GroupSpec::label() const {
  if (doc_.contains("name")) return doc_.at("name");
  const std::string k = kind();
  if (k == "named") {
    const std::string fam = doc_.at("family");
    return fam + "(" + (doc_.contains("n") ? doc_.at("n").dump() : doc_.at("q").dump()) + ")";
  }
  if (k == "affine") return "affine(p=" + doc_.at("p").dump() + ", d=" + doc_.at("d").dump() + ")";
  return k;
}

GroupSpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(Errc::invalid_argument, path + ": " + e.what());
  }
  return GroupSpec::parse(j);
}

std::shared_ptr<const PermGroup> construct(const GroupSpec& spec) { return build(spec.doc()); }

namespace {

std::optional<BigInt> closed_form(const json& j) {
  const std::string kind = j.at("kind");
  if (kind == "named") {
    const std::string fam = j.at("family");
    if (fam == "sz") return BigInt(29120);
    if (fam == "psl2") {
      const BigInt q = j.at("q").get<std::uint64_t>();
      return q * (q * q - 1) / (q % 2 == 1 ? 2 : 1);
    }
    const std::uint64_t n = j.at("n").get<std::uint64_t>();
    BigInt fact = 1;
    for (std::uint64_t i = 2; i <= n; ++i) fact *= i;
    if (fam == "sym") return fact;
    if (fam == "alt") return n >= 2 ? BigInt(fact / 2) : BigInt(1);
    if (fam == "cyclic") return BigInt(n);
    if (fam == "dihedral") return BigInt(2 * n);
  }
  if (kind == "affine" && j.value("singer", false) && (!j.contains("matrices") || j.at("matrices").empty())) {
    const std::uint64_t p = j.at("p"), d = j.at("d");
    BigInt pd = 1;
    for (std::uint64_t i = 0; i < d; ++i) pd *= p;
    return pd * ((pd - 1) / (p - 1));
  }
  if (kind == "direct-product") {
    BigInt r = 1;
    for (const auto& f : j.at("factors")) {
      auto o = closed_form(f);
      if (!o) return std::nullopt;
      r *= *o;
    }
    return r;
  }
  return std::nullopt;
}

}  // namespace

std::optional<BigInt> closed_form_order(const GroupSpec& spec) { return closed_form(spec.doc()); }

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string canonical_generators(const PermGroup& g) {
  std::string s = std::to_string(g.degree()) + ":";
  for (const auto& x : g.generators()) {
    for (Point i : x.images()) s += std::to_string(i) + ",";
    s += ";";
  }
  return s;
}

std::string default_sz8_path() { return std::string(BASETWO_DATA_DIR) + "/sz8_degree65.json"; }

std::shared_ptr<const PermGroup> load_sz8(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io, "cannot open " + path);
  json j;
  in >> j;
  const std::size_t n = j.at("degree");
  std::vector<Permutation> gens;
  for (const auto& g : j.at("generators")) gens.emplace_back(g.get<std::vector<Point>>());
  for (const auto& g : gens)
    if (g.degree() != n) throw Error(Errc::integrity, "Sz(8) generator of wrong degree");
  auto grp = std::make_shared<const PermGroup>(n, std::move(gens));
  if (fnv1a(canonical_generators(*grp)) != sz8_pin)
    throw Error(Errc::integrity, "Sz(8) generator file does not match the pinned checksum");
  if (grp->order() != 29120) throw Error(Errc::integrity, "Sz(8) generators give order " + to_string(grp->order()));
  return grp;
}

}  // namespace basetwo::cli
