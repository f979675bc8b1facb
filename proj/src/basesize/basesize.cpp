#include "basetwo/basesize.hpp"

#include "basetwo/error.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>
#include <unordered_map>

namespace basetwo {

ConjugateStream::ConjugateStream(const EnumeratedGroup& g, const Subgroup& h) : g_(g) {
  found_.push_back(h.elements);
  conj_.push_back(g.identity());
  index_.emplace(h.elements.hash(), 0);
}

bool ConjugateStream::next(ElementSet& out, Elem& conjugator) {
  const auto& gens = g_.generator_indices();
  while (emitted_ == found_.size()) {
    if (expand_ == found_.size() || gens.empty()) return false;
    const Elem by = gens[gen_];
    ElementSet c = g_.conjugate_set(found_[expand_], by);
    const Elem k = g_.mul(conj_[expand_], by);
    if (++gen_ == gens.size()) {
      gen_ = 0;
      ++expand_;
    }
    auto [lo, hi] = index_.equal_range(c.hash());
    bool seen = false;
    for (auto it = lo; it != hi && !seen; ++it) seen = found_[it->second] == c;
    if (seen) continue;
    index_.emplace(c.hash(), found_.size());
    found_.push_back(std::move(c));
    conj_.push_back(k);
  }
  out = found_[emitted_];
  conjugator = conj_[emitted_];
  ++emitted_;
  return true;
}

std::optional<Elem> exists_trivial_pair(const EnumeratedGroup& g, const Subgroup& h) {
  if (h.order == 1) return g.identity();
  ConjugateStream cs(g, h);
  ElementSet c;
  Elem k;
  while (cs.next(c, k))
    if ((h.elements & c).count() == 1) return k;
  return std::nullopt;
}

bool lower_bound_check(const EnumeratedGroup& g, const Subgroup& h) {
  return h.order * h.order > g.normal_closure(h).order;
}

BaseCertificate base_size(const EnumeratedGroup& g, const Subgroup& h) {
  if (g.core(h).order != 1) throw Error(Errc::not_core_free, "action not faithful: H has a nontrivial core");
  BaseCertificate cert;
  if (h.order == 1) {
    cert.value = 1;
    return cert;
  }
  if (auto k = exists_trivial_pair(g, h)) {
    cert.value = 2;
    cert.witnesses = {*k};
    return cert;
  }
  cert.lower_bound_reason =
      lower_bound_check(g, h) || h.order * h.order >= g.size() ? "order-bound" : "pairwise-nontrivial";

  std::vector<ElementSet> conj;
  std::vector<Elem> by;
  {
    ConjugateStream cs(g, h);
    ElementSet c;
    Elem k;
    while (cs.next(c, k)) {
      conj.push_back(std::move(c));
      by.push_back(k);
    }
  }
  struct State {
    ElementSet set;
    std::size_t parent;
    Elem conjugator;
  };
  std::vector<State> states{{h.elements, SIZE_MAX, g.identity()}};
  std::unordered_multimap<std::size_t, std::size_t> seen{{h.elements.hash(), 0}};
  std::size_t level_begin = 0;
  for (std::uint32_t level = 2;; ++level) {
    const std::size_t level_end = states.size();
    if (level_begin == level_end) throw Error(Errc::integrity, "base search exhausted without a base");
    for (std::size_t s = level_begin; s < level_end; ++s)
      for (std::size_t i = 0; i < conj.size(); ++i) {
        ElementSet meet = states[s].set & conj[i];
        const std::size_t size = meet.count();
        if (size == states[s].set.count()) continue;
        if (size == 1) {
          cert.value = level;
          cert.witnesses.assign(level - 1, g.identity());
          cert.witnesses[level - 2] = by[i];
          std::size_t at = s;
          for (std::uint32_t pos = level - 2; pos-- > 0; at = states[at].parent)
            cert.witnesses[pos] = states[at].conjugator;
          return cert;
        }
        auto [lo, hi] = seen.equal_range(meet.hash());
        bool dup = false;
        for (auto it = lo; it != hi && !dup; ++it) dup = states[it->second].set == meet;
        if (dup) continue;
        seen.emplace(meet.hash(), states.size());
        states.push_back({std::move(meet), s, by[i]});
      }
    level_begin = level_end;
  }
}

BaseCertificate base_size(const SubgroupHandle& h, std::uint64_t bound) {
  EnumeratedGroup g(h.parent_ptr(), bound);
  return base_size(g, g.from_handle(h));
}

bool replay(const EnumeratedGroup& g, const Subgroup& h, const std::vector<Elem>& witnesses) {
  ElementSet s = h.elements;
  for (Elem w : witnesses) s &= g.conjugate_set(h.elements, w);
  return s.count() == 1;
}

std::vector<std::size_t> beta(const Lattice& l) {
  if (!l.complete()) throw Error(Errc::lattice_incomplete, "beta needs the full lattice");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < l.classes().size(); ++i)
    if (l.classes()[i].large && l.classes()[i].core_free) out.push_back(i);
  return out;
}

AlphaReport alpha(const Lattice& l, const AlphaOptions& opts) {
  if (!l.complete()) throw Error(Errc::lattice_incomplete, "alpha needs the full lattice");
  const auto& g = l.group();
  std::vector<std::size_t> todo;
  for (std::size_t i = 0; i < l.classes().size(); ++i)
    if (l.classes()[i].core_free) todo.push_back(i);

  std::vector<ClassBase> results(todo.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k; (k = next++) < todo.size();)
      results[k] = {todo[k], base_size(g, l.classes()[todo[k]].representative)};
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(opts.jobs, static_cast<unsigned>(todo.size())));
  if (jobs <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    std::exception_ptr err;
    std::mutex m;
    for (unsigned j = 0; j < jobs; ++j)
      pool.emplace_back([&] {
        try {
          work();
        } catch (...) {
          std::lock_guard lock(m);
          if (!err) err = std::current_exception();
        }
      });
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
  }

  AlphaReport r;
  r.per_class = std::move(results);
  for (const auto& cb : r.per_class)
    if (cb.cert.value >= 3) r.witnesses.push_back(cb);
  r.alpha = r.witnesses.size();
  r.beta_classes = beta(l);
  r.beta = r.beta_classes.size();
  return r;
}

}  // namespace basetwo
