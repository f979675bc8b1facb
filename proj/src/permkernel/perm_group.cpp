#include "basetwo/perm_group.hpp"

#include "basetwo/error.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace basetwo {

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators,
                     std::span<const Point> base_prefix)
    : degree_(degree) {
  if (degree == 0) throw Error(Errc::invalid_argument, "group of degree 0");
  for (auto& g : generators) {
    if (g.degree() != degree)
      throw Error(Errc::degree_mismatch, "generator of degree " + std::to_string(g.degree()) +
                                             " in group of degree " + std::to_string(degree));
    if (!g.is_identity()) generators_.push_back(std::move(g));
  }
  for (Point b : base_prefix)
    if (b >= degree) throw Error(Errc::invalid_argument, "base point out of range");
  build(base_prefix);
}

void PermGroup::compute_orbit(ChainLevel& level) const {
  level.orbit.assign(1, level.base_point);
  level.orbit_pos.assign(degree_, -1);
  level.orbit_pos[level.base_point] = 0;
  level.transversal.assign(1, Permutation(degree_));
  level.inverse_transversal.assign(1, Permutation(degree_));
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    Point x = level.orbit[k];
    for (const auto& s : level.generators) {
      Point y = s(x);
      if (level.orbit_pos[y] >= 0) continue;
      level.orbit_pos[y] = static_cast<std::int32_t>(level.orbit.size());
      level.orbit.push_back(y);
      Permutation t = level.transversal[k] * s;
      level.inverse_transversal.push_back(t.inverse());
      level.transversal.push_back(std::move(t));
    }
  }
}

namespace {

bool fixes_all(const Permutation& g, const std::vector<ChainLevel>& chain, std::size_t upto) {
  for (std::size_t i = 0; i < upto; ++i)
    if (g(chain[i].base_point) != chain[i].base_point) return false;
  return true;
}

}  // namespace

void PermGroup::build(std::span<const Point> base_prefix) {
  chain_.clear();
  std::vector<Point> base(base_prefix.begin(), base_prefix.end());
  for (const auto& g : generators_) {
    bool moves = std::any_of(base.begin(), base.end(), [&](Point b) { return g(b) != b; });
    if (!moves) base.push_back(g.smallest_moved_point());
  }
  for (Point b : base) {
    ChainLevel lvl;
    lvl.base_point = b;
    chain_.push_back(std::move(lvl));
  }
  for (std::size_t i = 0; i < chain_.size(); ++i) {
    for (const auto& g : generators_)
      if (fixes_all(g, chain_, i)) chain_[i].generators.push_back(g);
    compute_orbit(chain_[i]);
  }

  // Holt's deterministic variant: verify Schreier generators level by level
  // from the bottom, restarting at the level that grew.
  std::size_t i = chain_.size();
  while (i > 0) {
    std::size_t lvl = i - 1;
    bool grew = false;
    for (std::size_t k = 0; k < chain_[lvl].orbit.size() && !grew; ++k) {
      for (std::size_t s = 0; s < chain_[lvl].generators.size(); ++s) {
        const ChainLevel& L = chain_[lvl];
        Point target = L.generators[s](L.orbit[k]);
        Permutation y = L.transversal[k] * L.generators[s];
        if (y == L.transversal[L.orbit_pos[target]]) continue;
        Permutation h = y * L.inverse_transversal[L.orbit_pos[target]];
        auto [res, j] = sift(h, lvl + 1);
        if (j == chain_.size() && res.is_identity()) continue;
        if (j == chain_.size()) {
          ChainLevel nl;
          nl.base_point = res.smallest_moved_point();
          chain_.push_back(std::move(nl));
        }
        for (std::size_t l = lvl + 1; l <= j; ++l) {
          chain_[l].generators.push_back(res);
          compute_orbit(chain_[l]);
        }
        i = j + 1;
        grew = true;
        break;
      }
    }
    if (!grew) --i;
  }

  order_ = 1;
  for (const auto& lvl : chain_) order_ *= lvl.orbit.size();
}

std::vector<Point> PermGroup::base() const {
  std::vector<Point> b;
  b.reserve(chain_.size());
  for (const auto& l : chain_) b.push_back(l.base_point);
  return b;
}

PermGroup::SiftResult PermGroup::sift(const Permutation& g, std::size_t start_level) const {
  if (g.degree() != degree_) throw Error(Errc::degree_mismatch, "sift");
  Permutation h = g;
  for (std::size_t l = start_level; l < chain_.size(); ++l) {
    const ChainLevel& L = chain_[l];
    std::int32_t pos = L.orbit_pos[h(L.base_point)];
    if (pos < 0) return {std::move(h), l};
    if (pos > 0) h = h * L.inverse_transversal[pos];
  }
  return {std::move(h), chain_.size()};
}

bool PermGroup::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  auto r = sift(g);
  return r.level == chain_.size() && r.residue.is_identity();
}

std::vector<Point> PermGroup::orbit(Point x) const {
  std::vector<Point> orb{x};
  std::vector<bool> seen(degree_, false);
  seen[x] = true;
  for (std::size_t k = 0; k < orb.size(); ++k)
    for (const auto& s : generators_) {
      Point y = s(orb[k]);
      if (!seen[y]) {
        seen[y] = true;
        orb.push_back(y);
      }
    }
  return orb;
}

void PermGroup::for_each_element(const std::function<bool(const Permutation&)>& fn) const {
  const std::size_t m = chain_.size();
  if (m == 0) {
    fn(Permutation(degree_));
    return;
  }
  std::vector<Permutation> partial(m);
  std::vector<std::size_t> idx(m, 0);
  // Depth-first with level 0 outermost; partial[i] = u^(i) * partial[i-1].
  std::size_t depth = 0;
  for (;;) {
    const ChainLevel& L = chain_[depth];
    partial[depth] = depth == 0 ? L.transversal[idx[0]]
                                : L.transversal[idx[depth]] * partial[depth - 1];
    if (depth + 1 < m) {
      ++depth;
      idx[depth] = 0;
      continue;
    }
    if (!fn(partial[depth])) return;
    // advance
    for (;;) {
      if (++idx[depth] < chain_[depth].orbit.size()) break;
      if (depth == 0) return;
      --depth;
    }
  }
}

std::vector<Permutation> PermGroup::elements(std::uint64_t bound) const {
  if (order_ > bound)
    throw Error(Errc::bound_exceeded, "group of order " + order_.str() +
                                          " exceeds element bound " + std::to_string(bound));
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(order_));
  for_each_element([&](const Permutation& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

SubgroupHandle::SubgroupHandle(std::shared_ptr<const PermGroup> parent,
                               std::vector<Permutation> generators)
    : parent_(std::move(parent)),
      group_(parent_ ? parent_->degree() : 1, std::move(generators)) {
  if (!parent_) throw Error(Errc::invalid_argument, "subgroup without parent");
  for (const auto& g : group_.generators())
    if (!parent_->contains(g))
      throw Error(Errc::invalid_argument, "generator " + g.to_string() + " not in parent");
  if (parent_->order() % group_.order() != 0)
    throw Error(Errc::integrity, "subgroup order does not divide parent order");
}

bool SubgroupHandle::same_parent(const SubgroupHandle& other) const noexcept {
  if (parent_ == other.parent_) return true;
  return parent_->degree() == other.parent_->degree() &&
         parent_->generators() == other.parent_->generators();
}

bool SubgroupHandle::equals(const SubgroupHandle& other) const {
  if (!same_parent(other)) throw Error(Errc::parent_mismatch, "equals");
  if (order() != other.order()) return false;
  return std::all_of(other.generators().begin(), other.generators().end(),
                     [&](const Permutation& g) { return contains(g); });
}

SubgroupHandle whole_group(const std::shared_ptr<const PermGroup>& g) {
  return SubgroupHandle(g, g->generators());
}

SubgroupHandle trivial_subgroup(const std::shared_ptr<const PermGroup>& g) {
  return SubgroupHandle(g, {});
}

std::vector<ConjugacyClass> conjugacy_classes(const PermGroup& g, const KernelOptions& opts) {
  auto elems = g.elements(opts.element_bound);
  std::unordered_map<Permutation, std::size_t, PermutationHash> index;
  index.reserve(elems.size() * 2);
  for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], i);
  std::vector<bool> seen(elems.size(), false);
  std::vector<ConjugacyClass> out;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (seen[i]) continue;
    seen[i] = true;
    std::vector<std::size_t> queue{i};
    for (std::size_t k = 0; k < queue.size(); ++k)
      for (const auto& s : g.generators()) {
        std::size_t j = index.at(conjugate(elems[queue[k]], s));
        if (!seen[j]) {
          seen[j] = true;
          queue.push_back(j);
        }
      }
    out.push_back({elems[i], queue.size()});
  }
  return out;
}

PermGroup group_from_elements(std::size_t degree, std::span<const Permutation> elements) {
  std::vector<Permutation> gens;
  PermGroup cur(degree, {});
  for (const auto& e : elements) {
    if (cur.contains(e)) continue;
    gens.push_back(e);
    cur = PermGroup(degree, gens);
  }
  return cur;
}

namespace {

// Depth-first search over A's elements via its transversals, pruning with
// the chain of B taken over A's base.
std::vector<Permutation> backtrack_intersection(const PermGroup& a, const PermGroup& b_in) {
  const std::size_t n = a.degree();
  PermGroup b(n, b_in.generators(), a.base());
  const auto& ca = a.chain();
  const auto& cb = b.chain();
  const std::size_t m = ca.size();
  std::vector<Permutation> gens;
  PermGroup found(n, {});
  if (m == 0) return gens;

  std::vector<Permutation> partial(m);
  std::vector<Permutation> w(m + 1, Permutation(n));
  std::vector<std::size_t> idx(m, 0);

  std::function<void(std::size_t)> dfs = [&](std::size_t depth) {
    for (idx[depth] = 0; idx[depth] < ca[depth].orbit.size(); ++idx[depth]) {
      partial[depth] = depth == 0 ? ca[0].transversal[idx[0]]
                                  : ca[depth].transversal[idx[depth]] * partial[depth - 1];
      Point x = partial[depth](ca[depth].base_point);
      Point y = w[depth](x);
      std::int32_t pos = cb[depth].orbit_pos[y];
      if (pos < 0) continue;
      w[depth + 1] = w[depth] * cb[depth].inverse_transversal[pos];
      if (depth + 1 < m) {
        dfs(depth + 1);
      } else {
        const Permutation& g = partial[depth];
        if (!g.is_identity() && b.contains(g) && !found.contains(g)) {
          gens.push_back(g);
          found = PermGroup(n, gens);
        }
      }
    }
  };
  dfs(0);
  return gens;
}

}  // namespace

SubgroupHandle intersection(const SubgroupHandle& a, const SubgroupHandle& b,
                            const KernelOptions& opts) {
  if (!a.same_parent(b)) throw Error(Errc::parent_mismatch, "intersection");
  const SubgroupHandle& small = a.order() <= b.order() ? a : b;
  const SubgroupHandle& large = a.order() <= b.order() ? b : a;
  const std::size_t n = a.parent().degree();
  if (small.order() <= opts.filter_threshold) {
    std::vector<Permutation> keep;
    small.group().for_each_element([&](const Permutation& g) {
      if (large.contains(g)) keep.push_back(g);
      return true;
    });
    PermGroup r = group_from_elements(n, keep);
    return SubgroupHandle(a.parent_ptr(), r.generators());
  }
  return SubgroupHandle(a.parent_ptr(), backtrack_intersection(small.group(), large.group()));
}

SubgroupHandle normal_closure(const SubgroupHandle& s) {
  const std::size_t n = s.parent().degree();
  std::vector<Permutation> gens = s.generators();
  PermGroup cur(n, gens);
  for (std::size_t k = 0; k < gens.size(); ++k)
    for (const auto& g : s.parent().generators()) {
      Permutation c = conjugate(gens[k], g);
      if (cur.contains(c)) continue;
      gens.push_back(std::move(c));
      cur = PermGroup(n, gens);
    }
  return SubgroupHandle(s.parent_ptr(), cur.generators());
}

SubgroupHandle normalizer(const SubgroupHandle& h, const KernelOptions& opts) {
  const PermGroup& g = h.parent();
  const std::size_t n = g.degree();
  auto base_elems = h.group().elements(opts.element_bound);
  std::sort(base_elems.begin(), base_elems.end());

  struct Node {
    std::vector<Permutation> elems;
    Permutation conj;
  };
  std::vector<Node> orbit;
  std::map<std::vector<Permutation>, std::size_t> seen;
  seen.emplace(base_elems, 0);
  orbit.push_back({base_elems, Permutation(n)});

  std::vector<Permutation> ngens = h.generators();
  PermGroup cur(n, ngens);
  auto add = [&](Permutation x) {
    if (x.is_identity() || cur.contains(x)) return;
    ngens.push_back(std::move(x));
    cur = PermGroup(n, ngens);
  };

  for (std::size_t k = 0; k < orbit.size(); ++k)
    for (const auto& s : g.generators()) {
      std::vector<Permutation> img;
      img.reserve(orbit[k].elems.size());
      for (const auto& e : orbit[k].elems) img.push_back(conjugate(e, s));
      std::sort(img.begin(), img.end());
      Permutation t = orbit[k].conj * s;
      auto it = seen.find(img);
      if (it == seen.end()) {
        seen.emplace(img, orbit.size());
        orbit.push_back({std::move(img), std::move(t)});
      } else {
        add(t * orbit[it->second].conj.inverse());
      }
    }

  // Schreier generators above suffice; the order check guards the result.
  if (cur.order() * orbit.size() != g.order())
    throw Error(Errc::integrity, "normalizer order mismatch");
  return SubgroupHandle(h.parent_ptr(), cur.generators());
}

}  // namespace basetwo
