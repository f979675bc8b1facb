#include "basetwo/enumerated.hpp"

#include "basetwo/error.hpp"

#include <algorithm>
#include <array>
#include <limits>

namespace basetwo {

std::size_t ElementSet::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool ElementSet::is_subset_of(const ElementSet& o) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~o.words_[i]) return false;
  return true;
}

bool ElementSet::intersects(const ElementSet& o) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & o.words_[i]) return true;
  return false;
}

ElementSet& ElementSet::operator&=(const ElementSet& o) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

ElementSet& ElementSet::operator|=(const ElementSet& o) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

std::vector<Elem> ElementSet::to_vector() const {
  std::vector<Elem> v;
  for_each([&](Elem e) { v.push_back(e); });
  return v;
}

std::size_t ElementSet::hash() const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (auto w : words_) {
    h ^= w;
    h *= 1099511628211ull;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

bool ElementSet::lex_less(const ElementSet& o) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t d = words_[i] ^ o.words_[i];
    if (d) return (words_[i] >> std::countr_zero(d)) & 1u;
  }
  return false;
}

EnumeratedGroup::EnumeratedGroup(std::shared_ptr<const PermGroup> group, std::uint64_t bound)
    : group_(std::move(group)) {
  if (group_->order() > bound)
    throw Error(Errc::bound_exceeded, "order " + group_->order().str() +
                                          " exceeds enumeration bound " + std::to_string(bound));
  if (group_->order() > std::numeric_limits<Elem>::max())
    throw Error(Errc::bound_exceeded, "order exceeds 32-bit element indices");
  base_ = group_->base();
  const auto& chain = group_->chain();
  const std::size_t m = chain.size();
  stride_.assign(m, 1);
  for (std::size_t i = m; i-- > 1;) stride_[i - 1] = stride_[i] * chain[i].orbit.size();

  perms_ = group_->elements(bound);
  const std::size_t n = perms_.size();

  inverse_.resize(n);
  orders_.resize(n);
  for (Elem i = 0; i < n; ++i) {
    inverse_[i] = index_of(perms_[i].inverse());
    orders_[i] = static_cast<std::uint32_t>(perms_[i].order());
  }
  for (const auto& g : group_->generators()) gens_.push_back(index_of(g));

  class_of_.assign(n, std::numeric_limits<std::uint32_t>::max());
  for (Elem i = 0; i < n; ++i) {
    if (class_of_[i] != std::numeric_limits<std::uint32_t>::max()) continue;
    auto c = static_cast<std::uint32_t>(class_reps_.size());
    class_reps_.push_back(i);
    std::vector<Elem> members{i};
    class_of_[i] = c;
    for (std::size_t k = 0; k < members.size(); ++k)
      for (Elem s : gens_) {
        Elem y = conj(members[k], s);
        if (class_of_[y] == c) continue;
        class_of_[y] = c;
        members.push_back(y);
      }
    std::sort(members.begin(), members.end());
    class_members_.push_back(std::move(members));
  }
}

Elem EnumeratedGroup::rank_of_images(Point* img) const noexcept {
  const auto& chain = group_->chain();
  const std::size_t m = chain.size();
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < m; ++i) {
    std::int32_t k = chain[i].orbit_pos[img[i]];
    r += static_cast<std::uint64_t>(k) * stride_[i];
    if (k == 0) continue;
    const Permutation& u = chain[i].inverse_transversal[k];
    for (std::size_t j = i + 1; j < m; ++j) img[j] = u(img[j]);
  }
  return static_cast<Elem>(r);
}

std::optional<Elem> EnumeratedGroup::find(const Permutation& g) const {
  if (g.degree() != group_->degree()) return std::nullopt;
  const auto& chain = group_->chain();
  std::array<Point, 32> img{};
  Permutation h = g;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    img[i] = g(base_[i]);
    std::int32_t k = chain[i].orbit_pos[h(base_[i])];
    if (k < 0) return std::nullopt;
    if (k > 0) h = h * chain[i].inverse_transversal[k];
  }
  if (!h.is_identity()) return std::nullopt;
  return rank_of_images(img.data());
}

Elem EnumeratedGroup::index_of(const Permutation& g) const {
  auto r = find(g);
  if (!r) throw Error(Errc::invalid_argument, g.to_string() + " is not a group element");
  return *r;
}

Elem EnumeratedGroup::mul(Elem a, Elem b) const noexcept {
  std::array<Point, 32> img;
  const Permutation& pa = perms_[a];
  const Permutation& pb = perms_[b];
  for (std::size_t i = 0; i < base_.size(); ++i) img[i] = pb(pa(base_[i]));
  return rank_of_images(img.data());
}

Elem EnumeratedGroup::power(Elem a, std::int64_t k) const noexcept {
  std::int64_t o = orders_[a];
  k %= o;
  if (k < 0) k += o;
  Elem r = 0;
  Elem base = a;
  while (k) {
    if (k & 1) r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

Subgroup EnumeratedGroup::trivial() const {
  Subgroup s{ElementSet(size()), {}, 1};
  s.elements.set(0);
  return s;
}

Subgroup EnumeratedGroup::whole() const {
  Subgroup s{ElementSet(size()), gens_, size()};
  for (Elem i = 0; i < size(); ++i) s.elements.set(i);
  return s;
}

std::optional<Subgroup> EnumeratedGroup::extend(const Subgroup& h, Elem x,
                                                std::uint64_t cap) const {
  if (h.contains(x)) return h;
  // Coset enumeration (Dimino): the result is a union of right cosets Hr.
  Subgroup r = h;
  r.generators.push_back(x);
  std::vector<Elem> hs = h.elements.to_vector();
  std::vector<Elem> reps{0};
  auto add_coset = [&](Elem rep) {
    for (Elem e : hs) r.elements.set(mul(e, rep));
    r.order += hs.size();
    reps.push_back(rep);
  };
  add_coset(x);
  if (r.order > cap) return std::nullopt;
  for (std::size_t k = 1; k < reps.size(); ++k)
    for (Elem s : r.generators) {
      Elem y = mul(reps[k], s);
      if (r.elements.test(y)) continue;
      add_coset(y);
      if (r.order > cap) return std::nullopt;
    }
  return r;
}

Subgroup EnumeratedGroup::generate(const std::vector<Elem>& gens) const {
  Subgroup s = trivial();
  for (Elem g : gens)
    if (!s.contains(g)) s = *extend(s, g);
  return s;
}

Subgroup EnumeratedGroup::join(const Subgroup& a, const Subgroup& b) const {
  Subgroup s = a;
  for (Elem g : b.generators)
    if (!s.contains(g)) s = *extend(s, g);
  return s;
}

Subgroup EnumeratedGroup::from_set(const ElementSet& set) const {
  Subgroup s = trivial();
  const std::uint64_t target = set.count();
  set.for_each([&](Elem e) {
    if (s.order < target && !s.contains(e)) s = *extend(s, e);
  });
  if (s.order != target) throw Error(Errc::integrity, "element set is not a subgroup");
  return s;
}

ElementSet EnumeratedGroup::conjugate_set(const ElementSet& set, Elem g) const {
  ElementSet out(size());
  Elem gi = inverse_[g];
  set.for_each([&](Elem e) { out.set(mul(mul(gi, e), g)); });
  return out;
}

Subgroup EnumeratedGroup::conjugate(const Subgroup& h, Elem g) const {
  Subgroup r{conjugate_set(h.elements, g), {}, h.order};
  for (Elem x : h.generators) r.generators.push_back(conj(x, g));
  return r;
}

bool EnumeratedGroup::normalizes(const Subgroup& h, Elem g) const {
  return std::all_of(h.generators.begin(), h.generators.end(),
                     [&](Elem x) { return h.contains(conj(x, g)); });
}

bool EnumeratedGroup::is_normal(const Subgroup& h) const {
  return std::all_of(gens_.begin(), gens_.end(), [&](Elem g) { return normalizes(h, g); });
}

Subgroup EnumeratedGroup::normal_closure(const std::vector<Elem>& seeds,
                                         const Subgroup& within) const {
  Subgroup s = generate(seeds);
  for (std::size_t k = 0; k < s.generators.size(); ++k)
    for (Elem g : within.generators) {
      Elem c = conj(s.generators[k], g);
      if (!s.contains(c)) s = *extend(s, c);
    }
  return s;
}

Subgroup EnumeratedGroup::normalizer(const Subgroup& h) const {
  ElementSet n(size());
  for (Elem g = 0; g < size(); ++g)
    if (normalizes(h, g)) n.set(g);
  return from_set(n);
}

Subgroup EnumeratedGroup::centralizer(const Subgroup& h) const {
  ElementSet c(size());
  for (Elem g = 0; g < size(); ++g) {
    bool ok = std::all_of(h.generators.begin(), h.generators.end(),
                          [&](Elem x) { return mul(x, g) == mul(g, x); });
    if (ok) c.set(g);
  }
  return from_set(c);
}

Subgroup EnumeratedGroup::core(const Subgroup& h) const {
  ElementSet c(size());
  for (std::size_t k = 0; k < class_count(); ++k) {
    const auto& mem = class_members_[k];
    if (std::all_of(mem.begin(), mem.end(), [&](Elem e) { return h.contains(e); }))
      for (Elem e : mem) c.set(e);
  }
  return from_set(c);
}

Subgroup EnumeratedGroup::derived(const Subgroup& h) const {
  std::vector<Elem> seeds;
  for (std::size_t i = 0; i < h.generators.size(); ++i)
    for (std::size_t j = i + 1; j < h.generators.size(); ++j) {
      Elem c = commutator(h.generators[i], h.generators[j]);
      if (c != 0) seeds.push_back(c);
    }
  return normal_closure(seeds, h);
}

bool EnumeratedGroup::is_abelian(const Subgroup& h) const {
  for (std::size_t i = 0; i < h.generators.size(); ++i)
    for (std::size_t j = i + 1; j < h.generators.size(); ++j)
      if (mul(h.generators[i], h.generators[j]) != mul(h.generators[j], h.generators[i]))
        return false;
  return true;
}

Subgroup EnumeratedGroup::from_handle(const SubgroupHandle& h) const {
  std::vector<Elem> gens;
  for (const auto& g : h.generators()) gens.push_back(index_of(g));
  return generate(gens);
}

SubgroupHandle EnumeratedGroup::to_handle(const Subgroup& h) const {
  std::vector<Permutation> gens;
  for (Elem e : h.generators) gens.push_back(perms_[e]);
  return SubgroupHandle(group_, std::move(gens));
}

}  // namespace basetwo
