#pragma once
// Naive base size on G/H: a Cayley table from raw images and an exhaustive
// search over tuples of coset stabilizers. Shares no code with the library.

#include "oracle.hpp"

#include "basetwo/perm_group.hpp"

#include <algorithm>
#include <map>
#include <span>
#include <vector>

namespace testnaive {

struct Table {
  std::vector<oracle::Img> el;
  std::vector<std::vector<int>> mul;
  std::vector<int> inverse;
  std::map<oracle::Img, int> idx;

  explicit Table(const basetwo::PermGroup& g, std::uint64_t bound = 5000) {
    for (auto& p : g.elements(bound)) {
      idx[{p.images().begin(), p.images().end()}] = static_cast<int>(el.size());
      el.emplace_back(p.images().begin(), p.images().end());
    }
    const int n = static_cast<int>(el.size());
    mul.assign(n, std::vector<int>(n));
    inverse.resize(n);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) mul[a][b] = idx.at(oracle::mul(el[a], el[b]));
      inverse[a] = idx.at(oracle::inv(el[a]));
    }
  }

  int index(std::span<const std::uint32_t> images) const { return idx.at({images.begin(), images.end()}); }

  // x^-1 H x
  std::vector<bool> conj(const std::vector<bool>& h, int x) const {
    std::vector<bool> r(el.size(), false);
    for (std::size_t y = 0; y < el.size(); ++y)
      if (h[y]) r[mul[mul[inverse[x]][y]][x]] = true;
    return r;
  }
};

inline std::vector<bool> meet(const std::vector<bool>& a, const std::vector<bool>& b) {
  std::vector<bool> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] && b[i];
  return r;
}

inline std::size_t count(const std::vector<bool>& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), true)); }

// Smallest number of points of G/H with trivial pointwise stabilizer,
// searched over all tuples containing the coset H itself, up to size 4.
inline unsigned naive_base(const Table& t, const std::vector<bool>& h) {
  const std::size_t n = t.el.size();
  std::vector<std::vector<bool>> stabs;
  std::vector<bool> covered(n, false);
  for (std::size_t x = 0; x < n; ++x) {
    if (covered[x]) continue;
    for (std::size_t y = 0; y < n; ++y)
      if (h[y]) covered[t.mul[y][x]] = true;  // coset Hx
    stabs.push_back(t.conj(h, static_cast<int>(x)));
  }
  auto trivial = [&](const std::vector<bool>& s) { return count(s) == 1; };
  if (trivial(stabs[0])) return 1;
  const std::size_t m = stabs.size();
  for (std::size_t i = 1; i < m; ++i)
    if (trivial(meet(stabs[0], stabs[i]))) return 2;
  for (std::size_t i = 1; i < m; ++i) {
    auto si = meet(stabs[0], stabs[i]);
    for (std::size_t j = i + 1; j < m; ++j)
      if (trivial(meet(si, stabs[j]))) return 3;
  }
  for (std::size_t i = 1; i < m; ++i) {
    auto si = meet(stabs[0], stabs[i]);
    for (std::size_t j = i + 1; j < m; ++j) {
      auto sj = meet(si, stabs[j]);
      for (std::size_t k = j + 1; k < m; ++k)
        if (trivial(meet(sj, stabs[k]))) return 4;
    }
  }
  return 5;
}

}  // namespace testnaive
