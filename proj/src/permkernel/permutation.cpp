#include "basetwo/permutation.hpp"

#include "basetwo/bigint.hpp"
#include "basetwo/error.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <sstream>

namespace basetwo {

const char* to_string(Errc code) {
  switch (code) {
    case Errc::degree_mismatch: return "degree mismatch";
    case Errc::invalid_argument: return "invalid argument";
    case Errc::bound_exceeded: return "bound exceeded";
    case Errc::parent_mismatch: return "parent mismatch";
    case Errc::not_core_free: return "action not faithful";
    case Errc::unsupported: return "unsupported";
    case Errc::lattice_incomplete: return "lattice incomplete";
    case Errc::integrity: return "integrity error";
    case Errc::io: return "i/o error";
  }
  return "error";
}

std::uint64_t to_u64(const BigInt& v) {
  if (v < 0 || v > BigInt(std::numeric_limits<std::uint64_t>::max()))
    throw Error(Errc::unsupported, "value " + v.str() + " does not fit in 64 bits");
  return static_cast<std::uint64_t>(v);
}

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x])
      throw Error(Errc::invalid_argument, "image list is not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      Point a = cyc[i];
      Point b = cyc[(i + 1) % cyc.size()];
      if (a >= degree || b >= degree)
        throw Error(Errc::invalid_argument, "cycle point out of range");
      if (used[a]) throw Error(Errc::invalid_argument, "point repeated across cycles");
      used[a] = true;
      img[a] = b;
    }
  }
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
  Permutation r;
  r.images_ = std::move(inv);
  return r;
}

Point Permutation::smallest_moved_point() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return static_cast<Point>(i);
  return static_cast<Point>(images_.size());
}

std::uint64_t Permutation::order() const {
  std::uint64_t ord = 1;
  for (const auto& c : cycles()) ord = std::lcm(ord, static_cast<std::uint64_t>(c.size()));
  return ord;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    std::vector<Point> cyc;
    for (Point x = static_cast<Point>(i); !seen[x]; x = images_[x]) {
      seen[x] = true;
      cyc.push_back(x);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::string Permutation::to_string() const {
  auto cyc = cycles();
  if (cyc.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cyc) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
    os << ')';
  }
  return os.str();
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw Error(Errc::degree_mismatch, "compose: degrees " + std::to_string(p.degree()) +
                                           " and " + std::to_string(q.degree()));
  std::vector<Point> img(p.degree());
  auto pi = p.images();
  auto qi = q.images();
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = qi[pi[i]];
  return Permutation(std::move(img));
}

Permutation conjugate(const Permutation& p, const Permutation& g) {
  // g^-1 p g maps g(i) to g(p(i)).
  if (p.degree() != g.degree()) throw Error(Errc::degree_mismatch, "conjugate");
  std::vector<Point> img(p.degree());
  for (std::size_t i = 0; i < img.size(); ++i) img[g(static_cast<Point>(i))] = g(p(static_cast<Point>(i)));
  return Permutation(std::move(img));
}

Permutation parse_cycles(std::size_t degree, const std::string& text) {
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  while (i < text.size()) {
    if (text[i] != '(') throw Error(Errc::invalid_argument, "expected '(' in \"" + text + "\"");
    ++i;
    std::vector<Point> cyc;
    for (;;) {
      skip();
      if (i >= text.size()) throw Error(Errc::invalid_argument, "unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw Error(Errc::invalid_argument, "bad character in cycle notation");
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      cyc.push_back(static_cast<Point>(std::stoul(text.substr(i, j - i))));
      i = j;
    }
    if (cyc.size() > 1) cycles.push_back(std::move(cyc));
    skip();
  }
  return Permutation::from_cycles(degree, cycles);
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace basetwo
