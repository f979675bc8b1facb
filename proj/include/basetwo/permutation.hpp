#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace basetwo {

using Point = std::uint32_t;

/**
 * @brief A bijection on {0, ..., n-1}, stored as its image list.
 *
 * Products are applied left to right: `(p * q)(i) == q(p(i))`.
 */
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);
  /// Throws Errc::invalid_argument when `images` is not a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }
  /// Cycles are lists of 0-based points; points not mentioned are fixed.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point i) const noexcept { return images_[i]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  /// Smallest point moved, or degree() when the permutation is the identity.
  Point smallest_moved_point() const noexcept;
  std::uint64_t order() const;

  std::vector<std::vector<Point>> cycles() const;
  /// Cycle notation, e.g. "(0 1 2)(3 4)"; the identity prints as "()".
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

/// i -> q(p(i)). Throws Errc::degree_mismatch on unequal degrees.
Permutation compose(const Permutation& p, const Permutation& q);

inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

/// g^-1 p g.
Permutation conjugate(const Permutation& p, const Permutation& g);

/// Parses cycle notation "(0 1 2)(3 4)"; "()" is the identity.
Permutation parse_cycles(std::size_t degree, const std::string& text);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace basetwo
