#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace basetwo::cli {

/// (p, f) with q = p^f, or nullopt when q is not a prime power.
std::optional<std::pair<std::uint32_t, unsigned>> prime_power(std::uint32_t q);

/// Monic polynomial over F_p, coefficients c_0 .. c_{d-1} (the leading 1 is implicit).
using Poly = std::vector<std::uint32_t>;
bool is_irreducible(const Poly& f, std::uint32_t p);
/// Candidates ordered by (c_{d-1}, ..., c_0) lexicographically.
Poly least_irreducible(std::uint32_t p, unsigned d);

/// GF(q) for small q; elements are 0..q-1 read as base-p coefficient vectors.
class GaloisField {
 public:
  explicit GaloisField(std::uint32_t q);

  std::uint32_t order() const noexcept { return q_; }
  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept { return add_[a * q_ + b]; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept { return mul_[a * q_ + b]; }
  std::uint32_t neg(std::uint32_t a) const noexcept { return neg_[a]; }
  std::uint32_t inv(std::uint32_t a) const;
  /// A generator of the multiplicative group.
  std::uint32_t primitive() const noexcept { return primitive_; }

 private:
  std::uint32_t q_, p_;
  std::vector<std::uint32_t> add_, mul_, neg_, inv_;
  std::uint32_t primitive_ = 1;
};

/// Square matrix over F_p, row-major.
using Matrix = std::vector<std::vector<std::uint32_t>>;
Matrix identity_matrix(unsigned d);
Matrix mat_mul(const Matrix& a, const Matrix& b, std::uint32_t p);
Matrix mat_pow(Matrix a, std::uint64_t k, std::uint32_t p);
std::uint32_t determinant(Matrix a, std::uint32_t p);
/// Multiplicative order of an invertible matrix.
std::uint64_t matrix_order(const Matrix& a, std::uint32_t p);
Matrix companion(const Poly& f, std::uint32_t p);
/// Generator of a cyclic irreducible subgroup of GL_d(p) of order (p^d-1)/(p-1):
/// the (p-1)-th power of the companion matrix of the least irreducible monic
/// polynomial of degree d for which that power has the full order.
Matrix singer_matrix(std::uint32_t p, unsigned d);

}  // namespace basetwo::cli
