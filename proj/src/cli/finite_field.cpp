#include "basetwo/cli/finite_field.hpp"

#include "basetwo/error.hpp"

#include <functional>
#include <string>

namespace basetwo::cli {

std::optional<std::pair<std::uint32_t, unsigned>> prime_power(std::uint32_t q) {
  if (q < 2) return std::nullopt;
  std::uint32_t p = 2;
  while (q % p) ++p;
  unsigned f = 0;
  while (q % p == 0) {
    q /= p;
    ++f;
  }
  if (q != 1) return std::nullopt;
  return std::pair{p, f};
}

namespace {

// Full coefficient vectors, lowest degree first, no trailing zeros.
using Full = std::vector<std::uint32_t>;

void trim(Full& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  for (std::uint32_t b = 1; b < p; ++b)
    if (a * b % p == 1) return b;
  throw Error(Errc::invalid_argument, "no inverse mod " + std::to_string(p));
}

Full poly_mod(Full a, const Full& m, std::uint32_t p) {
  trim(a);
  const std::uint32_t lead_inv = inv_mod(m.back(), p);
  while (a.size() >= m.size()) {
    const std::uint32_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) a[shift + i] = (a[shift + i] + p * p - c * m[i] % p) % p;
    trim(a);
  }
  return a;
}

Full monic_full(const Poly& f) {
  Full a(f.begin(), f.end());
  a.push_back(1);
  return a;
}

}  // namespace

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const unsigned d = static_cast<unsigned>(f.size());
  if (d <= 1) return d == 1;
  const Full full = monic_full(f);
  // divisible by some monic polynomial of degree k <= d/2?
  for (unsigned k = 1; 2 * k <= d; ++k) {
    Poly g(k, 0);
    std::function<bool(unsigned)> rec = [&](unsigned i) {
      if (i == k) return poly_mod(full, monic_full(g), p).empty();
      for (std::uint32_t c = 0; c < p; ++c) {
        g[i] = c;
        if (rec(i + 1)) return true;
      }
      return false;
    };
    if (rec(0)) return false;
  }
  return true;
}

namespace {

// Calls fn on monic polynomials of degree d in (c_{d-1}, ..., c_0) order until it returns true.
template <class F>
bool each_monic(std::uint32_t p, unsigned d, F&& fn) {
  std::uint64_t total = 1;
  for (unsigned i = 0; i < d; ++i) total *= p;
  for (std::uint64_t n = 0; n < total; ++n) {
    Poly f(d);
    std::uint64_t m = n;
    for (unsigned i = 0; i < d; ++i) {
      f[i] = static_cast<std::uint32_t>(m % p);
      m /= p;
    }
    if (fn(f)) return true;
  }
  return false;
}

}  // namespace

Poly least_irreducible(std::uint32_t p, unsigned d) {
  Poly out;
  if (!each_monic(p, d, [&](const Poly& f) {
        if (!is_irreducible(f, p)) return false;
        out = f;
        return true;
      }))
    throw Error(Errc::integrity, "no irreducible polynomial found");
  return out;
}

GaloisField::GaloisField(std::uint32_t q) : q_(q) {
  auto pp = prime_power(q);
  if (!pp) throw Error(Errc::invalid_argument, "field order " + std::to_string(q) + " is not a prime power");
  p_ = pp->first;
  const unsigned f = pp->second;
  const Full m = monic_full(least_irreducible(p_, f));
  auto digits = [&](std::uint32_t a) {
    Full v(f);
    for (unsigned i = 0; i < f; ++i, a /= p_) v[i] = a % p_;
    return v;
  };
  auto number = [&](const Full& v) {
    std::uint32_t a = 0;
    for (std::size_t i = v.size(); i-- > 0;) a = a * p_ + v[i];
    return a;
  };
  add_.resize(std::size_t{q} * q);
  mul_.resize(std::size_t{q} * q);
  neg_.resize(q);
  inv_.assign(q, 0);
  for (std::uint32_t a = 0; a < q; ++a) {
    const Full da = digits(a);
    Full na(f);
    for (unsigned i = 0; i < f; ++i) na[i] = (p_ - da[i]) % p_;
    neg_[a] = number(na);
    for (std::uint32_t b = 0; b < q; ++b) {
      const Full db = digits(b);
      Full s(f);
      for (unsigned i = 0; i < f; ++i) s[i] = (da[i] + db[i]) % p_;
      add_[a * q + b] = number(s);
      Full prod(2 * f, 0);
      for (unsigned i = 0; i < f; ++i)
        for (unsigned j = 0; j < f; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
      mul_[a * q + b] = number(poly_mod(prod, m, p_));
    }
  }
  for (std::uint32_t a = 1; a < q; ++a)
    for (std::uint32_t b = 1; b < q; ++b)
      if (mul(a, b) == 1) inv_[a] = b;
  for (std::uint32_t g = 1; g < q; ++g) {
    std::uint32_t x = g, k = 1;
    while (x != 1) {
      x = mul(x, g);
      ++k;
    }
    if (k == q - 1) {
      primitive_ = g;
      break;
    }
  }
}

std::uint32_t GaloisField::inv(std::uint32_t a) const {
  if (a == 0) throw Error(Errc::invalid_argument, "division by zero in GF(" + std::to_string(q_) + ")");
  return inv_[a];
}

Matrix identity_matrix(unsigned d) {
  Matrix m(d, std::vector<std::uint32_t>(d, 0));
  for (unsigned i = 0; i < d; ++i) m[i][i] = 1;
  return m;
}

Matrix mat_mul(const Matrix& a, const Matrix& b, std::uint32_t p) {
  const std::size_t d = a.size();
  Matrix c(d, std::vector<std::uint32_t>(d, 0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t j = 0; j < d; ++j) c[i][j] = (c[i][j] + a[i][k] * b[k][j]) % p;
  return c;
}

Matrix mat_pow(Matrix a, std::uint64_t k, std::uint32_t p) {
  Matrix r = identity_matrix(static_cast<unsigned>(a.size()));
  for (; k; k >>= 1, a = mat_mul(a, a, p))
    if (k & 1) r = mat_mul(r, a, p);
  return r;
}

std::uint32_t determinant(Matrix a, std::uint32_t p) {
  const std::size_t d = a.size();
  std::uint64_t det = 1;
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t r = c;
    while (r < d && a[r][c] % p == 0) ++r;
    if (r == d) return 0;
    if (r != c) {
      std::swap(a[r], a[c]);
      det = (p - det % p) % p;
    }
    det = det * a[c][c] % p;
    const std::uint32_t iv = inv_mod(a[c][c] % p, p);
    for (std::size_t i = c + 1; i < d; ++i) {
      const std::uint32_t f = a[i][c] * iv % p;
      for (std::size_t j = c; j < d; ++j) a[i][j] = (a[i][j] + p * p - f * a[c][j] % p) % p;
    }
  }
  return static_cast<std::uint32_t>(det);
}

std::uint64_t matrix_order(const Matrix& a, std::uint32_t p) {
  if (determinant(a, p) == 0) throw Error(Errc::invalid_argument, "matrix is singular");
  const Matrix id = identity_matrix(static_cast<unsigned>(a.size()));
  Matrix x = a;
  std::uint64_t k = 1;
  while (x != id) {
    x = mat_mul(x, a, p);
    ++k;
  }
  return k;
}

Matrix companion(const Poly& f, std::uint32_t p) {
  const std::size_t d = f.size();
  Matrix m(d, std::vector<std::uint32_t>(d, 0));
  for (std::size_t i = 1; i < d; ++i) m[i][i - 1] = 1;
  for (std::size_t i = 0; i < d; ++i) m[i][d - 1] = (p - f[i] % p) % p;
  return m;
}

Matrix singer_matrix(std::uint32_t p, unsigned d) {
  std::uint64_t target = 0, pk = 1;
  for (unsigned i = 0; i < d; ++i, pk *= p) target += pk;  // (p^d-1)/(p-1)
  Matrix out;
  if (!each_monic(p, d, [&](const Poly& f) {
        if (!is_irreducible(f, p)) return false;
        Matrix s = mat_pow(companion(f, p), p - 1, p);
        if (matrix_order(s, p) != target) return false;
        out = std::move(s);
        return true;
      }))
    throw Error(Errc::integrity, "no Singer generator found");
  return out;
}

}  // namespace basetwo::cli
