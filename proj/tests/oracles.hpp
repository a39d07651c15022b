#pragma once

// Reference implementations that share no code with the library: plain
// integer vectors, repeated multiplication, exhaustive scans and
// fraction-free determinants. Slow by design.

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

using Int = boost::multiprecision::cpp_int;
using Vec = std::vector<std::int64_t>;  // little-endian, entries in [0, p)

inline std::int64_t md(std::int64_t a, std::int64_t p) { return ((a % p) + p) % p; }

inline std::int64_t pow_mod(std::int64_t a, std::uint64_t e, std::int64_t p) {
  std::int64_t r = 1 % p;
  for (std::uint64_t i = 0; i < e; ++i) r = md(r * a, p);
  return r;
}

inline std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  for (std::int64_t b = 1; b < p; ++b)
    if (md(a * b, p) == 1) return b;
  return -1;
}

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Nonzero m-th powers mod p.
inline std::set<std::int64_t> power_set(std::int64_t m, std::int64_t p) {
  std::set<std::int64_t> s;
  for (std::int64_t x = 1; x < p; ++x) s.insert(pow_mod(x, static_cast<std::uint64_t>(m), p));
  return s;
}

/// Product of a and b modulo the monic polynomial `mod` (degree k = mod.size()-1).
inline Vec mul(const Vec& a, const Vec& b, const Vec& mod, std::int64_t p) {
  const std::size_t k = mod.size() - 1;
  std::vector<std::int64_t> prod(2 * k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) prod[i + j] = md(prod[i + j] + a[i] * b[j], p);
  for (std::size_t d = prod.size(); d-- > k;) {
    const std::int64_t c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (std::size_t j = 0; j < k; ++j) prod[d - k + j] = md(prod[d - k + j] - c * mod[j], p);
  }
  prod.resize(k);
  return prod;
}

inline Vec one(std::size_t k) {
  Vec v(k, 0);
  v[0] = 1;
  return v;
}

inline Vec pow(const Vec& a, std::uint64_t e, const Vec& mod, std::int64_t p) {
  Vec r = one(mod.size() - 1);
  for (std::uint64_t i = 0; i < e; ++i) r = mul(r, a, mod, p);
  return r;
}

/// Norm as x^{(p^k - 1)/(p - 1)} by repeated multiplication.
inline std::int64_t norm(const Vec& a, const Vec& mod, std::int64_t p) {
  const std::size_t k = mod.size() - 1;
  std::uint64_t e = 0, pk = 1;
  for (std::size_t i = 0; i < k; ++i, pk *= static_cast<std::uint64_t>(p)) e += pk;
  return pow(a, e, mod, p)[0];
}

/// Inverse by exhaustive search over all p^k elements.
inline Vec inverse(const Vec& a, const Vec& mod, std::int64_t p) {
  const std::size_t k = mod.size() - 1;
  Vec b(k, 0);
  while (true) {
    if (mul(a, b, mod, p) == one(k)) return b;
    std::size_t i = 0;
    while (i < k && ++b[i] == p) b[i++] = 0;
    if (i == k) return {};
  }
}

/// Value h(x) for every x in F_p with h given by integer coefficients.
inline std::int64_t eval(const Vec& h, std::int64_t x, std::int64_t p) {
  std::int64_t r = 0, xp = 1;
  for (auto c : h) {
    r = md(r + c * xp, p);
    xp = md(xp * x, p);
  }
  return r;
}

inline std::vector<std::int64_t> roots(const Vec& h, std::int64_t p) {
  std::vector<std::int64_t> r;
  for (std::int64_t x = 0; x < p; ++x)
    if (eval(h, x, p) == 0) r.push_back(x);
  return r;
}

/// Determinant over the integers by cofactor-free Bareiss elimination.
inline Int bareiss(std::vector<std::vector<Int>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t s = k + 1;
      while (s < n && m[s][k] == 0) ++s;
      if (s == n) return 0;
      std::swap(m[k], m[s]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

/// Resultant as the determinant of the Sylvester matrix.
inline Int sylvester_resultant(const std::vector<Int>& a, const std::vector<Int>& b) {
  const std::size_t m = a.size() - 1, n = b.size() - 1, size = m + n;
  std::vector<std::vector<Int>> s(size, std::vector<Int>(size, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= m; ++j) s[i][i + j] = a[m - j];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= n; ++j) s[n + i][i + j] = b[n - j];
  return bareiss(s);
}

/// Discriminant via the Sylvester resultant of h and h'.
inline Int discriminant(const std::vector<Int>& h) {
  const std::size_t d = h.size() - 1;
  std::vector<Int> dh;
  for (std::size_t i = 1; i <= d; ++i) dh.push_back(h[i] * static_cast<long>(i));
  Int r = sylvester_resultant(h, dh) / h.back();
  return (d * (d - 1) / 2) % 2 ? Int(-r) : r;
}

/// Qualifying primes through direct exponentiation:
/// p = 1 mod 3, 2^{(p-1)/3} != 1, 6^{(p-1)/3} = 1, p coprime to 26244 * 248832.
inline bool qualifies(std::int64_t p) {
  if (!is_prime(p) || 26244 % p == 0 || 248832 % p == 0 || p % 3 != 1) return false;
  const auto e = static_cast<std::uint64_t>((p - 1) / 3);
  return pow_mod(2, e, p) != 1 && pow_mod(6, e, p) == 1;
}

}  // namespace oracle
