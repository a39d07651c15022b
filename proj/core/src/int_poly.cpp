#include "normgraph/int_poly.hpp"

#include <stdexcept>
#include <utility>

namespace normgraph {

namespace {

BigInt power(const BigInt& b, int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

BigInt content(const IntPoly& a) {
  BigInt g = 0;
  for (const auto& c : a.coeffs) g = boost::multiprecision::gcd(g, c);
  return g < 0 ? BigInt(-g) : g;
}

IntPoly divide_exact(const IntPoly& a, const BigInt& d) {
  std::vector<BigInt> c;
  c.reserve(a.coeffs.size());
  for (const auto& x : a.coeffs) {
    if (x % d != 0) throw std::logic_error("inexact coefficient division in subresultant sequence");
    c.push_back(x / d);
  }
  return IntPoly{std::move(c)};
}

// lc(b)^(deg a - deg b + 1) * a = q*b + r, returns r.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  auto r = a.coeffs;
  const std::size_t db = b.coeffs.size() - 1;
  const BigInt& lb = b.leading();
  for (std::size_t i = r.size(); i-- > db;) {
    const BigInt c = r[i];
    for (auto& x : r) x *= lb;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] -= c * b.coeffs[j];
  }
  r.resize(db);
  return IntPoly{std::move(r)};
}

}  // namespace

IntPoly make_int_poly(const std::vector<std::int64_t>& coeffs) {
  std::vector<BigInt> c(coeffs.begin(), coeffs.end());
  return IntPoly{std::move(c)};
}

IntPoly int_mul(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> c(a.coeffs.size() + b.coeffs.size() - 1);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) c[i + j] += a.coeffs[i] * b.coeffs[j];
  return IntPoly{std::move(c)};
}

IntPoly int_derivative(const IntPoly& a) {
  if (a.coeffs.size() <= 1) return {};
  std::vector<BigInt> c;
  for (std::size_t i = 1; i < a.coeffs.size(); ++i) c.push_back(a.coeffs[i] * static_cast<long long>(i));
  return IntPoly{std::move(c)};
}

BigInt resultant(const IntPoly& a_in, const IntPoly& b_in) {
  if (a_in.is_zero() || b_in.is_zero()) return 0;
  IntPoly a = a_in, b = b_in;
  BigInt sign = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) sign = -1;
  }
  if (b.degree() == 0) return sign * power(b.leading(), a.degree());

  const BigInt ca = content(a), cb = content(b);
  a = divide_exact(a, ca);
  b = divide_exact(b, cb);
  const BigInt t = power(ca, b.degree()) * power(cb, a.degree());
  BigInt g = 1, h = 1;
  while (true) {
    const int delta = a.degree() - b.degree();
    if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) sign = -sign;
    IntPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    if (r.is_zero()) return 0;
    b = divide_exact(r, g * power(h, delta));
    g = a.leading();
    // h <- h^(1-delta) * g^delta
    if (delta > 0) h = power(g, delta) / power(h, delta - 1);
    if (b.degree() == 0) {
      const int da = a.degree();
      const BigInt hh = power(b.leading(), da) / power(h, da - 1);
      return sign * t * hh;
    }
  }
}

BigInt discriminant(const IntPoly& h) {
  const int d = h.degree();
  if (d < 2) throw std::invalid_argument("discriminant needs degree >= 2");
  BigInt res = resultant(h, int_derivative(h));
  BigInt q = res / h.leading();
  if (((d * (d - 1)) / 2) % 2 == 1) q = -q;
  return q;
}

}  // namespace normgraph
