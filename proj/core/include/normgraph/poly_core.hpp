#pragma once

// Dense univariate polynomials over a field context. A context exposes
// zero/one/add/sub/neg/mul/inv/is_zero/from_integer for its Element type;
// PrimeField and ExtField both qualify.

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "normgraph/errors.hpp"
#include "normgraph/prime_field.hpp"

namespace normgraph {

using BigInt = boost::multiprecision::cpp_int;

inline bool is_zero(const BigInt& x) { return x.is_zero(); }

template <class F>
concept FieldContext = requires(const F& f, const typename F::Element& a, std::int64_t n) {
  { f.zero() } -> std::convertible_to<typename F::Element>;
  { f.one() } -> std::convertible_to<typename F::Element>;
  { f.add(a, a) } -> std::convertible_to<typename F::Element>;
  { f.sub(a, a) } -> std::convertible_to<typename F::Element>;
  { f.neg(a) } -> std::convertible_to<typename F::Element>;
  { f.mul(a, a) } -> std::convertible_to<typename F::Element>;
  { f.inv(a) } -> std::convertible_to<typename F::Element>;
  { f.is_zero(a) } -> std::convertible_to<bool>;
  { f.from_integer(n) } -> std::convertible_to<typename F::Element>;
};

/// Little-endian coefficients with no trailing zeros; the zero polynomial is empty.
template <class Elem>
struct Poly {
  std::vector<Elem> coeffs;

  Poly() = default;
  explicit Poly(std::vector<Elem> c) : coeffs(std::move(c)) { trim(); }

  /// Degree, or -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
  const Elem& leading() const { return coeffs.back(); }

  void trim() {
    while (!coeffs.empty() && coeff_is_zero(coeffs.back())) coeffs.pop_back();
  }

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  static bool coeff_is_zero(const Elem& e) {
    using normgraph::is_zero;
    return is_zero(e);
  }
};

namespace poly {

template <FieldContext F>
using P = Poly<typename F::Element>;

template <FieldContext F>
P<F> constant(const F& f, const typename F::Element& c) {
  return f.is_zero(c) ? P<F>{} : P<F>{std::vector<typename F::Element>{c}};
}

/// The monomial x.
template <FieldContext F>
P<F> x(const F& f) {
  return P<F>{std::vector<typename F::Element>{f.zero(), f.one()}};
}

template <FieldContext F>
P<F> add(const F& f, const P<F>& a, const P<F>& b) {
  std::vector<typename F::Element> c(std::max(a.coeffs.size(), b.coeffs.size()), f.zero());
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) c[i] = a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) c[i] = f.add(c[i], b.coeffs[i]);
  return P<F>{std::move(c)};
}

template <FieldContext F>
P<F> sub(const F& f, const P<F>& a, const P<F>& b) {
  std::vector<typename F::Element> c(std::max(a.coeffs.size(), b.coeffs.size()), f.zero());
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) c[i] = a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) c[i] = f.sub(c[i], b.coeffs[i]);
  return P<F>{std::move(c)};
}

template <FieldContext F>
P<F> scale(const F& f, const P<F>& a, const typename F::Element& s) {
  std::vector<typename F::Element> c;
  c.reserve(a.coeffs.size());
  for (const auto& e : a.coeffs) c.push_back(f.mul(e, s));
  return P<F>{std::move(c)};
}

template <FieldContext F>
P<F> mul(const F& f, const P<F>& a, const P<F>& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<typename F::Element> c(a.coeffs.size() + b.coeffs.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (f.is_zero(a.coeffs[i])) continue;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j)
      c[i + j] = f.add(c[i + j], f.mul(a.coeffs[i], b.coeffs[j]));
  }
  return P<F>{std::move(c)};
}

/// Returns (quotient, remainder). Throws ZeroInverseError on a zero divisor.
template <FieldContext F>
std::pair<P<F>, P<F>> divmod(const F& f, const P<F>& a, const P<F>& b) {
  if (b.is_zero()) throw ZeroInverseError();
  if (a.degree() < b.degree()) return {P<F>{}, a};
  auto r = a.coeffs;
  const std::size_t db = b.coeffs.size() - 1;
  std::vector<typename F::Element> q(r.size() - db, f.zero());
  const auto lead_inv = f.inv(b.leading());
  for (std::size_t i = r.size(); i-- > db;) {
    if (f.is_zero(r[i])) continue;
    auto c = f.mul(r[i], lead_inv);
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] = f.sub(r[i - db + j], f.mul(c, b.coeffs[j]));
  }
  r.resize(db);
  return {P<F>{std::move(q)}, P<F>{std::move(r)}};
}

template <FieldContext F>
P<F> mod(const F& f, const P<F>& a, const P<F>& b) {
  return divmod(f, a, b).second;
}

template <FieldContext F>
P<F> monic(const F& f, const P<F>& a) {
  if (a.is_zero()) return a;
  return scale(f, a, f.inv(a.leading()));
}

/// Monic gcd; gcd(h, 0) = monic(h).
template <FieldContext F>
P<F> gcd(const F& f, P<F> a, P<F> b) {
  while (!b.is_zero()) {
    auto r = mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(f, a);
}

/// Returns (g, s) with g = gcd(a, b) monic and s*a = g (mod b).
template <FieldContext F>
std::pair<P<F>, P<F>> gcd_with_cofactor(const F& f, const P<F>& a, const P<F>& b) {
  P<F> r0 = a, r1 = b;
  P<F> s0 = constant(f, f.one()), s1{};
  while (!r1.is_zero()) {
    auto [q, r] = divmod(f, r0, r1);
    auto s = sub(f, s0, mul(f, q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.is_zero()) return {r0, s0};
  auto li = f.inv(r0.leading());
  return {scale(f, r0, li), scale(f, s0, li)};
}

template <FieldContext F>
P<F> derivative(const F& f, const P<F>& a) {
  if (a.coeffs.size() <= 1) return {};
  std::vector<typename F::Element> c;
  c.reserve(a.coeffs.size() - 1);
  for (std::size_t i = 1; i < a.coeffs.size(); ++i)
    c.push_back(f.mul(a.coeffs[i], f.from_integer(static_cast<std::int64_t>(i))));
  return P<F>{std::move(c)};
}

/// Horner evaluation.
template <FieldContext F>
typename F::Element eval(const F& f, const P<F>& a, const typename F::Element& x) {
  auto acc = f.zero();
  for (std::size_t i = a.coeffs.size(); i-- > 0;) acc = f.add(f.mul(acc, x), a.coeffs[i]);
  return acc;
}

/// base^e mod m with a 64-bit exponent.
template <FieldContext F>
P<F> powmod(const F& f, const P<F>& base, std::uint64_t e, const P<F>& m) {
  P<F> result = mod(f, constant(f, f.one()), m);
  P<F> b = mod(f, base, m);
  while (e > 0) {
    if (e & 1) result = mod(f, mul(f, result, b), m);
    e >>= 1;
    if (e > 0) b = mod(f, mul(f, b, b), m);
  }
  return result;
}

/// base^e mod m with an arbitrary-precision exponent.
template <FieldContext F>
P<F> powmod(const F& f, const P<F>& base, const BigInt& e, const P<F>& m) {
  P<F> result = mod(f, constant(f, f.one()), m);
  if (e.is_zero()) return result;
  P<F> b = mod(f, base, m);
  const auto top = boost::multiprecision::msb(e);
  for (auto i = top + 1; i-- > 0;) {
    result = mod(f, mul(f, result, result), m);
    if (boost::multiprecision::bit_test(e, i)) result = mod(f, mul(f, result, b), m);
  }
  return result;
}

}  // namespace poly
}  // namespace normgraph
