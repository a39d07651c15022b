#include "normgraph/poly.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace normgraph {

namespace {

// Splits a monic polynomial that is a product of distinct linear factors
// over the field with q elements. Collects roots into `out`; stops after the
// first root when `want_all` is false. Every random trial consumes budget.
template <FieldContext F, class Sampler>
void split_linear_factors(const F& f, const Poly<typename F::Element>& h, const BigInt& q, Sampler& sample,
                          int& budget, bool want_all, std::vector<typename F::Element>& out) {
  using P = Poly<typename F::Element>;
  if (h.degree() <= 0) return;
  if (h.degree() == 1) {
    out.push_back(f.neg(f.mul(h.coeffs[0], f.inv(h.coeffs[1]))));
    return;
  }
  const bool even = (q & 1) == 0;
  const BigInt half = (q - 1) / 2;
  while (budget > 0) {
    --budget;
    const auto delta = sample();
    P w;
    if (even) {
      // Absolute trace of delta*x: y + y^2 + ... + y^(q/2), computed mod h.
      P y = poly::mod(f, P{std::vector<typename F::Element>{f.zero(), delta}}, h);
      P acc = y;
      for (BigInt e = 2; e < q; e *= 2) {
        y = poly::mod(f, poly::mul(f, y, y), h);
        acc = poly::add(f, acc, y);
      }
      w = acc;
    } else {
      P base{std::vector<typename F::Element>{delta, f.one()}};
      w = poly::sub(f, poly::powmod(f, base, half, h), poly::constant(f, f.one()));
    }
    P g = poly::gcd(f, h, w);
    if (g.degree() <= 0 || g.degree() >= h.degree()) continue;
    P other = poly::monic(f, poly::divmod(f, h, g).first);
    const P& first = g.degree() <= other.degree() ? g : other;
    const P& second = g.degree() <= other.degree() ? other : g;
    split_linear_factors(f, first, q, sample, budget, want_all, out);
    if (!want_all && !out.empty()) return;
    split_linear_factors(f, second, q, sample, budget, want_all, out);
    return;
  }
  throw NonSplittingError("equal-degree splitting exhausted its attempt budget");
}

}  // namespace

FpElement poly_eval(const FpPoly& h, FpElement x, const PrimeField& f) { return poly::eval(f, h, x); }

ExtElement poly_eval(const FpPoly& h, const ExtElement& x, const ExtField& field) {
  return poly::eval(field, lift(h, field), x);
}

ExtElement poly_eval(const ExtPoly& h, const ExtElement& x, const ExtField& field) {
  return poly::eval(field, h, x);
}

FpPoly poly_gcd(const FpPoly& a, const FpPoly& b, const PrimeField& f) { return poly::gcd(f, a, b); }

ExtPoly poly_gcd(const ExtPoly& a, const ExtPoly& b, const ExtField& field) { return poly::gcd(field, a, b); }

ExtPoly lift(const FpPoly& h, const ExtField& field) {
  std::vector<ExtElement> c;
  c.reserve(h.coeffs.size());
  for (auto e : h.coeffs) c.push_back(field.constant(e));
  return ExtPoly{std::move(c)};
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_irreducible(const FpPoly& h, const PrimeField& f) {
  if (h.degree() < 1) throw std::invalid_argument("irreducibility of a constant polynomial");
  const int d = h.degree();
  if (d == 1) return true;
  const FpPoly m = poly::monic(f, h);
  const FpPoly x = poly::x(f);
  // frob[i] = x^(p^i) mod m
  std::vector<FpPoly> frob{poly::mod(f, x, m)};
  for (int i = 1; i <= d; ++i) frob.push_back(poly::powmod(f, frob.back(), f.p(), m));
  if (frob[static_cast<std::size_t>(d)] != poly::mod(f, x, m)) return false;
  for (auto ell : prime_divisors(static_cast<std::uint64_t>(d))) {
    const auto& xq = frob[static_cast<std::size_t>(d) / ell];
    if (poly::gcd(f, m, poly::sub(f, xq, x)).degree() != 0) return false;
  }
  return true;
}

bool is_irreducible_by_roots(const FpPoly& h, const PrimeField& f) {
  if (h.degree() < 1 || h.degree() > 3)
    throw std::invalid_argument("root criterion applies to degrees 1 to 3 only");
  if (h.degree() == 1) return true;
  return roots_in_base(h, f).empty();
}

bool splits_into_distinct_linear(const FpPoly& h, const PrimeField& f) {
  if (h.degree() < 1) return false;
  const FpPoly m = poly::monic(f, h);
  const FpPoly x = poly::x(f);
  // m | x^p - x and gcd(m, m') = 1
  if (poly::powmod(f, x, f.p(), m) != poly::mod(f, x, m)) return false;
  return poly::gcd(f, m, poly::derivative(f, m)).degree() == 0;
}

std::vector<BaseRoot> roots_in_base(const FpPoly& h, const PrimeField& f) {
  if (h.degree() < 1) throw std::invalid_argument("root scan of a constant polynomial");
  if (f.p() >= kRootScanLimit)
    throw GuardExceeded("exhaustive root scan refused for p = " + std::to_string(f.p()));
  const FpPoly dh = poly::derivative(f, h);
  std::vector<BaseRoot> out;
  for (std::uint64_t v = 0; v < f.p(); ++v) {
    const FpElement x{v};
    if (poly_eval(h, x, f).is_zero()) out.push_back({x, poly_eval(dh, x, f).is_zero()});
  }
  return out;
}

ExtElement find_root_in_ext(const FpPoly& h, const ExtField& field, std::uint64_t seed) {
  if (h.degree() < 1) throw std::invalid_argument("root of a constant polynomial");
  const ExtPoly hf = poly::monic(field, lift(h, field));
  BigInt q = 1;
  for (int i = 0; i < field.degree(); ++i) q *= field.p();
  const ExtPoly x = poly::x(field);
  if (poly::powmod(field, x, q, hf) != poly::mod(field, x, hf))
    throw NonSplittingError("polynomial does not split into distinct linear factors over the extension");

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> coeff(0, field.p() - 1);
  auto sample = [&] {
    ExtElement e = field.zero();
    for (auto& c : e.coeffs) c = FpElement{coeff(rng)};
    return e;
  };
  int budget = 64;
  std::vector<ExtElement> roots;
  split_linear_factors(field, hf, q, sample, budget, false, roots);
  if (roots.empty()) throw NonSplittingError("no linear factor found");
  const ExtElement& root = roots.front();
  if (!poly_eval(h, root, field).is_zero()) throw std::logic_error("extracted root does not annihilate h");
  return root;
}

std::vector<FpElement> split_roots(const FpPoly& h, const PrimeField& f, std::uint64_t seed) {
  if (!splits_into_distinct_linear(h, f))
    throw NonSplittingError("polynomial does not split into distinct linear factors over F_p");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> coeff(0, f.p() - 1);
  auto sample = [&] { return FpElement{coeff(rng)}; };
  int budget = 64 * std::max(1, h.degree());
  std::vector<FpElement> roots;
  split_linear_factors(f, poly::monic(f, h), BigInt(f.p()), sample, budget, true, roots);
  std::sort(roots.begin(), roots.end());
  for (auto r : roots)
    if (!poly_eval(h, r, f).is_zero()) throw std::logic_error("extracted root does not annihilate h");
  return roots;
}

bool power_residue(FpElement a, std::uint64_t m, std::uint64_t p) {
  if (a.value % p == 0) throw std::invalid_argument("power residue test of zero");
  if (m == 0) throw std::invalid_argument("power residue exponent must be positive");
  const std::uint64_t d = std::gcd(m, p - 1);
  return fp_pow(a, (p - 1) / d, p).value == 1;
}

std::optional<FpElement> primitive_nth_root(std::uint64_t n, std::uint64_t p) {
  if (n == 0 || (p - 1) % n != 0) return std::nullopt;
  const auto ells = prime_divisors(n);
  for (std::uint64_t v = 1; v < p; ++v) {
    const FpElement x{v};
    if (fp_pow(x, n, p).value != 1) continue;
    bool exact = std::all_of(ells.begin(), ells.end(), [&](std::uint64_t ell) { return fp_pow(x, n / ell, p).value != 1; });
    if (exact) return x;
  }
  return std::nullopt;
}

}  // namespace normgraph
