#include "normgraph/ext_field.hpp"

#include <stdexcept>
#include <string>

#include "normgraph/poly.hpp"

namespace normgraph {

FpPoly make_fp_poly(const PrimeField& f, const std::vector<std::int64_t>& coeffs) {
  std::vector<FpElement> c;
  c.reserve(coeffs.size());
  for (auto v : coeffs) c.push_back(f.from_integer(v));
  return FpPoly{std::move(c)};
}

std::ostream& operator<<(std::ostream& os, const ExtElement& x) {
  os << '[';
  for (std::size_t i = 0; i < x.coeffs.size(); ++i) os << (i ? "," : "") << x.coeffs[i].value;
  return os << ']';
}

ExtField::ExtField(const PrimeField& base, FpPoly modulus)
    : base_(base), modulus_(std::move(modulus)), k_(modulus_.degree()) {
  if (k_ < 1) throw std::invalid_argument("extension modulus must have degree >= 1");
  if (modulus_.leading() != base_.one()) throw std::invalid_argument("extension modulus must be monic");
  if (!is_irreducible(modulus_, base_)) throw std::invalid_argument("extension modulus is reducible");
  std::uint64_t q = 1;
  bool fits = true;
  for (int i = 0; i < k_ && fits; ++i) {
    if (q > kIndexLimit / base_.p()) fits = false;
    else q *= base_.p();
  }
  if (fits) order_ = q;
}

ExtField::ExtField(std::uint64_t p, const std::vector<std::int64_t>& modulus)
    : ExtField(PrimeField(p), make_fp_poly(PrimeField(p), modulus)) {}

ExtElement ExtField::zero() const { return ExtElement{std::vector<FpElement>(k_)}; }

ExtElement ExtField::one() const { return constant(base_.one()); }

ExtElement ExtField::constant(FpElement c) const {
  auto z = zero();
  z.coeffs[0] = FpElement{c.value % p()};
  return z;
}

ExtElement ExtField::generator() const { return from_poly(poly::x(base_)); }

ExtElement ExtField::element(const std::vector<std::int64_t>& coeffs) const {
  if (coeffs.size() > static_cast<std::size_t>(k_))
    throw DimensionMismatch("more coefficients than the extension degree");
  auto z = zero();
  for (std::size_t i = 0; i < coeffs.size(); ++i) z.coeffs[i] = base_.from_integer(coeffs[i]);
  return z;
}

ExtElement ExtField::from_poly(const FpPoly& a) const {
  auto r = poly::mod(base_, a, modulus_);
  auto z = zero();
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) z.coeffs[i] = r.coeffs[i];
  return z;
}

FpPoly ExtField::to_poly(const ExtElement& a) const { return FpPoly{a.coeffs}; }

bool ExtField::contains(const ExtElement& a) const {
  if (a.coeffs.size() != static_cast<std::size_t>(k_)) return false;
  for (auto c : a.coeffs)
    if (!base_.contains(c)) return false;
  return true;
}

bool ExtField::is_constant(const ExtElement& a) const {
  for (std::size_t i = 1; i < a.coeffs.size(); ++i)
    if (!a.coeffs[i].is_zero()) return false;
  return true;
}

void ExtField::check(const ExtElement& a) const {
  if (a.coeffs.size() != static_cast<std::size_t>(k_))
    throw DimensionMismatch("element has " + std::to_string(a.coeffs.size()) +
                            " coefficients, field degree is " + std::to_string(k_));
}

std::uint64_t ExtField::index(const ExtElement& a) const {
  check(a);
  if (!order_) throw GuardExceeded("field too large to index its elements");
  std::uint64_t idx = 0;
  for (std::size_t i = a.coeffs.size(); i-- > 0;) idx = idx * p() + a.coeffs[i].value;
  return idx;
}

ExtElement ExtField::from_index(std::uint64_t idx) const {
  if (!order_) throw GuardExceeded("field too large to index its elements");
  if (idx >= *order_) throw std::out_of_range("element index out of range");
  auto z = zero();
  for (int i = 0; i < k_; ++i) {
    z.coeffs[i] = FpElement{idx % p()};
    idx /= p();
  }
  return z;
}

ExtElement ExtField::add(const ExtElement& a, const ExtElement& b) const {
  check(a);
  check(b);
  ExtElement r = a;
  for (int i = 0; i < k_; ++i) r.coeffs[i] = base_.add(a.coeffs[i], b.coeffs[i]);
  return r;
}

ExtElement ExtField::sub(const ExtElement& a, const ExtElement& b) const {
  check(a);
  check(b);
  ExtElement r = a;
  for (int i = 0; i < k_; ++i) r.coeffs[i] = base_.sub(a.coeffs[i], b.coeffs[i]);
  return r;
}

ExtElement ExtField::neg(const ExtElement& a) const {
  check(a);
  ExtElement r = a;
  for (auto& c : r.coeffs) c = base_.neg(c);
  return r;
}

ExtElement ExtField::scale(const ExtElement& a, FpElement s) const {
  check(a);
  ExtElement r = a;
  for (auto& c : r.coeffs) c = base_.mul(c, s);
  return r;
}

ExtElement ExtField::mul(const ExtElement& a, const ExtElement& b) const {
  check(a);
  check(b);
  const auto k = static_cast<std::size_t>(k_);
  const std::uint64_t p = base_.p();
  // Residues are below 2^31, so each product plus a reduced partial sum fits in 64 bits.
  std::vector<std::uint64_t> prod(2 * k - 1, 0);
  for (std::size_t i = 0; i < k; ++i) {
    if (a.coeffs[i].is_zero()) continue;
    for (std::size_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + a.coeffs[i].value * b.coeffs[j].value) % p;
  }
  const auto& m = modulus_.coeffs;
  for (std::size_t i = prod.size(); i-- > k;) {
    const std::uint64_t c = prod[i];
    if (c == 0) continue;
    // x^i = x^{i-k} * x^k and x^k = -sum m_j x^j.
    for (std::size_t j = 0; j < k; ++j) prod[i - k + j] = (prod[i - k + j] + (p - m[j].value) * c) % p;
    prod[i] = 0;
  }
  ExtElement r = zero();
  for (std::size_t i = 0; i < k; ++i) r.coeffs[i] = FpElement{prod[i]};
  return r;
}

ExtElement ExtField::inv(const ExtElement& a) const {
  check(a);
  if (a.is_zero()) throw ZeroInverseError();
  auto [g, s] = poly::gcd_with_cofactor(base_, to_poly(a), modulus_);
  if (g.degree() != 0) throw std::logic_error("non-unit in a field: modulus is not irreducible");
  return from_poly(s);
}

ExtElement ExtField::pow(const ExtElement& a, std::uint64_t e) const {
  check(a);
  ExtElement result = one();
  ExtElement b = a;
  while (e > 0) {
    if (e & 1) result = mul(result, b);
    e >>= 1;
    if (e > 0) b = mul(b, b);
  }
  return result;
}

ExtElement ExtField::pow(const ExtElement& a, const BigInt& e) const {
  check(a);
  ExtElement result = one();
  if (e.is_zero()) return result;
  for (auto i = boost::multiprecision::msb(e) + 1; i-- > 0;) {
    result = mul(result, result);
    if (boost::multiprecision::bit_test(e, i)) result = mul(result, a);
  }
  return result;
}

ExtElement ExtField::frobenius(const ExtElement& a, int times) const {
  ExtElement r = a;
  for (int i = 0; i < times; ++i) r = pow(r, base_.p());
  return r;
}

std::vector<std::vector<FpElement>> ExtField::multiplication_matrix(const ExtElement& a) const {
  check(a);
  const auto k = static_cast<std::size_t>(k_);
  std::vector<std::vector<FpElement>> m(k, std::vector<FpElement>(k));
  ExtElement column = a;
  const ExtElement x = generator();
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < k; ++i) m[i][j] = column.coeffs[i];
    column = mul(column, x);
  }
  return m;
}

FpElement ExtField::conjugate_norm(const ExtElement& a) const {
  ExtElement prod = a;
  ExtElement conj = a;
  for (int i = 1; i < k_; ++i) {
    conj = pow(conj, base_.p());
    prod = mul(prod, conj);
  }
  if (!is_constant(prod)) throw std::logic_error("conjugate product left the base field");
  return prod.coeffs[0];
}

FpElement ExtField::determinant_norm(const ExtElement& a) const {
  return determinant(multiplication_matrix(a), base_);
}

FpElement ExtField::norm(const ExtElement& a) const {
  const FpElement by_conjugates = conjugate_norm(a);
  const FpElement by_determinant = determinant_norm(a);
  if (by_conjugates != by_determinant)
    throw std::logic_error("norm mismatch: conjugate product " + std::to_string(by_conjugates.value) +
                           " vs determinant " + std::to_string(by_determinant.value));
  return by_conjugates;
}

FpElement determinant(std::vector<std::vector<FpElement>> m, const PrimeField& f) {
  const std::size_t n = m.size();
  FpElement det = f.one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return f.zero();
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = f.neg(det);
    }
    det = f.mul(det, m[col][col]);
    const FpElement pinv = f.inv(m[col][col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      const FpElement factor = f.mul(m[r][col], pinv);
      for (std::size_t c = col; c < n; ++c) m[r][c] = f.sub(m[r][c], f.mul(factor, m[col][c]));
    }
  }
  return det;
}

ExtElement ext_mul(const ExtElement& x, const ExtElement& y, const ExtField& field) { return field.mul(x, y); }
ExtElement ext_inv(const ExtElement& x, const ExtField& field) { return field.inv(x); }
ExtElement frobenius(const ExtElement& x, const ExtField& field) { return field.frobenius(x); }
FpElement norm(const ExtElement& x, const ExtField& field) { return field.norm(x); }

}  // namespace normgraph
