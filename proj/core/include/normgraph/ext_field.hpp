#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "normgraph/poly_core.hpp"
#include "normgraph/prime_field.hpp"

namespace normgraph {

using FpPoly = Poly<FpElement>;

/// Builds a polynomial over F_p from signed little-endian integer coefficients.
FpPoly make_fp_poly(const PrimeField& f, const std::vector<std::int64_t>& coeffs);

/// Element of GF(p^k) as its coefficient vector against 1, x, ..., x^{k-1}.
struct ExtElement {
  std::vector<FpElement> coeffs;

  bool is_zero() const {
    for (auto c : coeffs)
      if (!c.is_zero()) return false;
    return true;
  }

  friend bool operator==(const ExtElement&, const ExtElement&) = default;
  friend auto operator<=>(const ExtElement&, const ExtElement&) = default;
  friend std::ostream& operator<<(std::ostream& os, const ExtElement& x);
};

inline bool is_zero(const ExtElement& x) { return x.is_zero(); }

/// GF(p^k) realised as F_p[x]/(modulus) with a monic irreducible modulus of degree k.
class ExtField {
 public:
  using Element = ExtElement;

  /// Field orders up to this bound admit integer indexing of their elements.
  static constexpr std::uint64_t kIndexLimit = std::uint64_t{1} << 40;

  /// Throws std::invalid_argument unless the modulus is monic and irreducible of degree >= 1.
  ExtField(const PrimeField& base, FpPoly modulus);

  /// Convenience: modulus from signed little-endian coefficients.
  ExtField(std::uint64_t p, const std::vector<std::int64_t>& modulus);

  const PrimeField& base() const { return base_; }
  std::uint64_t p() const { return base_.p(); }
  int degree() const { return k_; }
  const FpPoly& modulus() const { return modulus_; }

  /// p^k when it fits the index range, otherwise empty.
  std::optional<std::uint64_t> order() const { return order_; }
  bool indexable() const { return order_.has_value(); }

  ExtElement zero() const;
  ExtElement one() const;
  ExtElement constant(FpElement c) const;
  ExtElement from_integer(std::int64_t v) const { return constant(base_.from_integer(v)); }
  /// Class of x in the quotient ring.
  ExtElement generator() const;
  /// Reduces signed coefficients (at most k of them) into a field element.
  ExtElement element(const std::vector<std::int64_t>& coeffs) const;
  ExtElement from_poly(const FpPoly& a) const;
  FpPoly to_poly(const ExtElement& a) const;

  bool contains(const ExtElement& a) const;
  bool is_zero(const ExtElement& a) const { return a.is_zero(); }
  bool is_constant(const ExtElement& a) const;

  /// Bijection GF(p^k) -> [0, p^k) given by sum c_i p^i. Requires indexable().
  std::uint64_t index(const ExtElement& a) const;
  ExtElement from_index(std::uint64_t idx) const;

  ExtElement add(const ExtElement& a, const ExtElement& b) const;
  ExtElement sub(const ExtElement& a, const ExtElement& b) const;
  ExtElement neg(const ExtElement& a) const;
  ExtElement mul(const ExtElement& a, const ExtElement& b) const;
  ExtElement scale(const ExtElement& a, FpElement s) const;
  ExtElement inv(const ExtElement& a) const;
  ExtElement pow(const ExtElement& a, std::uint64_t e) const;
  ExtElement pow(const ExtElement& a, const BigInt& e) const;

  /// a^p, iterated `times` times.
  ExtElement frobenius(const ExtElement& a, int times = 1) const;

  /// Matrix of y -> a*y against the power basis; column j holds a*x^j.
  std::vector<std::vector<FpElement>> multiplication_matrix(const ExtElement& a) const;

  /// Norm as the product of the k Frobenius conjugates. Used on bulk paths.
  FpElement conjugate_norm(const ExtElement& a) const;
  /// Norm as the determinant of the multiplication matrix.
  FpElement determinant_norm(const ExtElement& a) const;
  /// Both formulations; throws std::logic_error if they disagree.
  FpElement norm(const ExtElement& a) const;

  friend bool operator==(const ExtField& a, const ExtField& b) {
    return a.base_ == b.base_ && a.modulus_ == b.modulus_;
  }

 private:
  void check(const ExtElement& a) const;

  PrimeField base_;
  FpPoly modulus_;
  int k_;
  std::optional<std::uint64_t> order_;
};

ExtElement ext_mul(const ExtElement& x, const ExtElement& y, const ExtField& field);
ExtElement ext_inv(const ExtElement& x, const ExtField& field);
ExtElement frobenius(const ExtElement& x, const ExtField& field);
FpElement norm(const ExtElement& x, const ExtField& field);

/// Determinant of a square matrix over F_p by Gaussian elimination.
FpElement determinant(std::vector<std::vector<FpElement>> m, const PrimeField& f);

}  // namespace normgraph
