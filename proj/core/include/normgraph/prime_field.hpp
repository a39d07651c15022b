#pragma once

#include <compare>
#include <cstdint>
#include <ostream>

namespace normgraph {

/// Canonical residue in [0, p). The modulus lives in the surrounding PrimeField.
struct FpElement {
  std::uint64_t value = 0;

  constexpr FpElement() = default;
  constexpr explicit FpElement(std::uint64_t v) : value(v) {}

  constexpr bool is_zero() const { return value == 0; }

  friend constexpr auto operator<=>(const FpElement&, const FpElement&) = default;
  friend std::ostream& operator<<(std::ostream& os, FpElement x) { return os << x.value; }
};

constexpr bool is_zero(FpElement x) { return x.is_zero(); }

__extension__ using u128 = unsigned __int128;

/// (a * b) mod m without overflow for any 64-bit modulus.
constexpr std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

/// a^e mod p by square-and-multiply; 0^0 = 1.
FpElement fp_pow(FpElement a, std::uint64_t e, std::uint64_t p);

/// Inverse mod p. Throws ZeroInverseError for a = 0.
FpElement fp_inv(FpElement a, std::uint64_t p);

/// Arithmetic context for F_p, p prime below 2^31.
class PrimeField {
 public:
  using Element = FpElement;

  static constexpr std::uint64_t kMaxPrime = std::uint64_t{1} << 31;

  /// Throws std::invalid_argument unless p is a prime below kMaxPrime.
  explicit PrimeField(std::uint64_t p);

  std::uint64_t p() const { return p_; }
  std::uint64_t characteristic() const { return p_; }

  FpElement zero() const { return FpElement{0}; }
  FpElement one() const { return FpElement{1 % p_}; }

  /// Reduces any signed integer into [0, p).
  FpElement from_integer(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += static_cast<std::int64_t>(p_);
    return FpElement{static_cast<std::uint64_t>(r)};
  }

  bool contains(FpElement a) const { return a.value < p_; }
  bool is_zero(FpElement a) const { return a.value == 0; }

  FpElement add(FpElement a, FpElement b) const {
    std::uint64_t s = a.value + b.value;
    return FpElement{s >= p_ ? s - p_ : s};
  }
  FpElement sub(FpElement a, FpElement b) const {
    return FpElement{a.value >= b.value ? a.value - b.value : a.value + p_ - b.value};
  }
  FpElement neg(FpElement a) const { return FpElement{a.value == 0 ? 0 : p_ - a.value}; }
  FpElement mul(FpElement a, FpElement b) const { return FpElement{a.value * b.value % p_}; }
  FpElement inv(FpElement a) const { return fp_inv(a, p_); }
  FpElement div(FpElement a, FpElement b) const { return mul(a, inv(b)); }
  FpElement pow(FpElement a, std::uint64_t e) const { return fp_pow(a, e, p_); }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint64_t p_;
};

}  // namespace normgraph
