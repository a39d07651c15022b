#include "normgraph/prime_field.hpp"

#include <array>
#include <stdexcept>
#include <string>

#include "normgraph/errors.hpp"

namespace normgraph {

namespace {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (e > 0) {
    if (e & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    e >>= 1;
  }
  return result;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  constexpr std::array<std::uint64_t, 12> kBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t b : kBases) {
    if (n == b) return true;
    if (n % b == 0) return false;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t b : kBases) {
    std::uint64_t x = pow_mod(b, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FpElement fp_pow(FpElement a, std::uint64_t e, std::uint64_t p) {
  return FpElement{pow_mod(a.value, e, p)};
}

FpElement fp_inv(FpElement a, std::uint64_t p) {
  if (a.value % p == 0) throw ZeroInverseError();
  // Extended Euclid keeps this valid for prime and composite moduli alike
  // whenever gcd(a, p) = 1.
  std::int64_t r0 = static_cast<std::int64_t>(p), r1 = static_cast<std::int64_t>(a.value % p);
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = s0 - q * s1;
    s0 = s1;
    s1 = tmp;
  }
  if (r0 != 1) throw ZeroInverseError();
  if (s0 < 0) s0 += static_cast<std::int64_t>(p);
  return FpElement{static_cast<std::uint64_t>(s0)};
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p >= kMaxPrime) throw std::invalid_argument("prime field modulus must be below 2^31");
  if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
}

}  // namespace normgraph
