#pragma once

// Polynomial algorithms over F_p and its extensions: evaluation, gcd,
// Rabin irreducibility, root finding, power residues and roots of unity.

#include <cstdint>
#include <optional>
#include <vector>

#include "normgraph/ext_field.hpp"
#include "normgraph/poly_core.hpp"
#include "normgraph/prime_field.hpp"

namespace normgraph {

using ExtPoly = Poly<ExtElement>;

/// Exhaustive root scans are refused above this prime.
inline constexpr std::uint64_t kRootScanLimit = std::uint64_t{1} << 22;

FpElement poly_eval(const FpPoly& h, FpElement x, const PrimeField& f);
/// Evaluates a base-field polynomial at a point of the extension.
ExtElement poly_eval(const FpPoly& h, const ExtElement& x, const ExtField& field);
ExtElement poly_eval(const ExtPoly& h, const ExtElement& x, const ExtField& field);

FpPoly poly_gcd(const FpPoly& a, const FpPoly& b, const PrimeField& f);
ExtPoly poly_gcd(const ExtPoly& a, const ExtPoly& b, const ExtField& field);

/// Embeds coefficients of h into the extension.
ExtPoly lift(const FpPoly& h, const ExtField& field);

/// Rabin's test. Throws std::invalid_argument for constant input.
bool is_irreducible(const FpPoly& h, const PrimeField& f);

/// Root-existence criterion, valid for degree 1..3 only; p must be below kRootScanLimit.
bool is_irreducible_by_roots(const FpPoly& h, const PrimeField& f);

/// True iff h is a product of deg h distinct monic linear factors over F_p.
bool splits_into_distinct_linear(const FpPoly& h, const PrimeField& f);

struct BaseRoot {
  FpElement value;
  bool repeated = false;  // also a root of h'
  friend bool operator==(const BaseRoot&, const BaseRoot&) = default;
};

/// All roots in F_p by exhaustive scan, ascending. Throws GuardExceeded for p >= kRootScanLimit.
std::vector<BaseRoot> roots_in_base(const FpPoly& h, const PrimeField& f);

/// One root of h in the extension via seeded equal-degree splitting.
/// h must be irreducible over F_p with degree dividing the extension degree;
/// throws NonSplittingError when that is detectably false.
ExtElement find_root_in_ext(const FpPoly& h, const ExtField& field, std::uint64_t seed);

/// All roots of a squarefree polynomial that splits completely over F_p, ascending,
/// found by seeded equal-degree splitting (no size guard).
std::vector<FpElement> split_roots(const FpPoly& h, const PrimeField& f, std::uint64_t seed);

/// True iff a is an m-th power in F_p^*. Throws std::invalid_argument for a = 0.
bool power_residue(FpElement a, std::uint64_t m, std::uint64_t p);

/// Smallest element of exact multiplicative order n, or empty if n does not divide p-1.
std::optional<FpElement> primitive_nth_root(std::uint64_t n, std::uint64_t p);

/// Distinct prime divisors of n, ascending.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

}  // namespace normgraph
