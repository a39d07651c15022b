#pragma once

// K_{4,6} witnesses in P(p, 4) over GF(p^3) = F_p[x]/(x^3 - 2).
//
// A prime qualifies when p = 1 (mod 3), x^3 - 2 and x^3 - 3 stay irreducible,
// x^3 - 6 splits into distinct linear factors, and p divides neither
// disc((x^3-2)(x^3-3)) = 26244 nor disc(x^3+21x^2+3x+7) = -248832. For such p
// the sets
//   A = {(0,3), (1,4), (2,5), (theta+1, 6)}
//   B = {(zeta^k theta^2 - 1, 1)} u {(-(1-eta)/4 theta^2 - (1+eta)/2 theta - 1, (1+3eta^2)/4)}
// with zeta a primitive cube root of unity and eta running over the roots of
// g = x^3 + 21x^2 + 3x + 7 form a complete bipartite subgraph.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "normgraph/errors.hpp"
#include "normgraph/ext_field.hpp"
#include "normgraph/int_poly.hpp"
#include "normgraph/norm_graph.hpp"

namespace normgraph {

inline constexpr std::int64_t kDiscriminantF = 26244;
inline constexpr std::int64_t kDiscriminantG = -248832;

/// (x^3 - 2)(x^3 - 3)
IntPoly k46_splitting_polynomial();
/// x^3 + 21x^2 + 3x + 7
IntPoly k46_eta_polynomial();

/// Recomputes both discriminants from the integer polynomials (once per
/// process) and throws std::logic_error if either differs from the constants.
void check_discriminant_constants();

enum class Rejection {
  kNotPrime,
  kDividesDiscriminant,
  kNotOneModThree,
  kTwoIsCube,
  kThreeIsCube,
  kSixNotCube,
  kEtaRootsDegenerate,
};

/// Short machine token, e.g. "6_not_cube".
std::string rejection_token(Rejection r);
/// Human sentence for prime p, e.g. "6 is not a cube mod 13".
std::string rejection_message(Rejection r, std::uint64_t p);

struct QualifyingCertificate {
  std::uint64_t p = 0;
  FpElement zeta;                  // smallest primitive cube root of unity
  std::array<FpElement, 3> g_roots;  // ascending
  bool x3_minus_2_irreducible = false;
  bool x3_minus_3_irreducible = false;
  bool x3_minus_6_splits = false;
  bool coprime_to_disc_f = false;
  bool coprime_to_disc_g = false;
};

struct Qualification {
  std::optional<QualifyingCertificate> certificate;
  std::optional<Rejection> rejection;

  explicit operator bool() const { return certificate.has_value(); }
};

/// First failed polynomial condition, or empty when p qualifies.
std::optional<Rejection> polynomial_rejection(std::uint64_t p);
/// Same verdict through cubic residues: p = 1 mod 3, 2 not a cube, 6 a cube.
std::optional<Rejection> residue_rejection(std::uint64_t p);

/// Full certificate or the first failed condition. Both formulations are
/// evaluated; disagreement throws std::logic_error.
Qualification is_qualifying_prime(std::uint64_t p);

/// Primes up to limit, ascending (sieve of Eratosthenes).
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

struct SieveEntry {
  std::uint64_t p = 0;
  std::optional<Rejection> rejection;  // empty when qualifying
  bool qualifying() const { return !rejection; }
};

struct SieveResult {
  std::uint64_t limit = 0;
  std::vector<SieveEntry> entries;  // every prime <= limit
  std::vector<std::uint64_t> qualifying;
  std::uint64_t prime_count = 0;
  double ratio() const {
    return prime_count == 0 ? 0.0 : static_cast<double>(qualifying.size()) / static_cast<double>(prime_count);
  }
};

/// Classifies every prime up to limit with both formulations (they must agree).
SieveResult sieve_qualifying(std::uint64_t limit, unsigned jobs = 1);

struct WitnessK46 {
  QualifyingCertificate certificate;
  ExtField field;  // F_p[x]/(x^3 - 2)
  std::vector<Vertex> A;
  std::vector<Vertex> B;
};

/// GF(p^3) as F_p[x]/(x^3 - 2).
ExtField cube_root_two_field(std::uint64_t p);

WitnessK46 build_witness(const QualifyingCertificate& cert);

/// One closed-form norm identity for a B vertex beta = a theta^2 + b theta - 1
/// against the A vertex of the same index: lhs = N(alpha + beta), rhs = u*v.
struct IdentityCheck {
  std::size_t b_index = 0;
  int identity = 0;  // 0..3, matching A's order
  FpElement lhs;
  FpElement rhs;
  bool ok = false;
};

struct K46Report {
  BicliqueReport graph;
  bool a_canonical = false;      // A is exactly {(0,3), (1,4), (2,5), (theta+1,6)}
  bool b_shape = false;          // every beta has constant term -1
  std::vector<IdentityCheck> identities;

  std::size_t checks_total() const { return graph.pairs.size() + identities.size(); }
  std::size_t checks_passed() const;
  bool passed() const;
};

/// Graph-level (24 adjacency checks on P(p,4)) and identity-level (24
/// closed-form norm identities) verification; both must pass.
K46Report verify_witness(const WitnessK46& w);

}  // namespace normgraph
