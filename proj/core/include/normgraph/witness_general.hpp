#pragma once

// K_{t-1,m} witnesses in P(p, t). With theta_1..theta_m the roots of x^m - 2
// in F_p and f_i = x^{t-1} - x + theta_i, a shift r for which every f_i - r is
// irreducible gives
//   A = {(zeta^k, 1) : 1 <= k <= t-2} u {(0, 1)}
//   B = {(-alpha_i, theta_i - r)},   alpha_i a root of f_i - r,
// over GF(p^{t-1}) = F_p[x]/(f_1 - r).

#include <cstdint>
#include <vector>

#include "normgraph/ext_field.hpp"
#include "normgraph/norm_graph.hpp"

namespace normgraph {

struct GeneralParams {
  int t = 0;
  int m = 0;
  std::uint64_t p = 0;
  FpElement r;
  std::vector<FpElement> thetas;  // roots of x^m - 2, ascending
  FpElement zeta;                 // smallest element of order t-2

  friend bool operator==(const GeneralParams&, const GeneralParams&) = default;
};

/// x^{t-1} - x + (theta - r).
FpPoly shifted_polynomial(const PrimeField& f, int t, FpElement theta, FpElement r);

/// Empty unless p is prime, p = 1 mod (t-2) and x^m - 2 has m distinct roots
/// mod p; otherwise the ascending roots.
std::vector<FpElement> distinct_roots_of_x_m_minus_2(std::uint64_t p, int m);

struct SearchStats {
  std::uint64_t primes_examined = 0;
  std::uint64_t primes_eligible = 0;  // passed the congruence and root conditions
  std::uint64_t shifts_checked = 0;   // (p, r) candidates on eligible primes
  std::uint64_t hits = 0;
};

struct SearchResult {
  std::vector<GeneralParams> params;  // ascending (p, r)
  SearchStats stats;
};

/// Scans primes p <= prime_limit in fixed batches; max_results = 0 means no cap.
/// Output and statistics are independent of `jobs`.
SearchResult search_parameters(int t, int m, std::uint64_t prime_limit, std::size_t max_results = 0,
                               unsigned jobs = 1);

std::vector<GeneralParams> find_parameters(int t, int m, std::uint64_t prime_limit, std::size_t max_results = 0,
                                           unsigned jobs = 1);

/// Throws std::invalid_argument describing the first violated invariant.
void validate_params(const GeneralParams& params);

struct GeneralWitness {
  GeneralParams params;
  ExtField field;  // F_p[x]/(f_1 - r)
  std::vector<ExtElement> alphas;
  std::vector<Vertex> A;
  std::vector<Vertex> B;
};

/// alpha_1 is the class of x; the others come from seeded root extraction.
/// Throws NonSplittingError if some f_i - r fails to split, DegeneracyError on
/// collisions.
GeneralWitness build_general_witness(const GeneralParams& params, std::uint64_t seed = 0);

struct NormIdentityCheck {
  std::size_t a_index = 0;
  std::size_t b_index = 0;
  FpElement norm;      // N(c - alpha_i)
  FpElement value;     // (f_i - r)(c)
  FpElement expected;  // theta_i - r
  bool ok = false;
};

struct GeneralReport {
  bool params_valid = false;
  bool alphas_are_roots = false;  // (f_i - r)(alpha_i) = 0 with alpha_i = -B_i.alpha
  BicliqueReport graph;
  std::vector<NormIdentityCheck> identities;

  std::size_t identities_passed() const;
  bool passed() const;
};

/// Re-derives the field from the parameters and checks A, B against them.
GeneralReport verify_general(const GeneralParams& params, const std::vector<Vertex>& A, const std::vector<Vertex>& B);
GeneralReport verify_general_witness(const GeneralWitness& w);

}  // namespace normgraph
