#pragma once

// The projective norm graph P(p, t): vertices GF(p^{t-1}) x F_p^*, with
// (alpha, a) ~ (beta, b) iff N(alpha + beta) = a*b. Loops are discarded.

#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "normgraph/ext_field.hpp"
#include "normgraph/prime_field.hpp"

namespace normgraph {

struct Vertex {
  ExtElement alpha;
  FpElement a;

  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

using VertexId = std::uint64_t;

/// Lexicographically smallest monic irreducible of the given degree, comparing
/// coefficients from x^{d-1} down to x^0.
FpPoly smallest_irreducible(const PrimeField& f, int degree);

class NormGraph {
 public:
  /// Graphs up to this many vertices get a norm table, neighbor bitsets and edge export.
  static constexpr std::uint64_t kMaterializeLimit = std::uint64_t{1} << 22;
  /// Neighbor scans walk the whole field; refused above this field order.
  static constexpr std::uint64_t kScanLimit = std::uint64_t{1} << 26;

  /// Throws std::invalid_argument for composite p, t < 3, or a modulus that is
  /// not monic irreducible of degree t-1. Without a modulus the smallest
  /// irreducible is chosen.
  NormGraph(std::uint64_t p, int t, std::optional<FpPoly> modulus = std::nullopt);

  std::uint64_t p() const { return field_.p(); }
  int t() const { return t_; }
  const ExtField& field() const { return field_; }
  const PrimeField& base() const { return field_.base(); }

  /// p^{t-1} (p-1) when vertex ids are available.
  std::optional<std::uint64_t> vertex_count() const { return vertex_count_; }
  bool indexable() const { return vertex_count_.has_value(); }
  bool materializable() const { return vertex_count_ && *vertex_count_ <= kMaterializeLimit; }

  bool contains(const Vertex& v) const;
  /// index(alpha) * (p-1) + (a-1).
  VertexId id(const Vertex& v) const;
  Vertex vertex(VertexId id) const;

  /// Norm through the precomputed table when present.
  FpElement norm_of(const ExtElement& x) const;

  /// Throws std::invalid_argument when u == v.
  bool adjacent(const Vertex& u, const Vertex& v) const;

  std::vector<Vertex> neighbors(const Vertex& u) const;
  /// Ascending.
  std::vector<VertexId> neighbor_ids(VertexId u) const;
  /// Neighbor set of u as packed 64-bit words over [0, n).
  std::vector<std::uint64_t> neighbor_bits(VertexId u) const;

  /// All vertices outside S adjacent to every member of S. S must be
  /// duplicate-free with 1 <= |S| <= 8.
  std::vector<Vertex> common_neighbors(std::span<const Vertex> s) const;
  /// Bitset intersection; requires materializable().
  std::vector<VertexId> common_neighbor_ids(std::span<const VertexId> s) const;
  /// Field scan checking |S| norm equations per candidate.
  std::vector<VertexId> common_neighbor_ids_by_scan(std::span<const VertexId> s) const;

  /// Writes "u v" lines with u < v in ascending order; returns the edge count.
  std::uint64_t write_edge_list(std::ostream& out) const;

 private:
  std::uint64_t add_index(std::uint64_t x, std::uint64_t y) const;
  void require_scan() const;
  void check_subset(std::size_t size) const;

  int t_;
  ExtField field_;
  std::optional<std::uint64_t> vertex_count_;
  std::vector<std::uint64_t> digit_weight_;
  std::shared_ptr<const std::vector<std::uint32_t>> norm_table_;
};

NormGraph make_graph(std::uint64_t p, int t, std::optional<FpPoly> modulus = std::nullopt);

struct PairCheck {
  std::size_t left = 0;
  std::size_t right = 0;
  FpElement norm;     // N(alpha_l + alpha_r)
  FpElement product;  // a_l * a_r
  bool adjacent = false;
};

struct BicliqueReport {
  bool well_formed = true;  // every vertex lies in the graph
  bool left_distinct = true;
  bool right_distinct = true;
  bool disjoint = true;
  std::vector<PairCheck> pairs;

  std::size_t edges_present() const;
  std::vector<PairCheck> failures() const;
  bool passed() const;
};

BicliqueReport verify_biclique(const NormGraph& g, std::span<const Vertex> left, std::span<const Vertex> right);

/// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

struct CensusResult {
  std::size_t max_common = 0;
  std::vector<VertexId> argmax;  // ascending ids of one maximizing subset
  std::uint64_t subsets = 0;     // subsets examined
};

/// Exhaustive maximum of |common neighbors| over all k-subsets, split across
/// `jobs` workers by colex rank. Ties resolve to the smallest rank, so the
/// result does not depend on `jobs`. Throws GuardExceeded when C(n, k) > budget.
CensusResult census_max_common(const NormGraph& g, int k, std::uint64_t budget = 10'000'000, unsigned jobs = 1);

/// Maximum over the planted subsets followed by `trials` seeded uniform
/// k-subsets. Ties resolve to the earliest subset.
CensusResult sample_max_common(const NormGraph& g, int k, std::uint64_t trials, std::uint64_t seed,
                               unsigned jobs = 1, const std::vector<std::vector<VertexId>>& planted = {});

}  // namespace normgraph
