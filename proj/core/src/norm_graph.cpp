#include "normgraph/norm_graph.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

#include "normgraph/errors.hpp"
#include "normgraph/parallel.hpp"
#include "normgraph/poly.hpp"

namespace normgraph {

namespace {

constexpr std::uint64_t kFullIndexLimit = std::uint64_t{1} << 14;
constexpr std::uint64_t kCensusChunk = std::uint64_t{1} << 15;

bool has_duplicates(std::vector<VertexId> ids) {
  std::sort(ids.begin(), ids.end());
  return std::adjacent_find(ids.begin(), ids.end()) != ids.end();
}

// Neighbor rows as packed words; precomputed for small graphs, built on demand otherwise.
class NeighborRows {
 public:
  explicit NeighborRows(const NormGraph& g) : g_(g), n_(*g.vertex_count()), words_((n_ + 63) / 64) {
    if (n_ <= kFullIndexLimit) {
      rows_.resize(n_ * words_);
      for (VertexId u = 0; u < n_; ++u) {
        auto bits = g.neighbor_bits(u);
        std::copy(bits.begin(), bits.end(), rows_.begin() + static_cast<std::ptrdiff_t>(u * words_));
      }
    }
  }

  std::size_t words() const { return words_; }

  // Popcount of the intersection of the rows of `subset`.
  std::size_t common_count(std::span<const VertexId> subset, std::vector<std::uint64_t>& scratch) const {
    scratch.assign(words_, ~std::uint64_t{0});
    std::vector<std::uint64_t> owned;
    for (VertexId v : subset) {
      const std::uint64_t* row;
      if (!rows_.empty()) {
        row = rows_.data() + v * words_;
      } else {
        owned = g_.neighbor_bits(v);
        row = owned.data();
      }
      for (std::size_t w = 0; w < words_; ++w) scratch[w] &= row[w];
    }
    std::size_t count = 0;
    for (auto w : scratch) count += static_cast<std::size_t>(std::popcount(w));
    return count;
  }

 private:
  const NormGraph& g_;
  std::uint64_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> rows_;
};

// Colex order: rank(c) = sum_i C(c_i, i+1).
std::vector<VertexId> colex_unrank(std::uint64_t rank, int k, std::uint64_t n) {
  std::vector<VertexId> c(static_cast<std::size_t>(k));
  std::uint64_t hi = n;
  for (int i = k; i >= 1; --i) {
    // largest v < hi with C(v, i) <= rank
    std::uint64_t lo = static_cast<std::uint64_t>(i - 1), top = hi - 1;
    while (lo < top) {
      std::uint64_t mid = lo + (top - lo + 1) / 2;
      if (binomial(mid, static_cast<std::uint64_t>(i)) <= rank) lo = mid;
      else top = mid - 1;
    }
    c[static_cast<std::size_t>(i - 1)] = lo;
    rank -= binomial(lo, static_cast<std::uint64_t>(i));
    hi = lo;
  }
  return c;
}

void colex_next(std::vector<VertexId>& c) {
  const std::size_t k = c.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (i + 1 == k || c[i] + 1 < c[i + 1]) {
      ++c[i];
      for (std::size_t j = 0; j < i; ++j) c[j] = j;
      return;
    }
  }
}

void require_census_graph(const NormGraph& g, int k) {
  if (!g.materializable()) throw GuardExceeded("census needs a graph with at most 2^22 vertices");
  if (k < 1 || k > 8) throw std::invalid_argument("subset size must be between 1 and 8");
  if (static_cast<std::uint64_t>(k) > *g.vertex_count()) throw std::invalid_argument("subset larger than graph");
}

}  // namespace

FpPoly smallest_irreducible(const PrimeField& f, int degree) {
  if (degree < 1) throw std::invalid_argument("irreducible polynomial degree must be positive");
  std::vector<FpElement> c(static_cast<std::size_t>(degree) + 1);
  c.back() = f.one();
  while (true) {
    FpPoly candidate{c};
    if (is_irreducible(candidate, f)) return candidate;
    // odometer over the non-leading coefficients, x^0 least significant
    std::size_t i = 0;
    while (i < static_cast<std::size_t>(degree)) {
      if (++c[i].value < f.p()) break;
      c[i].value = 0;
      ++i;
    }
    if (i == static_cast<std::size_t>(degree)) throw std::logic_error("no irreducible polynomial found");
  }
}

NormGraph::NormGraph(std::uint64_t p, int t, std::optional<FpPoly> modulus)
    : t_(t), field_([&] {
        if (t < 3) throw std::invalid_argument("norm graph needs t >= 3");
        PrimeField base(p);
        if (modulus && modulus->degree() != t - 1)
          throw std::invalid_argument("modulus degree must equal t - 1 = " + std::to_string(t - 1));
        return ExtField(base, modulus ? *modulus : smallest_irreducible(base, t - 1));
      }()) {
  if (auto q = field_.order(); q && *q <= std::numeric_limits<std::uint64_t>::max() / 2 / (p - 1))
    vertex_count_ = *q * (p - 1);
  if (field_.order()) {
    std::uint64_t w = 1;
    for (int i = 0; i < field_.degree(); ++i, w *= p) digit_weight_.push_back(w);
  }
  if (materializable()) {
    const std::uint64_t q = *field_.order();
    auto table = std::make_shared<std::vector<std::uint32_t>>(q);
    for (std::uint64_t idx = 0; idx < q; ++idx)
      (*table)[idx] = static_cast<std::uint32_t>(field_.conjugate_norm(field_.from_index(idx)).value);
    norm_table_ = std::move(table);
  }
}

NormGraph make_graph(std::uint64_t p, int t, std::optional<FpPoly> modulus) {
  return NormGraph(p, t, std::move(modulus));
}

bool NormGraph::contains(const Vertex& v) const {
  return field_.contains(v.alpha) && !v.a.is_zero() && base().contains(v.a);
}

VertexId NormGraph::id(const Vertex& v) const {
  if (!indexable()) throw GuardExceeded("graph too large for vertex ids");
  if (!contains(v)) throw std::invalid_argument("vertex does not belong to the graph");
  return field_.index(v.alpha) * (p() - 1) + (v.a.value - 1);
}

Vertex NormGraph::vertex(VertexId id) const {
  if (!indexable()) throw GuardExceeded("graph too large for vertex ids");
  if (id >= *vertex_count_) throw std::out_of_range("vertex id out of range");
  return Vertex{field_.from_index(id / (p() - 1)), FpElement{id % (p() - 1) + 1}};
}

FpElement NormGraph::norm_of(const ExtElement& x) const {
  if (norm_table_) return FpElement{(*norm_table_)[field_.index(x)]};
  return field_.conjugate_norm(x);
}

bool NormGraph::adjacent(const Vertex& u, const Vertex& v) const {
  if (!contains(u) || !contains(v)) throw std::invalid_argument("vertex does not belong to the graph");
  if (u == v) throw std::invalid_argument("adjacency is defined on distinct vertices");
  return norm_of(field_.add(u.alpha, v.alpha)) == base().mul(u.a, v.a);
}

std::uint64_t NormGraph::add_index(std::uint64_t x, std::uint64_t y) const {
  const std::uint64_t p = this->p();
  std::uint64_t r = 0;
  for (std::uint64_t w : digit_weight_) {
    std::uint64_t s = x % p + y % p;
    if (s >= p) s -= p;
    r += s * w;
    x /= p;
    y /= p;
  }
  return r;
}

void NormGraph::require_scan() const {
  if (!indexable() || *field_.order() > kScanLimit) throw GuardExceeded("field too large for a neighbor scan");
}

void NormGraph::check_subset(std::size_t size) const {
  if (size < 1 || size > 8) throw std::invalid_argument("common neighborhood needs 1 to 8 vertices");
}

std::vector<VertexId> NormGraph::neighbor_ids(VertexId u) const {
  require_scan();
  if (u >= *vertex_count_) throw std::out_of_range("vertex id out of range");
  const std::uint64_t pm1 = p() - 1;
  const std::uint64_t q = *field_.order();
  const std::uint64_t ai = u / pm1;
  const FpElement a_inv = base().inv(FpElement{u % pm1 + 1});
  std::vector<VertexId> out;
  out.reserve(q);
  for (std::uint64_t bi = 0; bi < q; ++bi) {
    const std::uint64_t s = add_index(ai, bi);
    if (s == 0) continue;
    const FpElement n = norm_table_ ? FpElement{(*norm_table_)[s]} : field_.conjugate_norm(field_.from_index(s));
    const FpElement b = base().mul(n, a_inv);
    const VertexId w = bi * pm1 + (b.value - 1);
    if (w != u) out.push_back(w);
  }
  return out;
}

std::vector<Vertex> NormGraph::neighbors(const Vertex& u) const {
  std::vector<Vertex> out;
  for (VertexId w : neighbor_ids(id(u))) out.push_back(vertex(w));
  return out;
}

std::vector<std::uint64_t> NormGraph::neighbor_bits(VertexId u) const {
  if (!materializable()) throw GuardExceeded("neighbor bitsets need at most 2^22 vertices");
  std::vector<std::uint64_t> bits((*vertex_count_ + 63) / 64, 0);
  for (VertexId w : neighbor_ids(u)) bits[w / 64] |= std::uint64_t{1} << (w % 64);
  return bits;
}

std::vector<VertexId> NormGraph::common_neighbor_ids(std::span<const VertexId> s) const {
  check_subset(s.size());
  if (has_duplicates({s.begin(), s.end()})) throw std::invalid_argument("vertex set contains duplicates");
  if (!materializable()) return common_neighbor_ids_by_scan(s);
  std::vector<std::uint64_t> acc = neighbor_bits(s[0]);
  for (std::size_t i = 1; i < s.size(); ++i) {
    const auto row = neighbor_bits(s[i]);
    for (std::size_t w = 0; w < acc.size(); ++w) acc[w] &= row[w];
  }
  std::vector<VertexId> out;
  for (std::size_t w = 0; w < acc.size(); ++w)
    for (std::uint64_t bits = acc[w]; bits != 0; bits &= bits - 1)
      out.push_back(w * 64 + static_cast<std::uint64_t>(std::countr_zero(bits)));
  return out;
}

std::vector<VertexId> NormGraph::common_neighbor_ids_by_scan(std::span<const VertexId> s) const {
  check_subset(s.size());
  if (has_duplicates({s.begin(), s.end()})) throw std::invalid_argument("vertex set contains duplicates");
  require_scan();
  const std::uint64_t pm1 = p() - 1;
  const std::uint64_t q = *field_.order();
  std::vector<std::uint64_t> alpha;
  std::vector<FpElement> a;
  for (VertexId v : s) {
    if (v >= *vertex_count_) throw std::out_of_range("vertex id out of range");
    alpha.push_back(v / pm1);
    a.push_back(FpElement{v % pm1 + 1});
  }
  auto norm_at = [&](std::uint64_t idx) {
    return norm_table_ ? FpElement{(*norm_table_)[idx]} : field_.conjugate_norm(field_.from_index(idx));
  };
  const FpElement a0_inv = base().inv(a[0]);
  std::vector<VertexId> out;
  for (std::uint64_t bi = 0; bi < q; ++bi) {
    const std::uint64_t s0 = add_index(alpha[0], bi);
    if (s0 == 0) continue;
    const FpElement b = base().mul(norm_at(s0), a0_inv);
    bool ok = true;
    for (std::size_t j = 1; j < s.size() && ok; ++j) ok = norm_at(add_index(alpha[j], bi)) == base().mul(a[j], b);
    const VertexId w = bi * pm1 + (b.value - 1);
    if (ok && std::find(s.begin(), s.end(), w) == s.end()) out.push_back(w);
  }
  return out;
}

std::vector<Vertex> NormGraph::common_neighbors(std::span<const Vertex> s) const {
  check_subset(s.size());
  std::vector<VertexId> ids;
  for (const auto& v : s) ids.push_back(id(v));
  std::vector<Vertex> out;
  for (VertexId w : common_neighbor_ids(ids)) out.push_back(vertex(w));
  return out;
}

std::uint64_t NormGraph::write_edge_list(std::ostream& out) const {
  if (!materializable()) throw GuardExceeded("edge export needs at most 2^22 vertices");
  std::uint64_t edges = 0;
  for (VertexId u = 0; u < *vertex_count_; ++u) {
    for (VertexId w : neighbor_ids(u)) {
      if (w <= u) continue;
      out << u << ' ' << w << '\n';
      ++edges;
    }
  }
  return edges;
}

std::size_t BicliqueReport::edges_present() const {
  return static_cast<std::size_t>(std::count_if(pairs.begin(), pairs.end(), [](const PairCheck& c) { return c.adjacent; }));
}

std::vector<PairCheck> BicliqueReport::failures() const {
  std::vector<PairCheck> out;
  std::copy_if(pairs.begin(), pairs.end(), std::back_inserter(out), [](const PairCheck& c) { return !c.adjacent; });
  return out;
}

bool BicliqueReport::passed() const {
  return well_formed && left_distinct && right_distinct && disjoint && !pairs.empty() &&
         edges_present() == pairs.size();
}

BicliqueReport verify_biclique(const NormGraph& g, std::span<const Vertex> left, std::span<const Vertex> right) {
  BicliqueReport report;
  auto distinct = [](std::span<const Vertex> vs) {
    std::vector<Vertex> sorted(vs.begin(), vs.end());
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  };
  for (const auto& v : left) report.well_formed = report.well_formed && g.contains(v);
  for (const auto& v : right) report.well_formed = report.well_formed && g.contains(v);
  report.left_distinct = distinct(left);
  report.right_distinct = distinct(right);
  for (const auto& v : left)
    if (std::find(right.begin(), right.end(), v) != right.end()) report.disjoint = false;
  if (!report.well_formed) return report;

  const ExtField& field = g.field();
  for (std::size_t i = 0; i < left.size(); ++i) {
    for (std::size_t j = 0; j < right.size(); ++j) {
      PairCheck check{i, j, field.norm(field.add(left[i].alpha, right[j].alpha)),
                      g.base().mul(left[i].a, right[j].a), false};
      check.adjacent = left[i] != right[j] && check.norm == check.product;
      report.pairs.push_back(check);
    }
  }
  return report;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  u128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

CensusResult census_max_common(const NormGraph& g, int k, std::uint64_t budget, unsigned jobs) {
  require_census_graph(g, k);
  const std::uint64_t n = *g.vertex_count();
  const std::uint64_t total = binomial(n, static_cast<std::uint64_t>(k));
  if (total > budget)
    throw GuardExceeded("C(" + std::to_string(n) + ", " + std::to_string(k) + ") = " + std::to_string(total) +
                        " exceeds the census budget " + std::to_string(budget));
  const NeighborRows rows(g);
  const std::uint64_t chunks = (total + kCensusChunk - 1) / kCensusChunk;
  struct Best {
    std::size_t count = 0;
    std::uint64_t rank = 0;
  };
  std::vector<Best> best(chunks);
  parallel_for(chunks, jobs, [&](std::size_t chunk) {
    const std::uint64_t lo = chunk * kCensusChunk;
    const std::uint64_t hi = std::min(total, lo + kCensusChunk);
    auto comb = colex_unrank(lo, k, n);
    std::vector<std::uint64_t> scratch;
    Best local{0, lo};
    for (std::uint64_t r = lo; r < hi; ++r) {
      const std::size_t c = rows.common_count(comb, scratch);
      if (c > local.count) local = {c, r};
      if (r + 1 < hi) colex_next(comb);
    }
    best[chunk] = local;
  });
  CensusResult result;
  result.subsets = total;
  Best overall{0, 0};
  for (const auto& b : best)
    if (b.count > overall.count) overall = b;
  result.max_common = overall.count;
  if (total > 0) result.argmax = colex_unrank(overall.rank, k, n);
  return result;
}

CensusResult sample_max_common(const NormGraph& g, int k, std::uint64_t trials, std::uint64_t seed, unsigned jobs,
                               const std::vector<std::vector<VertexId>>& planted) {
  require_census_graph(g, k);
  if (trials < 1) throw std::invalid_argument("sampled census needs at least one trial");
  const std::uint64_t n = *g.vertex_count();
  std::vector<std::vector<VertexId>> subsets;
  subsets.reserve(planted.size() + trials);
  for (auto s : planted) {
    if (s.size() != static_cast<std::size_t>(k)) throw std::invalid_argument("planted subset has the wrong size");
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end() || s.back() >= n)
      throw std::invalid_argument("planted subset is not a valid vertex set");
    subsets.push_back(std::move(s));
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, n - 1);
  for (std::uint64_t t = 0; t < trials; ++t) {
    std::vector<VertexId> s;
    while (s.size() < static_cast<std::size_t>(k)) {
      const VertexId v = pick(rng);
      if (std::find(s.begin(), s.end(), v) == s.end()) s.push_back(v);
    }
    std::sort(s.begin(), s.end());
    subsets.push_back(std::move(s));
  }

  const NeighborRows rows(g);
  constexpr std::size_t kChunk = 4096;
  const std::size_t chunks = (subsets.size() + kChunk - 1) / kChunk;
  std::vector<std::pair<std::size_t, std::size_t>> best(chunks);  // (count, subset index)
  parallel_for(chunks, jobs, [&](std::size_t chunk) {
    const std::size_t lo = chunk * kChunk, hi = std::min(subsets.size(), lo + kChunk);
    std::vector<std::uint64_t> scratch;
    std::pair<std::size_t, std::size_t> local{0, lo};
    for (std::size_t i = lo; i < hi; ++i) {
      const std::size_t c = rows.common_count(subsets[i], scratch);
      if (c > local.first) local = {c, i};
    }
    best[chunk] = local;
  });
  std::pair<std::size_t, std::size_t> overall{0, 0};
  for (const auto& b : best)
    if (b.first > overall.first) overall = b;
  CensusResult result;
  result.max_common = overall.first;
  result.argmax = subsets[overall.second];
  result.subsets = subsets.size();
  return result;
}

}  // namespace normgraph
