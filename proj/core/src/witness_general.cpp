#include "normgraph/witness_general.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "normgraph/errors.hpp"
#include "normgraph/parallel.hpp"
#include "normgraph/poly.hpp"
#include "normgraph/witness_k46.hpp"

namespace normgraph {

namespace {

constexpr std::size_t kPrimeBatch = 64;

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t i) {
  // splitmix64 finalizer over (seed, i)
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (i + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

void require_shape(int t, int m) {
  if (t < 4) throw std::invalid_argument("t must be at least 4");
  if (m < 1) throw std::invalid_argument("m must be at least 1");
}

struct PrimeOutcome {
  bool eligible = false;
  std::uint64_t shifts = 0;
  std::vector<GeneralParams> hits;
};

PrimeOutcome examine_prime(int t, int m, std::uint64_t p) {
  PrimeOutcome out;
  const auto thetas = distinct_roots_of_x_m_minus_2(p, m);
  if (thetas.empty()) return out;
  const auto zeta = primitive_nth_root(static_cast<std::uint64_t>(t - 2), p);
  if (!zeta) return out;
  out.eligible = true;

  // x^{t-1} - x + c irreducible, for every constant c.
  const PrimeField f(p);
  std::vector<bool> good(p);
  for (std::uint64_t c = 0; c < p; ++c)
    good[c] = is_irreducible(shifted_polynomial(f, t, FpElement{c}, f.zero()), f);

  for (std::uint64_t r = 0; r < p; ++r) {
    ++out.shifts;
    const bool all = std::all_of(thetas.begin(), thetas.end(),
                                 [&](FpElement th) { return good[f.sub(th, FpElement{r}).value]; });
    if (all) out.hits.push_back({t, m, p, FpElement{r}, thetas, *zeta});
  }
  return out;
}

}  // namespace

FpPoly shifted_polynomial(const PrimeField& f, int t, FpElement theta, FpElement r) {
  std::vector<FpElement> c(static_cast<std::size_t>(t), f.zero());
  c[0] = f.sub(theta, r);
  c[1] = f.add(c[1], f.neg(f.one()));
  c[static_cast<std::size_t>(t - 1)] = f.add(c[static_cast<std::size_t>(t - 1)], f.one());
  return FpPoly(std::move(c));
}

std::vector<FpElement> distinct_roots_of_x_m_minus_2(std::uint64_t p, int m) {
  if (m < 1 || !is_prime(p) || p >= PrimeField::kMaxPrime) return {};
  const PrimeField f(p);
  if (m == 1) return {f.from_integer(2)};
  std::vector<std::int64_t> coeffs(static_cast<std::size_t>(m) + 1, 0);
  coeffs[0] = -2;
  coeffs.back() = 1;
  const FpPoly h = make_fp_poly(f, coeffs);
  std::vector<FpElement> roots;
  if (p < kRootScanLimit) {
    for (const auto& r : roots_in_base(h, f))
      if (!r.repeated) roots.push_back(r.value);
  } else if (splits_into_distinct_linear(h, f)) {
    roots = split_roots(h, f, 0);
  }
  if (roots.size() != static_cast<std::size_t>(m)) return {};
  return roots;
}

SearchResult search_parameters(int t, int m, std::uint64_t prime_limit, std::size_t max_results, unsigned jobs) {
  require_shape(t, m);
  SearchResult result;
  const auto primes = primes_up_to(std::min<std::uint64_t>(prime_limit, PrimeField::kMaxPrime - 1));
  for (std::size_t start = 0; start < primes.size(); start += kPrimeBatch) {
    const std::size_t count = std::min(kPrimeBatch, primes.size() - start);
    std::vector<PrimeOutcome> outcomes(count);
    parallel_for(count, jobs, [&](std::size_t i) { outcomes[i] = examine_prime(t, m, primes[start + i]); });
    for (auto& o : outcomes) {
      ++result.stats.primes_examined;
      if (o.eligible) ++result.stats.primes_eligible;
      result.stats.shifts_checked += o.shifts;
      result.stats.hits += o.hits.size();
      for (auto& h : o.hits) result.params.push_back(std::move(h));
    }
    if (max_results != 0 && result.params.size() >= max_results) {
      result.params.resize(max_results);
      break;
    }
  }
  return result;
}

std::vector<GeneralParams> find_parameters(int t, int m, std::uint64_t prime_limit, std::size_t max_results,
                                           unsigned jobs) {
  return search_parameters(t, m, prime_limit, max_results, jobs).params;
}

void validate_params(const GeneralParams& params) {
  require_shape(params.t, params.m);
  if (!is_prime(params.p) || params.p >= PrimeField::kMaxPrime)
    throw std::invalid_argument("p must be a prime below 2^31");
  const PrimeField f(params.p);
  if (!f.contains(params.r) || !f.contains(params.zeta)) throw std::invalid_argument("r or zeta is not reduced mod p");
  const auto expected = distinct_roots_of_x_m_minus_2(params.p, params.m);
  if (expected.empty() || params.thetas != expected)
    throw std::invalid_argument("thetas are not the ascending distinct roots of x^m - 2");
  const auto zeta = primitive_nth_root(static_cast<std::uint64_t>(params.t - 2), params.p);
  if (!zeta || *zeta != params.zeta) throw std::invalid_argument("zeta is not the smallest primitive (t-2)-th root of unity");
  for (FpElement th : params.thetas)
    if (!is_irreducible(shifted_polynomial(f, params.t, th, params.r), f))
      throw std::invalid_argument("x^{t-1} - x + " + std::to_string(th.value) + " - r is reducible");
}

GeneralWitness build_general_witness(const GeneralParams& params, std::uint64_t seed) {
  validate_params(params);
  const PrimeField f(params.p);
  ExtField field(f, shifted_polynomial(f, params.t, params.thetas.front(), params.r));
  GeneralWitness w{params, field, {}, {}, {}};

  w.alphas.push_back(field.generator());
  for (std::size_t i = 1; i < params.thetas.size(); ++i)
    w.alphas.push_back(
        find_root_in_ext(shifted_polynomial(f, params.t, params.thetas[i], params.r), field, derive_seed(seed, i)));

  FpElement zk = params.zeta;
  for (int k = 1; k <= params.t - 2; ++k, zk = f.mul(zk, params.zeta)) w.A.push_back({field.constant(zk), f.one()});
  w.A.push_back({field.zero(), f.one()});

  for (std::size_t i = 0; i < params.thetas.size(); ++i) {
    const FpElement v = f.sub(params.thetas[i], params.r);
    if (v.is_zero())
      throw DegeneracyError("theta_" + std::to_string(i + 1) + " - r vanishes at p = " + std::to_string(params.p));
    w.B.push_back({field.neg(w.alphas[i]), v});
  }

  std::set<Vertex> seen;
  for (const auto* side : {&w.A, &w.B})
    for (const auto& v : *side)
      if (!seen.insert(v).second) throw DegeneracyError("duplicate witness vertex at p = " + std::to_string(params.p));
  return w;
}

std::size_t GeneralReport::identities_passed() const {
  return static_cast<std::size_t>(
      std::count_if(identities.begin(), identities.end(), [](const NormIdentityCheck& c) { return c.ok; }));
}

bool GeneralReport::passed() const {
  return params_valid && alphas_are_roots && graph.passed() && !identities.empty() &&
         identities_passed() == identities.size();
}

GeneralReport verify_general(const GeneralParams& params, const std::vector<Vertex>& A, const std::vector<Vertex>& B) {
  GeneralReport report;
  try {
    validate_params(params);
    report.params_valid = true;
  } catch (const std::invalid_argument&) {
    report.graph.well_formed = false;
    return report;
  }
  const PrimeField f(params.p);
  const FpPoly f1 = shifted_polynomial(f, params.t, params.thetas.front(), params.r);
  const NormGraph graph(params.p, params.t, f1);
  const ExtField& field = graph.field();

  report.params_valid = A.size() == static_cast<std::size_t>(params.t - 1) && B.size() == params.thetas.size();
  report.graph = verify_biclique(graph, A, B);
  if (!report.graph.well_formed) return report;

  report.alphas_are_roots = true;
  for (std::size_t i = 0; i < B.size() && i < params.thetas.size(); ++i) {
    const FpPoly fi = shifted_polynomial(f, params.t, params.thetas[i], params.r);
    const ExtElement alpha = field.neg(B[i].alpha);
    if (!field.is_zero(poly_eval(fi, alpha, field))) report.alphas_are_roots = false;
    const FpElement expected = f.sub(params.thetas[i], params.r);
    for (std::size_t j = 0; j < A.size(); ++j) {
      NormIdentityCheck c{j, i, {}, {}, expected, false};
      const bool constant = field.is_constant(A[j].alpha);
      c.norm = field.norm(field.sub(A[j].alpha, alpha));
      if (constant) c.value = poly_eval(fi, A[j].alpha.coeffs.front(), f);
      c.ok = constant && c.norm == c.value && c.value == expected && f.mul(A[j].a, B[i].a) == c.norm;
      report.identities.push_back(c);
    }
  }
  return report;
}

GeneralReport verify_general_witness(const GeneralWitness& w) { return verify_general(w.params, w.A, w.B); }

}  // namespace normgraph
