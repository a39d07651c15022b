#include "normgraph/witness_k46.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <sstream>

#include "normgraph/parallel.hpp"
#include "normgraph/poly.hpp"

namespace normgraph {

namespace {

bool divides_a_discriminant(std::uint64_t p) {
  return kDiscriminantF % static_cast<std::int64_t>(p) == 0 || kDiscriminantG % static_cast<std::int64_t>(p) == 0;
}

FpPoly x3_minus(const PrimeField& f, std::int64_t c) { return make_fp_poly(f, {-c, 0, 0, 1}); }

std::string describe(const Vertex& v) {
  std::ostringstream os;
  os << "(" << v.alpha << ", " << v.a.value << ")";
  return os.str();
}

}  // namespace

IntPoly k46_splitting_polynomial() { return int_mul(make_int_poly({-2, 0, 0, 1}), make_int_poly({-3, 0, 0, 1})); }

IntPoly k46_eta_polynomial() { return make_int_poly({7, 3, 21, 1}); }

void check_discriminant_constants() {
  static std::once_flag once;
  std::call_once(once, [] {
    if (discriminant(k46_splitting_polynomial()) != kDiscriminantF)
      throw std::logic_error("discriminant of (x^3-2)(x^3-3) does not match 26244");
    if (discriminant(k46_eta_polynomial()) != kDiscriminantG)
      throw std::logic_error("discriminant of x^3+21x^2+3x+7 does not match -248832");
  });
}

std::string rejection_token(Rejection r) {
  switch (r) {
    case Rejection::kNotPrime: return "not_prime";
    case Rejection::kDividesDiscriminant: return "divides_discriminant";
    case Rejection::kNotOneModThree: return "not_1_mod_3";
    case Rejection::kTwoIsCube: return "2_is_cube";
    case Rejection::kThreeIsCube: return "3_is_cube";
    case Rejection::kSixNotCube: return "6_not_cube";
    case Rejection::kEtaRootsDegenerate: return "g_roots_degenerate";
  }
  return "unknown";
}

std::string rejection_message(Rejection r, std::uint64_t p) {
  const std::string mod = " mod " + std::to_string(p);
  switch (r) {
    case Rejection::kNotPrime: return std::to_string(p) + " is not prime";
    case Rejection::kDividesDiscriminant: return std::to_string(p) + " divides 26244 * 248832";
    case Rejection::kNotOneModThree: return std::to_string(p) + " is not 1 mod 3";
    case Rejection::kTwoIsCube: return "2 is a cube" + mod;
    case Rejection::kThreeIsCube: return "3 is a cube" + mod;
    case Rejection::kSixNotCube: return "6 is not a cube" + mod;
    case Rejection::kEtaRootsDegenerate: return "x^3+21x^2+3x+7 lacks three distinct roots" + mod;
  }
  return "unknown";
}

std::optional<Rejection> polynomial_rejection(std::uint64_t p) {
  if (!is_prime(p)) return Rejection::kNotPrime;
  if (divides_a_discriminant(p)) return Rejection::kDividesDiscriminant;
  if (p % 3 != 1) return Rejection::kNotOneModThree;
  const PrimeField f(p);
  if (!is_irreducible(x3_minus(f, 2), f)) return Rejection::kTwoIsCube;
  if (!is_irreducible(x3_minus(f, 3), f)) return Rejection::kThreeIsCube;
  if (!splits_into_distinct_linear(x3_minus(f, 6), f)) return Rejection::kSixNotCube;
  return std::nullopt;
}

std::optional<Rejection> residue_rejection(std::uint64_t p) {
  if (!is_prime(p)) return Rejection::kNotPrime;
  if (divides_a_discriminant(p)) return Rejection::kDividesDiscriminant;
  if (p % 3 != 1) return Rejection::kNotOneModThree;
  if (power_residue(FpElement{2}, 3, p)) return Rejection::kTwoIsCube;
  if (!power_residue(FpElement{6}, 3, p)) return Rejection::kSixNotCube;
  return std::nullopt;
}

namespace {

std::optional<Rejection> cross_checked_rejection(std::uint64_t p) {
  const auto by_poly = polynomial_rejection(p);
  const auto by_residue = residue_rejection(p);
  if (by_poly.has_value() != by_residue.has_value())
    throw std::logic_error("qualification formulations disagree at p = " + std::to_string(p));
  return by_poly;
}

}  // namespace

Qualification is_qualifying_prime(std::uint64_t p) {
  check_discriminant_constants();
  Qualification q;
  if (p >= PrimeField::kMaxPrime) {
    // Beyond the arithmetic range; primality is the only condition decidable here.
    q.rejection = is_prime(p) ? std::optional<Rejection>{} : Rejection::kNotPrime;
    if (!q.rejection) throw std::invalid_argument("primes at or above 2^31 are outside the supported range");
    return q;
  }
  if (auto r = cross_checked_rejection(p)) {
    q.rejection = r;
    return q;
  }
  const PrimeField f(p);
  QualifyingCertificate cert;
  cert.p = p;
  cert.zeta = *primitive_nth_root(3, p);
  cert.x3_minus_2_irreducible = true;
  cert.x3_minus_3_irreducible = true;
  cert.x3_minus_6_splits = true;
  cert.coprime_to_disc_f = kDiscriminantF % static_cast<std::int64_t>(p) != 0;
  cert.coprime_to_disc_g = kDiscriminantG % static_cast<std::int64_t>(p) != 0;

  const FpPoly g = make_fp_poly(f, {7, 3, 21, 1});
  std::vector<FpElement> roots;
  if (p < kRootScanLimit) {
    for (const auto& r : roots_in_base(g, f))
      if (!r.repeated) roots.push_back(r.value);
  } else if (splits_into_distinct_linear(g, f)) {
    roots = split_roots(g, f, 0);
  }
  if (roots.size() != 3) {
    q.rejection = Rejection::kEtaRootsDegenerate;
    return q;
  }
  std::copy(roots.begin(), roots.end(), cert.g_roots.begin());
  q.certificate = cert;
  return q;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

SieveResult sieve_qualifying(std::uint64_t limit, unsigned jobs) {
  check_discriminant_constants();
  SieveResult result;
  result.limit = limit;
  const auto primes = primes_up_to(limit);
  result.prime_count = primes.size();
  result.entries.resize(primes.size());
  constexpr std::size_t kChunk = 2048;
  const std::size_t chunks = (primes.size() + kChunk - 1) / kChunk;
  parallel_for(chunks, jobs, [&](std::size_t c) {
    const std::size_t hi = std::min(primes.size(), (c + 1) * kChunk);
    for (std::size_t i = c * kChunk; i < hi; ++i) result.entries[i] = {primes[i], cross_checked_rejection(primes[i])};
  });
  for (const auto& e : result.entries)
    if (e.qualifying()) result.qualifying.push_back(e.p);
  return result;
}

ExtField cube_root_two_field(std::uint64_t p) { return ExtField(p, {-2, 0, 0, 1}); }

WitnessK46 build_witness(const QualifyingCertificate& cert) {
  const ExtField field = cube_root_two_field(cert.p);
  const PrimeField& f = field.base();
  const ExtElement theta = field.generator();
  const ExtElement theta2 = field.mul(theta, theta);
  const ExtElement one = field.one();
  auto c = [&](std::int64_t v) { return f.from_integer(v); };

  WitnessK46 w{cert, field, {}, {}};
  w.A = {{field.zero(), c(3)}, {field.constant(c(1)), c(4)}, {field.constant(c(2)), c(5)}, {field.add(theta, one), c(6)}};

  FpElement zk = f.one();
  for (int k = 0; k < 3; ++k, zk = f.mul(zk, cert.zeta))
    w.B.push_back({field.sub(field.scale(theta2, zk), one), f.one()});

  const FpElement inv2 = f.inv(c(2)), inv4 = f.inv(c(4));
  for (FpElement eta : cert.g_roots) {
    const FpElement a = f.neg(f.mul(f.sub(f.one(), eta), inv4));
    const FpElement b = f.neg(f.mul(f.add(f.one(), eta), inv2));
    const FpElement v = f.mul(f.add(f.one(), f.mul(c(3), f.mul(eta, eta))), inv4);
    ExtElement beta = field.element({-1});
    beta.coeffs[1] = b;
    beta.coeffs[2] = a;
    if (v.is_zero())
      throw DegeneracyError("second coordinate (1+3eta^2)/4 vanishes for eta = " + std::to_string(eta.value) +
                            " at p = " + std::to_string(cert.p));
    w.B.push_back({beta, v});
  }

  std::vector<Vertex> all = w.A;
  all.insert(all.end(), w.B.begin(), w.B.end());
  for (const auto& v : all)
    if (v.a.is_zero()) throw DegeneracyError("vertex " + describe(v) + " has a zero second coordinate");
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j)
      if (all[i] == all[j])
        throw DegeneracyError("vertices " + std::to_string(i) + " and " + std::to_string(j) + " collide: " +
                              describe(all[i]) + " at p = " + std::to_string(cert.p));
  return w;
}

std::size_t K46Report::checks_passed() const {
  return graph.edges_present() +
         static_cast<std::size_t>(std::count_if(identities.begin(), identities.end(), [](const IdentityCheck& c) { return c.ok; }));
}

bool K46Report::passed() const {
  return graph.passed() && a_canonical && b_shape && identities.size() == 24 && checks_passed() == checks_total();
}

K46Report verify_witness(const WitnessK46& w) {
  K46Report report;
  const ExtField& field = w.field;
  const PrimeField& f = field.base();
  const NormGraph graph(field.p(), 4, field.modulus());
  report.graph = verify_biclique(graph, w.A, w.B);

  auto c = [&](std::int64_t v) { return f.from_integer(v); };
  const ExtElement theta = field.generator();
  const std::vector<Vertex> canonical{
      {field.zero(), c(3)}, {field.constant(c(1)), c(4)}, {field.constant(c(2)), c(5)}, {field.add(theta, field.one()), c(6)}};
  report.a_canonical = field == cube_root_two_field(field.p()) && w.A == canonical;

  report.b_shape = !w.B.empty();
  for (std::size_t j = 0; j < w.B.size(); ++j) {
    const Vertex& bv = w.B[j];
    if (!field.contains(bv.alpha)) {
      report.b_shape = false;
      continue;
    }
    if (bv.alpha.coeffs[0] != c(-1)) report.b_shape = false;
    const FpElement b = bv.alpha.coeffs[1], a = bv.alpha.coeffs[2], v = bv.a;
    const FpElement a3 = f.pow(a, 3), b3 = f.pow(b, 3), ab = f.mul(a, b);
    const FpElement core = f.add(f.mul(c(4), a3), f.mul(c(2), b3));  // 4a^3 + 2b^3
    const std::array<FpElement, 4> lhs{
        f.sub(f.add(core, f.mul(c(6), ab)), f.one()),
        core,
        f.add(f.sub(core, f.mul(c(6), ab)), f.one()),
        f.add(core, f.add(f.mul(c(6), f.mul(b, b)), f.add(f.mul(c(6), b), c(2)))),
    };
    for (int i = 0; i < 4; ++i) {
      const FpElement rhs = f.mul(c(3 + i), v);
      report.identities.push_back({j, i, lhs[static_cast<std::size_t>(i)], rhs, lhs[static_cast<std::size_t>(i)] == rhs});
    }
  }
  return report;
}

}  // namespace normgraph
