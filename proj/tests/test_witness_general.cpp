#include <doctest.h>

#include <random>
#include <tuple>

#include "normgraph/errors.hpp"
#include "normgraph/poly.hpp"
#include "normgraph/witness_general.hpp"
#include "oracles.hpp"

using namespace normgraph;

namespace {

using PR = std::pair<std::uint64_t, std::uint64_t>;

std::vector<PR> pairs(const std::vector<GeneralParams>& ps) {
  std::vector<PR> v;
  for (const auto& q : ps) v.emplace_back(q.p, q.r.value);
  return v;
}

oracle::Vec to_vec(const std::vector<FpElement>& c, std::size_t k) {
  oracle::Vec v(k, 0);
  for (std::size_t i = 0; i < c.size(); ++i) v[i] = static_cast<std::int64_t>(c[i].value);
  return v;
}

/// Remainder of h modulo the monic d, both little-endian over F_p.
oracle::Vec rem(oracle::Vec h, const oracle::Vec& d, std::int64_t p) {
  const std::size_t dd = d.size() - 1;
  for (std::size_t i = h.size(); i-- > dd;) {
    const std::int64_t c = h[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) h[i - dd + j] = oracle::md(h[i - dd + j] - c * d[j], p);
  }
  h.resize(dd);
  return h;
}

/// Irreducibility by trial division through every monic polynomial of degree <= deg/2.
bool irreducible_by_trial(const oracle::Vec& h, std::int64_t p) {
  const std::size_t n = h.size() - 1;
  for (std::size_t d = 1; 2 * d <= n; ++d) {
    oracle::Vec div(d + 1, 0);
    div[d] = 1;
    while (true) {
      const auto r = rem(h, div, p);
      if (std::all_of(r.begin(), r.end(), [](std::int64_t c) { return c == 0; })) return false;
      std::size_t i = 0;
      while (i < d && ++div[i] == p) div[i++] = 0;
      if (i == d) break;
    }
  }
  return true;
}

/// Brute-force (p, r) list: p = 1 mod (t-2), x^m - 2 has m distinct roots and
/// every x^{t-1} - x + theta - r is irreducible.
std::vector<PR> oracle_search(int t, int m, std::int64_t limit) {
  std::vector<PR> out;
  for (std::int64_t p = 2; p <= limit; ++p) {
    if (!oracle::is_prime(p) || (p - 1) % (t - 2) != 0) continue;
    oracle::Vec xm(static_cast<std::size_t>(m) + 1, 0);
    xm[0] = -2;
    xm[static_cast<std::size_t>(m)] = 1;
    const auto thetas = oracle::roots(xm, p);
    if (static_cast<int>(thetas.size()) != m) continue;
    for (std::int64_t r = 0; r < p; ++r) {
      bool ok = true;
      for (auto th : thetas) {
        oracle::Vec h(static_cast<std::size_t>(t), 0);
        h[0] = oracle::md(th - r, p);
        h[1] = oracle::md(-1, p);
        h[static_cast<std::size_t>(t) - 1] = 1;
        if (!irreducible_by_trial(h, p)) ok = false;
      }
      if (ok) out.emplace_back(p, r);
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("witness_general") {
  TEST_CASE("search examples") {
    const auto r20 = find_parameters(4, 2, 20);
    CHECK(pairs(r20) == std::vector<PR>{{17, 8}, {17, 9}});
    for (const auto& q : r20) {
      CHECK(q.thetas == std::vector<FpElement>{FpElement{6}, FpElement{11}});
      CHECK(q.zeta == FpElement{16});
    }
    CHECK(find_parameters(4, 2, 10).empty());
    const auto r7 = pairs(find_parameters(4, 1, 7));
    CHECK(r7 == std::vector<PR>{{3, 0}, {3, 1}, {5, 0}, {5, 4}, {7, 0}, {7, 4}});
    CHECK(pairs(find_parameters(4, 2, 1000, 3)).size() == 3);
  }

  TEST_CASE("search equals the trial-division oracle") {
    CHECK(pairs(find_parameters(4, 1, 60)) == oracle_search(4, 1, 60));
    CHECK(pairs(find_parameters(4, 2, 120)) == oracle_search(4, 2, 120));
    CHECK(pairs(find_parameters(4, 3, 120)) == oracle_search(4, 3, 120));
    CHECK(pairs(find_parameters(5, 1, 30)) == oracle_search(5, 1, 30));
    CHECK(pairs(find_parameters(5, 2, 50)) == oracle_search(5, 2, 50));
  }

  TEST_CASE("search is independent of the worker count") {
    const auto a = search_parameters(4, 3, 3000, 0, 1);
    for (unsigned jobs : {2u, 8u}) {
      const auto b = search_parameters(4, 3, 3000, 0, jobs);
      CHECK(b.params == a.params);
      CHECK(b.stats.primes_examined == a.stats.primes_examined);
      CHECK(b.stats.primes_eligible == a.stats.primes_eligible);
      CHECK(b.stats.shifts_checked == a.stats.shifts_checked);
      CHECK(b.stats.hits == a.stats.hits);
    }
    const auto capped1 = search_parameters(4, 2, 3000, 5, 1), capped8 = search_parameters(4, 2, 3000, 5, 8);
    CHECK(capped1.params == capped8.params);
    CHECK(capped1.stats.shifts_checked == capped8.stats.shifts_checked);
  }

  TEST_CASE("distinct roots of x^m - 2") {
    CHECK(distinct_roots_of_x_m_minus_2(7, 1) == std::vector<FpElement>{FpElement{2}});
    CHECK(distinct_roots_of_x_m_minus_2(17, 2) == std::vector<FpElement>{FpElement{6}, FpElement{11}});
    CHECK(distinct_roots_of_x_m_minus_2(13, 2).empty());
    for (std::uint64_t p : {7u, 31u, 43u, 73u, 97u}) {
      const auto r = distinct_roots_of_x_m_minus_2(p, 3);
      const auto expected = oracle::roots({-2, 0, 0, 1}, static_cast<std::int64_t>(p));
      if (expected.size() == 3) {
        REQUIRE(r.size() == 3);
        for (std::size_t i = 0; i < 3; ++i) CHECK(static_cast<std::int64_t>(r[i].value) == expected[i]);
      } else {
        CHECK(r.empty());
      }
    }
  }

  TEST_CASE("witness for (t, m, p, r) = (4, 2, 17, 9)") {
    const GeneralParams params = find_parameters(4, 2, 20).at(1);
    const GeneralWitness w = build_general_witness(params);
    const ExtField& F = w.field;
    CHECK(F.modulus() == make_fp_poly(PrimeField(17), {6 - 9, -1, 0, 1}));
    CHECK(w.A == std::vector<Vertex>{{F.from_integer(16), FpElement{1}},
                                     {F.from_integer(1), FpElement{1}},
                                     {F.zero(), FpElement{1}}});
    REQUIRE(w.B.size() == 2);
    CHECK(w.B[0].a == FpElement{14});
    CHECK(w.B[1].a == FpElement{2});
    CHECK(w.B[0].alpha == F.neg(F.generator()));

    const GeneralReport r = verify_general_witness(w);
    CHECK(r.passed());
    CHECK(r.graph.edges_present() == 6);
    CHECK(r.identities.size() == 6);
    CHECK(r.identities_passed() == 6);

    // independent norm computation for every pair
    const auto mod = to_vec(F.modulus().coeffs, 4);
    for (const auto& a : w.A)
      for (const auto& b : w.B) {
        const auto sum = to_vec(F.add(a.alpha, b.alpha).coeffs, 3);
        CHECK(oracle::norm(sum, mod, 17) == oracle::md(static_cast<std::int64_t>(a.a.value * b.a.value), 17));
      }
  }

  TEST_CASE("m = 1 witness at p = 7") {
    const auto ps = find_parameters(4, 1, 7);
    const auto it = std::find_if(ps.begin(), ps.end(), [](const GeneralParams& q) { return q.p == 7 && q.r.value == 0; });
    REQUIRE(it != ps.end());
    const GeneralWitness w = build_general_witness(*it);
    CHECK(w.B.size() == 1);
    CHECK(w.B[0].a == FpElement{2});
    CHECK(verify_general_witness(w).passed());
  }

  TEST_CASE("every witness up to 100 and t = 5 witnesses verify for several seeds") {
    for (const auto& q : find_parameters(4, 2, 100)) CHECK(verify_general_witness(build_general_witness(q)).passed());
    for (const auto& q : find_parameters(5, 2, 200, 4))
      for (std::uint64_t seed = 0; seed < 4; ++seed) {
        const GeneralWitness w = build_general_witness(q, seed);
        const GeneralReport r = verify_general_witness(w);
        CHECK(r.passed());
        CHECK(r.graph.edges_present() == 4 * 2);  // |A| = t - 1
      }
    for (const auto& q : find_parameters(4, 6, 500)) CHECK(verify_general_witness(build_general_witness(q)).passed());
  }

  TEST_CASE("shifted polynomials are pairwise coprime and irreducible") {
    for (const auto& q : find_parameters(4, 3, 400)) {
      const PrimeField f(q.p);
      for (std::size_t i = 0; i < q.thetas.size(); ++i) {
        const FpPoly fi = shifted_polynomial(f, q.t, q.thetas[i], q.r);
        CHECK(is_irreducible(fi, f));
        for (std::size_t j = i + 1; j < q.thetas.size(); ++j)
          CHECK(poly_gcd(fi, shifted_polynomial(f, q.t, q.thetas[j], q.r), f) == make_fp_poly(f, {1}));
      }
    }
  }

  TEST_CASE("norm(c - alpha_i) equals (f_i - r)(c) on random base elements") {
    const GeneralParams q = find_parameters(4, 2, 20).at(0);
    const GeneralWitness w = build_general_witness(q);
    const PrimeField& f = w.field.base();
    std::mt19937_64 rng(7);
    for (int n = 0; n < 100; ++n) {
      const FpElement c{rng() % q.p};
      for (std::size_t i = 0; i < w.alphas.size(); ++i) {
        const auto lhs = w.field.norm(w.field.sub(w.field.constant(c), w.alphas[i]));
        CHECK(lhs == poly_eval(shifted_polynomial(f, q.t, q.thetas[i], q.r), c, f));
      }
    }
  }

  TEST_CASE("tampered parameters or vertices fail") {
    const GeneralWitness w = build_general_witness(find_parameters(4, 2, 20).at(1));
    GeneralParams bad = w.params;
    bad.r = FpElement{10};
    const GeneralReport r = verify_general(bad, w.A, w.B);
    CHECK_FALSE(r.passed());
    CHECK_FALSE(r.params_valid);

    auto B = w.B;
    B[1].a = FpElement{3};
    const GeneralReport rb = verify_general(w.params, w.A, B);
    CHECK_FALSE(rb.passed());
    CHECK(rb.graph.edges_present() < 6);

    GeneralParams wrong_theta = w.params;
    wrong_theta.thetas[0] = FpElement{5};
    CHECK_THROWS_AS(validate_params(wrong_theta), std::invalid_argument);
    CHECK_THROWS_AS(build_general_witness(wrong_theta), std::invalid_argument);
  }

  TEST_CASE("argument validation") {
    CHECK_THROWS_AS(find_parameters(2, 1, 10), std::invalid_argument);
    CHECK_THROWS_AS(find_parameters(4, 0, 10), std::invalid_argument);
  }
}
