#include <doctest.h>

#include <random>

#include "normgraph/errors.hpp"
#include "normgraph/int_poly.hpp"
#include "normgraph/poly.hpp"
#include "oracles.hpp"

using namespace normgraph;

namespace {

std::vector<std::uint64_t> values(const std::vector<BaseRoot>& roots) {
  std::vector<std::uint64_t> v;
  for (const auto& r : roots) v.push_back(r.value.value);
  return v;
}

std::vector<oracle::Int> big(const std::vector<std::int64_t>& c) { return {c.begin(), c.end()}; }

}  // namespace

TEST_SUITE("polyarith") {
  const PrimeField F7(7);

  TEST_CASE("poly_eval examples") {
    const FpPoly g = make_fp_poly(F7, {7, 3, 21, 1});
    CHECK(poly_eval(g, FpElement{0}, F7) == FpElement{0});
    CHECK(poly_eval(g, FpElement{2}, F7) == FpElement{0});
    CHECK(poly_eval(make_fp_poly(F7, {4}), FpElement{5}, F7) == FpElement{4});
    CHECK(oracle::eval({7, 3, 21, 1}, 2, 7) == 0);
    for (std::int64_t x = 0; x < 7; ++x)
      CHECK(static_cast<std::int64_t>(poly_eval(g, FpElement{static_cast<std::uint64_t>(x)}, F7).value) ==
            oracle::eval({7, 3, 21, 1}, x, 7));
  }

  TEST_CASE("poly_eval over an extension") {
    const ExtField E(7, {-2, 0, 0, 1});
    const FpPoly h = make_fp_poly(F7, {-2, 0, 0, 1});
    CHECK(poly_eval(h, E.generator(), E).is_zero());
    const ExtPoly lifted = lift(h, E);
    CHECK(poly_eval(lifted, E.generator(), E).is_zero());
    CHECK(poly_eval(lifted, E.one(), E) == E.from_integer(-1));
  }

  TEST_CASE("poly_gcd examples") {
    const FpPoly a = make_fp_poly(F7, {-2, 0, 0, 1}), b = make_fp_poly(F7, {-3, 0, 0, 1});
    CHECK(poly_gcd(a, b, F7) == make_fp_poly(F7, {1}));
    const FpPoly h = make_fp_poly(F7, {3, 0, 2});
    CHECK(poly_gcd(h, h, F7) == make_fp_poly(F7, {5, 0, 1}));  // monic(2x^2 + 3)
    CHECK(poly_gcd(h, FpPoly{}, F7) == make_fp_poly(F7, {5, 0, 1}));
    const FpPoly p12 = make_fp_poly(F7, {2, -3, 1}), p23 = make_fp_poly(F7, {6, -5, 1});
    CHECK(poly_gcd(p12, p23, F7) == make_fp_poly(F7, {-2, 1}));
  }

  TEST_CASE("is_irreducible examples") {
    CHECK(is_irreducible(make_fp_poly(F7, {-2, 0, 0, 1}), F7));
    CHECK_FALSE(is_irreducible(make_fp_poly(F7, {-6, 0, 0, 1}), F7));
    for (std::uint64_t p : {2u, 7u, 101u}) CHECK(is_irreducible(make_fp_poly(PrimeField(p), {-5, 1}), PrimeField(p)));
    CHECK_THROWS_AS(is_irreducible(make_fp_poly(F7, {3}), F7), std::invalid_argument);
    CHECK(oracle::power_set(3, 7) == std::set<std::int64_t>{1, 6});
  }

  TEST_CASE("Rabin agrees with the root criterion on every monic cubic over F_7 and F_13") {
    for (std::int64_t p : {7, 13}) {
      const PrimeField f(static_cast<std::uint64_t>(p));
      std::size_t irreducible = 0;
      for (std::int64_t a = 0; a < p; ++a)
        for (std::int64_t b = 0; b < p; ++b)
          for (std::int64_t c = 0; c < p; ++c) {
            const FpPoly h = make_fp_poly(f, {c, b, a, 1});
            const bool rabin = is_irreducible(h, f);
            CHECK(rabin == is_irreducible_by_roots(h, f));
            CHECK(rabin == oracle::roots({c, b, a, 1}, p).empty());
            irreducible += rabin;
          }
      CHECK(irreducible == static_cast<std::size_t>((p * p * p - p) / 3));  // count of monic irreducible cubics
    }
  }

  TEST_CASE("Rabin on quartics matches a factor count over F_3") {
    // Number of monic irreducible quartics over F_3 is (3^4 - 3^2) / 4 = 18.
    const PrimeField f(3);
    std::size_t count = 0;
    for (int i = 0; i < 81; ++i) {
      const FpPoly h = make_fp_poly(f, {i % 3, i / 3 % 3, i / 9 % 3, i / 27 % 3, 1});
      count += is_irreducible(h, f);
    }
    CHECK(count == 18);
  }

  TEST_CASE("roots_in_base examples and properties") {
    CHECK(values(roots_in_base(make_fp_poly(F7, {7, 3, 21, 1}), F7)) == std::vector<std::uint64_t>{0, 2, 5});
    CHECK(values(roots_in_base(make_fp_poly(F7, {-6, 0, 0, 1}), F7)) == std::vector<std::uint64_t>{3, 5, 6});
    CHECK(roots_in_base(make_fp_poly(F7, {1, 0, 1}), F7).empty());
    const auto rep = roots_in_base(make_fp_poly(F7, {4, -4, 1}), F7);  // (x - 2)^2
    REQUIRE(rep.size() == 1);
    CHECK(rep[0].repeated);
    CHECK_THROWS_AS(roots_in_base(make_fp_poly(PrimeField(4194319), {1, 1}), PrimeField(4194319)), GuardExceeded);

    std::mt19937_64 rng(8);
    for (int i = 0; i < 200; ++i) {
      const std::int64_t p = 13;
      const PrimeField f(13);
      std::vector<std::int64_t> c(5);
      for (auto& x : c) x = static_cast<std::int64_t>(rng() % 13);
      c.back() = 1;
      const auto roots = roots_in_base(make_fp_poly(f, c), f);
      CHECK(values(roots).size() <= 4);
      std::vector<std::uint64_t> expected;
      for (auto r : oracle::roots(c, p)) expected.push_back(static_cast<std::uint64_t>(r));
      CHECK(values(roots) == expected);
    }
  }

  TEST_CASE("find_root_in_ext examples") {
    const ExtField E(7, {-2, 0, 0, 1});
    for (std::uint64_t seed : {0u, 1u, 2u, 17u}) {
      const ExtElement r = find_root_in_ext(make_fp_poly(F7, {-2, 0, 0, 1}), E, seed);
      CHECK(E.pow(r, 3) == E.from_integer(2));
      CHECK(r == find_root_in_ext(make_fp_poly(F7, {-2, 0, 0, 1}), E, seed));  // deterministic
    }
    const ExtElement two_theta = E.scale(E.generator(), FpElement{2});
    CHECK(E.pow(two_theta, 3) == E.from_integer(2));

    const PrimeField F17(17);
    const ExtField E17(F17, make_fp_poly(F17, {2, -1, 0, 1}));  // x^3 - x + 2
    const ExtElement a = find_root_in_ext(make_fp_poly(F17, {14, -1, 0, 1}), E17, 0);
    CHECK(poly_eval(make_fp_poly(F17, {14, -1, 0, 1}), a, E17).is_zero());
    CHECK(oracle::roots({14, -1, 0, 1}, 17).empty());
  }

  TEST_CASE("find_root_in_ext rejects polynomials that do not split") {
    const ExtField E(7, {-2, 0, 0, 1});
    CHECK_THROWS_AS(find_root_in_ext(make_fp_poly(F7, {1, 0, 1}), E, 0), NonSplittingError);  // degree 2 in GF(7^3)
    CHECK_THROWS_AS(find_root_in_ext(make_fp_poly(F7, {4, -4, 1}), E, 0), NonSplittingError); // repeated root
  }

  TEST_CASE("split_roots matches the exhaustive scan") {
    const PrimeField f(37);
    const FpPoly g = make_fp_poly(f, {7, 3, 21, 1});
    std::vector<std::uint64_t> scanned = values(roots_in_base(g, f));
    std::vector<std::uint64_t> split;
    for (auto r : split_roots(g, f, 4)) split.push_back(r.value);
    CHECK(split == scanned);
    CHECK(split.size() == 3);
  }

  TEST_CASE("power_residue examples") {
    CHECK_FALSE(power_residue(FpElement{2}, 3, 7));
    CHECK(power_residue(FpElement{6}, 3, 7));
    for (std::uint64_t a = 1; a < 13; ++a) CHECK(power_residue(FpElement{a}, 1, 13));
    CHECK_THROWS_AS(power_residue(FpElement{0}, 3, 7), std::invalid_argument);
  }

  TEST_CASE("power_residue agrees with exhaustive power sets") {
    for (std::int64_t p : {7, 13, 17, 37})
      for (std::int64_t m : {2, 3, 4, 6}) {
        const auto s = oracle::power_set(m, p);
        for (std::int64_t a = 1; a < p; ++a)
          CHECK(power_residue(FpElement{static_cast<std::uint64_t>(a)}, static_cast<std::uint64_t>(m),
                              static_cast<std::uint64_t>(p)) == (s.count(a) == 1));
      }
  }

  TEST_CASE("primitive_nth_root examples") {
    CHECK(primitive_nth_root(3, 7) == std::optional<FpElement>{FpElement{2}});
    CHECK_FALSE(primitive_nth_root(3, 5).has_value());
    CHECK(primitive_nth_root(2, 17) == std::optional<FpElement>{FpElement{16}});
    // smallest element of exact order n, by brute force
    for (std::int64_t p : {13, 37, 61})
      for (std::int64_t n = 1; n < p; ++n) {
        std::optional<std::uint64_t> expected;
        for (std::int64_t x = 1; x < p && !expected; ++x) {
          std::int64_t ord = 1, y = x;
          while (y != 1) y = oracle::md(y * x, p), ++ord;
          if (ord == n) expected = static_cast<std::uint64_t>(x);
        }
        const auto got = primitive_nth_root(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(p));
        CHECK(got.has_value() == expected.has_value());
        if (got && expected) CHECK(got->value == *expected);
      }
  }

  TEST_CASE("discriminant examples") {
    const IntPoly g = make_int_poly({7, 3, 21, 1});
    const IntPoly f = int_mul(make_int_poly({-2, 0, 0, 1}), make_int_poly({-3, 0, 0, 1}));
    CHECK(discriminant(g) == BigInt(-248832));
    CHECK(discriminant(f) == BigInt(26244));
    CHECK(discriminant(make_int_poly({-2, 0, 0, 1})) == BigInt(-108));
    CHECK(oracle::discriminant(big({7, 3, 21, 1})) == -248832);
    CHECK(oracle::discriminant(big({6, 0, 0, -5, 0, 0, 1})) == 26244);
    CHECK(oracle::discriminant(big({-2, 0, 0, 1})) == -108);
    CHECK_THROWS_AS(discriminant(make_int_poly({1, 1})), std::invalid_argument);
  }

  TEST_CASE("resultant agrees with the Sylvester determinant") {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> coef(-9, 9);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<std::int64_t> a(4), b(static_cast<std::size_t>(2 + trial % 4));
      for (auto& x : a) x = coef(rng);
      for (auto& x : b) x = coef(rng);
      if (a.back() == 0) a.back() = 1;
      if (b.back() == 0) b.back() = -2;
      CHECK(resultant(make_int_poly(a), make_int_poly(b)) == BigInt(oracle::sylvester_resultant(big(a), big(b))));
    }
  }

  TEST_CASE("disc(h1 h2) = disc(h1) disc(h2) Res(h1, h2)^2 on random cubic pairs") {
    std::mt19937_64 rng(1234);
    std::uniform_int_distribution<int> coef(-9, 9);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<std::int64_t> a(4), b(4);
      for (auto& x : a) x = coef(rng);
      for (auto& x : b) x = coef(rng);
      if (a[3] == 0) a[3] = 1;
      if (b[3] == 0) b[3] = 1;
      const IntPoly h1 = make_int_poly(a), h2 = make_int_poly(b);
      const BigInt r = resultant(h1, h2);
      CHECK(discriminant(int_mul(h1, h2)) == discriminant(h1) * discriminant(h2) * r * r);
      CHECK(discriminant(h1) == BigInt(oracle::discriminant(big(a))));
    }
  }

  TEST_CASE("prime_divisors") {
    CHECK(prime_divisors(26244) == std::vector<std::uint64_t>{2, 3});
    CHECK(prime_divisors(248832) == std::vector<std::uint64_t>{2, 3});
    CHECK(prime_divisors(97) == std::vector<std::uint64_t>{97});
    CHECK(prime_divisors(1).empty());
  }
}
