#include <doctest.h>

#include <numeric>
#include <random>

#include "expdio/arith.hpp"
#include "expdio/errors.hpp"
#include "oracle.hpp"

using namespace expdio;

TEST_CASE("v2") {
  CHECK(v2(12) == 2);
  CHECK(v2(1) == 0);
  CHECK(v2(1024) == 10);
  CHECK(v2(pow(BigInt(2), 200) * 3) == 200);
  CHECK_THROWS_AS(v2(0), DomainError);
}

TEST_CASE("mul_order examples") {
  CHECK(mul_order(10, 13) == 6);
  CHECK(mul_order(1, 13) == 1);
  CHECK(mul_order(3, 13) == 3);
  CHECK_THROWS_AS(mul_order(3, 9), DomainError);
}

TEST_CASE("mul_order against direct powering") {
  for (unsigned c = 2; c <= 400; ++c) {
    const BigInt lambda = carmichael(factorize(c));
    for (unsigned m = 1; m < c; ++m) {
      if (std::gcd(m, c) != 1) continue;
      const BigInt ord = mul_order(m, c);
      REQUIRE(ord == oracle::order(m, c));
      CHECK(lambda % ord == 0);
    }
  }
}

TEST_CASE("find_primitive_root") {
  CHECK(find_primitive_root(13) == 2);
  CHECK(find_primitive_root(7) == 3);
  CHECK(find_primitive_root(3) == 2);
  for (unsigned p = 3; p < 2000; p += 2) {
    if (!oracle::is_prime(p)) continue;
    const unsigned long g = find_primitive_root(p).get_ui();
    CHECK(oracle::order(g, p) == p - 1);
    for (unsigned long h = 2; h < g; ++h) CHECK(oracle::order(h, p) < p - 1);
  }
  CHECK_THROWS_AS(find_primitive_root(15), DomainError);
}

TEST_CASE("discrete_log examples") {
  CHECK(discrete_log(2, 3, 13) == 4);
  CHECK(discrete_log(2, 1, 13) == 0);
  CHECK(discrete_log(2, 10, 13) == 10);
}

TEST_CASE("discrete_log round trip for small primes") {
  for (unsigned p = 3; p <= 1000; p += 2) {
    if (!oracle::is_prime(p)) continue;
    const BigInt g = find_primitive_root(p);
    for (unsigned a = 1; a < p; ++a) {
      const BigInt r = discrete_log(g, a, p);
      REQUIRE(r < p - 1);
      REQUIRE(oracle::powmod(g.get_ui(), r.get_ui(), p) == a);
    }
  }
}

TEST_CASE("discrete_log on large primes") {
  std::mt19937_64 rng(7);
  // 2^61 - 1 and 10^12 + 39, both prime.
  for (const BigInt p : {BigInt("2305843009213693951"), BigInt("1000000000039")}) {
    const BigInt g = find_primitive_root(p);
    for (int i = 0; i < 5; ++i) {
      const BigInt e = BigInt(std::to_string(rng())) % (p - 1);
      const BigInt h = powm(g, e, p);
      CHECK(discrete_log(g, h, p) == e);
    }
  }
}

TEST_CASE("sqrt_mod") {
  CHECK(sqrt_mod(9, 13) == std::vector<BigInt>{3, 10});
  CHECK(sqrt_mod(0, 13) == std::vector<BigInt>{0});
  CHECK(sqrt_mod(2, 3).empty());
  for (unsigned p = 3; p < 600; p += 2) {
    if (!oracle::is_prime(p)) continue;
    for (unsigned n = 0; n < p; ++n) {
      std::vector<BigInt> expect;
      for (unsigned t = 0; t < p; ++t)
        if (t * t % p == n) expect.push_back(t);
      REQUIRE(sqrt_mod(n, p) == expect);
    }
  }
  // p = 1 mod 2^k with large k exercises the Tonelli-Shanks loop.
  const BigInt p("7340033");  // 7 * 2^20 + 1
  for (unsigned n = 1; n < 200; ++n) {
    for (const BigInt& t : sqrt_mod(n, p)) CHECK(mod(t * t - n, p) == 0);
  }
}

TEST_CASE("factorize examples") {
  CHECK(factorize(2200) == Factorization{{{2, 3}, {5, 2}, {11, 1}}});
  CHECK(factorize(13) == Factorization{{{13, 1}}});
  CHECK(factorize(1).entries.empty());
  CHECK_THROWS_AS(factorize(0), DomainError);
}

TEST_CASE("factorize matches trial division") {
  for (unsigned long n = 1; n < 20000; ++n) {
    const auto f = factorize(n);
    const auto ref = oracle::factor(n);
    REQUIRE(f.entries.size() == ref.size());
    for (std::size_t i = 0; i < ref.size(); ++i) {
      CHECK(f.entries[i].prime == ref[i].first);
      CHECK(f.entries[i].exponent == ref[i].second);
    }
  }
}

TEST_CASE("factorize reconstructs large inputs") {
  const BigInt p1("1000000007"), p2("998244353"), p3("2305843009213693951");
  const std::vector<BigInt> cases{
      p1 * p2, p1 * p1 * p2, p3 * p1, pow(BigInt(3), 40) * 7, pow(BigInt(10), 30) + 1,
      pow(BigInt(2), 64) + 1, BigInt("18446744073709551557") * 1000003,
  };
  for (const auto& n : cases) {
    const auto f = factorize(n);
    CHECK(f.product() == n);
    for (std::size_t i = 0; i < f.entries.size(); ++i) {
      CHECK(is_prime(f.entries[i].prime));
      if (i) CHECK(f.entries[i - 1].prime < f.entries[i].prime);
    }
  }
}

TEST_CASE("is_prime") {
  for (unsigned n = 0; n < 5000; ++n) REQUIRE(is_prime(n) == oracle::is_prime(n));
  CHECK(is_prime(BigInt("2305843009213693951")));
  CHECK_FALSE(is_prime(BigInt("3317044064679887385961981")));  // strong pseudoprime to bases 2..37
  CHECK(is_prime(BigInt("170141183460469231731687303715884105727")));  // 2^127 - 1
  CHECK_FALSE(is_prime(pow(BigInt(2), 128) + 1));
}

TEST_CASE("perfect_power_decompose") {
  CHECK(perfect_power_decompose(16) == PowerDecomposition{2, 4});
  CHECK(perfect_power_decompose(2187) == PowerDecomposition{3, 7});
  CHECK(perfect_power_decompose(12) == PowerDecomposition{12, 1});
  CHECK(perfect_power_decompose(pow(BigInt(6), 36)) == PowerDecomposition{6, 36});
  for (unsigned long s = 2; s < 5000; ++s) {
    const auto pd = perfect_power_decompose(s);
    REQUIRE(pow(pd.base, pd.exponent) == s);
    // Maximal: the base itself is not a perfect power.
    CHECK(perfect_power_decompose(pd.base).exponent == 1);
  }
}

TEST_CASE("is_power_of") {
  CHECK(is_power_of(10, 10) == 1ul);
  CHECK(is_power_of(3, 2187) == 7ul);
  CHECK_FALSE(is_power_of(2, 12).has_value());
  CHECK_FALSE(is_power_of(2, 1).has_value());
  CHECK(is_power_of(7, pow(BigInt(7), 500)) == 500ul);
  CHECK_FALSE(is_power_of(7, pow(BigInt(7), 500) + 1).has_value());
}

TEST_CASE("parse_integer") {
  CHECK(parse_integer("1e12") == pow(BigInt(10), 12));
  CHECK(parse_integer("2.5e3") == 2500);
  CHECK(parse_integer("10^30") == pow(BigInt(10), 30));
  CHECK(parse_integer("-17") == -17);
  CHECK_THROWS_AS(parse_integer("1.5"), DomainError);
  CHECK_THROWS_AS(parse_integer("abc"), DomainError);
}
