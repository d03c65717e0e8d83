#include <doctest.h>

#include <numeric>

#include "expdio/errors.hpp"
#include "expdio/parity.hpp"
#include "oracle.hpp"

using namespace expdio;

namespace {

// Parity classes with a^x + b^y = 0 (mod p), by exhausting x, y mod p-1.
ParitySet exhaust_mod(unsigned long a, unsigned long b, unsigned long m,
                      unsigned long period) {
  ParitySet out;
  for (unsigned long x = 1; x <= period; ++x) {
    for (unsigned long y = 1; y <= period; ++y) {
      if ((oracle::powmod(a, x, m) + oracle::powmod(b, y, m)) % m == 0)
        out.insert({static_cast<int>(x & 1), static_cast<int>(y & 1)});
    }
  }
  return out;
}

bool order_condition_ref(unsigned long a, unsigned long b, unsigned long c) {
  for (unsigned long t : {a, b}) {
    const auto u = oracle::order(t, c);
    if (u % 2 == 0 && oracle::powmod(t, u / 2, c) == c - 1) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("allowed_classes_mod_p examples") {
  CHECK(allowed_classes_mod_p(3, 10, 13).allowed == ParitySet{{0, 1}, {1, 1}});
  CHECK(allowed_classes_mod_p(5, 2, 3).allowed == ParitySet{{0, 1}, {1, 0}});
  CHECK(allowed_classes_mod_p(4, 3, 7).allowed == ParitySet{{0, 1}, {1, 1}});
  const auto pa = allowed_classes_mod_p(3, 10, 13);
  CHECK(pa.d == 2);
  CHECK(pa.r == 4);
  CHECK(pa.s == 10);
  CHECK_THROWS_AS(allowed_classes_mod_p(13, 10, 13), DomainError);
  CHECK_THROWS_AS(allowed_classes_mod_p(3, 10, 15), DomainError);
}

TEST_CASE("allowed_classes_mod_p is exact and matches the valuation table") {
  for (unsigned long p = 3; p <= 500; p += 2) {
    if (!oracle::is_prime(p)) continue;
    for (unsigned long a = 2; a <= 50; ++a) {
      if (a % p == 0) continue;
      for (unsigned long b = 2; b <= 50; ++b) {
        if (b % p == 0) continue;
        const auto pa = allowed_classes_mod_p(a, b, p);
        CHECK(pa.allowed.size() <= 2);
        CHECK(pa.predicted == pa.allowed);
        if (p < 60) CHECK(pa.allowed == exhaust_mod(a, b, p, p - 1));
      }
    }
  }
}

TEST_CASE("valuation_prediction cases") {
  const auto none = std::optional<unsigned long>{};
  CHECK(valuation_prediction(1, 1, 2) == ParitySet{{0, 0}, {1, 1}});
  CHECK(valuation_prediction(2, 2, 2) == ParitySet{{0, 1}, {1, 0}});
  CHECK(valuation_prediction(0, 3, 2) == ParitySet{{0, 0}, {0, 1}});
  CHECK(valuation_prediction(2, 3, 2) == ParitySet{{1, 0}, {1, 1}});
  // Swapped roles.
  CHECK(valuation_prediction(3, 0, 2) == ParitySet{{0, 0}, {1, 0}});
  CHECK(valuation_prediction(3, 2, 2) == ParitySet{{0, 1}, {1, 1}});
  CHECK(valuation_prediction(3, 3, 2).empty());
  CHECK(valuation_prediction(1, none, 1) == ParitySet{{1, 0}, {1, 1}});
  CHECK(valuation_prediction(none, none, 1).empty());
}

TEST_CASE("allowed_classes examples") {
  CHECK(allowed_classes(3, 10, 13) == ParitySet{{0, 1}, {1, 1}});
  CHECK(allowed_classes(4, 9, 15).empty());
  const auto s = allowed_classes(5, 2, 133);
  CHECK(s.size() <= 2);
  CHECK(s.contains({1, 1}));
  CHECK_THROWS_AS(allowed_classes(3, 5, 8), DomainError);
  CHECK_THROWS_AS(allowed_classes(3, 9, 13), DomainError);
}

TEST_CASE("allowed_classes contains every modular solution class") {
  for (unsigned long c = 3; c <= 75; c += 2) {
    for (unsigned long a = 2; a <= 16; ++a) {
      for (unsigned long b = 2; b <= 16; ++b) {
        if (std::gcd(a, b) != 1) continue;
        const auto allowed = allowed_classes(a, b, c);
        CHECK(allowed.size() <= 2);
        if (std::gcd(a * b, c) != 1) continue;
        const auto period = oracle::order(a, c) * oracle::order(b, c) * 2;
        for (const auto& cls : exhaust_mod(a, b, c, std::min<unsigned long>(period, 72)))
          CHECK(allowed.contains(cls));
      }
    }
  }
}

TEST_CASE("check_order_condition") {
  CHECK(check_order_condition(5, 2, 3));
  CHECK(check_order_condition(3, 10, 13));
  CHECK_FALSE(check_order_condition(2, 9, 7));
  for (unsigned long c = 3; c < 120; c += 2) {
    for (unsigned long a = 2; a < 30; ++a) {
      for (unsigned long b = 2; b < 30; ++b) {
        if (std::gcd(a * b, c) != 1) continue;
        CHECK(check_order_condition(a, b, c) == order_condition_ref(a, b, c));
      }
    }
  }
}

TEST_CASE("normalize_exponent_gcds") {
  auto n = normalize_exponent_gcds({{2, 2, 1}, {4, 2, 2}}, 3, 5);
  CHECK(n.gx == 2);
  CHECK(n.gy == 2);
  CHECK(n.a == 9);
  CHECK(n.b == 25);
  CHECK(n.solutions == std::vector<Solution>{{1, 1, 1}, {2, 1, 2}});

  n = normalize_exponent_gcds({{1, 1, 1}, {7, 1, 3}}, 3, 10);
  CHECK(n.gx == 1);
  CHECK(n.gy == 1);
  CHECK(n.solutions == std::vector<Solution>{{1, 1, 1}, {7, 1, 3}});

  n = normalize_exponent_gcds({{3, 2, 5}}, 2, 3);
  CHECK(n.a == 8);
  CHECK(n.b == 9);
  CHECK(n.solutions == std::vector<Solution>{{1, 1, 5}});
}
