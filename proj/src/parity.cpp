#include "expdio/parity.hpp"

#include <numeric>

#include "expdio/errors.hpp"

namespace expdio {

namespace {

const ParityClass kAllClasses[] = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};

std::optional<unsigned long> valuation_or_infinite(const BigInt& n) {
  if (n == 0) return std::nullopt;
  return v2(n);
}

// Total order on valuations with empty as infinity.
bool val_less(std::optional<unsigned long> a, std::optional<unsigned long> b) {
  if (!a) return false;
  if (!b) return true;
  return *a < *b;
}

bool val_equal(std::optional<unsigned long> a, std::optional<unsigned long> b) {
  return a == b;
}

}  // namespace

ParitySet valuation_prediction(std::optional<unsigned long> u,
                               std::optional<unsigned long> v, unsigned long w) {
  const bool swapped = val_less(v, u);
  if (swapped) std::swap(u, v);
  const std::optional<unsigned long> wv = w;

  // Classes in terms of (first, second) parities, first being the variable
  // with the smaller valuation.
  ParitySet out;
  auto add = [&](int first, int second) {
    out.insert(swapped ? ParityClass{second, first} : ParityClass{first, second});
  };
  if (val_equal(u, v)) {
    if (val_less(u, wv)) {
      add(0, 0);
      add(1, 1);
    } else if (val_equal(u, wv)) {
      add(0, 1);
      add(1, 0);
    }
  } else if (val_less(u, wv)) {
    add(0, 0);
    add(0, 1);
  } else if (val_equal(u, wv)) {
    add(1, 0);
    add(1, 1);
  }
  return out;
}

PrimeParityAnalysis allowed_classes_mod_p(const BigInt& a, const BigInt& b,
                                          const BigInt& p) {
  if (mod(a, p) == 0 || mod(b, p) == 0) {
    throw DomainError("allowed_classes_mod_p: " + p.get_str() +
                      " divides a or b");
  }
  PrimeParityAnalysis out;
  out.p = p;
  out.d = find_primitive_root(p);
  out.r = discrete_log(out.d, a, p);
  out.s = discrete_log(out.d, b, p);
  out.u = valuation_or_infinite(out.r);
  out.v = valuation_or_infinite(out.s);

  const BigInt n = p - 1;
  const BigInt half = n / 2;
  out.w = v2(half);

  // x = ex + 2i, y = ey + 2j with i, j free: solvable iff
  // gcd(2r, 2s, p-1) divides (p-1)/2 - r*ex + s*ey.
  const BigInt g = gcd(gcd(2 * out.r, 2 * out.s), n);
  for (const auto& cls : kAllClasses) {
    BigInt rhs = half - out.r * cls.ex + out.s * cls.ey;
    if (mpz_divisible_p(rhs.get_mpz_t(), g.get_mpz_t())) out.allowed.insert(cls);
  }
  out.predicted = valuation_prediction(out.u, out.v, out.w);
  return out;
}

std::vector<PrimeParityAnalysis> prime_analyses(const BigInt& a,
                                                const BigInt& b,
                                                const BigInt& c) {
  if (c < 3 || mpz_even_p(c.get_mpz_t())) {
    throw DomainError("allowed_classes: c must be odd and >= 3, got " +
                      c.get_str());
  }
  if (a < 2 || b < 2 || gcd(a, b) != 1) {
    throw DomainError("allowed_classes: requires coprime a, b >= 2");
  }
  std::vector<PrimeParityAnalysis> out;
  for (const BigInt& p : factorize(c).primes()) {
    if (mod(a, p) == 0 || mod(b, p) == 0) return {};
    out.push_back(allowed_classes_mod_p(a, b, p));
  }
  return out;
}

ParitySet allowed_classes(const BigInt& a, const BigInt& b, const BigInt& c) {
  const auto analyses = prime_analyses(a, b, c);
  if (analyses.empty()) return {};
  ParitySet result(std::begin(kAllClasses), std::end(kAllClasses));
  for (const auto& pa : analyses) {
    ParitySet next;
    for (const auto& cls : result) {
      if (pa.allowed.contains(cls)) next.insert(cls);
    }
    result = std::move(next);
  }
  return result;
}

bool check_order_condition(const BigInt& a, const BigInt& b, const BigInt& c) {
  if (c < 2) throw DomainError("check_order_condition: c must be >= 2");
  if (gcd(a, c) != 1 || gcd(b, c) != 1) {
    throw DomainError("check_order_condition: a and b must be prime to c");
  }
  const BigInt minus_one = c - 1;
  for (const BigInt* m : {&a, &b}) {
    BigInt u = mul_order(*m, c);
    if (mpz_odd_p(u.get_mpz_t())) continue;
    if (powm(*m, u / 2, c) == minus_one) return true;
  }
  return false;
}

NormalizedSolutions normalize_exponent_gcds(const std::vector<Solution>& solutions,
                                            const BigInt& a, const BigInt& b) {
  NormalizedSolutions out;
  out.gx = 0;
  out.gy = 0;
  for (const auto& s : solutions) {
    out.gx = std::gcd(out.gx, s.x);
    out.gy = std::gcd(out.gy, s.y);
  }
  if (out.gx == 0) out.gx = 1;
  if (out.gy == 0) out.gy = 1;
  out.a = pow(a, out.gx);
  out.b = pow(b, out.gy);
  for (const auto& s : solutions) {
    out.solutions.push_back({s.x / out.gx, s.y / out.gy, s.z});
  }
  return out;
}

}  // namespace expdio
