#include "expdio/arith.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <numeric>
#include <unordered_map>

#include "expdio/errors.hpp"
#include "u64_modular.hpp"

namespace expdio {

BigInt pow(const BigInt& base, unsigned long exponent) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

BigInt powm(const BigInt& base, const BigInt& exponent, const BigInt& modulus) {
  BigInt r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(),
           modulus.get_mpz_t());
  return r;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

BigInt mod(const BigInt& a, const BigInt& m) {
  BigInt r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

BigInt invert(const BigInt& a, const BigInt& m) {
  BigInt r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw DomainError("invert: " + a.get_str() + " is not invertible mod " +
                      m.get_str());
  }
  return r;
}

BigInt parse_integer(const std::string& text) {
  auto fail = [&]() -> BigInt {
    throw DomainError("not an integer: '" + text + "'");
  };
  if (text.empty()) return fail();

  std::size_t i = 0;
  bool negative = false;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    ++i;
  }

  // base^exponent
  if (auto caret = text.find('^'); caret != std::string::npos) {
    BigInt base = parse_integer(text.substr(i, caret - i));
    BigInt e = parse_integer(text.substr(caret + 1));
    if (e < 0 || !e.fits_ulong_p()) return fail();
    BigInt r = pow(base, e.get_ui());
    return negative ? BigInt(-r) : r;
  }

  std::string digits;
  long scale = 0;
  bool seen_point = false;
  for (; i < text.size(); ++i) {
    char ch = text[i];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      digits.push_back(ch);
      if (seen_point) --scale;
    } else if (ch == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (digits.empty()) return fail();
  if (i < text.size()) {
    if (text[i] != 'e' && text[i] != 'E') return fail();
    ++i;
    std::string exp_text = text.substr(i);
    if (exp_text.empty()) return fail();
    std::size_t j = (exp_text[0] == '+' || exp_text[0] == '-') ? 1 : 0;
    if (j == exp_text.size()) return fail();
    for (std::size_t k = j; k < exp_text.size(); ++k) {
      if (!std::isdigit(static_cast<unsigned char>(exp_text[k]))) return fail();
    }
    if (exp_text.size() > 9) return fail();
    scale += std::stol(exp_text);
  }

  BigInt value(digits, 10);
  if (scale >= 0) {
    value *= pow(BigInt(10), static_cast<unsigned long>(scale));
  } else {
    BigInt divisor = pow(BigInt(10), static_cast<unsigned long>(-scale));
    if (!mpz_divisible_p(value.get_mpz_t(), divisor.get_mpz_t())) return fail();
    value /= divisor;
  }
  return negative ? BigInt(-value) : value;
}

unsigned long v2(const BigInt& n) {
  if (n <= 0) throw DomainError("v2: argument must be positive");
  return mpz_scan1(n.get_mpz_t(), 0);
}

BigInt Factorization::product() const {
  BigInt r = 1;
  for (const auto& e : entries) r *= pow(e.prime, e.exponent);
  return r;
}

std::vector<BigInt> Factorization::primes() const {
  std::vector<BigInt> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.prime);
  return out;
}

namespace {

const std::vector<std::uint32_t>& sieve_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    constexpr std::uint32_t limit = 1'000'000;
    std::vector<bool> composite(limit + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= limit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t{i} * i; j <= limit; j += i) {
        composite[j] = true;
      }
    }
    return out;
  }();
  return primes;
}

// 3317044064679887385961981: below this, Miller-Rabin with the first 13
// prime bases is deterministic.
const BigInt& deterministic_mr_limit() {
  static const BigInt limit("3317044064679887385961981", 10);
  return limit;
}

const BigInt& two_pow_128() {
  static const BigInt limit = pow(BigInt(2), 128);
  return limit;
}

bool miller_rabin(const BigInt& n, unsigned long base) {
  BigInt n1 = n - 1;
  unsigned long s = mpz_scan1(n1.get_mpz_t(), 0);
  BigInt d = n1 >> s;
  BigInt x = powm(BigInt(base), d, n);
  if (x == 1 || x == n1) return true;
  for (unsigned long i = 1; i < s; ++i) {
    x = x * x % n;
    if (x == n1) return true;
    if (x == 1) return false;
  }
  return false;
}

// Lucas test: n is prime iff some w has order n-1 modulo n.
bool lucas_certificate(const BigInt& n, const FactorOptions& options) {
  const BigInt n1 = n - 1;
  const Factorization f = factorize(n1, options);
  for (unsigned long w = 2; w < 2000; ++w) {
    if (powm(BigInt(w), n1, n) != 1) return false;
    bool generator = true;
    for (const auto& e : f.entries) {
      if (powm(BigInt(w), n1 / e.prime, n) == 1) {
        generator = false;
        break;
      }
    }
    if (generator) return true;
  }
  throw EffortExceeded("is_prime: no Lucas witness found for " + n.get_str());
}

std::uint64_t brent_u64(std::uint64_t n, std::uint64_t c, std::uint64_t x0,
                        std::uint64_t budget) {
  using detail::mulmod;
  auto f = [&](std::uint64_t v) {
    std::uint64_t r = mulmod(v, v, n) + c;
    return r >= n || r < c ? r - n : r;
  };
  constexpr std::uint64_t batch = 128;
  std::uint64_t y = x0, x = x0, ys = x0, q = 1, g = 1, r = 1, spent = 0;
  do {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) y = f(y);
    std::uint64_t k = 0;
    do {
      ys = y;
      std::uint64_t steps = std::min(batch, r - k);
      for (std::uint64_t i = 0; i < steps; ++i) {
        y = f(y);
        q = mulmod(q, x > y ? x - y : y - x, n);
      }
      g = std::gcd(q, n);
      k += steps;
      spent += steps;
    } while (k < r && g == 1);
    r *= 2;
  } while (g == 1 && spent < budget);
  if (g == n) {
    do {
      ys = f(ys);
      g = std::gcd(x > ys ? x - ys : ys - x, n);
    } while (g == 1);
  }
  return (g == 1 || g == n) ? 0 : g;
}

BigInt brent_big(const BigInt& n, unsigned long c, const BigInt& x0,
                 std::uint64_t budget) {
  auto f = [&](const BigInt& v) { return BigInt((v * v + c) % n); };
  constexpr std::uint64_t batch = 128;
  BigInt y = x0, x = x0, ys = x0, q = 1, g = 1;
  std::uint64_t r = 1, spent = 0;
  do {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) y = f(y);
    std::uint64_t k = 0;
    do {
      ys = y;
      std::uint64_t steps = std::min(batch, r - k);
      for (std::uint64_t i = 0; i < steps; ++i) {
        y = f(y);
        BigInt diff = x - y;
        q = q * abs(diff) % n;
      }
      g = gcd(q, n);
      k += steps;
      spent += steps;
    } while (k < r && g == 1);
    r *= 2;
  } while (g == 1 && spent < budget);
  if (g == n) {
    do {
      ys = f(ys);
      BigInt diff = x - ys;
      g = gcd(abs(diff), n);
    } while (g == 1);
  }
  return (g == 1 || g == n) ? BigInt(0) : g;
}

// Nontrivial divisor of the odd composite n, or throws.
BigInt split(const BigInt& n, const FactorOptions& options) {
  BigInt root;
  for (unsigned long k = 2; k <= mpz_sizeinbase(n.get_mpz_t(), 2); ++k) {
    if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) return root;
  }
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(0x5eed);
  for (unsigned attempt = 0; attempt < options.rho_attempts; ++attempt) {
    unsigned long c = 1 + attempt;
    if (n.fits_ulong_p()) {
      std::uint64_t nn = n.get_ui();
      std::uint64_t x0 = BigInt(rng.get_z_range(n)).get_ui();
      if (auto d = brent_u64(nn, c, x0, options.rho_iterations); d != 0) {
        return BigInt(static_cast<unsigned long>(d));
      }
    } else {
      BigInt x0 = rng.get_z_range(n);
      if (BigInt d = brent_big(n, c, x0, options.rho_iterations); d != 0) {
        return d;
      }
    }
  }
  throw EffortExceeded("factorize: cofactor " + n.get_str() +
                       " resisted splitting");
}

}  // namespace

bool is_prime(const BigInt& n, const FactorOptions& options) {
  if (n < 2) return false;
  for (unsigned long p : {2UL, 3UL, 5UL, 7UL, 11UL, 13UL, 17UL, 19UL, 23UL,
                          29UL, 31UL, 37UL, 41UL}) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  if (n < 43 * 43) return true;
  if (n < deterministic_mr_limit()) {
    for (unsigned long base : {2UL, 3UL, 5UL, 7UL, 11UL, 13UL, 17UL, 19UL,
                               23UL, 29UL, 31UL, 37UL, 41UL}) {
      if (!miller_rabin(n, base)) return false;
    }
    return true;
  }
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) == 0) return false;
  if (n <= two_pow_128()) return lucas_certificate(n, options);
  return true;
}

Factorization factorize(const BigInt& n, const FactorOptions& options) {
  if (n < 1) throw DomainError("factorize: argument must be positive");
  std::map<BigInt, unsigned long> found;
  BigInt rem = n;

  auto trial = [&](unsigned long p) {
    if (!mpz_divisible_ui_p(rem.get_mpz_t(), p)) return;
    unsigned long e = 0;
    while (mpz_divisible_ui_p(rem.get_mpz_t(), p)) {
      mpz_divexact_ui(rem.get_mpz_t(), rem.get_mpz_t(), p);
      ++e;
    }
    found[BigInt(p)] += e;
  };

  const auto& primes = sieve_primes();
  unsigned long last = 1;
  for (std::uint32_t p : primes) {
    if (p > options.trial_bound) break;
    if (BigInt(p) * p > rem) break;
    trial(p);
    last = p;
  }
  if (options.trial_bound > primes.back()) {
    for (unsigned long p = primes.back() + 2; p <= options.trial_bound; p += 2) {
      if (BigInt(p) * p > rem) break;
      trial(p);
      last = p;
    }
  }

  std::vector<BigInt> pending;
  if (rem > 1) pending.push_back(rem);
  while (!pending.empty()) {
    BigInt m = pending.back();
    pending.pop_back();
    // No factor <= last survives, so m < (last+1)^2 is prime.
    BigInt next = BigInt(last) + 1;
    if (m < next * next || is_prime(m, options)) {
      found[m] += 1;
      continue;
    }
    BigInt d = split(m, options);
    pending.push_back(d);
    pending.push_back(m / d);
  }

  Factorization f;
  for (auto& [p, e] : found) f.entries.push_back({p, e});
  if (f.product() != n) {
    throw InternalError("factorize: product check failed for " + n.get_str());
  }
  return f;
}

BigInt carmichael(const Factorization& f) {
  BigInt lambda = 1;
  for (const auto& [p, e] : f.entries) {
    BigInt part;
    if (p == 2) {
      part = e == 1 ? BigInt(1) : e == 2 ? BigInt(2) : pow(BigInt(2), e - 2);
    } else {
      part = pow(p, e - 1) * (p - 1);
    }
    lambda = lcm(lambda, part);
  }
  return lambda;
}

BigInt mul_order(const BigInt& m, const BigInt& c) {
  if (c < 2) throw DomainError("mul_order: modulus must be >= 2");
  const BigInt residue = mod(m, c);
  if (gcd(residue, c) != 1) {
    throw DomainError("mul_order: gcd(" + m.get_str() + ", " + c.get_str() +
                      ") > 1");
  }
  const Factorization fc = factorize(c);
  BigInt order = carmichael(fc);
  const Factorization fl = factorize(order);
  for (const auto& [q, e] : fl.entries) {
    for (unsigned long i = 0; i < e; ++i) {
      BigInt reduced = order / q;
      if (powm(residue, reduced, c) != 1) break;
      order = reduced;
    }
  }
  return order;
}

namespace {

void require_odd_prime(const BigInt& p, const char* who) {
  if (p < 3 || mpz_even_p(p.get_mpz_t()) || !is_prime(p)) {
    throw DomainError(std::string(who) + ": " + p.get_str() +
                      " is not an odd prime");
  }
}

bool is_generator(const BigInt& d, const BigInt& p, const Factorization& f) {
  for (const auto& e : f.entries) {
    if (powm(d, (p - 1) / e.prime, p) == 1) return false;
  }
  return true;
}

// Discrete log of h to base g where g has prime order q mod p.
BigInt bsgs(const BigInt& g, const BigInt& h, const BigInt& q, const BigInt& p) {
  if (q > pow(BigInt(2), 44)) {
    throw EffortExceeded("discrete_log: subgroup of order " + q.get_str() +
                         " is too large for a baby-step table");
  }
  BigInt m_big;
  mpz_sqrt(m_big.get_mpz_t(), q.get_mpz_t());
  m_big += 1;
  const unsigned long m = m_big.get_ui();

  std::unordered_multimap<unsigned long, unsigned long> table;
  table.reserve(m);
  BigInt cur = 1;
  for (unsigned long j = 0; j < m; ++j) {
    table.emplace(mpz_getlimbn(cur.get_mpz_t(), 0), j);
    cur = cur * g % p;
  }
  // Giant step multiplies by g^-m.
  const BigInt giant = invert(powm(g, BigInt(m), p), p);
  const BigInt target = mod(h, p);
  BigInt gamma = target;
  for (unsigned long i = 0; i <= m; ++i) {
    auto [lo, hi] = table.equal_range(mpz_getlimbn(gamma.get_mpz_t(), 0));
    for (auto it = lo; it != hi; ++it) {
      BigInt candidate = BigInt(i) * m + it->second;
      if (powm(g, candidate, p) == target) return mod(candidate, q);
    }
    gamma = gamma * giant % p;
  }
  throw InternalError("discrete_log: no logarithm in prime-order subgroup");
}

}  // namespace

BigInt find_primitive_root(const BigInt& p) {
  require_odd_prime(p, "find_primitive_root");
  const Factorization f = factorize(p - 1);
  for (BigInt d = 2; d < p; ++d) {
    if (is_generator(d, p, f)) return d;
  }
  throw InternalError("find_primitive_root: none found for " + p.get_str());
}

BigInt discrete_log(const BigInt& d, const BigInt& a, const BigInt& p) {
  require_odd_prime(p, "discrete_log");
  const BigInt target = mod(a, p);
  if (target == 0) {
    throw DomainError("discrete_log: " + a.get_str() + " is divisible by " +
                      p.get_str());
  }
  const BigInt n = p - 1;
  const Factorization f = factorize(n);
  const BigInt base = mod(d, p);
  if (!is_generator(base, p, f)) {
    throw DomainError("discrete_log: " + d.get_str() +
                      " is not a primitive root of " + p.get_str());
  }

  // Pohlig-Hellman over each q^e || p-1.
  BigInt result = 0, modulus = 1;
  for (const auto& [q, e] : f.entries) {
    const BigInt qe = pow(q, e);
    const BigInt gq = powm(base, n / q, p);
    const BigInt base_inv = invert(base, p);
    BigInt x = 0, q_power = 1;
    for (unsigned long k = 0; k < e; ++k) {
      BigInt shifted = target * powm(base_inv, x, p) % p;
      BigInt hk = powm(shifted, n / (q_power * q), p);
      BigInt digit = bsgs(gq, hk, q, p);
      x += digit * q_power;
      q_power *= q;
    }
    // CRT merge of result mod `modulus` with x mod qe.
    BigInt t = mod((x - result) * invert(modulus, qe), qe);
    result += modulus * t;
    modulus *= qe;
  }
  result = mod(result, n);
  if (powm(base, result, p) != target) {
    throw InternalError("discrete_log: result failed re-exponentiation");
  }
  return result;
}

std::vector<BigInt> sqrt_mod(const BigInt& n, const BigInt& p) {
  require_odd_prime(p, "sqrt_mod");
  const BigInt a = mod(n, p);
  if (a == 0) return {BigInt(0)};
  if (mpz_legendre(a.get_mpz_t(), p.get_mpz_t()) != 1) return {};

  BigInt root;
  if (mod(p, 4) == 3) {
    root = powm(a, (p + 1) / 4, p);
  } else {
    // Tonelli-Shanks with p - 1 = q * 2^s.
    BigInt q = p - 1;
    unsigned long s = mpz_scan1(q.get_mpz_t(), 0);
    q >>= s;
    BigInt z = 2;
    while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;

    BigInt c = powm(z, q, p);
    BigInt t = powm(a, q, p);
    root = powm(a, (q + 1) / 2, p);
    unsigned long m = s;
    while (t != 1) {
      unsigned long i = 0;
      BigInt t2 = t;
      while (t2 != 1) {
        t2 = t2 * t2 % p;
        ++i;
      }
      BigInt b = powm(c, pow(BigInt(2), m - i - 1), p);
      root = root * b % p;
      c = b * b % p;
      t = t * c % p;
      m = i;
    }
  }
  BigInt other = p - root;
  if (root * root % p != a) throw InternalError("sqrt_mod: root check failed");
  if (other < root) std::swap(root, other);
  return {root, other};
}

PowerDecomposition perfect_power_decompose(const BigInt& s) {
  if (s < 2) throw DomainError("perfect_power_decompose: argument must be >= 2");
  if (mpz_perfect_power_p(s.get_mpz_t()) == 0) return {s, 1};

  BigInt base = s, root;
  unsigned long exponent = 1;
  for (std::uint32_t k : sieve_primes()) {
    if (k > mpz_sizeinbase(base.get_mpz_t(), 2)) break;
    while (base >= 4 && mpz_root(root.get_mpz_t(), base.get_mpz_t(), k) != 0) {
      base = root;
      exponent *= k;
    }
  }
  return {base, exponent};
}

std::optional<unsigned long> is_power_of(const BigInt& b, const BigInt& r) {
  if (b < 2 || r < 1) throw DomainError("is_power_of: requires b >= 2, r >= 1");
  if (r < b) return std::nullopt;
  if (!mpz_divisible_p(r.get_mpz_t(), b.get_mpz_t())) return std::nullopt;

  // y is within one of log(r)/log(b); confirm exactly.
  long re = 0, be = 0;
  double rm = mpz_get_d_2exp(&re, r.get_mpz_t());
  double bm = mpz_get_d_2exp(&be, b.get_mpz_t());
  double estimate =
      (std::log2(rm) + static_cast<double>(re)) / (std::log2(bm) + static_cast<double>(be));
  auto center = static_cast<long>(std::llround(estimate));
  for (long y = std::max(1L, center - 1); y <= center + 1; ++y) {
    BigInt candidate = pow(b, static_cast<unsigned long>(y));
    if (candidate == r) return static_cast<unsigned long>(y);
    if (candidate > r) break;
  }
  return std::nullopt;
}

}  // namespace expdio
