#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace expdio {

using BigInt = mpz_class;

struct PrimePower {
  BigInt prime;
  unsigned long exponent = 0;

  bool operator==(const PrimePower&) const = default;
};

// Prime factorization with primes strictly increasing. Empty means 1.
struct Factorization {
  std::vector<PrimePower> entries;

  std::size_t omega() const { return entries.size(); }
  BigInt product() const;
  std::vector<BigInt> primes() const;
  bool operator==(const Factorization&) const = default;
};

// s == base^exponent with exponent maximal.
struct PowerDecomposition {
  BigInt base;
  unsigned long exponent = 1;

  bool operator==(const PowerDecomposition&) const = default;
};

struct FactorOptions {
  // Trial division by every prime up to this bound before splitting.
  unsigned long trial_bound = 1'000'000;
  // Iteration budget for one Pollard-Brent attempt, and number of attempts
  // (each with a fresh polynomial constant) per composite cofactor.
  std::uint64_t rho_iterations = 1ULL << 24;
  unsigned rho_attempts = 24;
};

BigInt pow(const BigInt& base, unsigned long exponent);
BigInt powm(const BigInt& base, const BigInt& exponent, const BigInt& modulus);
BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);
// Least nonnegative residue.
BigInt mod(const BigInt& a, const BigInt& m);
BigInt invert(const BigInt& a, const BigInt& m);
// Parses a decimal integer. Also accepts exact scientific forms such as
// "1e12" or "2.5e3"; rejects anything that is not an integer.
BigInt parse_integer(const std::string& text);

/// 2-adic valuation of n >= 1.
unsigned long v2(const BigInt& n);

/// Primality. Certified for n <= 2^128 (deterministic Miller-Rabin below
/// 3.3e24, Lucas n-1 certificate above); probable-prime beyond 2^128.
/// Throws EffortExceeded if a certificate cannot be built.
bool is_prime(const BigInt& n, const FactorOptions& options = {});

/// Complete factorization of n >= 1. Throws EffortExceeded when a cofactor
/// resists splitting within the configured effort.
Factorization factorize(const BigInt& n, const FactorOptions& options = {});

/// Carmichael function of the factored integer.
BigInt carmichael(const Factorization& f);

/// Multiplicative order of m modulo c (c >= 2, gcd(m, c) = 1).
BigInt mul_order(const BigInt& m, const BigInt& c);

/// Smallest primitive root of the odd prime p.
BigInt find_primitive_root(const BigInt& p);

/// The r in [0, p-2] with d^r = a (mod p), d a primitive root of the odd
/// prime p. Baby-step giant-step inside each prime-order subgroup of
/// (Z/p)^*, combined by CRT; total work O(sqrt(p)) at worst.
BigInt discrete_log(const BigInt& d, const BigInt& a, const BigInt& p);

/// All t in [0, p-1] with t^2 = n (mod p), ascending. p an odd prime.
std::vector<BigInt> sqrt_mod(const BigInt& n, const BigInt& p);

/// Maximal-exponent power decomposition of s >= 2.
PowerDecomposition perfect_power_decompose(const BigInt& s);

/// y >= 1 with b^y == r, if one exists.
std::optional<unsigned long> is_power_of(const BigInt& b, const BigInt& r);

}  // namespace expdio
