#pragma once

#include <optional>
#include <set>
#include <vector>

#include "expdio/arith.hpp"
#include "expdio/types.hpp"

namespace expdio {

using ParitySet = std::set<ParityClass>;

// Solvability of a^x = -b^y (mod p) by parity class, for one odd prime p.
struct PrimeParityAnalysis {
  BigInt p;
  BigInt d;  // smallest primitive root of p
  BigInt r;  // a = d^r (mod p)
  BigInt s;  // b = d^s (mod p)
  // 2-adic valuations of r and s; empty when the logarithm is 0.
  std::optional<unsigned long> u;
  std::optional<unsigned long> v;
  unsigned long w = 0;  // v2((p-1)/2)
  ParitySet allowed;    // exact
  ParitySet predicted;  // from the valuation case table
};

/// Exact parity classes for which r*x = (p-1)/2 + s*y (mod p-1) is solvable.
/// Rejects p | a or p | b.
PrimeParityAnalysis allowed_classes_mod_p(const BigInt& a, const BigInt& b,
                                          const BigInt& p);

/// The valuation case table: with u <= v (roles of x and y swapped
/// otherwise), u=v<w forces x = y, u=v=w forces x != y, u<min(v,w) forces
/// x even, u=w<v forces x odd (parities), every other case is unsolvable.
/// An empty valuation means infinite.
ParitySet valuation_prediction(std::optional<unsigned long> u,
                               std::optional<unsigned long> v, unsigned long w);

/// Intersection of the per-prime sets over all primes of the odd c >= 3.
/// Empty when some prime of c divides a or b.
ParitySet allowed_classes(const BigInt& a, const BigInt& b, const BigInt& c);

std::vector<PrimeParityAnalysis> prime_analyses(const BigInt& a,
                                                const BigInt& b,
                                                const BigInt& c);

/// (u(a) even and a^(u(a)/2) = -1) or (u(b) even and b^(u(b)/2) = -1), mod c.
bool check_order_condition(const BigInt& a, const BigInt& b, const BigInt& c);

struct NormalizedSolutions {
  BigInt a;  // a^gx
  BigInt b;  // b^gy
  unsigned long gx = 1;
  unsigned long gy = 1;
  std::vector<Solution> solutions;  // x/gx, y/gy, z
};

/// Divides out the gcd of all x and of all y, folding them into the bases.
NormalizedSolutions normalize_exponent_gcds(const std::vector<Solution>& solutions,
                                            const BigInt& a, const BigInt& b);

}  // namespace expdio
