#pragma once

#include <vector>

#include "expdio/arith.hpp"
#include "expdio/types.hpp"

namespace expdio {

// gamma = a^x - b^y + 2 sqrt(-a^x b^y) written as h + k sqrt(-D).
struct GammaData {
  BigInt h;  // a^x - b^y
  BigInt k;  // 2m
  BigInt D;  // squarefree part of a^x b^y
  BigInt m;  // a^x b^y = D m^2
};

struct SignatureEntry {
  BigInt p;
  BigInt t;  // t^2 = -D (mod p); [gamma] lies in the ideal (p, t - sqrt(-D))

  bool operator==(const SignatureEntry&) const = default;
  auto operator<=>(const SignatureEntry& o) const {
    if (auto c = cmp(p, o.p); c != 0) return c <=> 0;
    return cmp(t, o.t) <=> 0;
  }
};

// Which conjugate pair of ideals above the primes of c divides [gamma].
// Stored as the lexicographically smaller of the residue vector and its
// negation, so conjugate ideals map to the same signature.
struct AssociationSignature {
  std::vector<SignatureEntry> entries;
  bool negated = false;  // true when the negated vector was the smaller one

  bool operator==(const AssociationSignature& o) const {
    return entries == o.entries;
  }
  bool operator<(const AssociationSignature& o) const {
    return entries < o.entries;
  }
};

BigInt compute_D(const BigInt& a, const BigInt& b, ParityClass cls);

GammaData gamma_components(const BigInt& a, const BigInt& b, unsigned long x,
                           unsigned long y);

/// Signature of the solution; requires c odd, gcd(ab, c) = 1 and an exact
/// solution (DomainError otherwise). Throws InternalError if p | h, p | k or
/// a residue fails t^2 = -D (mod p).
AssociationSignature association_signature(const Equation& eq,
                                           const Solution& sol);

/// Canonical form of an arbitrary residue vector over the primes of c.
AssociationSignature canonicalize(std::vector<SignatureEntry> raw);

/// 2^(omega(c) - 1) for odd c >= 3.
BigInt count_factorizations(const BigInt& c);

struct ClassGroup {
  ParityClass cls;
  std::vector<Solution> solutions;  // original exponents
  std::vector<AssociationSignature> signatures;  // distinct, first-seen order
};

struct SignatureCollision {
  ParityClass cls;
  AssociationSignature signature;
  std::vector<Solution> solutions;
};

// Checks at most one solution per (class, factorization), at most two
// factorizations per class, and one factorization per class whenever
// solutions occupy several classes. Classes are taken after exponent-gcd
// normalization.
struct LawReport {
  BigInt a_normalized;
  BigInt b_normalized;
  unsigned long gx = 1;
  unsigned long gy = 1;
  std::vector<ClassGroup> classes;
  std::vector<SignatureCollision> collisions;
  bool known_exception = false;  // (3,10,13) or (10,3,13)
  bool unique_per_factorization = true;
  bool at_most_two_per_class = true;
  bool multi_class = false;
  bool one_per_class = true;
  bool order_condition_holds = true;  // vacuous unless multi_class

  bool compliant() const {
    return (unique_per_factorization || known_exception) &&
           at_most_two_per_class && one_per_class && order_condition_holds;
  }
};

LawReport verify_association_laws(const Equation& eq,
                                  const std::vector<Solution>& solutions);

}  // namespace expdio
