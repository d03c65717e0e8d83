#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "expdio/arith.hpp"
#include "expdio/assoc.hpp"
#include "expdio/parity.hpp"
#include "expdio/types.hpp"

namespace expdio {

enum class BoundKind { theorem1, theorem_a, cap };

struct BoundPolicy {
  BoundKind kind = BoundKind::theorem1;
  BigInt cap;  // only for BoundKind::cap

  static BoundPolicy theorem1() { return {BoundKind::theorem1, 0}; }
  static BoundPolicy theorem_a() { return {BoundKind::theorem_a, 0}; }
  static BoundPolicy capped(const BigInt& n) { return {BoundKind::cap, n}; }
};

std::string to_string(BoundKind kind);
BoundKind parse_bound_kind(const std::string& name);

// The cap used when no odd-c bound applies.
const BigInt& default_power_cap();  // 10^30

// theorem1 when c is odd and gcd(a, b) = 1, otherwise cap(cap).
BoundPolicy default_policy(const Equation& eq, const BigInt& cap = default_power_cap());

enum class Completeness { proven_complete, cap_bounded };
std::string to_string(Completeness c);

struct SolveResult {
  Equation equation;
  std::vector<Solution> solutions;  // sorted by (z, x, y)
  Completeness completeness = Completeness::cap_bounded;
  BoundPolicy policy;
  unsigned long z_max = 0;  // every 1 <= z <= z_max was searched
  std::string bound_used;
};

struct SolveOptions {
  unsigned jobs = 1;
};

/// Largest z in the search range. theorem1: largest z < ab/2. theorem_a:
/// floor of an upward-rounded 2ab log(2e ab)/pi. cap: largest z with
/// c^z <= cap (0 when c > cap).
unsigned long z_bound(const Equation& eq, const BoundPolicy& policy);

/// Lower and upper enclosures of 2ab log(2e ab)/pi.
struct RealEnclosure {
  double lower;
  double upper;
};
RealEnclosure theorem_a_enclosure(const BigInt& a, const BigInt& b);

/// z < 2ab log(2e ab)/pi, decided with a downward-rounded bound.
bool below_theorem_a(unsigned long z, const BigInt& a, const BigInt& b);
/// z < ab/2, exactly.
bool below_theorem1(unsigned long z, const BigInt& a, const BigInt& b);

/// Every solution with z <= z_bound(eq, policy).
SolveResult enumerate_solutions(const Equation& eq, const BoundPolicy& policy,
                                const SolveOptions& options = {});

struct VerifyReport {
  SolveResult result;
  std::size_t expected_count = 0;
  bool count_ok = false;
  std::vector<ParityClass> solution_classes;
  // The rest is only filled in for odd c with gcd(a, b) = 1.
  std::optional<ParitySet> allowed;
  bool parity_sound = true;
  std::optional<bool> order_condition;
  std::vector<AssociationSignature> signatures;
  std::optional<LawReport> laws;
  bool theorem1_bound_ok = true;
  bool theorem_a_bound_ok = true;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

VerifyReport verify_triple(const Equation& eq, std::size_t expected_count,
                           const BoundPolicy& policy,
                           const SolveOptions& options = {});

}  // namespace expdio
