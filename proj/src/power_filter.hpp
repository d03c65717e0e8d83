#pragma once

#include <cstdint>
#include <vector>

#include "expdio/arith.hpp"

namespace expdio::detail {

// Necessary condition for "v is a positive power of base", tested on the
// residues of v modulo a few 64-bit moduli:
//   * q^e for the smallest prime q | base (largest power below 2^62), where
//     base^x mod q^e takes only a handful of values before becoming 0;
//   * a few primes in which base has unusually small order.
// A true power always passes; almost nothing else does.
class PowerResidueFilter {
 public:
  explicit PowerResidueFilter(const BigInt& base);

  const std::vector<std::uint64_t>& moduli() const { return moduli_; }
  // residues[i] must be v mod moduli()[i].
  bool admits(const std::uint64_t* residues) const;

 private:
  std::vector<std::uint64_t> moduli_;
  bool has_prime_power_ = false;
  std::vector<std::uint64_t> prime_power_values_;  // sorted
  std::vector<std::vector<bool>> subgroups_;        // one per trailing prime
};

}  // namespace expdio::detail
