#include "power_filter.hpp"

#include <algorithm>
#include <numeric>

#include "u64_modular.hpp"

namespace expdio::detail {

namespace {

constexpr std::uint64_t kModulusLimit = 1ULL << 62;
constexpr std::size_t kExtraPrimes = 4;

std::vector<std::uint32_t> small_primes(std::uint32_t limit) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t n = 2; n <= limit; ++n) {
    bool prime = true;
    for (std::uint32_t p : out) {
      if (p * p > n) break;
      if (n % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime) out.push_back(n);
  }
  return out;
}

const std::vector<std::uint32_t>& filter_primes() {
  static const std::vector<std::uint32_t> primes = small_primes(2000);
  return primes;
}

std::uint64_t order_mod_prime(std::uint64_t g, std::uint64_t q) {
  std::uint64_t order = q - 1, rest = q - 1;
  for (std::uint64_t f = 2; f * f <= rest; ++f) {
    if (rest % f) continue;
    while (rest % f == 0) rest /= f;
    while (order % f == 0 && powmod(g, order / f, q) == 1) order /= f;
  }
  if (rest > 1 && order % rest == 0 && powmod(g, order / rest, q) == 1) {
    order /= rest;
  }
  return order;
}

}  // namespace

PowerResidueFilter::PowerResidueFilter(const BigInt& base) {
  // Smallest prime factor by trial division; bases here are modest.
  std::uint64_t q = 0;
  for (std::uint64_t p = 2; p < 1'000'000; p += (p == 2 ? 1 : 2)) {
    if (BigInt(static_cast<unsigned long>(p)) > base) break;
    if (mpz_divisible_ui_p(base.get_mpz_t(), p)) {
      q = p;
      break;
    }
  }
  if (q != 0) {
    std::uint64_t m = q;
    while (m <= kModulusLimit / q) m *= q;
    const std::uint64_t g = mpz_fdiv_ui(base.get_mpz_t(), m);
    std::uint64_t cur = g;
    for (int i = 0; i < 256; ++i) {
      prime_power_values_.push_back(cur);
      if (cur == 0) break;
      cur = mulmod(cur, g, m);
    }
    std::sort(prime_power_values_.begin(), prime_power_values_.end());
    prime_power_values_.erase(
        std::unique(prime_power_values_.begin(), prime_power_values_.end()),
        prime_power_values_.end());
    moduli_.push_back(m);
    has_prime_power_ = true;
  }

  struct Candidate {
    std::uint64_t q, order;
  };
  std::vector<Candidate> candidates;
  for (std::uint32_t p : filter_primes()) {
    if (p < 3) continue;
    const std::uint64_t g = mpz_fdiv_ui(base.get_mpz_t(), p);
    if (g == 0) continue;
    candidates.push_back({p, order_mod_prime(g, p)});
  }
  // Smallest subgroup density first.
  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& l, const Candidate& r) {
              auto lhs = static_cast<unsigned __int128>(l.order) * r.q;
              auto rhs = static_cast<unsigned __int128>(r.order) * l.q;
              return lhs != rhs ? lhs < rhs : l.q < r.q;
            });
  for (std::size_t i = 0; i < candidates.size() && i < kExtraPrimes; ++i) {
    const std::uint64_t p = candidates[i].q;
    const std::uint64_t g = mpz_fdiv_ui(base.get_mpz_t(), p);
    std::vector<bool> members(p, false);
    std::uint64_t cur = g;
    for (std::uint64_t k = 0; k < candidates[i].order; ++k) {
      members[cur] = true;
      cur = cur * g % p;
    }
    moduli_.push_back(p);
    subgroups_.push_back(std::move(members));
  }
}

bool PowerResidueFilter::admits(const std::uint64_t* residues) const {
  std::size_t i = 0;
  if (has_prime_power_) {
    if (!std::binary_search(prime_power_values_.begin(),
                            prime_power_values_.end(), residues[0])) {
      return false;
    }
    i = 1;
  }
  for (std::size_t j = 0; j < subgroups_.size(); ++j, ++i) {
    if (!subgroups_[j][residues[i]]) return false;
  }
  return true;
}

}  // namespace expdio::detail
