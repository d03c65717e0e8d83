#pragma once
// Small brute-force references on machine integers, kept separate from the
// library so the tests do not check the code against itself.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

inline u64 powmod(u64 b, u64 e, u64 m) {
  u64 r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline u64 order(u64 m, u64 c) {
  m %= c;
  u64 k = 1, acc = m;
  while (acc != 1 % c) {
    acc = mulmod(acc, m, c);
    ++k;
  }
  return k;
}

inline std::vector<std::pair<u64, unsigned>> factor(u64 n) {
  std::vector<std::pair<u64, unsigned>> out;
  for (u64 d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

// Exact a^e if it fits under limit.
inline std::optional<u64> pow_le(u64 a, unsigned e, u64 limit) {
  u128 r = 1;
  for (unsigned i = 0; i < e; ++i) {
    r *= a;
    if (r > limit) return std::nullopt;
  }
  return static_cast<u64>(r);
}

// Every (x, y, z) with a^x + b^y = c^z and c^z <= cap, by iterating x and y.
inline std::vector<std::tuple<unsigned, unsigned, unsigned>> solutions(u64 a, u64 b,
                                                                        u64 c, u64 cap) {
  std::vector<std::tuple<unsigned, unsigned, unsigned>> out;
  for (unsigned x = 1;; ++x) {
    auto ax = pow_le(a, x, cap);
    if (!ax) break;
    for (unsigned y = 1;; ++y) {
      auto by = pow_le(b, y, cap - *ax);
      if (!by) break;
      u64 s = *ax + *by;
      unsigned z = 0;
      while (s % c == 0) {
        s /= c;
        ++z;
      }
      if (s == 1 && z > 0) out.emplace_back(z, x, y);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle
