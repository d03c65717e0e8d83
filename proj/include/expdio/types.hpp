#pragma once

#include <compare>
#include <string>

#include "expdio/arith.hpp"

namespace expdio {

// Positive exponents (x, y, z) of a^x + b^y = c^z. Ordered by (z, x, y).
struct Solution {
  unsigned long x = 0;
  unsigned long y = 0;
  unsigned long z = 0;

  bool operator==(const Solution&) const = default;
  auto operator<=>(const Solution& o) const {
    if (auto c = z <=> o.z; c != 0) return c;
    if (auto c = x <=> o.x; c != 0) return c;
    return y <=> o.y;
  }
};

// Exponent parities, 0 = even, 1 = odd.
struct ParityClass {
  int ex = 0;
  int ey = 0;

  static ParityClass of(const Solution& s) {
    return {static_cast<int>(s.x & 1), static_cast<int>(s.y & 1)};
  }
  bool operator==(const ParityClass&) const = default;
  auto operator<=>(const ParityClass&) const = default;
};

struct Equation {
  BigInt a;
  BigInt b;
  BigInt c;
  bool coprime = false;  // gcd(a, b) == 1
  bool c_odd = false;

  // Validates a, b, c >= 2 (DomainError otherwise) and fills the flags.
  static Equation make(const BigInt& a, const BigInt& b, const BigInt& c);

  // a^x + b^y == c^z, exactly.
  bool satisfied_by(const Solution& s) const;
  std::string str() const;
};

}  // namespace expdio
