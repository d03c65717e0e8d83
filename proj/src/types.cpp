#include "expdio/types.hpp"

#include "expdio/errors.hpp"

namespace expdio {

Equation Equation::make(const BigInt& a, const BigInt& b, const BigInt& c) {
  if (a < 2 || b < 2 || c < 2) {
    throw DomainError("equation bases must all be >= 2, got (" + a.get_str() +
                      ", " + b.get_str() + ", " + c.get_str() + ")");
  }
  Equation eq{a, b, c};
  eq.coprime = gcd(a, b) == 1;
  eq.c_odd = mpz_odd_p(c.get_mpz_t()) != 0;
  return eq;
}

bool Equation::satisfied_by(const Solution& s) const {
  if (s.x == 0 || s.y == 0 || s.z == 0) return false;
  return pow(a, s.x) + pow(b, s.y) == pow(c, s.z);
}

std::string Equation::str() const {
  return "(" + a.get_str() + ", " + b.get_str() + ", " + c.get_str() + ")";
}

}  // namespace expdio
