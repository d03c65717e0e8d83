#include "expdio/conjecture.hpp"

#include "expdio/errors.hpp"

namespace expdio {

const std::vector<KnownTriple>& sporadic_triples() {
  static const std::vector<KnownTriple> triples = [] {
    std::vector<KnownTriple> t = {
        {2, 5, 3, {{2, 1, 2}, {1, 2, 3}}},
        {2, 7, 3, {{1, 1, 2}, {5, 2, 4}}},
        {2, 3, 11, {{1, 2, 1}, {3, 1, 1}}},
        {2, 3, 35, {{3, 3, 1}, {5, 1, 1}}},
        {2, 3, 259, {{4, 5, 1}, {8, 1, 1}}},
        {3, 4, 259, {{1, 4, 1}, {5, 2, 1}}},
        {3, 16, 259, {{1, 2, 1}, {5, 1, 1}}},
        {2, 5, 133, {{3, 3, 1}, {7, 1, 1}}},
        {3, 10, 13, {{1, 1, 1}, {7, 1, 3}}},
        {2, 89, 91, {{1, 1, 1}, {13, 1, 2}}},
        {2, 91, 8283, {{1, 2, 1}, {13, 1, 1}}},
        {3, 5, 2, {{1, 1, 3}, {3, 1, 5}, {1, 3, 7}}},
        {3, 13, 2, {{1, 1, 4}, {5, 1, 8}}},
        {3, 13, 4, {{1, 1, 2}, {5, 1, 4}}},
        {3, 13, 16, {{1, 1, 1}, {5, 1, 2}}},
        {3, 13, 2200, {{1, 3, 1}, {7, 1, 1}}},
    };
    return t;
  }();
  return triples;
}

KnownTriple family_member(unsigned long n) {
  if (n < 2) throw DomainError("family_member: n must be >= 2");
  const BigInt p = pow(BigInt(2), n);
  return {2, p - 1, p + 1, {{1, 1, 1}, {n + 2, 2, 2}}, true};
}

}  // namespace expdio
