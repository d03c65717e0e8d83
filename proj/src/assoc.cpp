#include "expdio/assoc.hpp"

#include <algorithm>
#include <map>

#include "expdio/errors.hpp"
#include "expdio/parity.hpp"

namespace expdio {

namespace {

void fold_factors(const Factorization& f, unsigned long e, BigInt& D, BigInt& m) {
  for (const auto& [q, v] : f.entries) {
    const unsigned long total = v * e;
    if (total & 1) D *= q;
    m *= pow(q, total / 2);
  }
}

void require_coprime(const BigInt& a, const BigInt& b) {
  if (a < 2 || b < 2 || gcd(a, b) != 1) {
    throw DomainError("requires coprime a, b >= 2");
  }
}

}  // namespace

BigInt compute_D(const BigInt& a, const BigInt& b, ParityClass cls) {
  require_coprime(a, b);
  BigInt D = 1, m = 1;
  fold_factors(factorize(a), static_cast<unsigned long>(cls.ex), D, m);
  fold_factors(factorize(b), static_cast<unsigned long>(cls.ey), D, m);
  return D;
}

GammaData gamma_components(const BigInt& a, const BigInt& b, unsigned long x,
                           unsigned long y) {
  require_coprime(a, b);
  if (x == 0 || y == 0) throw DomainError("gamma_components: x, y must be >= 1");
  const BigInt ax = pow(a, x), by = pow(b, y);
  GammaData g;
  g.D = 1;
  g.m = 1;
  fold_factors(factorize(a), x, g.D, g.m);
  fold_factors(factorize(b), y, g.D, g.m);
  g.h = ax - by;
  g.k = 2 * g.m;
  if (g.D * g.m * g.m != ax * by) {
    throw InternalError("gamma_components: D m^2 != a^x b^y");
  }
  return g;
}

AssociationSignature canonicalize(std::vector<SignatureEntry> raw) {
  std::vector<SignatureEntry> negated = raw;
  for (auto& e : negated) e.t = mod(-e.t, e.p);
  AssociationSignature sig;
  if (negated < raw) {
    sig.entries = std::move(negated);
    sig.negated = true;
  } else {
    sig.entries = std::move(raw);
  }
  return sig;
}

AssociationSignature association_signature(const Equation& eq,
                                           const Solution& sol) {
  if (!eq.c_odd) throw DomainError("association_signature: c must be odd");
  if (!eq.coprime) throw DomainError("association_signature: gcd(a, b) > 1");
  if (gcd(eq.a * eq.b, eq.c) != 1) {
    throw DomainError("association_signature: gcd(ab, c) > 1");
  }
  if (!eq.satisfied_by(sol)) {
    throw DomainError("association_signature: not a solution of " + eq.str());
  }
  const GammaData g = gamma_components(eq.a, eq.b, sol.x, sol.y);
  std::vector<SignatureEntry> raw;
  for (const BigInt& p : factorize(eq.c).primes()) {
    const BigInt hp = mod(g.h, p), kp = mod(g.k, p);
    if (hp == 0 || kp == 0 || mod(g.D, p) == 0) {
      throw InternalError("association_signature: " + p.get_str() +
                          " divides h, k or D for " + eq.str());
    }
    BigInt t = mod(-hp * invert(kp, p), p);
    if (mod(t * t + g.D, p) != 0) {
      throw InternalError("association_signature: t^2 != -D mod " + p.get_str());
    }
    const auto roots = sqrt_mod(-g.D, p);
    if (std::find(roots.begin(), roots.end(), t) == roots.end()) {
      throw InternalError("association_signature: t is not a root of -D mod " +
                          p.get_str());
    }
    raw.push_back({p, t});
  }
  return canonicalize(std::move(raw));
}

BigInt count_factorizations(const BigInt& c) {
  if (c < 3 || mpz_even_p(c.get_mpz_t())) {
    throw DomainError("count_factorizations: c must be odd and >= 3");
  }
  return pow(BigInt(2), factorize(c).omega() - 1);
}

LawReport verify_association_laws(const Equation& eq,
                                  const std::vector<Solution>& solutions) {
  LawReport report;
  report.a_normalized = eq.a;
  report.b_normalized = eq.b;
  report.known_exception =
      eq.c == 13 && ((eq.a == 3 && eq.b == 10) || (eq.a == 10 && eq.b == 3));
  if (solutions.empty()) return report;

  const NormalizedSolutions norm = normalize_exponent_gcds(solutions, eq.a, eq.b);
  report.a_normalized = norm.a;
  report.b_normalized = norm.b;
  report.gx = norm.gx;
  report.gy = norm.gy;

  std::map<ParityClass, std::size_t> class_index;
  std::map<std::pair<ParityClass, AssociationSignature>, std::vector<Solution>> buckets;
  for (std::size_t i = 0; i < solutions.size(); ++i) {
    const ParityClass cls = ParityClass::of(norm.solutions[i]);
    // gamma, hence the signature, is unchanged by normalization.
    AssociationSignature sig = association_signature(eq, solutions[i]);
    auto [it, inserted] = class_index.emplace(cls, report.classes.size());
    if (inserted) report.classes.push_back({cls, {}, {}});
    ClassGroup& group = report.classes[it->second];
    group.solutions.push_back(solutions[i]);
    if (std::find(group.signatures.begin(), group.signatures.end(), sig) ==
        group.signatures.end()) {
      group.signatures.push_back(sig);
    }
    buckets[{cls, sig}].push_back(solutions[i]);
  }

  for (auto& [key, sols] : buckets) {
    if (sols.size() >= 2) {
      report.collisions.push_back({key.first, key.second, sols});
    }
  }
  report.unique_per_factorization = report.collisions.empty();
  report.multi_class = report.classes.size() >= 2;
  for (const auto& group : report.classes) {
    if (group.signatures.size() > 2) report.at_most_two_per_class = false;
    if (report.multi_class && group.signatures.size() != 1) {
      report.one_per_class = false;
    }
  }
  if (report.multi_class) {
    report.order_condition_holds =
        check_order_condition(norm.a, norm.b, eq.c);
  }
  return report;
}

}  // namespace expdio
