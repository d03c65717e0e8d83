#include "expdio/solver.hpp"

#include <mpfr.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <thread>

#include "expdio/errors.hpp"
#include "power_filter.hpp"
#include "u64_modular.hpp"

namespace expdio {

std::string to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::theorem1: return "theorem1";
    case BoundKind::theorem_a: return "theoremA";
    case BoundKind::cap: return "cap";
  }
  return "?";
}

BoundKind parse_bound_kind(const std::string& name) {
  if (name == "theorem1") return BoundKind::theorem1;
  if (name == "theoremA") return BoundKind::theorem_a;
  if (name == "cap") return BoundKind::cap;
  throw DomainError("unknown bound policy '" + name + "'");
}

std::string to_string(Completeness c) {
  return c == Completeness::proven_complete ? "proven-complete" : "cap-bounded";
}

const BigInt& default_power_cap() {
  static const BigInt cap = pow(BigInt(10), 30);
  return cap;
}

BoundPolicy default_policy(const Equation& eq, const BigInt& cap) {
  if (eq.c_odd && eq.coprime) return BoundPolicy::theorem1();
  return BoundPolicy::capped(cap);
}

namespace {

class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

// 2ab log(2e ab)/pi with every operation rounded toward `dir`.
void theorem_a_value(const BigInt& a, const BigInt& b, mpfr_rnd_t dir,
                     Mpfr& out) {
  const mpfr_rnd_t against = dir == MPFR_RNDU ? MPFR_RNDD : MPFR_RNDU;
  const BigInt two_ab = 2 * a * b;
  const mpfr_prec_t prec = 128 + static_cast<mpfr_prec_t>(
                                     mpz_sizeinbase(two_ab.get_mpz_t(), 2));
  Mpfr e(prec), t(prec), pi(prec);
  mpfr_set_ui(e.get(), 1, dir);
  mpfr_exp(e.get(), e.get(), dir);
  mpfr_mul_z(t.get(), e.get(), two_ab.get_mpz_t(), dir);
  mpfr_log(t.get(), t.get(), dir);
  mpfr_mul_z(t.get(), t.get(), two_ab.get_mpz_t(), dir);
  mpfr_const_pi(pi.get(), against);
  mpfr_set_prec(out.get(), prec);
  mpfr_div(out.get(), t.get(), pi.get(), dir);
}

unsigned long to_ulong(const BigInt& v, const char* what) {
  if (v < 0 || !v.fits_ulong_p()) {
    throw DomainError(std::string(what) + " does not fit in 64 bits");
  }
  return v.get_ui();
}

BigInt theorem1_max(const Equation& eq) { return (eq.a * eq.b - 1) / 2; }

long double ln_big(const BigInt& v) {
  long e = 0;
  double m = mpz_get_d_2exp(&e, v.get_mpz_t());
  return std::log(static_cast<long double>(m)) +
         static_cast<long double>(e) * std::log(2.0L);
}

// Scan of a z-range. Every solution has max(a^x, b^y) >= c^z / 2, so for
// each z only the one or two exponents putting the larger term in
// [c^z/2, c^z) need testing, once with b^y large and once with a^x large.
class Scanner {
 public:
  Scanner(const Equation& eq, bool filtered) : eq_(eq) {
    ln_c_ = ln_big(eq.c);
    // sides_[0]: b^y is the large term; the remainder must be a power of a.
    sides_[0].big = &eq.b;
    sides_[0].small = &eq.a;
    sides_[0].ln_big = ln_big(eq.b);
    sides_[0].big_is_b = true;
    sides_[1].big = &eq.a;
    sides_[1].small = &eq.b;
    sides_[1].ln_big = ln_big(eq.a);
    if (filtered) {
      sides_[0].filter.emplace(eq.a);
      sides_[1].filter.emplace(eq.b);
    }
  }

  void scan(unsigned long z_lo, unsigned long z_hi, std::vector<Solution>& out) {
    for (auto& side : sides_) {
      side.cursors.clear();
      if (!side.filter) continue;
      for (std::uint64_t m : side.filter->moduli()) {
        Cursor cur;
        cur.m = m;
        cur.big = mpz_fdiv_ui(side.big->get_mpz_t(), m);
        cur.c = mpz_fdiv_ui(eq_.c.get_mpz_t(), m);
        cur.cz = detail::powmod(cur.c, z_lo, m);
        cur.exp = 0;
        cur.big_pow = 1 % m;
        side.cursors.push_back(cur);
      }
    }
    std::vector<std::uint64_t> residues;
    for (unsigned long z = z_lo; z <= z_hi; ++z) {
      for (auto& side : sides_) {
        scan_side(side, z, residues, out);
        for (auto& cur : side.cursors) cur.cz = detail::mulmod(cur.cz, cur.c, cur.m);
      }
      if (z == z_hi) break;
    }
  }

 private:
  struct Cursor {
    std::uint64_t m = 1, big = 0, c = 0, cz = 0;
    std::uint64_t exp = 0, big_pow = 1;

    std::uint64_t power(std::uint64_t e) {
      if (e >= exp && e - exp <= 64) {
        for (; exp < e; ++exp) big_pow = detail::mulmod(big_pow, big, m);
      } else {
        big_pow = detail::powmod(big, e, m);
        exp = e;
      }
      return big_pow;
    }
  };

  struct Side {
    const BigInt* big = nullptr;
    const BigInt* small = nullptr;
    long double ln_big = 0;
    bool big_is_b = false;
    std::optional<detail::PowerResidueFilter> filter;
    std::vector<Cursor> cursors;
  };

  void scan_side(Side& side, unsigned long z, std::vector<std::uint64_t>& residues,
                 std::vector<Solution>& out) {
    const long double zl = static_cast<long double>(z) * ln_c_;
    const long double hi = zl / side.ln_big;
    const long double lo = (zl - std::log(2.0L)) / side.ln_big;
    const long double eps = 1e-9L * (hi + 1.0L);
    const long double lo_e = std::ceil(lo - eps);
    const long double hi_e = std::floor(hi + eps);
    const unsigned long e_lo = lo_e < 1 ? 1UL : static_cast<unsigned long>(lo_e);
    if (hi_e < 1) return;
    const auto e_hi = static_cast<unsigned long>(hi_e);

    for (unsigned long e = e_lo; e <= e_hi; ++e) {
      if (side.filter) {
        residues.resize(side.cursors.size());
        for (std::size_t i = 0; i < side.cursors.size(); ++i) {
          auto& cur = side.cursors[i];
          std::uint64_t p = cur.power(e);
          residues[i] = cur.cz >= p ? cur.cz - p : cur.cz + (cur.m - p);
        }
        if (!side.filter->admits(residues.data())) continue;
      }
      const BigInt n = pow(eq_.c, z);
      const BigInt large = pow(*side.big, e);
      if (large >= n) continue;
      const BigInt rest = n - large;
      if (auto k = is_power_of(*side.small, rest)) {
        out.push_back(side.big_is_b ? Solution{*k, e, z} : Solution{e, *k, z});
      }
    }
  }

  const Equation& eq_;
  long double ln_c_ = 0;
  Side sides_[2];
};

// Below this many z values the exact test is cheap enough on its own.
constexpr unsigned long kFilterThreshold = 64;

}  // namespace

RealEnclosure theorem_a_enclosure(const BigInt& a, const BigInt& b) {
  Mpfr lo(64), hi(64);
  theorem_a_value(a, b, MPFR_RNDD, lo);
  theorem_a_value(a, b, MPFR_RNDU, hi);
  return {mpfr_get_d(lo.get(), MPFR_RNDD), mpfr_get_d(hi.get(), MPFR_RNDU)};
}

bool below_theorem_a(unsigned long z, const BigInt& a, const BigInt& b) {
  Mpfr lo(64);
  theorem_a_value(a, b, MPFR_RNDD, lo);
  return mpfr_cmp_ui(lo.get(), z) > 0;
}

bool below_theorem1(unsigned long z, const BigInt& a, const BigInt& b) {
  return BigInt(2 * BigInt(z)) < a * b;
}

unsigned long z_bound(const Equation& eq, const BoundPolicy& policy) {
  switch (policy.kind) {
    case BoundKind::theorem1:
    case BoundKind::theorem_a: {
      if (!eq.c_odd) {
        throw DomainError(to_string(policy.kind) + " bound requires odd c");
      }
      if (!eq.coprime) {
        throw DomainError(to_string(policy.kind) + " bound requires gcd(a, b) = 1");
      }
      if (policy.kind == BoundKind::theorem1) {
        return to_ulong(theorem1_max(eq), "theorem1 bound");
      }
      Mpfr hi(64);
      theorem_a_value(eq.a, eq.b, MPFR_RNDU, hi);
      BigInt floor_value;
      mpfr_get_z(floor_value.get_mpz_t(), hi.get(), MPFR_RNDD);
      return to_ulong(floor_value, "theoremA bound");
    }
    case BoundKind::cap: {
      if (policy.cap < 1) throw DomainError("cap must be positive");
      unsigned long z = 0;
      BigInt power = eq.c;
      while (power <= policy.cap) {
        ++z;
        power *= eq.c;
      }
      return z;
    }
  }
  throw InternalError("z_bound: unhandled policy");
}

SolveResult enumerate_solutions(const Equation& eq, const BoundPolicy& policy,
                                const SolveOptions& options) {
  SolveResult result{eq, {}, Completeness::cap_bounded, policy, 0, {}};
  result.z_max = z_bound(eq, policy);
  if (result.z_max > 4'000'000'000UL) {
    throw EffortExceeded("z range of " + std::to_string(result.z_max) +
                         " is too large to enumerate");
  }

  const bool filtered = result.z_max > kFilterThreshold;
  const unsigned jobs = std::max(1u, options.jobs);
  if (jobs == 1 || result.z_max < 2 * kFilterThreshold) {
    if (result.z_max >= 1) {
      Scanner(eq, filtered).scan(1, result.z_max, result.solutions);
    }
  } else {
    const unsigned long chunk =
        std::max(kFilterThreshold, result.z_max / (8UL * jobs) + 1);
    std::atomic<unsigned long> next{1};
    std::mutex mu;
    std::exception_ptr error;
    auto worker = [&] {
      try {
        Scanner scanner(eq, filtered);
        std::vector<Solution> local;
        for (;;) {
          unsigned long lo = next.fetch_add(chunk);
          if (lo > result.z_max) break;
          unsigned long hi = std::min(result.z_max, lo + chunk - 1);
          scanner.scan(lo, hi, local);
        }
        std::lock_guard lock(mu);
        result.solutions.insert(result.solutions.end(), local.begin(), local.end());
      } catch (...) {
        std::lock_guard lock(mu);
        if (!error) error = std::current_exception();
      }
    };
    std::vector<std::thread> threads;
    for (unsigned i = 0; i < jobs; ++i) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
    if (error) std::rethrow_exception(error);
  }

  std::sort(result.solutions.begin(), result.solutions.end());
  result.solutions.erase(
      std::unique(result.solutions.begin(), result.solutions.end()),
      result.solutions.end());
  for (const auto& s : result.solutions) {
    if (!eq.satisfied_by(s)) {
      throw InternalError("enumerate_solutions: candidate failed revalidation");
    }
  }

  const std::string range = "1 <= z <= " + std::to_string(result.z_max);
  switch (policy.kind) {
    case BoundKind::theorem1: result.bound_used = "theorem1: " + range + " (z < ab/2)"; break;
    case BoundKind::theorem_a:
      result.bound_used = "theoremA: " + range + " (z < 2ab log(2e ab)/pi)";
      break;
    case BoundKind::cap:
      result.bound_used = "cap: " + range + " (c^z <= " + policy.cap.get_str() + ")";
      break;
  }
  if (eq.c_odd && eq.coprime && BigInt(result.z_max) >= theorem1_max(eq)) {
    result.completeness = Completeness::proven_complete;
  }
  return result;
}

VerifyReport verify_triple(const Equation& eq, std::size_t expected_count,
                           const BoundPolicy& policy, const SolveOptions& options) {
  VerifyReport report;
  report.result = enumerate_solutions(eq, policy, options);
  report.expected_count = expected_count;
  const auto& sols = report.result.solutions;
  report.count_ok = sols.size() == expected_count;
  if (!report.count_ok) {
    report.failures.push_back("expected " + std::to_string(expected_count) +
                              " solutions, found " + std::to_string(sols.size()));
  }
  ParitySet occupied;
  for (const auto& s : sols) {
    report.solution_classes.push_back(ParityClass::of(s));
    occupied.insert(ParityClass::of(s));
  }
  if (!eq.c_odd || !eq.coprime) return report;

  report.allowed = allowed_classes(eq.a, eq.b, eq.c);
  if (report.allowed->size() > 2) {
    report.failures.push_back("more than two allowed parity classes");
  }
  for (const auto& cls : occupied) {
    if (!report.allowed->contains(cls)) {
      report.parity_sound = false;
      report.failures.push_back("solution parity class outside allowed set");
    }
  }
  if (gcd(eq.a * eq.b, eq.c) == 1) {
    report.order_condition = check_order_condition(eq.a, eq.b, eq.c);
    if (occupied.size() >= 2 && !*report.order_condition) {
      report.failures.push_back("two parity classes without the order condition");
    }
    for (const auto& s : sols) report.signatures.push_back(association_signature(eq, s));
    report.laws = verify_association_laws(eq, sols);
    if (!report.laws->compliant()) {
      report.failures.push_back("association laws violated");
    }
  }
  for (const auto& s : sols) {
    if (!below_theorem1(s.z, eq.a, eq.b)) report.theorem1_bound_ok = false;
    if (!below_theorem_a(s.z, eq.a, eq.b)) report.theorem_a_bound_ok = false;
  }
  if (!report.theorem1_bound_ok) report.failures.push_back("z >= ab/2");
  if (!report.theorem_a_bound_ok) report.failures.push_back("z >= 2ab log(2e ab)/pi");
  return report;
}

}  // namespace expdio
