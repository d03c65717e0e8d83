// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <thread>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "expdio/assoc.hpp"
#include "expdio/conjecture.hpp"
#include "expdio/parity.hpp"
#include "expdio/report_json.hpp"
#include "expdio/search.hpp"
#include "expdio/solver.hpp"
#include "oracle.hpp"

using namespace expdio;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool all_ok = true;

void report(int n, const char* what, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double dt = seconds_since(t0);
  all_ok = all_ok && o.ok;
  std::printf("criterion %d: %s  %s  (%.2f s)%s%s\n", n, o.ok ? "PASS" : "FAIL", what, dt,
              o.detail.empty() ? "" : "  ", o.detail.c_str());
  std::fflush(stdout);
}

std::string sols(const std::vector<Solution>& v) {
  std::ostringstream os;
  for (const auto& s : v) os << "(" << s.x << "," << s.y << "," << s.z << ")";
  return os.str();
}

// Shared by criteria 4 to 6.
SearchReport desk_report;
bool desk_ready = false;

}  // namespace

int main() {
  report(1, "solve 3 10 13 is exactly {(1,1,1),(7,1,3)}, proven-complete, < 1 s", [] {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    const auto eq = Equation::make(3, 10, 13);
    const auto r = enumerate_solutions(eq, default_policy(eq));
    const double dt = seconds_since(t0);
    if (r.solutions != std::vector<Solution>{{1, 1, 1}, {7, 1, 3}})
      o.fail("solutions " + sols(r.solutions));
    if (r.completeness != Completeness::proven_complete) o.fail("not proven-complete");
    if (dt >= 1.0) o.fail("too slow");
    return o;
  });

  report(2, "verify-conjecture --cap 1e12: 2 solutions each, 3 for (3,5,2), < 30 s", [] {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    const BigInt cap = parse_integer("1e12");
    for (const auto& t : sporadic_triples()) {
      const auto eq = Equation::make(t.a, t.b, t.c);
      const std::size_t expect = (t.a == 3 && t.b == 5 && t.c == 2) ? 3 : 2;
      const auto v = verify_triple(eq, expect, default_policy(eq, cap));
      if (!v.passed()) o.fail(eq.str() + ": " + v.failures.front());
      if (v.result.solutions != t.solutions)
        o.fail(eq.str() + ": solutions " + sols(v.result.solutions));
    }
    if (seconds_since(t0) >= 30) o.fail("too slow");
    return o;
  });

  report(3, "family m <= 20 gives (1,1,1),(m+2,2,2), proven-complete by theorem1, < 30 s", [] {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    for (unsigned long m = 2; m <= 20; ++m) {
      const BigInt b = pow(BigInt(2), m) - 1;
      const auto eq = Equation::make(2, b, b + 2);
      const auto r = enumerate_solutions(eq, BoundPolicy::theorem1());
      const std::vector<Solution> want{{1, 1, 1}, {m + 2, 2, 2}};
      if (r.solutions != want) o.fail("m=" + std::to_string(m) + ": " + sols(r.solutions));
      if (r.completeness != Completeness::proven_complete)
        o.fail("m=" + std::to_string(m) + " not proven-complete");
    }
    if (seconds_since(t0) >= 30) o.fail("too slow");
    return o;
  });

  report(4, "search 100/100/1e18: nothing unexpected or missing, jobs=N identical to jobs=1", [] {
    Outcome o;
    SearchConfig c;
    c.a_max = 100;
    c.b_max = 100;
    c.power_cap = parse_integer("1e18");
    const auto t0 = std::chrono::steady_clock::now();
    desk_report = search_range(c);
    const double single = seconds_since(t0);
    c.jobs = std::max(2u, std::thread::hardware_concurrency());
    const auto parallel = search_range(c);
    if (to_json(desk_report).dump() != to_json(parallel).dump())
      o.fail("jobs=" + std::to_string(c.jobs) + " output differs");
    if (!desk_report.complete || !desk_report.failures.empty()) o.fail("incomplete run");
    const auto diff = compare_with_conjecture(desk_report);
    if (!diff.unexpected.empty()) o.fail(std::to_string(diff.unexpected.size()) + " unexpected");
    if (!diff.missing.empty()) o.fail(std::to_string(diff.missing.size()) + " missing");
    if (!diff.solution_mismatches.empty()) o.fail("solution mismatches");
    if (single >= 600) o.fail("single-threaded run too slow");
    o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(desk_report.triples.size()) +
                " triples";
    desk_ready = o.ok;
    return o;
  });

  // Odd-c triples of the desk run, re-solved completely.
  std::vector<SolveResult> odd;
  if (desk_ready) {
    for (const auto& t : desk_report.triples) {
      if (t.c % 2 == 0) continue;
      odd.push_back(enumerate_solutions(Equation::make(t.a, t.b, t.c), BoundPolicy::theorem1()));
    }
  }

  report(5, "theorem 1 properties over the desk run: <= 2 solutions, z below both bounds", [&] {
    Outcome o;
    if (!desk_ready) o.fail("desk run unavailable");
    for (const auto& r : odd) {
      const auto& eq = r.equation;
      if (r.completeness != Completeness::proven_complete) o.fail(eq.str() + " incomplete");
      if (r.solutions.size() > 2) o.fail(eq.str() + " has " + sols(r.solutions));
      for (const auto& s : r.solutions) {
        if (!below_theorem1(s.z, eq.a, eq.b)) o.fail(eq.str() + " z >= ab/2");
        if (!below_theorem_a(s.z, eq.a, eq.b)) o.fail(eq.str() + " z above theorem A bound");
      }
    }
    o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(odd.size()) + " odd-c triples";
    return o;
  });

  report(6, "parity, order, signature and norm laws over the desk run", [&] {
    Outcome o;
    if (!desk_ready) o.fail("desk run unavailable");
    std::vector<std::string> collisions;
    for (const auto& r : odd) {
      const auto& eq = r.equation;
      const auto allowed = allowed_classes(eq.a, eq.b, eq.c);
      if (allowed.size() > 2) o.fail(eq.str() + " allows > 2 classes");
      ParitySet seen;
      for (const auto& s : r.solutions) {
        seen.insert(ParityClass::of(s));
        if (!allowed.contains(ParityClass::of(s))) o.fail(eq.str() + " class not allowed");
        const auto g = gamma_components(eq.a, eq.b, s.x, s.y);
        if (g.h * g.h + g.D * g.k * g.k != pow(eq.c, 2 * s.z)) o.fail(eq.str() + " norm");
      }
      if (seen.size() == 2 && !check_order_condition(eq.a, eq.b, eq.c))
        o.fail(eq.str() + " two classes without the order condition");
      const auto laws = verify_association_laws(eq, r.solutions);
      if (!laws.at_most_two_per_class) o.fail(eq.str() + " > 2 factorizations in a class");
      if (!laws.one_per_class) o.fail(eq.str() + " two-class triple shares a class factorization");
      if (!laws.collisions.empty()) collisions.push_back(eq.str());
    }
    if (collisions != std::vector<std::string>{Equation::make(3, 10, 13).str()}) {
      std::string all;
      for (const auto& c : collisions) all += c + " ";
      o.fail("collisions: " + all);
    }
    return o;
  });

  report(7, "enumerate_solutions equals brute force for a, b, c <= 30, cap 1e12", [] {
    Outcome o;
    const oracle::u64 cap = 1000000000000ULL;
    const auto policy = BoundPolicy::capped(parse_integer("1e12"));
    std::size_t discrepancies = 0;
    for (unsigned a = 2; a <= 30; ++a) {
      for (unsigned b = 2; b <= 30; ++b) {
        for (unsigned c = 2; c <= 30; ++c) {
          const auto r = enumerate_solutions(Equation::make(a, b, c), policy);
          std::vector<Solution> want;
          for (auto [z, x, y] : oracle::solutions(a, b, c, cap)) want.push_back({x, y, z});
          if (r.solutions != want) {
            ++discrepancies;
            o.fail("first at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                   std::to_string(c) + ")");
          }
        }
      }
    }
    if (discrepancies) o.detail += "; " + std::to_string(discrepancies) + " discrepancies";
    return o;
  });

  report(8, "theoremA bound is outward-rounded against a 200-digit reference, 1000 pairs", [] {
    using Hp = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<200>>;
    Outcome o;
    std::mt19937_64 rng(20261015);
    const Hp pi = boost::math::constants::pi<Hp>();
    for (int i = 0; i < 1000; ++i) {
      // Mix small bases with ones up to 10^8; beyond that z overflows 64 bits.
      const unsigned long long hi = i % 2 ? 100000000ULL : 5000ULL;
      std::uniform_int_distribution<unsigned long long> dist(2, hi);
      unsigned long long a, b;
      do {
        a = dist(rng);
        b = dist(rng);
      } while (std::gcd(a, b) != 1);
      const Hp ab = Hp(a) * Hp(b);
      const Hp exact = 2 * ab * (log(2 * ab) + 1) / pi;
      const auto eq = Equation::make(BigInt(std::to_string(a)), BigInt(std::to_string(b)), 3);
      const unsigned long bound = z_bound(eq, BoundPolicy::theorem_a());
      const auto floor_exact = static_cast<unsigned long long>(floor(exact));
      const auto enc = theorem_a_enclosure(eq.a, eq.b);
      if (bound < floor_exact)
        o.fail("a=" + std::to_string(a) + " b=" + std::to_string(b) + " bound too small");
      if (Hp(enc.upper) < exact || Hp(enc.lower) > exact)
        o.fail("a=" + std::to_string(a) + " b=" + std::to_string(b) + " enclosure misses");
    }
    try {
      z_bound(Equation::make(BigInt("4000000001"), BigInt("4000000003"), 3),
              BoundPolicy::theorem_a());
      o.fail("oversized bound not reported");
    } catch (const DomainError&) {
    }
    return o;
  });

  std::printf("%s\n", all_ok ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
  return all_ok ? 0 : 1;
}
