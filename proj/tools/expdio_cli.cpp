// expdio: solve and analyze a^x + b^y = c^z from the command line.
//
// Exit status: 0 success, 1 usage or domain error, 2 internal failure or
// exceeded effort, 3 a verification (verify, family, verify-conjecture)
// ran but did not pass.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "expdio/assoc.hpp"
#include "expdio/conjecture.hpp"
#include "expdio/errors.hpp"
#include "expdio/parity.hpp"
#include "expdio/report_json.hpp"
#include "expdio/search.hpp"
#include "expdio/solver.hpp"

#ifndef EXPDIO_VERSION
#define EXPDIO_VERSION "0.0.0"
#endif

namespace {

using namespace expdio;

constexpr int kVerificationFailed = 3;

struct TripleArgs {
  std::vector<std::string> positional;
  std::string a, b, c;

  void attach(CLI::App* cmd) {
    cmd->add_option("abc", positional, "a b c as positional arguments")->expected(0, 3);
    cmd->add_option("--a", a, "base a (>= 2)");
    cmd->add_option("--b", b, "base b (>= 2)");
    cmd->add_option("--c", c, "base c (>= 2)");
  }

  Equation equation() const {
    std::string sa = a, sb = b, sc = c;
    std::vector<std::string*> slots = {&sa, &sb, &sc};
    std::size_t next = 0;
    for (auto* slot : slots) {
      if (slot->empty() && next < positional.size()) *slot = positional[next++];
    }
    if (next != positional.size()) throw DomainError("too many positional arguments");
    if (sa.empty() || sb.empty() || sc.empty()) {
      throw DomainError("a, b and c are all required");
    }
    return Equation::make(parse_integer(sa), parse_integer(sb), parse_integer(sc));
  }
};

struct BoundArgs {
  std::string bound;
  std::string cap;

  void attach(CLI::App* cmd) {
    cmd->add_option("--bound", bound, "z range: theorem1, theoremA or cap")
        ->check(CLI::IsMember({"theorem1", "theoremA", "cap"}));
    cmd->add_option("--cap", cap, "magnitude cap on c^z (e.g. 1e30)");
  }

  BigInt cap_value() const {
    return cap.empty() ? default_power_cap() : parse_integer(cap);
  }

  BoundPolicy policy(const Equation& eq) const {
    if (bound.empty()) return default_policy(eq, cap_value());
    BoundKind kind = parse_bound_kind(bound);
    if (kind == BoundKind::cap) return BoundPolicy::capped(cap_value());
    return {kind, 0};
  }
};

void render_text(const Json& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  auto scalar_like = [](const Json& v) {
    if (!v.is_structured()) return true;
    if (v.is_object()) return false;
    for (const auto& e : v) {
      if (e.is_object()) return false;
    }
    return true;
  };
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (scalar_like(value)) {
        out << pad << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
            << '\n';
      } else {
        out << pad << key << ":\n";
        render_text(value, out, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const auto& item : j) {
      if (scalar_like(item)) {
        out << pad << "- " << item.dump() << '\n';
      } else {
        out << pad << "-\n";
        render_text(item, out, indent + 2);
      }
    }
  } else {
    out << pad << j.dump() << '\n';
  }
}

void emit(const std::string& command, const Json& result, const std::string& format,
          const std::vector<std::string>& warnings = {}) {
  Json envelope;
  envelope["command"] = command;
  envelope["version"] = EXPDIO_VERSION;
  envelope["result"] = result;
  envelope["warnings"] = warnings;
  if (format == "text") {
    render_text(envelope, std::cout, 0);
  } else {
    std::cout << envelope.dump(2) << '\n';
  }
}

Json verify_summary(const VerifyReport& r) {
  Json j;
  j["a"] = r.result.equation.a.get_str();
  j["b"] = r.result.equation.b.get_str();
  j["c"] = r.result.equation.c.get_str();
  j["expected_count"] = r.expected_count;
  j["solutions"] = to_json(r.result).at("solutions");
  j["completeness"] = to_string(r.result.completeness);
  j["bound_used"] = r.result.bound_used;
  j["passed"] = r.passed();
  j["failures"] = r.failures;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exhaustive solver and analyzer for a^x + b^y = c^z"};
  app.set_version_flag("--version", EXPDIO_VERSION);
  app.require_subcommand(1);

  std::string format = "json";
  unsigned jobs = 1;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
  };

  // solve
  auto* solve = app.add_subcommand("solve", "all solutions within a z bound");
  TripleArgs solve_triple;
  BoundArgs solve_bound;
  solve_triple.attach(solve);
  solve_bound.attach(solve);
  solve->add_option("--jobs", jobs, "worker threads over z slices");
  add_common(solve);

  // verify
  auto* verify = app.add_subcommand("verify", "solve and check the structural laws");
  TripleArgs verify_triple_args;
  BoundArgs verify_bound;
  std::size_t expect = 2;
  verify_triple_args.attach(verify);
  verify_bound.attach(verify);
  verify->add_option("--expect", expect, "expected number of solutions");
  verify->add_option("--jobs", jobs, "worker threads over z slices");
  add_common(verify);

  // classify
  auto* classify = app.add_subcommand("classify", "parity classes allowed by each prime of c");
  TripleArgs classify_triple;
  classify_triple.attach(classify);
  add_common(classify);

  // signature
  auto* signature = app.add_subcommand("signature", "gamma components and ideal signatures");
  TripleArgs signature_triple;
  BoundArgs signature_bound;
  std::optional<unsigned long> sx, sy, sz;
  signature_triple.attach(signature);
  signature_bound.attach(signature);
  signature->add_option("--x", sx, "exponent x of a single solution");
  signature->add_option("--y", sy, "exponent y of a single solution");
  signature->add_option("--z", sz, "exponent z of a single solution");
  add_common(signature);

  // search
  auto* search = app.add_subcommand("search", "find triples with two or more solutions");
  unsigned long a_max = 10, b_max = 10;
  std::string search_cap = "1e18";
  std::string checkpoint;
  bool resume = false;
  search->add_option("--a-max", a_max, "largest a (a <= b)");
  search->add_option("--b-max", b_max, "largest b");
  search->add_option("--cap", search_cap, "bound on a^x, b^y and their sum");
  search->add_option("--jobs", jobs, "worker threads over (a, b) pairs");
  search->add_option("--checkpoint", checkpoint, "checkpoint file (line-delimited JSON)");
  search->add_flag("--resume", resume, "continue from --checkpoint");
  add_common(search);

  // verify-conjecture
  auto* conjecture = app.add_subcommand(
      "verify-conjecture", "check every listed exceptional triple");
  std::string conjecture_cap;
  unsigned long n_max = 8;
  conjecture->add_option("--cap", conjecture_cap, "cap on c^z for even c (default 1e30)");
  conjecture->add_option("--n-max", n_max, "also check family members n = 2..n-max");
  conjecture->add_option("--jobs", jobs, "worker threads over z slices");
  add_common(conjecture);

  // family
  auto* family = app.add_subcommand("family", "check (2, 2^m - 1, 2^m + 1) for m = 2..m-max");
  unsigned long m_max = 10;
  family->add_option("--m-max", m_max, "largest m");
  family->add_option("--jobs", jobs, "worker threads over z slices");
  add_common(family);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    const SolveOptions solve_options{jobs};
    if (*solve) {
      Equation eq = solve_triple.equation();
      emit("solve", to_json(enumerate_solutions(eq, solve_bound.policy(eq), solve_options)),
           format);
      return 0;
    }
    if (*verify) {
      Equation eq = verify_triple_args.equation();
      VerifyReport r = verify_triple(eq, expect, verify_bound.policy(eq), solve_options);
      emit("verify", to_json(r), format);
      return r.passed() ? 0 : kVerificationFailed;
    }
    if (*classify) {
      Equation eq = classify_triple.equation();
      if (!eq.c_odd) throw DomainError("classify requires odd c");
      if (!eq.coprime) throw DomainError("classify requires gcd(a, b) = 1");
      Json j;
      j["a"] = eq.a.get_str();
      j["b"] = eq.b.get_str();
      j["c"] = eq.c.get_str();
      j["allowed"] = to_json(allowed_classes(eq.a, eq.b, eq.c));
      Json primes = Json::array();
      for (const auto& pa : prime_analyses(eq.a, eq.b, eq.c)) primes.push_back(to_json(pa));
      j["primes"] = std::move(primes);
      const bool prime_to_c = gcd(eq.a * eq.b, eq.c) == 1;
      j["order_condition"] =
          prime_to_c ? Json(check_order_condition(eq.a, eq.b, eq.c)) : Json(nullptr);
      emit("classify", j, format);
      return 0;
    }
    if (*signature) {
      Equation eq = signature_triple.equation();
      if (!eq.c_odd) throw DomainError("signature requires odd c");
      std::vector<Solution> sols;
      const bool single = sx || sy || sz;
      if (single) {
        if (!(sx && sy && sz)) throw DomainError("--x, --y and --z go together");
        sols.push_back({*sx, *sy, *sz});
      } else {
        sols = enumerate_solutions(eq, signature_bound.policy(eq)).solutions;
      }
      Json j;
      j["a"] = eq.a.get_str();
      j["b"] = eq.b.get_str();
      j["c"] = eq.c.get_str();
      j["factorizations"] = count_factorizations(eq.c).get_str();
      Json entries = Json::array();
      for (const auto& s : sols) {
        Json e;
        e["solution"] = to_json(s);
        e["class"] = to_json(ParityClass::of(s));
        e["gamma"] = to_json(gamma_components(eq.a, eq.b, s.x, s.y));
        e["signature"] = to_json(association_signature(eq, s));
        entries.push_back(std::move(e));
      }
      j["solutions"] = std::move(entries);
      j["laws"] = to_json(verify_association_laws(eq, sols));
      emit("signature", j, format);
      return 0;
    }
    if (*search) {
      SearchConfig config;
      config.a_max = a_max;
      config.b_max = b_max;
      config.power_cap = parse_integer(search_cap);
      config.jobs = jobs;
      if (!checkpoint.empty()) config.checkpoint_path = checkpoint;
      config.resume = resume;
      SearchReport report = search_range(config);
      Json j;
      j["report"] = to_json(report);
      j["conjecture"] = to_json(compare_with_conjecture(report));
      std::cerr << "searched " << report.pairs_processed << " pairs ("
                << report.pairs_resumed << " from checkpoint) in "
                << report.elapsed_seconds << " s with " << report.jobs << " jobs\n";
      emit("search", j, format);
      return 0;
    }
    if (*conjecture) {
      const BigInt cap =
          conjecture_cap.empty() ? default_power_cap() : parse_integer(conjecture_cap);
      std::vector<KnownTriple> triples = sporadic_triples();
      for (unsigned long n = 2; n <= n_max; ++n) triples.push_back(family_member(n));
      Json results = Json::array();
      bool all = true;
      for (const auto& t : triples) {
        Equation eq = Equation::make(t.a, t.b, t.c);
        VerifyReport r = verify_triple(eq, t.solutions.size(), default_policy(eq, cap),
                                       solve_options);
        Json s = verify_summary(r);
        if (r.result.solutions != t.solutions) {
          s["passed"] = false;
          s["failures"].push_back("solutions differ from the known list");
        }
        all = all && s["passed"].get<bool>();
        s["family"] = t.family;
        results.push_back(std::move(s));
      }
      Json j;
      j["cap"] = cap.get_str();
      j["triples"] = std::move(results);
      j["passed"] = all;
      emit("verify-conjecture", j, format);
      return all ? 0 : kVerificationFailed;
    }
    if (*family) {
      if (m_max < 2) throw DomainError("--m-max must be >= 2");
      Json results = Json::array();
      bool all = true;
      for (unsigned long m = 2; m <= m_max; ++m) {
        const KnownTriple t = family_member(m);
        Equation eq = Equation::make(t.a, t.b, t.c);
        VerifyReport r = verify_triple(eq, 2, BoundPolicy::theorem1(), solve_options);
        Json s = verify_summary(r);
        s["m"] = m;
        bool ok = r.passed() && r.result.solutions == t.solutions &&
                  r.result.completeness == Completeness::proven_complete;
        if (!ok && r.passed()) s["failures"].push_back("documented solutions not reproduced");
        s["passed"] = ok;
        all = all && ok;
        results.push_back(std::move(s));
      }
      Json j;
      j["m_max"] = m_max;
      j["members"] = std::move(results);
      j["passed"] = all;
      emit("family", j, format);
      return all ? 0 : kVerificationFailed;
    }
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}
