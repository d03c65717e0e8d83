#include <doctest.h>

#include "expdio/report_json.hpp"

using namespace expdio;

TEST_CASE("solution and triple round trip") {
  const Solution s{7, 1, 3};
  CHECK(solution_from_json(to_json(s)) == s);
  const FoundTriple t{3, 13, 2200, {{1, 3, 1}, {7, 1, 1}}};
  const Json j = to_json(t);
  CHECK(j["c"] == "2200");
  CHECK(found_triple_from_json(j) == t);
}

TEST_CASE("big values serialize as strings") {
  const BigInt big = pow(BigInt(10), 30) + 1;
  const FoundTriple t{2, 3, big, {}};
  CHECK(to_json(t)["c"] == big.get_str());
}

TEST_CASE("solve result fields") {
  const auto r = enumerate_solutions(Equation::make(3, 10, 13), BoundPolicy::theorem1());
  const Json j = to_json(r);
  CHECK(j["completeness"] == "proven-complete");
  CHECK(j["z_max"] == 14);
  CHECK(j["solutions"].size() == 2);
}

TEST_CASE("search report excludes run metadata") {
  SearchReport r;
  r.a_max = 3;
  r.b_max = 3;
  r.power_cap = 100;
  r.elapsed_seconds = 12.5;
  r.jobs = 4;
  const std::string text = to_json(r).dump();
  CHECK(text.find("elapsed") == std::string::npos);
  CHECK(text.find("jobs") == std::string::npos);
}
