#pragma once

// Structured (JSON) forms of every report type. Arbitrary-precision values
// are decimal strings; exponents and counts are plain JSON integers. Field
// order is fixed.

#include <json.hpp>

#include "expdio/assoc.hpp"
#include "expdio/parity.hpp"
#include "expdio/search.hpp"
#include "expdio/solver.hpp"

namespace expdio {

using Json = nlohmann::ordered_json;

Json to_json(const Solution& s);
Json to_json(ParityClass cls);
Json to_json(const ParitySet& set);
Json to_json(const Factorization& f);
Json to_json(const PrimeParityAnalysis& pa);
Json to_json(const GammaData& g);
Json to_json(const AssociationSignature& sig);
Json to_json(const LawReport& laws);
Json to_json(const SolveResult& result);
Json to_json(const VerifyReport& report);
Json to_json(const FoundTriple& t);
Json to_json(const KnownTriple& t);
// Canonical report: no timing or worker-count metadata, so runs with any
// number of jobs serialize identically.
Json to_json(const SearchReport& report);
Json to_json(const ConjectureDiff& diff);

Solution solution_from_json(const Json& j);
FoundTriple found_triple_from_json(const Json& j);

}  // namespace expdio
