#include "expdio/report_json.hpp"

namespace expdio {

namespace {

std::string str(const BigInt& v) { return v.get_str(); }

template <typename T>
Json array_of(const std::vector<T>& items) {
  Json out = Json::array();
  for (const auto& item : items) out.push_back(to_json(item));
  return out;
}

Json optional_valuation(const std::optional<unsigned long>& v) {
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace

Json to_json(const Solution& s) { return Json::array({s.x, s.y, s.z}); }

Json to_json(ParityClass cls) { return Json::array({cls.ex, cls.ey}); }

Json to_json(const ParitySet& set) {
  Json out = Json::array();
  for (const auto& cls : set) out.push_back(to_json(cls));
  return out;
}

Json to_json(const Factorization& f) {
  Json out = Json::array();
  for (const auto& e : f.entries) out.push_back(Json::array({str(e.prime), e.exponent}));
  return out;
}

Json to_json(const PrimeParityAnalysis& pa) {
  Json j;
  j["p"] = str(pa.p);
  j["primitive_root"] = str(pa.d);
  j["r"] = str(pa.r);
  j["s"] = str(pa.s);
  j["u"] = optional_valuation(pa.u);
  j["v"] = optional_valuation(pa.v);
  j["w"] = pa.w;
  j["allowed"] = to_json(pa.allowed);
  j["predicted"] = to_json(pa.predicted);
  return j;
}

Json to_json(const GammaData& g) {
  Json j;
  j["h"] = str(g.h);
  j["k"] = str(g.k);
  j["D"] = str(g.D);
  j["m"] = str(g.m);
  return j;
}

Json to_json(const AssociationSignature& sig) {
  Json entries = Json::array();
  for (const auto& e : sig.entries) entries.push_back(Json::array({str(e.p), str(e.t)}));
  Json j;
  j["entries"] = std::move(entries);
  j["negated"] = sig.negated;
  return j;
}

Json to_json(const LawReport& laws) {
  Json j;
  j["a_normalized"] = str(laws.a_normalized);
  j["b_normalized"] = str(laws.b_normalized);
  j["gx"] = laws.gx;
  j["gy"] = laws.gy;
  Json classes = Json::array();
  for (const auto& g : laws.classes) {
    Json c;
    c["class"] = to_json(g.cls);
    c["solutions"] = array_of(g.solutions);
    c["signatures"] = array_of(g.signatures);
    classes.push_back(std::move(c));
  }
  j["classes"] = std::move(classes);
  Json collisions = Json::array();
  for (const auto& c : laws.collisions) {
    Json cj;
    cj["class"] = to_json(c.cls);
    cj["signature"] = to_json(c.signature);
    cj["solutions"] = array_of(c.solutions);
    collisions.push_back(std::move(cj));
  }
  j["collisions"] = std::move(collisions);
  j["known_exception"] = laws.known_exception;
  j["unique_per_factorization"] = laws.unique_per_factorization;
  j["at_most_two_per_class"] = laws.at_most_two_per_class;
  j["multi_class"] = laws.multi_class;
  j["one_per_class"] = laws.one_per_class;
  j["order_condition_holds"] = laws.order_condition_holds;
  j["compliant"] = laws.compliant();
  return j;
}

Json to_json(const SolveResult& r) {
  Json j;
  j["a"] = str(r.equation.a);
  j["b"] = str(r.equation.b);
  j["c"] = str(r.equation.c);
  j["coprime"] = r.equation.coprime;
  j["c_odd"] = r.equation.c_odd;
  j["bound"] = to_string(r.policy.kind);
  if (r.policy.kind == BoundKind::cap) j["cap"] = str(r.policy.cap);
  j["z_max"] = r.z_max;
  j["bound_used"] = r.bound_used;
  j["completeness"] = to_string(r.completeness);
  j["count"] = r.solutions.size();
  j["solutions"] = array_of(r.solutions);
  return j;
}

Json to_json(const VerifyReport& r) {
  Json j;
  j["solve"] = to_json(r.result);
  j["expected_count"] = r.expected_count;
  j["count_ok"] = r.count_ok;
  Json classes = Json::array();
  for (const auto& cls : r.solution_classes) classes.push_back(to_json(cls));
  j["solution_classes"] = std::move(classes);
  j["allowed_classes"] = r.allowed ? to_json(*r.allowed) : Json(nullptr);
  j["parity_sound"] = r.parity_sound;
  j["order_condition"] = r.order_condition ? Json(*r.order_condition) : Json(nullptr);
  j["signatures"] = array_of(r.signatures);
  j["laws"] = r.laws ? to_json(*r.laws) : Json(nullptr);
  j["theorem1_bound_ok"] = r.theorem1_bound_ok;
  j["theoremA_bound_ok"] = r.theorem_a_bound_ok;
  j["failures"] = r.failures;
  j["passed"] = r.passed();
  return j;
}

Json to_json(const FoundTriple& t) {
  Json j;
  j["a"] = str(t.a);
  j["b"] = str(t.b);
  j["c"] = str(t.c);
  j["solutions"] = array_of(t.solutions);
  return j;
}

Json to_json(const KnownTriple& t) {
  Json j;
  j["a"] = str(t.a);
  j["b"] = str(t.b);
  j["c"] = str(t.c);
  j["solutions"] = array_of(t.solutions);
  j["family"] = t.family;
  return j;
}

Json to_json(const SearchReport& r) {
  Json j;
  j["a_max"] = r.a_max;
  j["b_max"] = r.b_max;
  j["power_cap"] = str(r.power_cap);
  j["pairs_total"] = r.pairs_total;
  j["pairs_processed"] = r.pairs_processed;
  j["complete"] = r.complete;
  j["completeness"] = "cap-bounded";
  j["triples"] = array_of(r.triples);
  Json failures = Json::array();
  for (const auto& f : r.failures) {
    failures.push_back(Json{{"a", f.a}, {"b", f.b}, {"message", f.message}});
  }
  j["failures"] = std::move(failures);
  return j;
}

Json to_json(const ConjectureDiff& d) {
  Json j;
  j["expected_and_found"] = array_of(d.expected_and_found);
  j["expected_out_of_range"] = array_of(d.expected_out_of_range);
  j["missing"] = array_of(d.missing);
  j["unexpected"] = array_of(d.unexpected);
  j["solution_mismatches"] = array_of(d.solution_mismatches);
  return j;
}

Solution solution_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) throw DomainError("malformed solution");
  return {j.at(0).get<unsigned long>(), j.at(1).get<unsigned long>(),
          j.at(2).get<unsigned long>()};
}

FoundTriple found_triple_from_json(const Json& j) {
  FoundTriple t;
  t.a = parse_integer(j.at("a").get<std::string>());
  t.b = parse_integer(j.at("b").get<std::string>());
  t.c = parse_integer(j.at("c").get<std::string>());
  for (const auto& s : j.at("solutions")) t.solutions.push_back(solution_from_json(s));
  return t;
}

}  // namespace expdio
