#include "horogrowth/json_io.hpp"

#include <string>

#include "horogrowth/errors.hpp"

namespace horogrowth {

namespace {

BigInt integer_from_json(const Json& j) {
  if (j.is_string()) return parse_decimal(j.get<std::string>());
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  throw DomainError("expected an integer (decimal string or number), got " + j.dump());
}

std::size_t index_from_json(const Json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    throw DomainError(std::string("expected a nonnegative integer for ") + what);
  }
  return j.get<std::size_t>();
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw DomainError(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

Json counts(const std::vector<std::uint64_t>& v) {
  Json a = Json::array();
  for (auto c : v) a.push_back(c);
  return a;
}

}  // namespace

Json to_json(const IntPolynomial& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(c.str());
  return a;
}

IntPolynomial polynomial_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("expected a coefficient array");
  std::vector<BigInt> c;
  c.reserve(j.size());
  for (const auto& e : j) c.push_back(integer_from_json(e));
  return IntPolynomial(std::move(c));
}

Json to_json(const RationalFunction& f) {
  Json j;
  j["num"] = to_json(f.num());
  j["den"] = to_json(f.den());
  return j;
}

RationalFunction rational_from_json(const Json& j) {
  return RationalFunction(polynomial_from_json(field(j, "num")), polynomial_from_json(field(j, "den")));
}

Json to_json(const SeriesPrefix& s) {
  Json a = Json::array();
  for (const auto& c : s.coeffs) a.push_back(c.str());
  Json j;
  j["coeffs"] = std::move(a);
  return j;
}

SeriesPrefix series_from_json(const Json& j) {
  const Json& a = field(j, "coeffs");
  if (!a.is_array()) throw DomainError("\"coeffs\" must be an array");
  SeriesPrefix s;
  for (const auto& e : a) s.coeffs.push_back(integer_from_json(e));
  return s;
}

Json to_json(const GrowthAutomaton& machine) {
  Json j;
  j["states"] = machine.state_count();
  j["start"] = machine.start();
  j["accepts"] = machine.accepts();
  Json edges = Json::array();
  for (const auto& e : machine.edges()) {
    Json je;
    je["from"] = e.from;
    je["to"] = e.to;
    je["label"] = to_json(e.label);
    edges.push_back(std::move(je));
  }
  j["edges"] = std::move(edges);
  return j;
}

GrowthAutomaton machine_from_json(const Json& j) {
  const std::size_t states = index_from_json(field(j, "states"), "states");
  const std::size_t start = index_from_json(field(j, "start"), "start");
  std::vector<std::size_t> accepts;
  const Json& ja = field(j, "accepts");
  if (!ja.is_array()) throw DomainError("\"accepts\" must be an array");
  for (const auto& a : ja) accepts.push_back(index_from_json(a, "accepts"));
  std::vector<GrowthAutomaton::Edge> edges;
  const Json& je = field(j, "edges");
  if (!je.is_array()) throw DomainError("\"edges\" must be an array");
  for (const auto& e : je) {
    edges.push_back({index_from_json(field(e, "from"), "from"), index_from_json(field(e, "to"), "to"),
                     polynomial_from_json(field(e, "label"))});
  }
  return GrowthAutomaton(states, start, std::move(accepts), std::move(edges));
}

Json to_json(const GroupElement& g) {
  Json coords = Json::array();
  for (const auto& c : g.coords()) {
    Json jc;
    jc["num"] = c.numerator().str();
    jc["exp3"] = c.exp3();
    coords.push_back(std::move(jc));
  }
  Json j;
  j["coords"] = std::move(coords);
  j["tee"] = g.tee();
  return j;
}

GroupElement element_from_json(const Json& j) {
  const Json& jc = field(j, "coords");
  if (!jc.is_array()) throw DomainError("\"coords\" must be an array");
  std::vector<TriadicRational> coords;
  for (const auto& c : jc) {
    coords.emplace_back(integer_from_json(field(c, "num")),
                        static_cast<unsigned>(index_from_json(field(c, "exp3"), "exp3")));
  }
  const Json& jt = field(j, "tee");
  if (!jt.is_number_integer()) throw DomainError("\"tee\" must be an integer");
  return GroupElement(std::move(coords), jt.get<std::int64_t>());
}

Json census_to_json(const CosetCensus& c) {
  Json j = Json::object();
  for (long level : c.levels()) {
    Json col = Json::array();
    for (const auto& v : c.column(level)) col.push_back(v.str());
    j[std::to_string(level)] = std::move(col);
  }
  return j;
}

Json to_json(const SphereCounts& s, const CosetCensus* chi) {
  Json j;
  j["m"] = s.m;
  j["radius"] = s.radius;
  j["total"] = counts(s.total);
  j["horocyclic"] = counts(s.horocyclic);
  if (chi != nullptr) j["chi"] = census_to_json(*chi);
  return j;
}

}  // namespace horogrowth
