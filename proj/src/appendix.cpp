#include "horogrowth/appendix.hpp"

#include "horogrowth/errors.hpp"

namespace horogrowth {

namespace {

constexpr const char* kGoldenText =
#include "appendix_golden.inc"
    ;

}  // namespace

const Json& appendix_golden() {
  static const Json data = Json::parse(kGoldenText);
  return data;
}

IntPolynomial polynomial_from_factors(const Json& factors) {
  IntPolynomial p{1};
  for (const auto& f : factors) p *= pow(polynomial_from_json(f.at("poly")), f.at("power").get<unsigned>());
  return p;
}

RationalFunction rational_from_factors(const Json& j) {
  return RationalFunction(polynomial_from_factors(j.at("num_factors")), polynomial_from_factors(j.at("den_factors")));
}

std::vector<GoldenSeries> golden_table(const std::string& name) {
  const Json& data = appendix_golden();
  if (!data.contains(name)) throw DomainError("no golden table named " + name);
  std::vector<GoldenSeries> rows;
  for (const auto& row : data.at(name)) {
    GoldenSeries g;
    g.m = row.at("m").get<unsigned>();
    if (row.contains("rational")) g.rational = rational_from_factors(row.at("rational"));
    if (row.contains("alternate_rationals")) {
      for (const auto& a : row.at("alternate_rationals")) g.alternates.push_back(rational_from_factors(a));
    }
    if (row.contains("series")) {
      for (const auto& c : row.at("series")) g.series.push_back(parse_decimal(c.get<std::string>()));
    }
    if (row.contains("note")) g.note = row.at("note").get<std::string>();
    rows.push_back(std::move(g));
  }
  return rows;
}

IntPolynomial golden_cap(unsigned m) {
  for (const auto& row : appendix_golden().at("cap")) {
    if (row.at("m").get<unsigned>() == m) return polynomial_from_json(row.at("poly"));
  }
  throw DomainError("no golden cap polynomial for m = " + std::to_string(m));
}

}  // namespace horogrowth
