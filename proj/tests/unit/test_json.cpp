#include <doctest.h>

#include "horogrowth/appendix.hpp"
#include "horogrowth/json_io.hpp"
#include "horogrowth/verify.hpp"
#include "oracles.hpp"

using namespace horogrowth;

TEST_CASE("polynomial and rational roundtrip") {
  oracle::PolyGen gen(11);
  for (int trial = 0; trial < 50; ++trial) {
    const IntPolynomial p = gen.poly(6, 1000);
    CHECK(polynomial_from_json(to_json(p)) == p);
    const RationalFunction f(gen.poly(4, 9), gen.unit_den(3, 9));
    CHECK(rational_from_json(to_json(f)) == f);
  }
  const RationalFunction s = subgroup_series(10);
  CHECK(rational_from_json(Json::parse(to_json(s).dump())) == s);
  // integers travel as decimal strings
  CHECK(to_json(IntPolynomial{1, -2})[1] == "-2");
  CHECK(polynomial_from_json(Json::parse("[1, \"-2\"]")) == IntPolynomial{1, -2});
}

TEST_CASE("series, machine and element roundtrip") {
  const SeriesPrefix sp = series_prefix(subgroup_series(3), 12);
  CHECK(series_from_json(to_json(sp)) == sp);
  const GrowthAutomaton g = build_quadrant_fsa();
  const GrowthAutomaton back = machine_from_json(to_json(g));
  CHECK(back.edges() == g.edges());
  CHECK(back.accepts() == g.accepts());
  CHECK(back.start() == g.start());
  const GroupElement e = eval_word(parse_word("Tat^2b", 2));
  CHECK(element_from_json(to_json(e)) == e);
}

TEST_CASE("sphere report layout") {
  const SphereCounts s = bfs_spheres(1, 3);
  const CosetCensus c = coset_distance_census(1, 3);
  const Json j = to_json(s, &c);
  CHECK(j.at("m") == 1);
  CHECK(j.at("radius") == 3);
  CHECK(j.at("total").size() == 4);
  CHECK(j.at("chi").contains("0"));
  CHECK(j.at("chi").contains("-1"));
  CHECK(j.dump() == to_json(bfs_spheres(1, 3), &c).dump());
}

TEST_CASE("deterministic reports") {
  CHECK(to_json(verify_gfsa()).dump() == to_json(verify_gfsa()).dump());
  CHECK(census_to_json(coset_census(2, 10)).dump() == census_to_json(coset_census(2, 10)).dump());
}

TEST_CASE("golden data") {
  const auto sub = golden_table("subgroup");
  REQUIRE(sub.size() == 10);
  for (const auto& row : sub) {
    REQUIRE(row.rational);
    CHECK(*row.rational == subgroup_series(row.m));
  }
  CHECK(golden_cap(2) == cap_poly(2));
  CHECK(sub[9].series.size() >= 9);
}
