#include <doctest.h>

#include <map>

#include "horogrowth/errors.hpp"
#include "horogrowth/growth_formulas.hpp"
#include "horogrowth/normal_form.hpp"
#include "oracles.hpp"

using namespace horogrowth;
using oracle::Rational;

namespace {

std::vector<BigInt> ints(std::initializer_list<long long> v) { return {v.begin(), v.end()}; }

std::vector<BigInt> prefix(const RationalFunction& f, std::size_t N) { return series_prefix(f, N).coeffs; }

BigInt binomial(unsigned n, unsigned k) {
  BigInt r = 1;
  for (unsigned i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

// Stems enumerated block by block: T^n then j blocks (w t), counting words of
// W_m by length with multiplicity C(m,k) 2^k.
std::map<long, std::vector<BigInt>> stem_census(unsigned m, std::size_t rmax) {
  std::map<long, std::vector<BigInt>> chi;
  auto bump = [&](long level, std::size_t r, const BigInt& c) {
    auto& col = chi[level];
    if (col.empty()) col.resize(rmax + 1);
    col[r] += c;
  };
  for (std::size_t n = 0; n <= rmax; ++n) {
    // ways[j][len]: sequences of j blocks of total length len
    std::vector<std::vector<BigInt>> ways(1, std::vector<BigInt>(rmax + 1));
    ways[0][n] = 1;
    for (std::size_t j = 0;; ++j) {
      bool any = false;
      for (std::size_t len = 0; len <= rmax; ++len) {
        if (ways[j][len] == 0) continue;
        any = true;
        bump(-static_cast<long>(n > j ? n - j : 0), len, ways[j][len]);
      }
      if (!any) break;
      ways.emplace_back(rmax + 1);
      for (std::size_t len = 0; len <= rmax; ++len) {
        if (ways[j][len] == 0) continue;
        for (unsigned k = (j == 0 && n >= 1) ? 1 : 0; k <= m; ++k) {
          const std::size_t nl = len + k + 1;
          if (nl <= rmax) ways[j + 1][nl] += ways[j][len] * binomial(m, k) * (BigInt(1) << k);
        }
      }
    }
  }
  return chi;
}

// Coset of g under right multiplication by Z^m: coordinates modulo 3^tee.
std::string coset_key(const GroupElement& g) {
  std::string key = std::to_string(g.tee()) + "|";
  Rational mod = 1;
  for (std::int64_t k = 0; k < g.tee(); ++k) mod *= 3;
  for (std::int64_t k = 0; k > g.tee(); --k) mod /= 3;
  for (const auto& c : g.coords()) {
    Rational u = Rational(c.numerator()) / pow(BigInt(3), c.exp3());
    Rational q = u / mod;
    BigInt fl = boost::multiprecision::numerator(q) / boost::multiprecision::denominator(q);
    if (q < 0 && Rational(fl) != q) fl -= 1;
    u -= Rational(fl) * mod;
    key += u.str() + ",";
  }
  return key;
}

std::map<long, std::vector<BigInt>> naive_coset_census(unsigned m, unsigned R) {
  const oracle::NaiveBall b = oracle::naive_ball(m, R);
  std::map<std::string, std::pair<unsigned, long>> best;
  for (const auto& g : b.elements) {
    const unsigned d = b.distance.at(oracle::key_of(g));
    auto [it, fresh] = best.emplace(coset_key(g), std::make_pair(d, std::min<long>(g.tee(), 0)));
    if (!fresh && d < it->second.first) it->second.first = d;
  }
  std::map<long, std::vector<BigInt>> chi;
  for (const auto& [k, v] : best) {
    auto& col = chi[v.second];
    if (col.empty()) col.resize(R + 1);
    col[v.first] += 1;
  }
  return chi;
}

}  // namespace

TEST_CASE("component polynomials") {
  CHECK(suffix_poly(1) == IntPolynomial{1, 2});
  CHECK(suffix_poly(2) == IntPolynomial{1, 4, 4});
  CHECK(suffix_poly(3) == IntPolynomial{1, 6, 12, 8});
  CHECK(cap_poly(1) == IntPolynomial{0, 0, 1, 1, 1});
  CHECK(cap_poly(2) == IntPolynomial{0, 0, 0, 0, 2, 4, 3});
  CHECK(cap_poly(3) == IntPolynomial{0, 0, 0, 0, 0, 1, 7, 12, 7});
  CHECK(prefix_suffix_series(1) == RationalFunction(IntPolynomial{1}, IntPolynomial{1, 0, -1, -2}));
  CHECK(positive_series(1) == RationalFunction(IntPolynomial{0, 1, 1, 0, -1}, IntPolynomial{1, 0, -1, -2}));
}

TEST_CASE("subgroup series for m = 2") {
  const IntPolynomial q{1, 2, 2};
  const RationalFunction want(IntPolynomial{1, -1} * q * q, IntPolynomial{1, -2} * IntPolynomial{1, 1, 2});
  CHECK(subgroup_series(2) == want);
  const RationalFunction four = RationalFunction::constant(4);
  CHECK(RationalFunction::constant(1) + four * positive_series(1) + four * positive_series(2) == want);
  CHECK(prefix(want, 8) == ints({1, 4, 8, 12, 24, 52, 100, 196, 404}));
}

TEST_CASE("positive series of m = 3") {
  CHECK(prefix(positive_series(3), 8) == ints({0, 0, 0, 1, 3, 10, 34, 94, 251}));
}

TEST_CASE("property: cap recursion and prefix-suffix inverse") {
  for (unsigned m = 1; m <= 10; ++m) {
    CHECK(cap_poly(m) == cap_poly_recursive(m));
    const IntPolynomial d = IntPolynomial{1} - IntPolynomial::monomial(1, 2) * suffix_poly(m);
    CHECK(prefix_suffix_series(m) * RationalFunction(d) == RationalFunction::constant(1));
  }
}

TEST_CASE("property: subgroup and positive series count lattice points") {
  // m = 1, 2 by direct box enumeration
  for (unsigned m = 1; m <= 2; ++m) {
    const std::size_t N = 10;
    const std::int64_t box = 364;  // (3^6 - 1) / 2 contains every vector of length <= 10
    std::vector<BigInt> pos(N + 1), sub(N + 1);
    LatticeVector v(m, -box);
    while (true) {
      const auto len = word_length(v);
      if (len <= N) {
        sub[len] += 1;
        bool positive = true;
        for (auto x : v) positive = positive && x >= 1;
        if (positive) pos[len] += 1;
      }
      std::size_t i = 0;
      while (i < m && v[i] == box) v[i++] = -box;
      if (i == m) break;
      ++v[i];
    }
    CHECK(prefix(subgroup_series(m), N) == sub);
    CHECK(prefix(positive_series(m), N) == pos);
  }
  // m = 3 from the horocyclic part of a naive ball
  const oracle::NaiveBall b = oracle::naive_ball(3, 5);
  std::vector<BigInt> sub(6);
  for (const auto& g : b.elements)
    if (is_horocyclic(g)) sub[b.distance.at(oracle::key_of(g))] += 1;
  CHECK(prefix(subgroup_series(3), 5) == sub);
}

TEST_CASE("census examples") {
  const CosetCensus c = coset_census(1, 12);
  CHECK(c.column(0) == ints({1, 1, 3, 7, 13, 29, 59, 119, 245, 493, 995, 2007, 4029}));
  CHECK(c.column(-1) == ints({0, 1, 0, 0, 2, 0, 2, 4, 2, 8, 10, 12, 26}));
  for (unsigned m = 1; m <= 4; ++m) {
    const CosetCensus cm = coset_census(m, 10);
    for (long n = 1; n <= 10; ++n) CHECK(cm.chi(-n, static_cast<std::size_t>(n)) == 1);
  }
  CHECK(coset_census(2, 6).chi(-1, 4) == 4);
  CHECK_THROWS_AS(coset_census(2, census_horizon_limit(2) + 1), BudgetError);
  CHECK(census_horizon_limit(1) == 24);
  CHECK(census_horizon_limit(10) == 34);
}

TEST_CASE("property: census equals stem enumeration") {
  for (unsigned m = 1; m <= 4; ++m) {
    const std::size_t rmax = 14;
    const CosetCensus c = coset_census(m, rmax);
    const auto want = stem_census(m, rmax);
    for (const auto& [level, col] : want) CHECK_MESSAGE(c.column(level) == col, "m=" << m << " level=" << level);
    CHECK(c.levels().size() == want.size());
  }
}

TEST_CASE("property: census equals naive coset distances") {
  for (unsigned m = 1; m <= 2; ++m) {
    const unsigned R = m == 1 ? 9 : 6;
    const auto want = naive_coset_census(m, R);
    const CosetCensus c = coset_census(m, R);
    for (const auto& [level, col] : want) CHECK_MESSAGE(c.column(level) == col, "m=" << m << " level=" << level);
  }
}

TEST_CASE("level series fit") {
  const LevelSeries s1 = level_series(1);
  CHECK(prefix(s1.X_minus1, 9) == ints({0, 1, 0, 0, 2, 0, 2, 4, 2, 8}));
  CHECK(prefix(s1.X_0, 5) == ints({1, 1, 3, 7, 13, 29}));
  for (unsigned m = 1; m <= 5; ++m) {
    const LevelSeries s = level_series(m);
    CHECK(s.p_hat == IntPolynomial{0, 1, 0, -1});
    CHECK(s.q_hat == IntPolynomial{1, 0, -1});
    CHECK(s.certified_to >= level_fit_horizon(m));
    const CosetCensus c = coset_census(m, s.certified_to);
    CHECK(prefix(s.X_minus1, s.certified_to) == c.column(-1));
    CHECK(prefix(s.X_0, s.certified_to) == c.column(0));
  }
  CHECK(level_fit_horizon(1) == 16);
  CHECK_THROWS_AS(fit_level_series(coset_census(1, 10)), FitError);
}

TEST_CASE("fit rejects a perturbed census") {
  CosetCensus c = coset_census(1, level_fit_horizon(1));
  c.add(-1, 15, 1);
  CHECK_THROWS_AS(fit_level_series(c), FitError);
}

TEST_CASE("full series") {
  CHECK(prefix(full_series(1), 2) == ints({1, 4, 12}));
  CHECK(prefix(full_series(2), 2) == ints({1, 6, 26}));
  for (unsigned m = 1; m <= 6; ++m) CHECK(full_series(m) == full_series_closed_form(m));
  const oracle::NaiveBall b1 = oracle::naive_ball(1, 9);
  CHECK(prefix(full_series(1), 9) == std::vector<BigInt>(b1.spheres.begin(), b1.spheres.end()));
  const oracle::NaiveBall b2 = oracle::naive_ball(2, 6);
  CHECK(prefix(full_series(2), 6) == std::vector<BigInt>(b2.spheres.begin(), b2.spheres.end()));
  // literal truncations of chi do not reproduce the sphere sizes
  CHECK(prefix(literal_truncation_full_series(1), 1) != ints({1, 4}));
}

TEST_CASE("relative growth series") {
  CHECK(relative_growth_series(2, 0) == subgroup_series(2));
  CHECK(prefix(relative_growth_series(1, 1), 5) == ints({1, 4, 6, 6, 8, 14}));
  CHECK(relative_growth_series(1, 2) == RationalFunction(pow(suffix_poly(1), 2)) * subgroup_series(1));
}
