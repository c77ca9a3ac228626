#include <doctest.h>

#include "horogrowth/errors.hpp"
#include "horogrowth/rational_function.hpp"
#include "oracles.hpp"

using namespace horogrowth;
using oracle::Rational;

namespace {

const IntPolynomial kX = IntPolynomial::x();
const IntPolynomial kOne = IntPolynomial::constant(1);

std::vector<BigInt> ints(std::initializer_list<long long> v) { return {v.begin(), v.end()}; }

bool is_canonical(const RationalFunction& f) {
  if (f.den().is_zero() || f.den().lowest_nonzero() <= 0) return false;
  BigInt g = boost::multiprecision::gcd(f.num().content(), f.den().content());
  if (g != 1) return false;
  return poly_gcd(f.num().is_zero() ? IntPolynomial::constant(1) : f.num(), f.den()).degree() == 0;
}

const std::vector<Rational> kPoints{Rational(1, 7), Rational(-2, 5), Rational(3, 11), Rational(5, 2)};

}  // namespace

TEST_CASE("normalize examples") {
  const IntPolynomial p1_num{0, 1, 1, 0, -1};
  const IntPolynomial p1_den{1, 0, -1, -2};
  const RationalFunction p1 = rf_normalize(p1_num, p1_den);
  CHECK(p1.num() == p1_num);
  CHECK(p1.den() == p1_den);

  const RationalFunction half = rf_normalize(IntPolynomial{0, 2}, IntPolynomial{2});
  CHECK(half.num() == kX);
  CHECK(half.den() == kOne);

  const RationalFunction cancel = rf_normalize(IntPolynomial{1, 0, -1}, IntPolynomial{1, -1});
  CHECK(cancel.num() == IntPolynomial{1, 1});
  CHECK(cancel.den() == kOne);

  // sign moves to the numerator
  const RationalFunction neg = rf_normalize(IntPolynomial{1}, IntPolynomial{-1, 1});
  CHECK(neg.den() == IntPolynomial{1, -1});
  CHECK(neg.num() == IntPolynomial{-1});

  CHECK_THROWS_AS(rf_normalize(kOne, IntPolynomial{}), DomainError);
}

TEST_CASE("arithmetic examples") {
  const RationalFunction geo(kOne, IntPolynomial{1, -1});
  CHECK(rf_mul(geo, RationalFunction(IntPolynomial{1, -1})) == RationalFunction(kOne));

  const RationalFunction a(IntPolynomial{0, 0, 1}, IntPolynomial{1, -1});
  const RationalFunction sq = rf_mul(a, geo);
  CHECK(sq.num() == IntPolynomial{0, 0, 1});
  CHECK(sq.den() == IntPolynomial{1, -2, 1});

  CHECK_THROWS_AS(rf_div(geo, RationalFunction()), DomainError);
}

TEST_CASE("series prefix examples") {
  CHECK(series_prefix(RationalFunction(kOne, IntPolynomial{1, 0, -1, -2}), 7).coeffs ==
        ints({1, 0, 1, 2, 1, 4, 5, 6}));
  CHECK(series_prefix(RationalFunction(kOne, IntPolynomial{1, -1}), 4).coeffs == ints({1, 1, 1, 1, 1}));
  CHECK(series_prefix(RationalFunction(IntPolynomial{0, 0, 1}, IntPolynomial{1, -2, 1}), 6).coeffs ==
        ints({0, 0, 1, 2, 3, 4, 5}));
  CHECK_THROWS_AS(series_prefix(RationalFunction(kOne, kX), 3), DomainError);
  CHECK_THROWS_AS(series_prefix(RationalFunction(kOne, IntPolynomial{2, -1}), 3), DomainError);
}

TEST_CASE("gcd examples") {
  CHECK(poly_gcd(IntPolynomial{1, 0, -1}, IntPolynomial{1, -1}) == IntPolynomial{-1, 1});
  CHECK(poly_gcd(IntPolynomial{1, -1, -2}, IntPolynomial{1, 1}) == IntPolynomial{1, 1});
  CHECK(poly_gcd(IntPolynomial{-4, 0, -6}, IntPolynomial{}) == IntPolynomial{2, 0, 3});
  CHECK_THROWS_AS(poly_gcd(IntPolynomial{}, IntPolynomial{}), DomainError);
}

TEST_CASE("rendering") {
  CHECK(to_string(IntPolynomial{1, 2, 0, -1}) == "1 + 2*x - x^3");
  CHECK(to_string(IntPolynomial{}) == "0");
  CHECK(to_latex(IntPolynomial{1, 2, 0, -1}) == "1+2 x-x^{3}");
}

TEST_CASE("property: arithmetic agrees with evaluation at rational points") {
  oracle::PolyGen gen(0x5eed);
  for (int trial = 0; trial < 150; ++trial) {
    const RationalFunction a(gen.poly(4, 5), gen.unit_den(3, 4));
    const RationalFunction b(gen.poly(4, 5), gen.unit_den(3, 4));
    REQUIRE(is_canonical(a));
    REQUIRE(is_canonical(b));
    const RationalFunction sum = a + b, prod = a * b, diff = a - b;
    CHECK(is_canonical(sum));
    CHECK(is_canonical(prod));
    for (const auto& x : kPoints) {
      if (oracle::eval(a.den(), x) == 0 || oracle::eval(b.den(), x) == 0) continue;
      CHECK(oracle::eval(sum, x) == oracle::eval(a, x) + oracle::eval(b, x));
      CHECK(oracle::eval(diff, x) == oracle::eval(a, x) - oracle::eval(b, x));
      CHECK(oracle::eval(prod, x) == oracle::eval(a, x) * oracle::eval(b, x));
    }
    if (!b.is_zero()) {
      const RationalFunction q = a / b;
      CHECK(is_canonical(q));
      CHECK(q * b == a);
    }
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("property: associativity and distributivity") {
  oracle::PolyGen gen(77);
  for (int trial = 0; trial < 60; ++trial) {
    const RationalFunction a(gen.poly(3, 4), gen.unit_den(2, 3));
    const RationalFunction b(gen.poly(3, 4), gen.unit_den(2, 3));
    const RationalFunction c(gen.poly(3, 4), gen.unit_den(2, 3));
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("property: normalize is idempotent and scale invariant") {
  oracle::PolyGen gen(4242);
  for (int trial = 0; trial < 100; ++trial) {
    const IntPolynomial num = gen.poly(5, 6);
    IntPolynomial den = gen.poly(4, 6);
    if (den.is_zero()) continue;
    const RationalFunction f = rf_normalize(num, den);
    CHECK(rf_normalize(f.num(), f.den()) == f);
    const IntPolynomial k = gen.poly(2, 3);
    if (!k.is_zero()) CHECK(rf_normalize(num * k, den * k) == f);
    CHECK(rf_normalize(-num, -den) == f);
  }
}

TEST_CASE("property: series prefix matches long division and convolution") {
  oracle::PolyGen gen(99);
  for (int trial = 0; trial < 80; ++trial) {
    const RationalFunction a(gen.poly(5, 5), gen.unit_den(4, 3));
    const RationalFunction b(gen.poly(5, 5), gen.unit_den(4, 3));
    const std::size_t N = 12;
    const SeriesPrefix sa = series_prefix(a, N);
    CHECK(sa.coeffs == oracle::taylor(a.num(), a.den(), N));
    CHECK(convolve(sa, series_prefix(b, N)) == series_prefix(a * b, N));
    // den * series == num through x^N
    const IntPolynomial back = (a.den() * IntPolynomial(sa.coeffs)).truncate(N);
    CHECK(back == a.num().truncate(N));
  }
}

TEST_CASE("property: gcd divides both and is maximal") {
  oracle::PolyGen gen(1234);
  for (int trial = 0; trial < 100; ++trial) {
    const IntPolynomial common = gen.poly(2, 3);
    const IntPolynomial a = gen.poly(3, 4) * common;
    const IntPolynomial b = gen.poly(3, 4) * common;
    if (a.is_zero() && b.is_zero()) continue;
    const IntPolynomial g = poly_gcd(a, b);
    CHECK(g.lead() > 0);
    CHECK(g.content() == 1);
    if (!a.is_zero()) CHECK_NOTHROW(divide_exact(a.primitive_part(), g));
    if (!b.is_zero()) CHECK_NOTHROW(divide_exact(b.primitive_part(), g));
    if (!common.is_zero() && !a.is_zero() && !b.is_zero()) CHECK(g.degree() >= common.degree());
    CHECK(poly_gcd(b, a) == g);
  }
}
