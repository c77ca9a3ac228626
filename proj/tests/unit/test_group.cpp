#include <doctest.h>

#include "horogrowth/errors.hpp"
#include "horogrowth/group.hpp"
#include "oracles.hpp"

using namespace horogrowth;

namespace {

GroupElement ev(const char* w, unsigned m) { return eval_word(parse_word(w, m)); }

GroupElement random_element(oracle::PolyGen& gen, unsigned m) {
  std::vector<TriadicRational> c;
  for (unsigned i = 0; i < m; ++i) c.emplace_back(BigInt(gen.integer(-50, 50)), static_cast<unsigned>(gen.integer(0, 3)));
  return GroupElement(c, gen.integer(-3, 3));
}

}  // namespace

TEST_CASE("multiply examples") {
  const GroupElement a = GroupElement::generator(1, 0, false);
  CHECK(multiply(a, a) == GroupElement::lattice({2}));
  CHECK(ev("taT", 1) == GroupElement::lattice({3}));
  CHECK(ev("taTA", 1) == GroupElement::lattice({2}));
  CHECK_THROWS_AS(multiply(a, GroupElement::identity(2)), DomainError);
}

TEST_CASE("inverse examples") {
  CHECK(inverse(GroupElement::identity(2)) == GroupElement::identity(2));
  CHECK(inverse(GroupElement::generator(1, 0, false)) == GroupElement::generator(1, 0, true));
  CHECK(inverse(ev("ta", 1)) == ev("AT", 1));
  CHECK(multiply(ev("ta", 1), ev("AT", 1)) == GroupElement::identity(1));
}

TEST_CASE("eval examples") {
  CHECK(ev("ta^2TA", 1) == GroupElement::lattice({5}));
  CHECK(ev("", 2) == GroupElement::identity(2));
  CHECK(ev("e", 2) == GroupElement::identity(2));
  // the multiplication law, token by token
  CHECK(ev("t^2ab^2TaBTb", 2) == GroupElement::lattice({12, 16}));
  CHECK(ev("t^2ab^2TBTab", 2) == GroupElement::lattice({10, 16}));
  CHECK(ev("a1 A3 t", 3) == GroupElement({1, 0, -1}, 1));
  CHECK(to_string(ev("Tat", 1)) == "a^(1/3)");
  CHECK(to_string(GroupElement::identity(2)) == "e");
}

TEST_CASE("tau and max height") {
  CHECK(tau(parse_word("ta^2Ta", 1)) == 0);
  CHECK(max_height(parse_word("tataTaTa", 1)) == 2);
  CHECK(tau(parse_word("tataTaTa", 1)) == 0);
  CHECK(tau(parse_word("T", 1)) == -1);
  CHECK(max_height(parse_word("T", 1)) == 0);
}

TEST_CASE("horocyclic") {
  CHECK(is_horocyclic(GroupElement::lattice({5})));
  CHECK_FALSE(is_horocyclic(ev("ta", 1)));
  const GroupElement g = ev("Tat", 1);
  CHECK(g.tee() == 0);
  CHECK(g.coords()[0] == TriadicRational(1, 1));
  CHECK_FALSE(is_horocyclic(g));
  CHECK(in_positive_orthant(GroupElement::lattice({1, 2})));
  CHECK_FALSE(in_positive_orthant(GroupElement::lattice({0, 2})));
}

TEST_CASE("parse errors carry a position") {
  try {
    (void)parse_word("tax", 1);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 2);
  }
  CHECK_THROWS_AS(parse_word("b", 1), ParseError);
  CHECK_THROWS_AS(parse_word("a4", 3), ParseError);
  CHECK(format_word(parse_word("t^2ab", 2)) == "tta1a2");
  CHECK(format_word_compact(parse_word("t^2ab", 2)) == "ttab");
  CHECK(format_word_compact(Word(2)) == "ε");
}

TEST_CASE("property: group axioms and relations") {
  oracle::PolyGen gen(31337);
  for (unsigned m = 1; m <= 4; ++m) {
    const GroupElement t = GroupElement::stable_letter(m, false);
    const GroupElement T = GroupElement::stable_letter(m, true);
    for (unsigned i = 0; i < m; ++i) {
      const GroupElement a = GroupElement::generator(m, i, false);
      // t a t^-1 = a^3
      CHECK(multiply(multiply(t, a), T) == multiply(a, multiply(a, a)));
      for (unsigned j = 0; j < m; ++j) {
        const GroupElement b = GroupElement::generator(m, j, false);
        CHECK(multiply(a, b) == multiply(b, a));
      }
    }
    for (int trial = 0; trial < 40; ++trial) {
      const GroupElement g = random_element(gen, m), h = random_element(gen, m), k = random_element(gen, m);
      CHECK(multiply(multiply(g, h), k) == multiply(g, multiply(h, k)));
      CHECK(multiply(g, inverse(g)) == GroupElement::identity(m));
      CHECK(multiply(GroupElement::identity(m), g) == g);
    }
  }
}

TEST_CASE("property: tau is the tee of the evaluation") {
  oracle::PolyGen gen(8);
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned m = static_cast<unsigned>(gen.integer(1, 3));
    Word w(m);
    const int len = gen.integer(0, 12);
    std::int64_t running = 0, peak = 0;
    for (int k = 0; k < len; ++k) {
      const int pick = gen.integer(0, static_cast<int>(2 * m + 1));
      if (pick == static_cast<int>(2 * m)) {
        w.push_back(Token::t());
        peak = std::max(peak, ++running);
      } else if (pick == static_cast<int>(2 * m + 1)) {
        w.push_back(Token::t_inv());
        --running;
      } else {
        w.push_back(pick % 2 ? Token::inv_gen(static_cast<unsigned>(pick / 2)) : Token::gen(static_cast<unsigned>(pick / 2)));
      }
    }
    CHECK(tau(w) == eval_word(w).tee());
    CHECK(tau(w) == running);
    CHECK(max_height(w) == peak);
    CHECK(parse_word(format_word(w), m) == w);
  }
}
