#pragma once

// Test-side reference implementations. Nothing here calls the code paths it
// is used to check.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "horogrowth/group.hpp"
#include "horogrowth/rational_function.hpp"

namespace oracle {

using horogrowth::BigInt;
using horogrowth::GroupElement;
using horogrowth::IntPolynomial;
using horogrowth::RationalFunction;
using Rational = boost::multiprecision::cpp_rational;

inline Rational eval(const IntPolynomial& p, const Rational& x) {
  Rational acc = 0;
  const auto c = p.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + Rational(c[k]);
  return acc;
}

inline Rational eval(const RationalFunction& f, const Rational& x) { return eval(f.num(), x) / eval(f.den(), x); }

/// Power series division by long division on coefficient lists.
inline std::vector<BigInt> taylor(const IntPolynomial& num, const IntPolynomial& den, std::size_t N) {
  std::vector<Rational> q(N + 1);
  std::vector<Rational> rem(N + 1);
  for (std::size_t k = 0; k <= N; ++k) rem[k] = Rational(num.coeff(k));
  const Rational d0(den.coeff(0));
  for (std::size_t k = 0; k <= N; ++k) {
    q[k] = rem[k] / d0;
    for (std::size_t j = 0; j + k <= N; ++j) rem[j + k] -= q[k] * Rational(den.coeff(j));
  }
  std::vector<BigInt> out;
  for (const auto& c : q) out.push_back(boost::multiprecision::numerator(c));
  return out;
}

/// Breadth-first search over exact group elements keyed by their printed
/// normal form. Slow, independent of the library's packed-key BFS.
struct NaiveBall {
  std::vector<std::uint64_t> spheres;
  std::map<std::string, unsigned> distance;
  std::vector<GroupElement> elements;
};

inline std::string key_of(const GroupElement& g) {
  std::string k = std::to_string(g.tee()) + "|";
  for (const auto& c : g.coords()) k += c.numerator().str() + "/" + std::to_string(c.exp3()) + ",";
  return k;
}

inline NaiveBall naive_ball(unsigned m, unsigned R) {
  NaiveBall out;
  std::vector<GroupElement> gens;
  for (unsigned i = 0; i < m; ++i) {
    gens.push_back(GroupElement::generator(m, i, false));
    gens.push_back(GroupElement::generator(m, i, true));
  }
  gens.push_back(GroupElement::stable_letter(m, false));
  gens.push_back(GroupElement::stable_letter(m, true));
  std::vector<GroupElement> frontier{GroupElement::identity(m)};
  out.distance[key_of(frontier[0])] = 0;
  out.elements.push_back(frontier[0]);
  out.spheres.push_back(1);
  for (unsigned r = 1; r <= R; ++r) {
    std::vector<GroupElement> next;
    for (const auto& g : frontier) {
      for (const auto& s : gens) {
        GroupElement h = horogrowth::multiply(g, s);
        if (out.distance.emplace(key_of(h), r).second) next.push_back(h);
      }
    }
    out.spheres.push_back(next.size());
    out.elements.insert(out.elements.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

/// Deterministic generator of small random polynomials.
class PolyGen {
 public:
  explicit PolyGen(std::uint64_t seed) : rng_(seed) {}

  IntPolynomial poly(int max_degree, int bound) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<int> coef(-bound, bound);
    std::vector<BigInt> c(static_cast<std::size_t>(deg(rng_)) + 1);
    for (auto& x : c) x = coef(rng_);
    return IntPolynomial(std::move(c));
  }

  /// Denominator with nonzero constant term.
  IntPolynomial unit_den(int max_degree, int bound) {
    IntPolynomial d = poly(max_degree, bound);
    std::vector<BigInt> c(d.coeffs().begin(), d.coeffs().end());
    if (c.empty()) c.push_back(1);
    std::uniform_int_distribution<int> sign(0, 1);
    c[0] = sign(rng_) ? 1 : -1;
    return IntPolynomial(std::move(c));
  }

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle
