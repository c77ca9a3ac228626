#include "horogrowth/rational_function.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "horogrowth/errors.hpp"

namespace horogrowth {

namespace {

// num/den must already be coprime over Q; fixes integer content and sign.
std::pair<IntPolynomial, IntPolynomial> fix_content_and_sign(IntPolynomial num, IntPolynomial den) {
  if (num.is_zero()) return {IntPolynomial{}, IntPolynomial::constant(1)};
  BigInt c = boost::multiprecision::gcd(num.content(), den.content());
  if (c > 1) {
    num = num.divide_exact(c);
    den = den.divide_exact(c);
  }
  if (den.lowest_nonzero() < 0) {
    num = -num;
    den = -den;
  }
  return {std::move(num), std::move(den)};
}

IntPolynomial quotient_by_gcd(const IntPolynomial& p, const IntPolynomial& g) {
  return g.degree() > 0 ? divide_exact(p, g) : p;
}

}  // namespace

RationalFunction::RationalFunction(const IntPolynomial& p) : num_(p), den_(IntPolynomial::constant(1)) {}

RationalFunction::RationalFunction(const IntPolynomial& num, const IntPolynomial& den) {
  if (den.is_zero()) throw DomainError("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = IntPolynomial::constant(1);
    return;
  }
  IntPolynomial g = poly_gcd(num, den);
  auto [n, d] = fix_content_and_sign(quotient_by_gcd(num, g), quotient_by_gcd(den, g));
  num_ = std::move(n);
  den_ = std::move(d);
}

RationalFunction rf_normalize(const IntPolynomial& num, const IntPolynomial& den) {
  return RationalFunction(num, den);
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_, Canonical{}); }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  IntPolynomial g = poly_gcd(a.den_, b.den_);
  IntPolynomial ad = quotient_by_gcd(a.den_, g);
  IntPolynomial bd = quotient_by_gcd(b.den_, g);
  return RationalFunction(a.num_ * bd + b.num_ * ad, a.den_ * bd);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return {};
  // Inputs are coprime, so cancelling across is enough.
  IntPolynomial g1 = poly_gcd(a.num_, b.den_);
  IntPolynomial g2 = poly_gcd(b.num_, a.den_);
  IntPolynomial num = quotient_by_gcd(a.num_, g1) * quotient_by_gcd(b.num_, g2);
  IntPolynomial den = quotient_by_gcd(a.den_, g2) * quotient_by_gcd(b.den_, g1);
  auto [n, d] = fix_content_and_sign(std::move(num), std::move(den));
  return RationalFunction(std::move(n), std::move(d), RationalFunction::Canonical{});
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw DomainError("division by the zero rational function");
  auto [n, d] = fix_content_and_sign(b.den_, b.num_);
  return a * RationalFunction(std::move(n), std::move(d), RationalFunction::Canonical{});
}

RationalFunction pow(const RationalFunction& base, unsigned exponent) {
  RationalFunction result = RationalFunction::constant(1);
  RationalFunction b = base;
  while (exponent > 0) {
    if (exponent & 1u) result *= b;
    exponent >>= 1u;
    if (exponent > 0) b *= b;
  }
  return result;
}

SeriesPrefix series_prefix(const RationalFunction& f, std::size_t N) {
  const IntPolynomial& den = f.den();
  const BigInt d0 = den.coeff(0);
  if (d0 == 0) throw DomainError("rational function has a pole at 0; no Taylor expansion");
  SeriesPrefix out;
  out.coeffs.resize(N + 1);
  for (std::size_t k = 0; k <= N; ++k) {
    BigInt acc = f.num().coeff(k);
    const std::size_t top = std::min<std::size_t>(k, den.size() - 1);
    for (std::size_t i = 1; i <= top; ++i) acc -= den.coeffs()[i] * out.coeffs[k - i];
    BigInt q, r;
    boost::multiprecision::divide_qr(acc, d0, q, r);
    if (r != 0) throw DomainError("series coefficient x^" + std::to_string(k) + " is not an integer");
    out.coeffs[k] = std::move(q);
  }
  return out;
}

SeriesPrefix convolve(const SeriesPrefix& a, const SeriesPrefix& b) {
  const std::size_t n = std::min(a.size(), b.size());
  SeriesPrefix out;
  out.coeffs.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i <= k; ++i) out.coeffs[k] += a.coeffs[i] * b.coeffs[k - i];
  }
  return out;
}

std::string to_string(const RationalFunction& f, const std::string& var) {
  if (f.den() == IntPolynomial::constant(1)) return to_string(f.num(), var);
  return "(" + to_string(f.num(), var) + ") / (" + to_string(f.den(), var) + ")";
}

std::string to_latex(const RationalFunction& f, const std::string& var) {
  if (f.den() == IntPolynomial::constant(1)) return to_latex(f.num(), var);
  return "\\frac{" + to_latex(f.num(), var) + "}{" + to_latex(f.den(), var) + "}";
}

std::string to_string(const SeriesPrefix& s, const std::string& var) {
  std::vector<BigInt> c(s.coeffs);
  std::string body = to_string(IntPolynomial(std::move(c)), var);
  return body + " + O(" + var + "^" + std::to_string(s.size()) + ")";
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << to_string(f); }

}  // namespace horogrowth
