#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "horogrowth/polynomial.hpp"

namespace horogrowth {

/// A quotient of integer polynomials kept in canonical form:
///   * num and den are coprime over Q,
///   * the integer content of num and den taken jointly is 1,
///   * the lowest-order nonzero coefficient of den is positive.
/// Two canonical values are equal exactly when their fields are equal.
class RationalFunction {
 public:
  /// The zero function 0/1.
  RationalFunction() : den_(IntPolynomial::constant(1)) {}
  /// Implicit lift of a polynomial p/1.
  RationalFunction(const IntPolynomial& p);  // NOLINT(google-explicit-constructor)
  /// Normalizes num/den; throws DomainError when den is zero.
  RationalFunction(const IntPolynomial& num, const IntPolynomial& den);

  static RationalFunction constant(const BigInt& c) {
    return RationalFunction(IntPolynomial::constant(c));
  }

  const IntPolynomial& num() const noexcept { return num_; }
  const IntPolynomial& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  /// Throws DomainError when b is zero.
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

 private:
  struct Canonical {};
  RationalFunction(IntPolynomial num, IntPolynomial den, Canonical)
      : num_(std::move(num)), den_(std::move(den)) {}

  IntPolynomial num_;
  IntPolynomial den_;
};

/// Canonical representative of num/den. Idempotent.
RationalFunction rf_normalize(const IntPolynomial& num, const IntPolynomial& den);

inline RationalFunction rf_add(const RationalFunction& a, const RationalFunction& b) { return a + b; }
inline RationalFunction rf_mul(const RationalFunction& a, const RationalFunction& b) { return a * b; }
inline RationalFunction rf_div(const RationalFunction& a, const RationalFunction& b) { return a / b; }

RationalFunction pow(const RationalFunction& base, unsigned exponent);

/// Coefficients x^0..x^N of a Taylor expansion at 0.
struct SeriesPrefix {
  std::vector<BigInt> coeffs;

  std::size_t size() const noexcept { return coeffs.size(); }
  const BigInt& operator[](std::size_t k) const { return coeffs[k]; }
  friend bool operator==(const SeriesPrefix&, const SeriesPrefix&) = default;
};

/// Taylor coefficients through x^N via the recurrence given by the
/// denominator. Throws DomainError when den(0) = 0 or when a coefficient is
/// not an integer.
SeriesPrefix series_prefix(const RationalFunction& f, std::size_t N);

/// Truncated product of two prefixes (length = min of the two lengths).
SeriesPrefix convolve(const SeriesPrefix& a, const SeriesPrefix& b);

std::string to_string(const RationalFunction& f, const std::string& var = "x");
std::string to_latex(const RationalFunction& f, const std::string& var = "x");
std::string to_string(const SeriesPrefix& s, const std::string& var = "x");

std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

}  // namespace horogrowth
