#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "horogrowth/bigint.hpp"

namespace horogrowth {

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
///
/// Coefficients are stored in ascending degree order and the trailing
/// (highest-degree) coefficient is always nonzero; the zero polynomial has
/// no coefficients at all. Values are immutable once built.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long long> coeffs);

  static IntPolynomial constant(const BigInt& c);
  /// c * x^k
  static IntPolynomial monomial(const BigInt& c, std::size_t k);
  static IntPolynomial x() { return monomial(1, 1); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  std::size_t size() const noexcept { return coeffs_.size(); }

  /// Coefficient of x^k; zero past the degree.
  BigInt coeff(std::size_t k) const;
  std::span<const BigInt> coeffs() const noexcept { return coeffs_; }

  /// Leading coefficient. Requires a nonzero polynomial.
  const BigInt& lead() const;
  /// Lowest-order nonzero coefficient. Requires a nonzero polynomial.
  const BigInt& lowest_nonzero() const;
  /// Index of the lowest-order nonzero coefficient.
  std::size_t valuation() const;

  /// Nonnegative gcd of all coefficients (0 for the zero polynomial).
  BigInt content() const;
  /// p / content(p), sign preserved.
  IntPolynomial primitive_part() const;

  /// Divides every coefficient by d; throws DomainError if not exact.
  IntPolynomial divide_exact(const BigInt& d) const;

  /// Drops all terms of degree > n.
  IntPolynomial truncate(std::size_t n) const;

  bool has_nonnegative_coeffs() const;

  IntPolynomial operator-() const;
  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const BigInt& c, const IntPolynomial& p);
  IntPolynomial& operator+=(const IntPolynomial& o) { return *this = *this + o; }
  IntPolynomial& operator-=(const IntPolynomial& o) { return *this = *this - o; }
  IntPolynomial& operator*=(const IntPolynomial& o) { return *this = *this * o; }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim();

  std::vector<BigInt> coeffs_;
};

IntPolynomial pow(const IntPolynomial& base, unsigned exponent);

/// Pseudo-remainder prem(a, b) = lc(b)^(deg a - deg b + 1) * a mod b.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

/// Exact quotient a / b over the integers; throws DomainError when b does
/// not divide a in Z[x].
IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b);

/// Primitive gcd with positive leading coefficient, via the primitive
/// pseudo-remainder sequence. Throws DomainError when both inputs are zero.
IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b);

/// Plain text rendering in ascending order, e.g. "1 + 2*x - x^3".
std::string to_string(const IntPolynomial& p, const std::string& var = "x");
/// LaTeX rendering in ascending order, e.g. "1+2 x-x^{3}".
std::string to_latex(const IntPolynomial& p, const std::string& var = "x");

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p);

}  // namespace horogrowth
