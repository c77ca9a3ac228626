#include "horogrowth/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "horogrowth/errors.hpp"

namespace horogrowth {

BigInt parse_decimal(const std::string& text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw ParseError("expected an integer, got '" + text + "'", i);
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] < '0' || text[j] > '9') {
      throw ParseError("invalid digit in integer '" + text + "'", j);
    }
  }
  BigInt v(text[0] == '+' ? text.substr(1) : text);
  return v;
}

BigInt pow3(unsigned k) {
  BigInt r = 1;
  for (unsigned i = 0; i < k; ++i) r *= 3;
  return r;
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial(std::vector<BigInt>{c}); }

IntPolynomial IntPolynomial::monomial(const BigInt& c, std::size_t k) {
  std::vector<BigInt> v(k + 1);
  v[k] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }

const BigInt& IntPolynomial::lead() const {
  if (is_zero()) throw DomainError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

std::size_t IntPolynomial::valuation() const {
  if (is_zero()) throw DomainError("valuation of the zero polynomial");
  std::size_t k = 0;
  while (coeffs_[k] == 0) ++k;
  return k;
}

const BigInt& IntPolynomial::lowest_nonzero() const { return coeffs_[valuation()]; }

BigInt IntPolynomial::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) {
    g = boost::multiprecision::gcd(g, c);
    if (g == 1) break;
  }
  return abs(g);
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return {};
  return divide_exact(content());
}

IntPolynomial IntPolynomial::divide_exact(const BigInt& d) const {
  if (d == 0) throw DomainError("division of a polynomial by zero");
  if (d == 1) return *this;
  std::vector<BigInt> out(coeffs_.size());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    BigInt q, r;
    boost::multiprecision::divide_qr(coeffs_[k], d, q, r);
    if (r != 0) throw DomainError("inexact division of polynomial coefficients");
    out[k] = std::move(q);
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::truncate(std::size_t n) const {
  if (coeffs_.size() <= n + 1) return *this;
  return IntPolynomial(std::vector<BigInt>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(n + 1)));
}

bool IntPolynomial::has_nonnegative_coeffs() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c >= 0; });
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<BigInt> out(coeffs_);
  for (auto& c : out) c = -c;
  return IntPolynomial(std::move(out));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> out(std::max(a.size(), b.size()));
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a.coeffs_[k];
  for (std::size_t k = 0; k < b.size(); ++k) out[k] += b.coeffs_[k];
  return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> out(std::max(a.size(), b.size()));
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a.coeffs_[k];
  for (std::size_t k = 0; k < b.size(); ++k) out[k] -= b.coeffs_[k];
  return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const BigInt& c, const IntPolynomial& p) {
  if (c == 0) return {};
  std::vector<BigInt> out(p.coeffs_);
  for (auto& v : out) v *= c;
  return IntPolynomial(std::move(out));
}

IntPolynomial pow(const IntPolynomial& base, unsigned exponent) {
  IntPolynomial result = IntPolynomial::constant(1);
  IntPolynomial b = base;
  while (exponent > 0) {
    if (exponent & 1u) result *= b;
    exponent >>= 1u;
    if (exponent > 0) b *= b;
  }
  return result;
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw DomainError("pseudo-remainder by the zero polynomial");
  if (a.degree() < b.degree()) return a;
  std::vector<BigInt> r(a.coeffs().begin(), a.coeffs().end());
  const auto db = static_cast<std::size_t>(b.degree());
  const BigInt& lb = b.lead();
  long steps = a.degree() - b.degree() + 1;
  auto deg = static_cast<long>(r.size()) - 1;
  for (long s = 0; s < steps; ++s) {
    const auto top = static_cast<std::size_t>(deg);
    BigInt lr = r[top];
    for (auto& c : r) c *= lb;
    if (lr != 0) {
      const std::size_t shift = top - db;
      for (std::size_t j = 0; j <= db; ++j) r[shift + j] -= lr * b.coeffs()[j];
    }
    --deg;
  }
  r.resize(static_cast<std::size_t>(b.degree()));
  return IntPolynomial(std::move(r));
}

IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw DomainError("inexact polynomial division");
  std::vector<BigInt> r(a.coeffs().begin(), a.coeffs().end());
  const auto db = static_cast<std::size_t>(b.degree());
  std::vector<BigInt> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  const BigInt& lb = b.lead();
  for (auto k = static_cast<long>(q.size()) - 1; k >= 0; --k) {
    const auto top = static_cast<std::size_t>(k) + db;
    if (r[top] == 0) continue;
    BigInt qk, rem;
    boost::multiprecision::divide_qr(r[top], lb, qk, rem);
    if (rem != 0) throw DomainError("inexact polynomial division");
    for (std::size_t j = 0; j <= db; ++j) r[static_cast<std::size_t>(k) + j] -= qk * b.coeffs()[j];
    q[static_cast<std::size_t>(k)] = std::move(qk);
  }
  for (std::size_t j = 0; j < db && j < r.size(); ++j) {
    if (r[j] != 0) throw DomainError("inexact polynomial division");
  }
  return IntPolynomial(std::move(q));
}

namespace {

IntPolynomial positive_lead(IntPolynomial p) {
  if (!p.is_zero() && p.lead() < 0) return -p;
  return p;
}

}  // namespace

IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() && b.is_zero()) throw DomainError("gcd of two zero polynomials");
  if (a.is_zero()) return positive_lead(b.primitive_part());
  if (b.is_zero()) return positive_lead(a.primitive_part());
  IntPolynomial u = a.primitive_part();
  IntPolynomial v = b.primitive_part();
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    if (v.degree() == 0) return IntPolynomial::constant(1);
    IntPolynomial r = pseudo_remainder(u, v);
    u = std::move(v);
    v = r.primitive_part();
  }
  return positive_lead(std::move(u));
}

namespace {

std::string render(const IntPolynomial& p, const std::string& var, bool latex) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const BigInt& c = p.coeffs()[k];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (latex ? (c < 0 ? "-" : "+") : (c < 0 ? " - " : " + "));
    }
    first = false;
    if (k == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << (latex ? " " : "*");
    os << var;
    if (k > 1) {
      if (latex) {
        os << "^{" << k << '}';
      } else {
        os << '^' << k;
      }
    }
  }
  return os.str();
}

}  // namespace

std::string to_string(const IntPolynomial& p, const std::string& var) { return render(p, var, false); }
std::string to_latex(const IntPolynomial& p, const std::string& var) { return render(p, var, true); }

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << to_string(p); }

}  // namespace horogrowth
