#include "horogrowth/growth_formulas.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "horogrowth/errors.hpp"

namespace horogrowth {

namespace {

void require_dimension(unsigned m) {
  if (m == 0) throw DomainError("dimension m must be at least 1");
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

IntPolynomial x_pow(std::size_t k) { return IntPolynomial::monomial(1, k); }

// D_k = 1 - x^2 W_k, the denominator of R_k.
IntPolynomial prefix_denominator(unsigned k) { return IntPolynomial{1} - x_pow(2) * suffix_poly(k); }

void for_each_composition(unsigned m, std::vector<unsigned>& parts, const std::function<void()>& visit) {
  unsigned used = 0;
  for (auto p : parts) used += p;
  if (used == m) {
    visit();
    return;
  }
  for (unsigned f = 1; used + f <= m; ++f) {
    parts.push_back(f);
    for_each_composition(m, parts, visit);
    parts.pop_back();
  }
}

// Numerator of P_m over the common denominator D_1 D_2 ... D_m.
IntPolynomial positive_numerator(unsigned m) {
  std::vector<IntPolynomial> D(m + 1);
  for (unsigned k = 1; k <= m; ++k) D[k] = prefix_denominator(k);

  IntPolynomial total = x_pow(m);
  for (unsigned k = 1; k <= m; ++k) total *= D[k];

  std::vector<unsigned> parts;
  for_each_composition(m, parts, [&] {
    const std::size_t q = parts.size();
    BigInt mult = 1;
    {
      unsigned acc = 0;
      for (auto p : parts) {
        acc += p;
        mult *= binomial(acc, p);
      }
    }
    std::vector<bool> used(m + 1, false);
    IntPolynomial term = IntPolynomial::constant(mult) * cap_poly(parts[0]);
    used[parts[0]] = true;
    unsigned acc = parts[0];
    for (std::size_t k = 1; k + 1 < q; ++k) {
      acc += parts[k];
      // x^{i_k} (R_acc - 1) = x^{i_k + 2} W_acc / D_acc
      term *= x_pow(parts[k] + 2) * suffix_poly(acc);
      used[acc] = true;
    }
    if (q >= 2) {
      term *= x_pow(parts[q - 1]);
      used[m] = true;
    }
    for (unsigned k = 1; k <= m; ++k) {
      if (!used[k]) term *= D[k];
    }
    total += term;
  });
  return total;
}

IntPolynomial product_of_denominators(unsigned from, unsigned to) {
  IntPolynomial p{1};
  for (unsigned k = from; k <= to; ++k) p *= prefix_denominator(k);
  return p;
}

std::vector<BigInt> padded(std::vector<BigInt> v, std::size_t len) {
  v.resize(len, BigInt(0));
  return v;
}

}  // namespace

IntPolynomial suffix_poly(unsigned m) {
  require_dimension(m);
  std::vector<BigInt> c(m + 1);
  BigInt two_k = 1;
  for (unsigned k = 0; k <= m; ++k) {
    c[k] = binomial(m, k) * two_k;
    two_k *= 2;
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial cap_poly(unsigned m) {
  require_dimension(m);
  return x_pow(2 * m) + x_pow(m + 2) * suffix_poly(m) - x_pow(2 * m + 2);
}

IntPolynomial cap_poly_recursive(unsigned m) {
  require_dimension(m);
  const IntPolynomial v1 = x_pow(2) + x_pow(3) + x_pow(4);
  IntPolynomial v = v1;
  const IntPolynomial step{0, 1, 2};
  for (unsigned k = 2; k <= m; ++k) {
    v = step * (v - x_pow(2 * (k - 1))) + x_pow(2 * (k - 1)) * v1;
  }
  return v;
}

RationalFunction prefix_suffix_series(unsigned m) {
  require_dimension(m);
  return RationalFunction(IntPolynomial{1}, prefix_denominator(m));
}

RationalFunction positive_series(unsigned m) {
  require_dimension(m);
  return RationalFunction(positive_numerator(m), product_of_denominators(1, m));
}

RationalFunction subgroup_series(unsigned m) {
  require_dimension(m);
  IntPolynomial num = product_of_denominators(1, m);
  BigInt two_i = 1;
  for (unsigned i = 1; i <= m; ++i) {
    two_i *= 2;
    num += IntPolynomial::constant(binomial(m, i) * two_i) * positive_numerator(i) *
           product_of_denominators(i + 1, m);
  }
  return RationalFunction(num, product_of_denominators(1, m));
}

CosetCensus::CosetCensus(unsigned m, std::size_t rmax) : m_(m), rmax_(rmax) {}

BigInt CosetCensus::chi(long level, std::size_t r) const {
  if (r > rmax_) return 0;
  const auto it = table_.find(level);
  if (it == table_.end()) return 0;
  return it->second[r];
}

void CosetCensus::add(long level, std::size_t r, const BigInt& count) {
  if (level > 0) throw DomainError("coset levels are nonpositive");
  if (r > rmax_) return;
  auto& col = table_[level];
  if (col.empty()) col.assign(rmax_ + 1, BigInt(0));
  col[r] += count;
}

std::vector<BigInt> CosetCensus::column(long level) const {
  const auto it = table_.find(level);
  if (it == table_.end()) return std::vector<BigInt>(rmax_ + 1, BigInt(0));
  return it->second;
}

std::vector<long> CosetCensus::levels() const {
  std::vector<long> out;
  for (auto it = table_.rbegin(); it != table_.rend(); ++it) out.push_back(it->first);
  return out;
}

std::size_t census_horizon_limit(unsigned m) { return std::max<std::size_t>(24, level_fit_horizon(m)); }

std::size_t level_fit_horizon(unsigned m) { return 2 * (static_cast<std::size_t>(m) + 4) + 6; }

CosetCensus coset_census(unsigned m, std::size_t rmax) {
  require_dimension(m);
  if (rmax > census_horizon_limit(m)) {
    throw BudgetError("census horizon " + std::to_string(rmax) + " exceeds the limit " +
                      std::to_string(census_horizon_limit(m)) + " for m = " + std::to_string(m));
  }
  CosetCensus census(m, rmax);
  const IntPolynomial W = suffix_poly(m);
  const IntPolynomial block = (x_pow(1) * W).truncate(rmax);                     // w t
  const IntPolynomial first_after_T = (x_pow(1) * (W - IntPolynomial{1})).truncate(rmax);  // w t, w != e

  for (std::size_t n = 0; n <= rmax; ++n) {
    // j = 0: the stem T^n alone.
    census.add(-static_cast<long>(n), n, 1);
    IntPolynomial lengths = (x_pow(n) * (n == 0 ? block : first_after_T)).truncate(rmax);
    for (std::size_t j = 1; !lengths.is_zero(); ++j) {
      const long level = n > j ? -static_cast<long>(n - j) : 0;
      const auto c = lengths.coeffs();
      for (std::size_t r = 0; r < c.size(); ++r) {
        if (c[r] != 0) census.add(level, r, c[r]);
      }
      lengths = (lengths * block).truncate(rmax);
    }
  }
  return census;
}

LevelSeries fit_level_series(const CosetCensus& census) {
  const unsigned m = census.m();
  const std::size_t horizon = level_fit_horizon(m);
  if (census.rmax() < horizon) {
    throw FitError("census horizon " + std::to_string(census.rmax()) + " is below the certification horizon " +
                   std::to_string(horizon));
  }
  const std::size_t keep = m + 4;  // numerator degree bound
  const IntPolynomial W = suffix_poly(m);
  const IntPolynomial xW = x_pow(1) * W;
  const IntPolynomial chi_m1(census.column(-1));
  const IntPolynomial chi_0(census.column(0));

  LevelSeries out;
  out.p_hat = (chi_m1 * prefix_denominator(m)).truncate(keep);
  out.q_hat = (chi_0 * (IntPolynomial{1} - xW) - xW * chi_m1).truncate(keep);
  out.X_minus1 = RationalFunction(out.p_hat, prefix_denominator(m));
  out.X_0 = (RationalFunction(xW) * out.X_minus1 + RationalFunction(out.q_hat)) /
            RationalFunction(IntPolynomial{1} - xW);

  const auto check = [&](const RationalFunction& f, long level, std::size_t shift) {
    const std::size_t top = census.rmax();
    const auto got = series_prefix(f, top);
    const auto want = padded(census.column(level), top + 1);
    for (std::size_t r = 0; r <= top; ++r) {
      const BigInt expected = r >= shift ? got[r - shift] : BigInt(0);
      if (expected != want[r]) {
        throw FitError("level " + std::to_string(level) + " series disagrees with the census at x^" +
                       std::to_string(r) + ": fitted " + expected.str() + ", census " + want[r].str());
      }
    }
  };
  check(out.X_minus1, -1, 0);
  check(out.X_0, 0, 0);
  // Deeper levels are shifted copies: X_{-n} = x^{n-1} X_{-1}.
  check(out.X_minus1, -2, 1);
  check(out.X_minus1, -3, 2);
  out.certified_to = census.rmax();
  return out;
}

LevelSeries level_series(unsigned m) {
  require_dimension(m);
  return fit_level_series(coset_census(m, level_fit_horizon(m)));
}

RationalFunction relative_growth_series(unsigned m, unsigned n) {
  return RationalFunction(pow(suffix_poly(m), n)) * subgroup_series(m);
}

RationalFunction full_series(unsigned m) {
  const LevelSeries ls = level_series(m);
  const IntPolynomial W = suffix_poly(m);
  const RationalFunction S = subgroup_series(m);
  const RationalFunction tail = RationalFunction(W, IntPolynomial{1} - x_pow(1) * W);
  return S * ls.X_0 + S * ls.X_minus1 * tail;
}

RationalFunction full_series_closed_form(unsigned m) {
  const IntPolynomial W = suffix_poly(m);
  const IntPolynomial num = (IntPolynomial{1} - x_pow(2)) * (IntPolynomial{1} + x_pow(1) * W);
  const IntPolynomial den = (IntPolynomial{1} - x_pow(1) * W) * prefix_denominator(m);
  return subgroup_series(m) * RationalFunction(num, den);
}

RationalFunction literal_truncation_full_series(unsigned m) {
  require_dimension(m);
  const CosetCensus census = coset_census(m, m + 3);
  std::vector<BigInt> pc(m + 4, BigInt(0));
  for (std::size_t r = 1; r <= m + 3; ++r) pc[r] = census.chi(-1, r);
  std::vector<BigInt> qc(m + 2, BigInt(0));
  for (std::size_t r = 0; r <= m + 1; ++r) qc[r] = census.chi(0, r);
  const IntPolynomial p(std::move(pc));
  const IntPolynomial q(std::move(qc));
  const IntPolynomial W = suffix_poly(m);
  const IntPolynomial num = x_pow(1) * W * p + q * prefix_denominator(m) + W * p;
  const IntPolynomial den = (IntPolynomial{1} - x_pow(1) * W) * prefix_denominator(m);
  return subgroup_series(m) * RationalFunction(num, den);
}

}  // namespace horogrowth
