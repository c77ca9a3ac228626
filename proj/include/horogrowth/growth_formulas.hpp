#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "horogrowth/rational_function.hpp"

namespace horogrowth {

/// W_m(x) = (1 + 2x)^m, the growth of the suffix alphabet.
IntPolynomial suffix_poly(unsigned m);

/// Cap polynomial V_m(x) = x^{2m} + x^{m+2} W_m(x) - x^{2m+2}.
IntPolynomial cap_poly(unsigned m);
/// V_m via V_m = (x + 2x^2)(V_{m-1} - x^{2(m-1)}) + x^{2(m-1)} V_1.
IntPolynomial cap_poly_recursive(unsigned m);

/// R_m(x) = 1 / (1 - x^2 W_m(x)); the constant term (n = 0) is included.
RationalFunction prefix_suffix_series(unsigned m);

/// P_m(x): growth of the positive orthant Z_{>=1}^m.
RationalFunction positive_series(unsigned m);

/// Subgroup growth 1 + sum_i C(m,i) 2^i P_i(x) of the horocyclic Z^m.
RationalFunction subgroup_series(unsigned m);

/// chi(level, r): number of cosets of Z^m of the given level (<= 0) at
/// Cayley distance r from the identity.
class CosetCensus {
 public:
  CosetCensus(unsigned m, std::size_t rmax);

  unsigned m() const noexcept { return m_; }
  std::size_t rmax() const noexcept { return rmax_; }

  /// Zero for r > rmax or for a level never populated.
  BigInt chi(long level, std::size_t r) const;
  void add(long level, std::size_t r, const BigInt& count);

  /// Column chi(level, 0..rmax).
  std::vector<BigInt> column(long level) const;
  /// Levels present, from 0 downwards.
  std::vector<long> levels() const;

  friend bool operator==(const CosetCensus&, const CosetCensus&) = default;

 private:
  unsigned m_;
  std::size_t rmax_;
  std::map<long, std::vector<BigInt>> table_;
};

/// Largest census horizon accepted for dimension m.
std::size_t census_horizon_limit(unsigned m);

/// Exact stem census: stems T^n (w_1 t)...(w_j t), w_i in W_m, w_1 nonempty
/// when n >= 1; length n + j + sum l(w_i), level -max(0, n - j).
/// Throws BudgetError when rmax exceeds census_horizon_limit(m).
CosetCensus coset_census(unsigned m, std::size_t rmax);

struct LevelSeries {
  RationalFunction X_minus1;
  RationalFunction X_0;
  IntPolynomial p_hat;
  IntPolynomial q_hat;
  std::size_t certified_to = 0;
};

/// Horizon used by level_series: 2(m+4)+6.
std::size_t level_fit_horizon(unsigned m);

/// Fits X_{-1} = p/(1 - x^2 W_m) and X_0 = (x W_m X_{-1} + q)/(1 - x W_m)
/// to the census with deg p, deg q <= m+4. Every census coefficient must
/// agree (the census must reach the fit horizon); otherwise FitError.
LevelSeries level_series(unsigned m);
LevelSeries fit_level_series(const CosetCensus& census);

/// B_{-n}(x) = W_m(x)^n * subgroup_series(m).
RationalFunction relative_growth_series(unsigned m, unsigned n);

/// Growth of the whole group assembled from the certified level series:
/// S_m X_0 + S_m X_{-1} W_m / (1 - x W_m).
RationalFunction full_series(unsigned m);

/// S_m (1 - x^2)(1 + x W_m) / ((1 - x W_m)(1 - x^2 W_m)).
RationalFunction full_series_closed_form(unsigned m);

/// The general assembly S_m (x W p + q (1 - x^2 W) + W p) / ((1 - xW)(1 - x^2 W))
/// evaluated with the literal truncations p = sum_{r=1}^{m+3} chi(-1,r) x^r
/// and q = sum_{r=0}^{m+1} chi(0,r) x^r. Diagnostic only.
RationalFunction literal_truncation_full_series(unsigned m);

}  // namespace horogrowth
