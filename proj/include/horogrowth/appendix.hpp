#pragma once

#include <optional>
#include <string>
#include <vector>

#include "horogrowth/json_io.hpp"

namespace horogrowth {

/// Golden appendix data compiled into the library from data/appendix_golden.json.
const Json& appendix_golden();

/// Product of {"poly": [...], "power": k} factors.
IntPolynomial polynomial_from_factors(const Json& factors);
/// {"num_factors": [...], "den_factors": [...]} as a canonical rational function.
RationalFunction rational_from_factors(const Json& j);

/// A golden row: rational form (if printed), alternates, and printed series terms.
struct GoldenSeries {
  unsigned m = 0;
  std::optional<RationalFunction> rational;
  std::vector<RationalFunction> alternates;
  std::vector<BigInt> series;
  std::string note;
};

/// Rows of one table: "subgroup", "prefix_suffix", "positive" or "printed_full".
std::vector<GoldenSeries> golden_table(const std::string& name);
/// Golden V_m for m = 1..3.
IntPolynomial golden_cap(unsigned m);

}  // namespace horogrowth
