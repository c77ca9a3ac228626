#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "horogrowth/group.hpp"

namespace horogrowth {

using LatticeVector = std::vector<std::int64_t>;

/// Per-coordinate digits of the unique geodesic of a positive-orthant
/// lattice point. digits[i][l] is coordinate i's digit at place value 3^l.
/// Digits below the top level N lie in {-1, 0, 1}; digits at level N lie in
/// {0, 1, 2}, and some coordinate has a nonzero digit at level N.
struct DigitExpansion {
  unsigned top_level = 0;
  std::vector<std::vector<int>> digits;

  friend bool operator==(const DigitExpansion&, const DigitExpansion&) = default;
};

/// Largest coordinate magnitude accepted by the digit routines.
inline constexpr std::int64_t kMaxCoordinate = 1'350'851'717'672'992'089LL;  // 3^38

/// Throws DomainError for an empty/all-zero vector, a negative entry, or a
/// coordinate beyond kMaxCoordinate.
DigitExpansion digit_expansion(const LatticeVector& v);

/// The canonical geodesic word for a^v; the empty word for v = 0.
Word spell(const LatticeVector& v);

/// Cayley-graph distance from the identity to a^v.
std::uint64_t word_length(const LatticeVector& v);

/// Cheap per-coordinate summary used by word_length and bulk counters.
struct CoordinateProfile {
  /// Top level the coordinate would force on its own (0 for a zero coordinate).
  unsigned own_top = 0;
  /// Balanced-ternary top index and digit weight.
  unsigned bt_top = 0;
  unsigned bt_weight = 0;
  /// Whether a 2-led expansion exists, and its weight (top digit counts 2).
  bool two_led = false;
  unsigned two_led_weight = 0;
  bool zero = true;

  /// Letters this coordinate contributes when the global top level is N.
  unsigned weight_at(unsigned N) const {
    if (zero) return 0;
    return (two_led && bt_top == N + 1) ? two_led_weight : bt_weight;
  }
};

/// Profile of |e|.
CoordinateProfile coordinate_profile(std::int64_t e);

/// The letter families W_X, U_X, V_X for a block X of generator indices
/// (0-based, increasing). Words are built over dimension m.
std::vector<Word> suffix_words(unsigned m, const std::vector<unsigned>& block);
Word orthant_word(unsigned m, const std::vector<unsigned>& block);
std::vector<Word> cap_words(unsigned m, const std::vector<unsigned>& block);

/// Calls `visit` once for each word of the level-n language L_{m,n}: ordered
/// set partitions of the generators into blocks B_1..B_q and compositions
/// (j_1..j_q) of n, spelling t^n V_{B_1} (TW_{B_1})^{j_1} U_{B_2} ... with
/// the middle exponents j_2..j_{q-1} at least 1.
void for_each_level_word(unsigned m, unsigned n, const std::function<void(const Word&)>& visit);
std::vector<Word> enumerate_level(unsigned m, unsigned n);

struct LevelRangeReport {
  unsigned m = 0;
  unsigned n = 0;
  std::uint64_t words = 0;
  bool ok = true;
  /// Human-readable description of each violation, including a witness word.
  std::vector<std::string> violations;
};

/// Checks that L_{m,n} evaluates injectively into
/// [0, (3^{n+2}-1)/2]^m minus [0, (3^{n+1}+1)/2)^m with max height n or n+1.
LevelRangeReport check_level_ranges(unsigned m, unsigned n);

}  // namespace horogrowth
