#pragma once

#include <string>
#include <vector>

#include "horogrowth/json_io.hpp"

namespace horogrowth {

struct Check {
  std::string name;
  bool ok = true;
  /// Witness on failure (coefficient index, vector, word), or a short summary.
  std::string detail;
};

struct VerifyReport {
  std::string suite;
  unsigned m = 0;
  unsigned radius = 0;
  std::vector<Check> checks;
  /// Informational comparisons that never affect ok(), e.g. printed errata.
  std::vector<Check> diagnostics;
  Json extra = Json::object();

  bool ok() const;
  void add(std::string name, bool ok, std::string detail = {});
};

/// Subgroup series for m = 1..m_max against the golden tables, plus the
/// V, R, P rows for m <= 3 and the printed full-series diagnostics.
VerifyReport verify_appendix(unsigned m_max);

/// Sphere counts, subgroup spheres, level buckets, geodesic lengths of every
/// horocyclic element and the coset census, all from one BFS radius.
VerifyReport verify_bfs(unsigned m, unsigned radius);

/// Spelling roundtrip, length formula, symmetry, BFS minimality and the
/// level-language ranges and tiling. m <= 3.
VerifyReport verify_language(unsigned m);

/// Stem census against BFS, and the exact level-series fit.
VerifyReport verify_census(unsigned m, unsigned rmax);

/// Quadrant machines, prefix/suffix machines, enumeration cross-check.
VerifyReport verify_gfsa();

Json to_json(const VerifyReport& r);

/// First index where the two sequences differ, or -1 when they agree on
/// the common prefix and have equal length.
long first_mismatch(const std::vector<BigInt>& got, const std::vector<BigInt>& want);

}  // namespace horogrowth
