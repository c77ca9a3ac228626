#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "horogrowth/growth_formulas.hpp"
#include "horogrowth/normal_form.hpp"

namespace horogrowth {

struct SphereCounts {
  unsigned m = 0;
  unsigned radius = 0;
  std::vector<std::uint64_t> total;
  std::vector<std::uint64_t> horocyclic;
  /// level = min(tee, 0) -> counts by radius.
  std::map<long, std::vector<std::uint64_t>> by_level;
};

/// Hard radius limit for dimension m. m = 1, 2, 3 use 12, 9, 7; larger m
/// use the largest radius whose estimated frontier fits the memory budget.
unsigned bfs_radius_limit(unsigned m);

/// Memory budget in MiB: HOROGROWTH_BUDGET_MB if set, else 2048.
std::size_t bfs_budget_mb();

/// Estimated peak bytes of a BFS to radius R, from the closed-form sphere sizes.
std::size_t bfs_estimated_bytes(unsigned m, unsigned R);

/// Throws BudgetError if (m, R) is out of budget.
void check_bfs_budget(unsigned m, unsigned R);

/// One visited element: scaled coordinates U_i = u_i 3^K and tee.
struct BfsVertex {
  const std::int64_t* coords;
  std::int64_t tee;
  unsigned distance;
};

/// Breadth-first traversal of the Cayley graph of G_m to radius R, calling
/// `visit` once per element in nondecreasing distance order. Coordinates are
/// scaled by 3^K with K = R so every visited element has integer keys.
/// Generator order is a_1, A_1, ..., a_m, A_m, t, T.
void bfs_traverse(unsigned m, unsigned R, const std::function<void(const BfsVertex&)>& visit);

SphereCounts bfs_spheres(unsigned m, unsigned R);
std::vector<std::uint64_t> bfs_subgroup_spheres(unsigned m, unsigned R);

/// Cayley distance to a^v by bidirectional search from e and a^v, bounded by
/// word_length(v). The budget applies to the half radius.
unsigned element_distance(const LatticeVector& v);

/// chi(level, r) for every coset of Z^m within distance R, from BFS.
CosetCensus coset_distance_census(unsigned m, unsigned R);

/// b(stem, r) for r = 0..R: elements of stem Z^m at distance r + l(stem).
/// Throws DomainError if the stem's coset is not at distance l(stem).
std::vector<std::uint64_t> relative_growth(unsigned m, const Word& stem, unsigned R);

}  // namespace horogrowth
