#pragma once

#include <cstddef>
#include <vector>

#include "horogrowth/rational_function.hpp"

namespace horogrowth {

/// A square matrix of rational functions, row-major.
class RationalMatrix {
 public:
  explicit RationalMatrix(std::size_t n) : n_(n), cells_(n * n) {}

  std::size_t size() const noexcept { return n_; }
  RationalFunction& at(std::size_t r, std::size_t c) { return cells_[r * n_ + c]; }
  const RationalFunction& at(std::size_t r, std::size_t c) const { return cells_[r * n_ + c]; }

 private:
  std::size_t n_;
  std::vector<RationalFunction> cells_;
};

/// Generalized finite state automaton whose edges carry the growth
/// polynomial of a finite language of nonempty words.
///
/// Construction validates the machine: indices in range, every label has
/// nonnegative coefficients and a zero constant term. Parallel edges are
/// merged by adding their labels, so there is at most one edge per ordered
/// pair of states.
class GrowthAutomaton {
 public:
  struct Edge {
    std::size_t from;
    std::size_t to;
    IntPolynomial label;
    friend bool operator==(const Edge&, const Edge&) = default;
  };

  GrowthAutomaton(std::size_t state_count, std::size_t start, std::vector<std::size_t> accepts,
                  std::vector<Edge> edges);

  std::size_t state_count() const noexcept { return state_count_; }
  std::size_t start() const noexcept { return start_; }
  /// Sorted, without duplicates.
  const std::vector<std::size_t>& accepts() const noexcept { return accepts_; }
  /// Sorted by (from, to).
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// The generalized adjacency matrix A with A[p][q] = label(p -> q).
  RationalMatrix adjacency() const;

  /// Renumbers states: state s becomes perm[s].
  GrowthAutomaton relabeled(const std::vector<std::size_t>& perm) const;

 private:
  std::size_t state_count_;
  std::size_t start_;
  std::vector<std::size_t> accepts_;
  std::vector<Edge> edges_;
};

/// v_s (I - A)^{-1} v_a for a generalized adjacency matrix whose entries
/// have zero constant term. Solved by fraction-field Gaussian elimination.
RationalFunction adjacency_growth(const RationalMatrix& adjacency, std::size_t start,
                                  const std::vector<std::size_t>& accepts);

/// Growth series of L(M). Exact only for machines with the unique
/// decomposition property; that property is not checked here.
RationalFunction automaton_growth(const GrowthAutomaton& machine);

/// Coefficients x^0..x^N obtained by summing label-count products over all
/// paths from the start state to an accept state (walk counting by total
/// length). Independent of the linear solve.
SeriesPrefix enumerate_path_growth(const RationalMatrix& adjacency, std::size_t start,
                                   const std::vector<std::size_t>& accepts, std::size_t N);
SeriesPrefix enumerate_path_growth(const GrowthAutomaton& machine, std::size_t N);

/// Letter-by-letter machine for {a^i b^j : i, j >= 1}: states S, a^x, a^x b^y.
GrowthAutomaton build_quadrant_fsa();

/// Two-state machine S -> A labelled a{a}*b with a b-loop on A. The S -> A
/// language is infinite, so the machine is carried as a generalized
/// adjacency matrix with entries x^2/(1-x) and x.
struct QuadrantGfsa {
  RationalMatrix adjacency{2};
  std::size_t start = 0;
  std::vector<std::size_t> accepts;
  RationalFunction expected_growth;
};
QuadrantGfsa build_quadrant_gfsa();

/// One accepting start state with a loop labelled tTW_m, growth x^2 (1+2x)^m.
GrowthAutomaton build_prefix_suffix_machine(unsigned m);

}  // namespace horogrowth
