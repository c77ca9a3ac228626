#include "horogrowth/gfsa.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

#include "horogrowth/errors.hpp"
#include "horogrowth/growth_formulas.hpp"

namespace horogrowth {

GrowthAutomaton::GrowthAutomaton(std::size_t state_count, std::size_t start, std::vector<std::size_t> accepts,
                                 std::vector<Edge> edges)
    : state_count_(state_count), start_(start), accepts_(std::move(accepts)) {
  if (state_count_ == 0) throw DomainError("automaton needs at least one state");
  if (start_ >= state_count_) throw DomainError("start state out of range");
  std::sort(accepts_.begin(), accepts_.end());
  accepts_.erase(std::unique(accepts_.begin(), accepts_.end()), accepts_.end());
  for (std::size_t a : accepts_) {
    if (a >= state_count_) throw DomainError("accept state out of range");
  }
  std::map<std::pair<std::size_t, std::size_t>, IntPolynomial> merged;
  for (auto& e : edges) {
    if (e.from >= state_count_ || e.to >= state_count_) throw DomainError("edge endpoint out of range");
    if (e.label.coeff(0) != 0) {
      throw DomainError("edge label has a nonzero constant term (empty word in an edge language)");
    }
    if (!e.label.has_nonnegative_coeffs()) throw DomainError("edge label has a negative coefficient");
    merged[{e.from, e.to}] += e.label;
  }
  for (auto& [key, label] : merged) {
    if (!label.is_zero()) edges_.push_back({key.first, key.second, std::move(label)});
  }
}

RationalMatrix GrowthAutomaton::adjacency() const {
  RationalMatrix a(state_count_);
  for (const auto& e : edges_) a.at(e.from, e.to) = RationalFunction(e.label);
  return a;
}

GrowthAutomaton GrowthAutomaton::relabeled(const std::vector<std::size_t>& perm) const {
  if (perm.size() != state_count_) throw DomainError("permutation size mismatch");
  std::vector<std::size_t> acc;
  acc.reserve(accepts_.size());
  for (std::size_t a : accepts_) acc.push_back(perm.at(a));
  std::vector<Edge> edges;
  edges.reserve(edges_.size());
  for (const auto& e : edges_) edges.push_back({perm.at(e.from), perm.at(e.to), e.label});
  return GrowthAutomaton(state_count_, perm.at(start_), std::move(acc), std::move(edges));
}

namespace {

// Smaller is a better pivot: low denominator degree first, then low numerator degree.
std::pair<long, long> pivot_cost(const RationalFunction& f) { return {f.den().degree(), f.num().degree()}; }

void check_zero_constant_terms(const RationalMatrix& a) {
  for (std::size_t r = 0; r < a.size(); ++r) {
    for (std::size_t c = 0; c < a.size(); ++c) {
      const auto& f = a.at(r, c);
      if (!f.is_zero() && f.num().coeff(0) != 0) {
        throw DomainError("adjacency entry has a nonzero constant term");
      }
    }
  }
}

}  // namespace

RationalFunction adjacency_growth(const RationalMatrix& adjacency, std::size_t start,
                                  const std::vector<std::size_t>& accepts) {
  const std::size_t n = adjacency.size();
  if (start >= n) throw DomainError("start state out of range");
  check_zero_constant_terms(adjacency);

  // Augmented system (I - A) | v_a.
  std::vector<std::vector<RationalFunction>> m(n, std::vector<RationalFunction>(n + 1));
  const RationalFunction one = RationalFunction::constant(1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m[r][c] = (r == c ? one : RationalFunction()) - adjacency.at(r, c);
  }
  for (std::size_t a : accepts) {
    if (a >= n) throw DomainError("accept state out of range");
    m[a][n] = one;
  }

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t best = n;
    for (std::size_t r = col; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      if (best == n || pivot_cost(m[r][col]) < pivot_cost(m[best][col])) best = r;
    }
    // det(I - A) has constant term 1, so a pivot always exists.
    if (best == n) throw DomainError("singular system in automaton growth");
    std::swap(m[col], m[best]);
    const RationalFunction inv = one / m[col][col];
    for (std::size_t c = col; c <= n; ++c) m[col][c] = m[col][c] * inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      const RationalFunction factor = m[r][col];
      for (std::size_t c = col; c <= n; ++c) {
        if (!m[col][c].is_zero()) m[r][c] -= factor * m[col][c];
      }
    }
  }
  return m[start][n];
}

RationalFunction automaton_growth(const GrowthAutomaton& machine) {
  return adjacency_growth(machine.adjacency(), machine.start(), machine.accepts());
}

SeriesPrefix enumerate_path_growth(const RationalMatrix& adjacency, std::size_t start,
                                   const std::vector<std::size_t>& accepts, std::size_t N) {
  const std::size_t n = adjacency.size();
  check_zero_constant_terms(adjacency);
  std::vector<std::vector<SeriesPrefix>> label(n, std::vector<SeriesPrefix>(n));
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      if (!adjacency.at(p, q).is_zero()) label[p][q] = series_prefix(adjacency.at(p, q), N);
    }
  }
  std::vector<bool> accepting(n, false);
  for (std::size_t a : accepts) accepting.at(a) = true;

  // walks[q][k]: weighted number of length-k words on walks start -> q with
  // exactly `step` edges.
  std::vector<std::vector<BigInt>> walks(n, std::vector<BigInt>(N + 1));
  walks.at(start)[0] = 1;
  SeriesPrefix total;
  total.coeffs.assign(N + 1, BigInt(0));
  // Every edge adds at least one letter, so N steps exhaust all lengths <= N.
  for (std::size_t step = 0; step <= N; ++step) {
    for (std::size_t q = 0; q < n; ++q) {
      if (!accepting[q]) continue;
      for (std::size_t k = 0; k <= N; ++k) total.coeffs[k] += walks[q][k];
    }
    std::vector<std::vector<BigInt>> next(n, std::vector<BigInt>(N + 1));
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = 0; q < n; ++q) {
        if (label[p][q].coeffs.empty()) continue;
        for (std::size_t i = 0; i <= N; ++i) {
          if (walks[p][i] == 0) continue;
          for (std::size_t j = 1; i + j <= N; ++j) next[q][i + j] += walks[p][i] * label[p][q].coeffs[j];
        }
      }
    }
    walks = std::move(next);
  }
  return total;
}

SeriesPrefix enumerate_path_growth(const GrowthAutomaton& machine, std::size_t N) {
  return enumerate_path_growth(machine.adjacency(), machine.start(), machine.accepts(), N);
}

GrowthAutomaton build_quadrant_fsa() {
  const IntPolynomial letter = IntPolynomial::x();
  // 0 = S, 1 = a^x, 2 = a^x b^y
  return GrowthAutomaton(3, 0, {2}, {{0, 1, letter}, {1, 1, letter}, {1, 2, letter}, {2, 2, letter}});
}

QuadrantGfsa build_quadrant_gfsa() {
  QuadrantGfsa g;
  const IntPolynomial x = IntPolynomial::x();
  // a{a}*b has one word of each length >= 2.
  g.adjacency.at(0, 1) = RationalFunction(x * x, IntPolynomial{1, -1});
  g.adjacency.at(1, 1) = RationalFunction(x);
  g.start = 0;
  g.accepts = {1};
  g.expected_growth = RationalFunction(x * x, IntPolynomial{1, -2, 1});
  return g;
}

GrowthAutomaton build_prefix_suffix_machine(unsigned m) {
  if (m == 0) throw DomainError("dimension m must be at least 1");
  IntPolynomial label = IntPolynomial::monomial(1, 2) * suffix_poly(m);
  return GrowthAutomaton(1, 0, {0}, {{0, 0, std::move(label)}});
}

}  // namespace horogrowth
