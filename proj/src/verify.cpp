#include "horogrowth/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "horogrowth/appendix.hpp"
#include "horogrowth/errors.hpp"

namespace horogrowth {

namespace {

std::string join(const LatticeVector& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

std::vector<BigInt> widen(const std::vector<std::uint64_t>& v) {
  return std::vector<BigInt>(v.begin(), v.end());
}

std::string mismatch_detail(const std::vector<BigInt>& got, const std::vector<BigInt>& want) {
  const long k = first_mismatch(got, want);
  if (k < 0) return "agree through x^" + std::to_string(want.size() - 1);
  const auto idx = static_cast<std::size_t>(k);
  const std::string g = idx < got.size() ? got[idx].str() : "missing";
  const std::string w = idx < want.size() ? want[idx].str() : "missing";
  return "x^" + std::to_string(k) + ": got " + g + ", expected " + w;
}

void compare_prefix(VerifyReport& r, const std::string& name, const RationalFunction& f,
                    const std::vector<BigInt>& want) {
  if (want.empty()) return;
  const auto got = series_prefix(f, want.size() - 1).coeffs;
  r.add(name, first_mismatch(got, want) < 0, mismatch_detail(got, want));
}

void compare_rational(VerifyReport& r, const std::string& name, const RationalFunction& got,
                      const RationalFunction& want) {
  r.add(name, got == want, got == want ? to_string(got) : "got " + to_string(got) + ", expected " + to_string(want));
}

// Calls f(v) for every v in [lo, hi]^m.
template <class F>
void for_each_in_box(unsigned m, std::int64_t lo, std::int64_t hi, F&& f) {
  LatticeVector v(m, lo);
  while (true) {
    f(v);
    unsigned i = 0;
    while (i < m && v[i] == hi) v[i++] = lo;
    if (i == m) return;
    ++v[i];
  }
}

LatticeVector lattice_of(const GroupElement& g) {
  LatticeVector v;
  for (const auto& c : g.coords()) v.push_back(static_cast<std::int64_t>(c.numerator()));
  return v;
}

std::int64_t half_pow3(unsigned k, int plus) {
  std::int64_t p = 1;
  for (unsigned i = 0; i < k; ++i) p *= 3;
  return (p + plus) / 2;
}

}  // namespace

bool VerifyReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
}

void VerifyReport::add(std::string name, bool ok, std::string detail) {
  checks.push_back({std::move(name), ok, std::move(detail)});
}

long first_mismatch(const std::vector<BigInt>& got, const std::vector<BigInt>& want) {
  const std::size_t n = std::min(got.size(), want.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (got[k] != want[k]) return static_cast<long>(k);
  }
  return got.size() == want.size() ? -1 : static_cast<long>(n);
}

VerifyReport verify_appendix(unsigned m_max) {
  if (m_max == 0 || m_max > 10) throw DomainError("appendix data covers 1 <= m <= 10");
  VerifyReport r;
  r.suite = "appendix";
  r.m = m_max;
  for (const auto& row : golden_table("subgroup")) {
    if (row.m > m_max) continue;
    const std::string tag = "subgroup m=" + std::to_string(row.m);
    const RationalFunction S = subgroup_series(row.m);
    compare_rational(r, tag + " rational form", S, *row.rational);
    for (std::size_t i = 0; i < row.alternates.size(); ++i) {
      compare_rational(r, tag + " alternate form " + std::to_string(i + 1), S, row.alternates[i]);
    }
    compare_prefix(r, tag + " series", S, row.series);
  }
  const unsigned small = std::min(m_max, 3u);
  for (unsigned m = 1; m <= small; ++m) {
    const std::string tag = "m=" + std::to_string(m);
    const IntPolynomial V = golden_cap(m);
    r.add("cap closed form " + tag, cap_poly(m) == V, to_string(cap_poly(m)));
    r.add("cap recursion " + tag, cap_poly_recursive(m) == V, to_string(cap_poly_recursive(m)));
  }
  for (const auto& name : {std::string("prefix_suffix"), std::string("positive")}) {
    for (const auto& row : golden_table(name)) {
      if (row.m > small) continue;
      const RationalFunction f = name == "positive" ? positive_series(row.m) : prefix_suffix_series(row.m);
      const std::string tag = name + " m=" + std::to_string(row.m);
      if (row.rational) compare_rational(r, tag + " rational form", f, *row.rational);
      compare_prefix(r, tag + " series", f, row.series);
    }
  }
  for (const auto& row : golden_table("printed_full")) {
    if (row.m > m_max) continue;
    const auto printed = series_prefix(*row.rational, 4).coeffs;
    const auto assembled = series_prefix(full_series(row.m), 4).coeffs;
    const bool agrees = printed == assembled;
    std::ostringstream os;
    os << "printed x^1 coefficient " << printed[1] << ", forced sphere size " << 2 * row.m + 2
       << "; assembled prefix " << to_string(SeriesPrefix{assembled}) << " vs printed "
       << to_string(SeriesPrefix{printed});
    if (!agrees) os << " [erratum]";
    r.diagnostics.push_back({"printed full series m=" + std::to_string(row.m), agrees, os.str()});
  }
  return r;
}

VerifyReport verify_bfs(unsigned m, unsigned radius) {
  VerifyReport r;
  r.suite = "bfs";
  r.m = m;
  r.radius = radius;
  check_bfs_budget(m, radius);
  const SphereCounts spheres = bfs_spheres(m, radius);
  r.extra["spheres"] = to_json(spheres);
  r.add("sigma(0) = 1", spheres.total[0] == 1);
  if (radius >= 1) {
    r.add("sigma(1) = 2m+2", spheres.total[1] == 2 * m + 2, "sigma(1) = " + std::to_string(spheres.total[1]));
  }
  compare_prefix(r, "subgroup spheres = subgroup series", subgroup_series(m), widen(spheres.horocyclic));
  compare_prefix(r, "spheres = full series", full_series(m), widen(spheres.total));
  std::vector<std::uint64_t> sum(radius + 1, 0);
  for (const auto& [level, col] : spheres.by_level) {
    for (unsigned k = 0; k <= radius; ++k) sum[k] += col[k];
  }
  r.add("level buckets sum to spheres", sum == spheres.total);

  // Every horocyclic element in the ball sits at distance word_length(v).
  std::int64_t unit = 1;
  for (unsigned i = 0; i < radius; ++i) unit *= 3;
  std::uint64_t seen = 0;
  std::string witness;
  bfs_traverse(m, radius, [&](const BfsVertex& x) {
    if (x.tee != 0) return;
    LatticeVector v(m);
    for (unsigned i = 0; i < m; ++i) {
      if (x.coords[i] % unit != 0) return;
      v[i] = x.coords[i] / unit;
    }
    ++seen;
    if (witness.empty() && word_length(v) != x.distance) {
      witness = "v=(" + join(v) + ") BFS " + std::to_string(x.distance) + ", word_length " +
                std::to_string(word_length(v));
    }
  });
  r.add("BFS distance = word_length on horocyclic elements", witness.empty(),
        witness.empty() ? std::to_string(seen) + " elements" : witness);

  const std::size_t shared = std::min<std::size_t>(radius, census_horizon_limit(m));
  const CosetCensus bfs = coset_distance_census(m, static_cast<unsigned>(shared));
  const CosetCensus dp = coset_census(m, shared);
  std::string census_witness;
  for (long level = 0; level >= -static_cast<long>(shared); --level) {
    for (std::size_t k = 0; k <= shared; ++k) {
      if (census_witness.empty() && bfs.chi(level, k) != dp.chi(level, k)) {
        census_witness = "chi(" + std::to_string(level) + "," + std::to_string(k) + "): BFS " +
                         bfs.chi(level, k).str() + ", stems " + dp.chi(level, k).str();
      }
    }
  }
  r.add("coset census = stem census", census_witness.empty(), census_witness);
  return r;
}

VerifyReport verify_language(unsigned m) {
  if (m == 0 || m > 3) throw DomainError("language suite supports 1 <= m <= 3");
  VerifyReport r;
  r.suite = "language";
  r.m = m;

  const std::int64_t box = m == 1 ? 1000 : (m == 2 ? 121 : 13);
  const std::int64_t lo = m == 2 ? 1 : -box;
  std::string witness;
  std::uint64_t count = 0;
  for_each_in_box(m, lo, box, [&](const LatticeVector& v) {
    ++count;
    if (!witness.empty()) return;
    const Word w = spell(v);
    if (eval_word(w) != GroupElement::lattice(v)) {
      witness = "spell(" + join(v) + ") = " + format_word(w) + " evaluates elsewhere";
    } else if (w.length() != word_length(v)) {
      witness = "spell(" + join(v) + ") has " + std::to_string(w.length()) + " tokens, word_length " +
                std::to_string(word_length(v));
    }
  });
  r.add("spell roundtrip and token count", witness.empty(),
        witness.empty() ? std::to_string(count) + " vectors in [" + std::to_string(lo) + "," + std::to_string(box) +
                              "]^" + std::to_string(m)
                        : witness);

  witness.clear();
  const std::int64_t sym = m == 3 ? 13 : 60;
  for_each_in_box(m, -sym, sym, [&](const LatticeVector& v) {
    if (!witness.empty()) return;
    const auto base = word_length(v);
    LatticeVector p = v;
    std::reverse(p.begin(), p.end());
    LatticeVector s = v;
    s[0] = -s[0];
    if (word_length(p) != base || word_length(s) != base) witness = "v=(" + join(v) + ")";
  });
  r.add("word_length symmetric under permutation and sign flip", witness.empty(), witness);

  // Minimality against BFS, both directions.
  const unsigned R = m == 1 ? 10 : (m == 2 ? 8 : 7);
  std::int64_t unit = 1;
  for (unsigned i = 0; i < R; ++i) unit *= 3;
  std::uint64_t bfs_count = 0;
  witness.clear();
  bfs_traverse(m, R, [&](const BfsVertex& x) {
    if (x.tee != 0) return;
    LatticeVector v(m);
    for (unsigned i = 0; i < m; ++i) {
      if (x.coords[i] % unit != 0) return;
      v[i] = x.coords[i] / unit;
    }
    ++bfs_count;
    if (witness.empty() && word_length(v) != x.distance) witness = "v=(" + join(v) + ")";
  });
  // Length <= R forces top level N <= R/2, so every coordinate is at most (5*3^N - 1)/2.
  std::int64_t reach = 5;
  for (unsigned i = 0; i < R / 2; ++i) reach *= 3;
  reach = (reach - 1) / 2;
  std::uint64_t formula_count = 0;
  for_each_in_box(m, -reach, reach, [&](const LatticeVector& v) {
    if (word_length(v) <= R) ++formula_count;
  });
  r.add("word_length = BFS distance for length <= " + std::to_string(R), witness.empty() && formula_count == bfs_count,
        witness.empty() ? std::to_string(bfs_count) + " BFS elements, " + std::to_string(formula_count) +
                              " by formula"
                        : witness);

  const unsigned nmax = m <= 2 ? 3 : 1;
  std::set<LatticeVector> tiles;
  tiles.insert(LatticeVector(m, 1));
  bool distinct = true;
  for (unsigned n = 0; n <= nmax; ++n) {
    const LevelRangeReport rep = check_level_ranges(m, n);
    r.add("level " + std::to_string(n) + " ranges", rep.ok,
          rep.ok ? std::to_string(rep.words) + " words" : rep.violations.front());
    for_each_level_word(m, n, [&](const Word& w) {
      if (!tiles.insert(lattice_of(eval_word(w))).second) distinct = false;
    });
    const std::int64_t hi = half_pow3(n + 2, -1);
    std::uint64_t expected = 1;
    for (unsigned i = 0; i < m; ++i) expected *= static_cast<std::uint64_t>(hi);
    const bool inside = std::all_of(tiles.begin(), tiles.end(), [&](const LatticeVector& v) {
      return std::all_of(v.begin(), v.end(), [&](auto e) { return e >= 1 && e <= hi; });
    });
    r.add("U and levels 0.." + std::to_string(n) + " tile [1," + std::to_string(hi) + "]^" + std::to_string(m),
          distinct && inside && tiles.size() == expected,
          std::to_string(tiles.size()) + " distinct values, box has " + std::to_string(expected));
  }
  return r;
}

VerifyReport verify_census(unsigned m, unsigned rmax) {
  VerifyReport r;
  r.suite = "census";
  r.m = m;
  r.radius = rmax;
  const CosetCensus dp = coset_census(m, rmax);
  r.extra["chi"] = census_to_json(dp);
  r.add("chi(0,0) = 1", dp.chi(0, 0) == 1);
  bool pure = true;
  for (std::size_t n = 1; n <= rmax; ++n) pure = pure && dp.chi(-static_cast<long>(n), n) == 1;
  r.add("chi(-n,n) = 1", pure);

  try {
    const LevelSeries ls = level_series(m);
    r.extra["p_hat"] = to_json(ls.p_hat);
    r.extra["q_hat"] = to_json(ls.q_hat);
    r.extra["certified_to"] = ls.certified_to;
    r.add("level series fit", true,
          "p_hat = " + to_string(ls.p_hat) + ", q_hat = " + to_string(ls.q_hat) + ", certified through x^" +
              std::to_string(ls.certified_to));
    compare_prefix(r, "X_-1 matches census", ls.X_minus1, dp.column(-1));
    compare_prefix(r, "X_0 matches census", ls.X_0, dp.column(0));
  } catch (const FitError& e) {
    r.add("level series fit", false, e.what());
  }

  const unsigned shared = std::min<unsigned>(rmax, m <= 2 ? 8 : bfs_radius_limit(m));
  const CosetCensus bfs = coset_distance_census(m, shared);
  std::string witness;
  for (long level = 0; level >= -static_cast<long>(shared); --level) {
    for (std::size_t k = 0; k <= shared; ++k) {
      if (witness.empty() && bfs.chi(level, k) != dp.chi(level, k)) {
        witness = "chi(" + std::to_string(level) + "," + std::to_string(k) + "): BFS " + bfs.chi(level, k).str() +
                  ", stems " + dp.chi(level, k).str();
      }
    }
  }
  r.add("stem census = BFS census through r=" + std::to_string(shared), witness.empty(), witness);
  return r;
}

VerifyReport verify_gfsa() {
  VerifyReport r;
  r.suite = "gfsa";
  const RationalFunction quadrant(IntPolynomial{0, 0, 1}, IntPolynomial{1, -2, 1});
  const GrowthAutomaton fsa = build_quadrant_fsa();
  compare_rational(r, "quadrant FSA growth", automaton_growth(fsa), quadrant);
  compare_prefix(r, "quadrant FSA enumeration", automaton_growth(fsa), enumerate_path_growth(fsa, 10).coeffs);
  compare_rational(r, "quadrant FSA relabeled", automaton_growth(fsa.relabeled({2, 0, 1})), quadrant);

  const QuadrantGfsa g = build_quadrant_gfsa();
  const RationalFunction gg = adjacency_growth(g.adjacency, g.start, g.accepts);
  compare_rational(r, "quadrant gFSA growth", gg, g.expected_growth);
  compare_prefix(r, "quadrant gFSA enumeration", gg, enumerate_path_growth(g.adjacency, g.start, g.accepts, 10).coeffs);

  for (unsigned m = 1; m <= 3; ++m) {
    const GrowthAutomaton machine = build_prefix_suffix_machine(m);
    const RationalFunction f = automaton_growth(machine);
    compare_rational(r, "prefix/suffix machine m=" + std::to_string(m), f, prefix_suffix_series(m));
    compare_prefix(r, "prefix/suffix enumeration m=" + std::to_string(m), f,
                   enumerate_path_growth(machine, 10).coeffs);
  }
  return r;
}

Json to_json(const VerifyReport& r) {
  const auto checks = [](const std::vector<Check>& cs) {
    Json a = Json::array();
    for (const auto& c : cs) {
      Json j;
      j["name"] = c.name;
      j["ok"] = c.ok;
      j["detail"] = c.detail;
      a.push_back(std::move(j));
    }
    return a;
  };
  Json j;
  j["suite"] = r.suite;
  j["m"] = r.m;
  j["radius"] = r.radius;
  j["ok"] = r.ok();
  j["checks"] = checks(r.checks);
  j["diagnostics"] = checks(r.diagnostics);
  if (!r.extra.empty()) j["data"] = r.extra;
  return j;
}

}  // namespace horogrowth
