#include "horogrowth/cayley_bfs.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "horogrowth/errors.hpp"

namespace horogrowth {

namespace {

constexpr unsigned kMaxScaledRadius = 18;  // R * 3^{2R} must fit in int64

std::uint64_t mix(std::uint64_t h) {
  h ^= h >> 30;
  h *= 0xbf58476d1ce4e5b9ULL;
  h ^= h >> 27;
  h *= 0x94d049bb133111ebULL;
  h ^= h >> 31;
  return h;
}

// Open-addressing set of fixed-width int64 keys. Keys live densely in
// insertion order; the slot table holds 1-based indices into them.
class KeySet {
 public:
  explicit KeySet(unsigned stride) : stride_(stride), slots_(16, 0), mask_(15) {}

  std::size_t size() const noexcept { return keys_.size() / stride_; }
  const std::int64_t* at(std::size_t i) const noexcept { return keys_.data() + i * stride_; }

  bool contains(const std::int64_t* k) const { return slots_[find_slot(k)] != 0; }

  bool insert(const std::int64_t* k) {
    std::size_t s = find_slot(k);
    if (slots_[s] != 0) return false;
    keys_.insert(keys_.end(), k, k + stride_);
    slots_[s] = static_cast<std::uint32_t>(size());
    if (2 * size() >= slots_.size()) rehash(slots_.size() * 2);
    return true;
  }

  void clear() {
    keys_.clear();
    std::fill(slots_.begin(), slots_.end(), 0);
  }

 private:
  std::uint64_t hash(const std::int64_t* k) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (unsigned i = 0; i < stride_; ++i) h = mix(h ^ static_cast<std::uint64_t>(k[i]));
    return h;
  }

  std::size_t find_slot(const std::int64_t* k) const {
    std::size_t s = hash(k) & mask_;
    while (slots_[s] != 0) {
      if (std::equal(k, k + stride_, at(slots_[s] - 1))) return s;
      s = (s + 1) & mask_;
    }
    return s;
  }

  void rehash(std::size_t capacity) {
    if (capacity > (std::size_t{1} << 32)) throw BudgetError("BFS hash table exceeds 2^32 slots");
    slots_.assign(capacity, 0);
    mask_ = capacity - 1;
    for (std::size_t i = 0; i < size(); ++i) {
      std::size_t s = hash(at(i)) & mask_;
      while (slots_[s] != 0) s = (s + 1) & mask_;
      slots_[s] = static_cast<std::uint32_t>(i + 1);
    }
  }

  unsigned stride_;
  std::vector<std::int64_t> keys_;
  std::vector<std::uint32_t> slots_;
  std::size_t mask_;
};

std::vector<std::int64_t> pow3_table(unsigned n) {
  std::vector<std::int64_t> p(n + 1, 1);
  for (unsigned i = 1; i <= n; ++i) p[i] = p[i - 1] * 3;
  return p;
}

// Writes the coset key of an element: (U_i mod 3^{s+K}, s).
void coset_key(const std::int64_t* coords, std::int64_t tee, unsigned m, unsigned K,
               const std::vector<std::int64_t>& p3, std::int64_t* out) {
  const std::int64_t mod = p3[static_cast<std::size_t>(tee + static_cast<std::int64_t>(K))];
  for (unsigned i = 0; i < m; ++i) out[i] = ((coords[i] % mod) + mod) % mod;
  out[m] = tee;
}

void require_dimension(unsigned m) {
  if (m == 0) throw DomainError("dimension m must be at least 1");
}

}  // namespace

std::size_t bfs_budget_mb() {
  if (const char* env = std::getenv("HOROGROWTH_BUDGET_MB")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 2048;
}

std::size_t bfs_estimated_bytes(unsigned m, unsigned R) {
  require_dimension(m);
  const auto sigma = series_prefix(full_series_closed_form(m), R + 1);
  const double per_element = static_cast<double>(m + 1) * 8.0 * 2.0 + 8.0 * 2.0;
  double peak = 0;
  double ball = 0;
  for (unsigned r = 0; r <= R; ++r) {
    const double prev = r > 0 ? sigma[r - 1].convert_to<double>() : 0.0;
    const double here = sigma[r].convert_to<double>();
    const double next = sigma[r + 1].convert_to<double>();
    peak = std::max(peak, prev + here + next);
    ball += here;
  }
  // Coset bookkeeping is bounded by the ball; count a quarter of it.
  const double bytes = per_element * (peak + ball / 4.0);
  return bytes > 1.8e19 ? SIZE_MAX : static_cast<std::size_t>(bytes);
}

unsigned bfs_radius_limit(unsigned m) {
  require_dimension(m);
  switch (m) {
    case 1: return 12;
    case 2: return 9;
    case 3: return 7;
    default: break;
  }
  const std::size_t budget = bfs_budget_mb() * 1024ull * 1024ull;
  unsigned R = 0;
  while (R + 1 <= kMaxScaledRadius && bfs_estimated_bytes(m, R + 1) <= budget) ++R;
  return R;
}

void check_bfs_budget(unsigned m, unsigned R) {
  const unsigned limit = bfs_radius_limit(m);
  if (R > limit) {
    throw BudgetError("BFS radius " + std::to_string(R) + " exceeds the limit " + std::to_string(limit) +
                      " for m = " + std::to_string(m));
  }
  const std::size_t budget = bfs_budget_mb();
  const std::size_t need = bfs_estimated_bytes(m, R) / (1024ull * 1024ull);
  if (need > budget) {
    throw BudgetError("BFS to radius " + std::to_string(R) + " for m = " + std::to_string(m) + " needs about " +
                      std::to_string(need) + " MiB, budget is " + std::to_string(budget) + " MiB");
  }
}

void bfs_traverse(unsigned m, unsigned R, const std::function<void(const BfsVertex&)>& visit) {
  require_dimension(m);
  check_bfs_budget(m, R);
  const unsigned K = R;
  const auto p3 = pow3_table(2 * K);
  const unsigned stride = m + 1;

  KeySet prev(stride), cur(stride), next(stride);
  std::vector<std::int64_t> key(stride, 0);
  cur.insert(key.data());
  visit(BfsVertex{cur.at(0), 0, 0});

  for (unsigned r = 1; r <= R; ++r) {
    next.clear();
    for (std::size_t e = 0; e < cur.size(); ++e) {
      const std::int64_t* base = cur.at(e);
      const std::int64_t s = base[m];
      const std::int64_t step = p3[static_cast<std::size_t>(s + static_cast<std::int64_t>(K))];
      const auto try_neighbor = [&] {
        if (prev.contains(key.data()) || cur.contains(key.data())) return;
        if (next.insert(key.data())) visit(BfsVertex{key.data(), key[m], r});
      };
      for (unsigned i = 0; i < m; ++i) {
        for (int sign : {1, -1}) {
          std::copy(base, base + stride, key.begin());
          key[i] += sign * step;
          try_neighbor();
        }
      }
      for (int sign : {1, -1}) {
        std::copy(base, base + stride, key.begin());
        key[m] += sign;
        try_neighbor();
      }
    }
    std::swap(prev, cur);
    std::swap(cur, next);
  }
}

SphereCounts bfs_spheres(unsigned m, unsigned R) {
  SphereCounts out;
  out.m = m;
  out.radius = R;
  out.total.assign(R + 1, 0);
  out.horocyclic.assign(R + 1, 0);
  const auto unit = pow3_table(R)[R];
  bfs_traverse(m, R, [&](const BfsVertex& v) {
    ++out.total[v.distance];
    const long level = static_cast<long>(std::min<std::int64_t>(v.tee, 0));
    auto& col = out.by_level[level];
    if (col.empty()) col.assign(R + 1, 0);
    ++col[v.distance];
    if (v.tee != 0) return;
    for (unsigned i = 0; i < m; ++i) {
      if (v.coords[i] % unit != 0) return;
    }
    ++out.horocyclic[v.distance];
  });
  return out;
}

std::vector<std::uint64_t> bfs_subgroup_spheres(unsigned m, unsigned R) { return bfs_spheres(m, R).horocyclic; }

unsigned element_distance(const LatticeVector& v) {
  const auto m = static_cast<unsigned>(v.size());
  require_dimension(m);
  const std::uint64_t spelled = word_length(v);
  if (spelled > kMaxScaledRadius) {
    throw BudgetError("spelling length " + std::to_string(spelled) + " exceeds the searchable distance " +
                      std::to_string(kMaxScaledRadius));
  }
  const auto bound = static_cast<unsigned>(spelled);
  if (bound == 0) return 0;
  // Two balls grown from e and from a^v meet halfway.
  check_bfs_budget(m, (bound + 1) / 2);
  const unsigned K = bound;
  const auto p3 = pow3_table(2 * K);
  const unsigned stride = m + 1;

  struct Side {
    KeySet ball;
    std::size_t layer_begin = 0;
    unsigned radius = 0;
  };
  Side sides[2] = {{KeySet(stride)}, {KeySet(stride)}};
  std::vector<std::int64_t> key(stride, 0);
  sides[0].ball.insert(key.data());
  for (unsigned i = 0; i < m; ++i) key[i] = v[i] * p3[K];
  sides[1].ball.insert(key.data());
  if (sides[1].ball.contains(sides[0].ball.at(0))) return 0;

  while (sides[0].radius + sides[1].radius < bound) {
    const int a = (sides[0].ball.size() - sides[0].layer_begin <= sides[1].ball.size() - sides[1].layer_begin) ? 0 : 1;
    Side& grow = sides[a];
    const Side& other = sides[1 - a];
    const std::size_t begin = grow.layer_begin;
    const std::size_t end = grow.ball.size();
    bool met = false;
    for (std::size_t e = begin; e < end; ++e) {
      const std::int64_t s = grow.ball.at(e)[m];
      const std::int64_t step = p3[static_cast<std::size_t>(s + static_cast<std::int64_t>(K))];
      const auto try_neighbor = [&] {
        if (grow.ball.insert(key.data()) && other.ball.contains(key.data())) met = true;
      };
      for (unsigned i = 0; i < m; ++i) {
        for (int sign : {1, -1}) {
          const std::int64_t* base = grow.ball.at(e);
          std::copy(base, base + stride, key.begin());
          key[i] += sign * step;
          try_neighbor();
        }
      }
      for (int sign : {1, -1}) {
        const std::int64_t* base = grow.ball.at(e);
        std::copy(base, base + stride, key.begin());
        key[m] += sign;
        try_neighbor();
      }
    }
    grow.layer_begin = end;
    ++grow.radius;
    if (met) return sides[0].radius + sides[1].radius;
  }
  throw Error("element a^v not reached within its spelling length");
}

CosetCensus coset_distance_census(unsigned m, unsigned R) {
  CosetCensus census(m, R);
  const auto p3 = pow3_table(2 * R);
  KeySet cosets(m + 1);
  std::vector<std::int64_t> key(m + 1);
  bfs_traverse(m, R, [&](const BfsVertex& v) {
    coset_key(v.coords, v.tee, m, R, p3, key.data());
    if (cosets.insert(key.data())) census.add(static_cast<long>(std::min<std::int64_t>(v.tee, 0)), v.distance, 1);
  });
  return census;
}

std::vector<std::uint64_t> relative_growth(unsigned m, const Word& stem, unsigned R) {
  require_dimension(m);
  if (stem.dimension() != m) throw DomainError("stem dimension does not match m");
  const auto L = static_cast<unsigned>(stem.length());
  const unsigned radius = L + R;
  check_bfs_budget(m, radius);
  const unsigned K = radius;
  const auto p3 = pow3_table(2 * K);

  const GroupElement g = eval_word(stem);
  std::vector<std::int64_t> scaled(m + 1);
  for (unsigned i = 0; i < m; ++i) {
    const auto& c = g.coords()[i];
    scaled[i] = static_cast<std::int64_t>(c.numerator() * pow3(K - c.exp3()));
  }
  std::vector<std::int64_t> target(m + 1), key(m + 1);
  coset_key(scaled.data(), g.tee(), m, K, p3, target.data());

  std::vector<std::uint64_t> counts(R + 1, 0);
  unsigned first = radius + 1;
  bfs_traverse(m, radius, [&](const BfsVertex& v) {
    if (v.tee != g.tee()) return;
    coset_key(v.coords, v.tee, m, K, p3, key.data());
    if (key != target) return;
    first = std::min(first, v.distance);
    if (v.distance >= L) ++counts[v.distance - L];
  });
  if (first != L) {
    throw DomainError("word " + format_word(stem) + " is not a stem: its coset lies at distance " +
                      (first > radius ? std::string("> ") + std::to_string(radius) : std::to_string(first)));
  }
  return counts;
}

}  // namespace horogrowth
