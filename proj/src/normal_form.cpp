#include "horogrowth/normal_form.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "horogrowth/errors.hpp"

namespace horogrowth {

namespace {

// Balanced-ternary digits of e (any sign), ascending.
std::vector<int> balanced_ternary(std::int64_t e) {
  std::vector<int> d;
  while (e != 0) {
    int r = static_cast<int>(((e % 3) + 3) % 3);
    if (r == 2) r = -1;
    d.push_back(r);
    e = (e - r) / 3;
  }
  return d;
}

std::int64_t ipow3(unsigned k) {
  std::int64_t r = 1;
  for (unsigned i = 0; i < k; ++i) r *= 3;
  return r;
}

unsigned digit_weight(const std::vector<int>& d) {
  unsigned w = 0;
  for (int x : d) w += static_cast<unsigned>(x < 0 ? -x : x);
  return w;
}

std::int64_t checked_abs(std::int64_t e) {
  if (e < -kMaxCoordinate || e > kMaxCoordinate) throw DomainError("lattice coordinate exceeds 3^38");
  return e < 0 ? -e : e;
}

// The 2-led window for top index k: [(3^{k+1}+1)/2, (5*3^k-1)/2].
bool in_two_led_window(std::int64_t e, unsigned k) {
  const std::int64_t p = ipow3(k);
  return e >= (3 * p + 1) / 2 && e <= (5 * p - 1) / 2;
}

// Digits of a coordinate placed in a row of length N+1.
std::vector<int> coordinate_digits(std::int64_t e, const CoordinateProfile& prof, unsigned N) {
  std::vector<int> row(N + 1, 0);
  if (prof.zero) return row;
  if (prof.two_led && prof.bt_top == N + 1) {
    const std::int64_t rest = e - 2 * ipow3(N);
    auto low = balanced_ternary(rest);
    std::copy(low.begin(), low.end(), row.begin());
    row[N] = 2;
  } else {
    auto bt = balanced_ternary(e);
    std::copy(bt.begin(), bt.end(), row.begin());
  }
  return row;
}

}  // namespace

CoordinateProfile coordinate_profile(std::int64_t e) {
  e = checked_abs(e);
  CoordinateProfile p;
  if (e == 0) return p;
  p.zero = false;
  const auto bt = balanced_ternary(e);
  p.bt_top = static_cast<unsigned>(bt.size() - 1);
  p.bt_weight = digit_weight(bt);
  p.own_top = p.bt_top;
  if (p.bt_top >= 1 && in_two_led_window(e, p.bt_top - 1)) {
    p.two_led = true;
    p.two_led_weight = 2 + digit_weight(balanced_ternary(e - 2 * ipow3(p.bt_top - 1)));
    p.own_top = p.bt_top - 1;
  }
  return p;
}

DigitExpansion digit_expansion(const LatticeVector& v) {
  if (v.empty()) throw DomainError("digit expansion of an empty vector");
  std::vector<CoordinateProfile> prof;
  prof.reserve(v.size());
  bool any = false;
  for (auto e : v) {
    if (e < 0) throw DomainError("digit expansion needs nonnegative coordinates");
    prof.push_back(coordinate_profile(e));
    any = any || e != 0;
  }
  if (!any) throw DomainError("digit expansion of the zero vector");
  unsigned N = 0;
  for (const auto& p : prof) {
    if (!p.zero) N = std::max(N, p.own_top);
  }
  DigitExpansion out;
  out.top_level = N;
  out.digits.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out.digits.push_back(coordinate_digits(v[i], prof[i], N));
  return out;
}

Word spell(const LatticeVector& v) {
  const auto m = static_cast<unsigned>(v.size());
  Word w(m);
  if (std::all_of(v.begin(), v.end(), [](auto e) { return e == 0; })) return w;
  LatticeVector mag(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) mag[i] = checked_abs(v[i]);
  const DigitExpansion d = digit_expansion(mag);
  const unsigned N = d.top_level;
  for (unsigned k = 0; k < N; ++k) w.push_back(Token::t());
  for (unsigned level = N + 1; level-- > 0;) {
    for (unsigned i = 0; i < m; ++i) {
      int digit = d.digits[i][level];
      if (v[i] < 0) digit = -digit;
      const Token tok = digit > 0 ? Token::gen(i) : Token::inv_gen(i);
      for (int c = 0; c < (digit < 0 ? -digit : digit); ++c) w.push_back(tok);
    }
    if (level > 0) w.push_back(Token::t_inv());
  }
  return w;
}

std::uint64_t word_length(const LatticeVector& v) {
  std::vector<CoordinateProfile> prof;
  prof.reserve(v.size());
  unsigned N = 0;
  bool any = false;
  for (auto e : v) {
    prof.push_back(coordinate_profile(e));
    if (!prof.back().zero) {
      any = true;
      N = std::max(N, prof.back().own_top);
    }
  }
  if (!any) return 0;
  std::uint64_t len = 2ull * N;
  for (const auto& p : prof) len += p.weight_at(N);
  return len;
}

std::vector<Word> suffix_words(unsigned m, const std::vector<unsigned>& block) {
  std::vector<Word> out{Word(m)};
  for (unsigned g : block) {
    std::vector<Word> next;
    next.reserve(out.size() * 3);
    for (const auto& w : out) {
      next.push_back(w);
      Word up = w;
      up.push_back(Token::gen(g));
      next.push_back(std::move(up));
      Word down = w;
      down.push_back(Token::inv_gen(g));
      next.push_back(std::move(down));
    }
    out = std::move(next);
  }
  return out;
}

Word orthant_word(unsigned m, const std::vector<unsigned>& block) {
  Word w(m);
  for (unsigned g : block) w.push_back(Token::gen(g));
  return w;
}

std::vector<Word> cap_words(unsigned m, const std::vector<unsigned>& block) {
  std::vector<Word> out;
  Word squares(m);
  for (unsigned g : block) {
    squares.push_back(Token::gen(g));
    squares.push_back(Token::gen(g));
  }
  out.push_back(std::move(squares));
  Word all_inverse(m);
  for (unsigned g : block) all_inverse.push_back(Token::inv_gen(g));
  Word conj(m);
  conj.push_back(Token::t());
  conj += orthant_word(m, block);
  conj.push_back(Token::t_inv());
  for (const auto& s : suffix_words(m, block)) {
    if (s == all_inverse) continue;
    out.push_back(conj + s);
  }
  return out;
}

namespace {

std::vector<unsigned> bits_of(std::uint32_t mask) {
  std::vector<unsigned> out;
  for (unsigned i = 0; mask != 0; ++i, mask >>= 1u) {
    if (mask & 1u) out.push_back(i);
  }
  return out;
}

struct LevelEnumerator {
  unsigned m;
  unsigned n;
  const std::function<void(const Word&)>& visit;
  std::vector<std::uint32_t> blocks;
  std::vector<unsigned> exps;

  // Emits (TW_X)^j then continues with segment k+1.
  void emit_suffixes(Word& w, const std::vector<Word>& suffixes, unsigned remaining, std::size_t k) {
    if (remaining == 0) {
      emit_segment(w, k + 1);
      return;
    }
    for (const auto& s : suffixes) {
      const std::size_t mark = w.length();
      w.push_back(Token::t_inv());
      w += s;
      emit_suffixes(w, suffixes, remaining - 1, k);
      truncate(w, mark);
    }
  }

  static void truncate(Word& w, std::size_t len) {
    std::vector<Token> t(w.tokens().begin(), w.tokens().begin() + static_cast<long>(len));
    w = Word(w.dimension(), std::move(t));
  }

  void emit_segment(Word& w, std::size_t k) {
    if (k == blocks.size()) {
      visit(w);
      return;
    }
    std::uint32_t seen = 0;
    for (std::size_t i = 0; i <= k; ++i) seen |= blocks[i];
    const auto suffixes = suffix_words(m, bits_of(seen));
    const std::size_t mark = w.length();
    if (k == 0) {
      for (const auto& cap : cap_words(m, bits_of(blocks[0]))) {
        w += cap;
        emit_suffixes(w, suffixes, exps[0], 0);
        truncate(w, mark);
      }
    } else {
      w += orthant_word(m, bits_of(blocks[k]));
      emit_suffixes(w, suffixes, exps[k], k);
      truncate(w, mark);
    }
  }

  void choose_exponents(std::size_t k, unsigned left) {
    const std::size_t q = blocks.size();
    if (k == q - 1) {
      exps[k] = left;
      Word w(m);
      for (unsigned i = 0; i < n; ++i) w.push_back(Token::t());
      emit_segment(w, 0);
      return;
    }
    const unsigned lo = (k > 0) ? 1u : 0u;  // middle segments need j >= 1
    for (unsigned j = lo; j <= left; ++j) {
      exps[k] = j;
      choose_exponents(k + 1, left - j);
    }
  }

  void choose_blocks(std::uint32_t remaining) {
    if (remaining == 0) {
      exps.assign(blocks.size(), 0);
      choose_exponents(0, n);
      return;
    }
    // Enumerate nonempty submasks of `remaining`.
    for (std::uint32_t sub = remaining; sub != 0; sub = (sub - 1) & remaining) {
      blocks.push_back(sub);
      choose_blocks(remaining & ~sub);
      blocks.pop_back();
    }
  }
};

}  // namespace

void for_each_level_word(unsigned m, unsigned n, const std::function<void(const Word&)>& visit) {
  if (m == 0 || m > 16) throw DomainError("level enumeration needs 1 <= m <= 16");
  LevelEnumerator e{m, n, visit, {}, {}};
  e.choose_blocks((1u << m) - 1u);
}

std::vector<Word> enumerate_level(unsigned m, unsigned n) {
  std::vector<Word> out;
  for_each_level_word(m, n, [&](const Word& w) { out.push_back(w); });
  return out;
}

LevelRangeReport check_level_ranges(unsigned m, unsigned n) {
  LevelRangeReport report;
  report.m = m;
  report.n = n;
  const BigInt hi = (pow3(n + 2) - 1) / 2;
  const BigInt lo = (pow3(n + 1) + 1) / 2;
  std::set<std::vector<BigInt>> seen;
  auto fail = [&](const Word& w, const std::string& why) {
    report.ok = false;
    if (report.violations.size() < 20) report.violations.push_back(why + ": " + format_word_compact(w));
  };
  for_each_level_word(m, n, [&](const Word& w) {
    ++report.words;
    const GroupElement g = eval_word(w);
    if (!is_horocyclic(g)) {
      fail(w, "evaluates outside the horocyclic subgroup");
      return;
    }
    std::vector<BigInt> v;
    bool reaches_shell = false;
    for (const auto& c : g.coords()) {
      const BigInt& x = c.numerator();
      if (x < 0 || x > hi) fail(w, "coordinate " + x.str() + " outside [0, " + hi.str() + "]");
      if (x >= lo) reaches_shell = true;
      v.push_back(x);
    }
    if (!reaches_shell) fail(w, "all coordinates below " + lo.str());
    const auto h = max_height(w);
    if (h != static_cast<std::int64_t>(n) && h != static_cast<std::int64_t>(n) + 1) {
      fail(w, "max height " + std::to_string(h));
    }
    if (!seen.insert(std::move(v)).second) fail(w, "duplicate evaluation");
  });
  return report;
}

}  // namespace horogrowth
