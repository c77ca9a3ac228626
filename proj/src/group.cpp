#include "horogrowth/group.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

#include "horogrowth/errors.hpp"

namespace horogrowth {

TriadicRational::TriadicRational(BigInt numerator, unsigned exp3) : num_(std::move(numerator)), exp3_(exp3) {
  if (num_ == 0) {
    exp3_ = 0;
    return;
  }
  while (exp3_ > 0) {
    BigInt q, r;
    boost::multiprecision::divide_qr(num_, BigInt(3), q, r);
    if (r != 0) break;
    num_ = std::move(q);
    --exp3_;
  }
}

TriadicRational TriadicRational::scaled_by_pow3(long k) const {
  if (num_ == 0 || k == 0) return *this;
  if (k > 0) {
    const auto up = static_cast<unsigned long>(k);
    if (up <= exp3_) return TriadicRational(num_, exp3_ - static_cast<unsigned>(up));
    return TriadicRational(num_ * pow3(static_cast<unsigned>(up - exp3_)), 0);
  }
  return TriadicRational(num_, exp3_ + static_cast<unsigned>(-k));
}

TriadicRational TriadicRational::operator-() const {
  TriadicRational r = *this;
  r.num_ = -r.num_;
  return r;
}

TriadicRational operator+(const TriadicRational& a, const TriadicRational& b) {
  if (a.exp3_ == b.exp3_) return TriadicRational(a.num_ + b.num_, a.exp3_);
  if (a.exp3_ > b.exp3_) return TriadicRational(a.num_ + b.num_ * pow3(a.exp3_ - b.exp3_), a.exp3_);
  return TriadicRational(a.num_ * pow3(b.exp3_ - a.exp3_) + b.num_, b.exp3_);
}

std::string to_string(const TriadicRational& v) {
  if (v.exp3() == 0) return v.numerator().str();
  return v.numerator().str() + "/" + pow3(v.exp3()).str();
}

GroupElement::GroupElement(std::vector<TriadicRational> coords, std::int64_t tee)
    : coords_(std::move(coords)), tee_(tee) {}

GroupElement GroupElement::identity(unsigned m) { return GroupElement(std::vector<TriadicRational>(m), 0); }

GroupElement GroupElement::lattice(const std::vector<std::int64_t>& v) {
  std::vector<TriadicRational> c;
  c.reserve(v.size());
  for (auto x : v) c.emplace_back(static_cast<long long>(x));
  return GroupElement(std::move(c), 0);
}

GroupElement GroupElement::generator(unsigned m, unsigned index, bool inverse) {
  if (index >= m) throw DomainError("generator index out of range");
  GroupElement g = identity(m);
  g.coords_[index] = TriadicRational(inverse ? -1 : 1);
  return g;
}

GroupElement GroupElement::stable_letter(unsigned m, bool inverse) {
  GroupElement g = identity(m);
  g.tee_ = inverse ? -1 : 1;
  return g;
}

GroupElement multiply(const GroupElement& g, const GroupElement& h) {
  if (g.dimension() != h.dimension()) throw DomainError("dimension mismatch in multiply");
  std::vector<TriadicRational> c(g.coords());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = c[i] + h.coords()[i].scaled_by_pow3(g.tee());
  return GroupElement(std::move(c), g.tee() + h.tee());
}

GroupElement inverse(const GroupElement& g) {
  // (u, s)^{-1} = (-3^{-s} u, -s)
  std::vector<TriadicRational> c;
  c.reserve(g.dimension());
  for (const auto& x : g.coords()) c.push_back(-x.scaled_by_pow3(-g.tee()));
  return GroupElement(std::move(c), -g.tee());
}

bool is_horocyclic(const GroupElement& g) {
  return g.tee() == 0 &&
         std::all_of(g.coords().begin(), g.coords().end(), [](const auto& c) { return c.is_integer(); });
}

bool in_positive_orthant(const GroupElement& g) {
  return is_horocyclic(g) &&
         std::all_of(g.coords().begin(), g.coords().end(), [](const auto& c) { return c.numerator() >= 1; });
}

namespace {

std::string letter_name(unsigned m, unsigned index, bool upper) {
  if (m <= 3) return std::string(1, static_cast<char>((upper ? 'A' : 'a') + index));
  return std::string(1, upper ? 'A' : 'a') + std::to_string(index + 1);
}

}  // namespace

std::string to_string(const GroupElement& g) {
  std::ostringstream os;
  bool any = false;
  for (unsigned i = 0; i < g.dimension(); ++i) {
    const auto& c = g.coords()[i];
    if (c.is_zero()) continue;
    if (any) os << ' ';
    any = true;
    os << letter_name(g.dimension(), i, false);
    if (!c.is_integer()) {
      os << "^(" << to_string(c) << ')';
    } else if (c.numerator() != 1) {
      os << '^' << to_string(c);
    }
  }
  if (g.tee() != 0) {
    if (any) os << ' ';
    any = true;
    os << 't';
    if (g.tee() != 1) os << '^' << g.tee();
  }
  return any ? os.str() : "e";
}

Word::Word(unsigned m, std::vector<Token> tokens) : m_(m) {
  tokens_.reserve(tokens.size());
  for (const auto& t : tokens) push_back(t);
}

void Word::push_back(Token tok) {
  if ((tok.kind == Token::Kind::Gen || tok.kind == Token::Kind::InvGen) && tok.index >= m_) {
    throw DomainError("generator index " + std::to_string(tok.index + 1) + " out of range for m = " +
                      std::to_string(m_));
  }
  tokens_.push_back(tok);
}

Word& Word::operator+=(const Word& other) {
  if (other.m_ != m_) throw DomainError("concatenating words of different dimensions");
  tokens_.insert(tokens_.end(), other.tokens_.begin(), other.tokens_.end());
  return *this;
}

Word parse_word(std::string_view text, unsigned m) {
  Word w(m);
  std::size_t i = 0;
  const auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  if (text.substr(i) == "e" || text.substr(i) == "ε") return w;
  while (true) {
    skip_space();
    if (i >= text.size()) break;
    const std::size_t at = i;
    const char ch = text[i++];
    Token tok{};
    if (ch == 't') {
      tok = Token::t();
    } else if (ch == 'T') {
      tok = Token::t_inv();
    } else if (ch == 'a' || ch == 'A' || ch == 'b' || ch == 'B' || ch == 'c' || ch == 'C') {
      const bool upper = std::isupper(static_cast<unsigned char>(ch)) != 0;
      unsigned index = 0;
      if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])) && (ch == 'a' || ch == 'A')) {
        std::size_t j = i;
        unsigned long v = 0;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
          v = v * 10 + static_cast<unsigned long>(text[j] - '0');
          if (v > std::numeric_limits<unsigned>::max()) throw ParseError("generator index too large", i);
          ++j;
        }
        if (v == 0) throw ParseError("generator indices are 1-based", i);
        index = static_cast<unsigned>(v - 1);
        i = j;
      } else {
        if (m > 3) throw ParseError("letter aliases a/b/c need m <= 3; use a<i>", at);
        index = static_cast<unsigned>(std::tolower(static_cast<unsigned char>(ch)) - 'a');
      }
      if (index >= m) throw ParseError("generator index out of range for m = " + std::to_string(m), at);
      tok = upper ? Token::inv_gen(index) : Token::gen(index);
    } else {
      throw ParseError(std::string("unexpected character '") + ch + "'", at);
    }
    unsigned long count = 1;
    if (i < text.size() && text[i] == '^') {
      const std::size_t exp_at = ++i;
      unsigned long v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<unsigned long>(text[i] - '0');
        if (v > 1'000'000) throw ParseError("exponent too large", exp_at);
        ++i;
      }
      if (i == exp_at) throw ParseError("expected a nonnegative exponent after '^'", exp_at);
      count = v;
    }
    for (unsigned long k = 0; k < count; ++k) w.push_back(tok);
  }
  return w;
}

std::string format_word(const Word& w) {
  std::string out;
  for (const auto& tok : w.tokens()) {
    switch (tok.kind) {
      case Token::Kind::T: out += 't'; break;
      case Token::Kind::TInv: out += 'T'; break;
      case Token::Kind::Gen: out += "a" + std::to_string(tok.index + 1); break;
      case Token::Kind::InvGen: out += "A" + std::to_string(tok.index + 1); break;
    }
  }
  return out;
}

std::string format_word_compact(const Word& w) {
  if (w.empty()) return "ε";
  std::string out;
  for (const auto& tok : w.tokens()) {
    switch (tok.kind) {
      case Token::Kind::T: out += 't'; break;
      case Token::Kind::TInv: out += 'T'; break;
      case Token::Kind::Gen: out += letter_name(w.dimension(), tok.index, false); break;
      case Token::Kind::InvGen: out += letter_name(w.dimension(), tok.index, true); break;
    }
  }
  return out;
}

GroupElement eval_word(const Word& w) {
  const unsigned m = w.dimension();
  std::vector<TriadicRational> coords(m);
  std::int64_t tee = 0;
  for (const auto& tok : w.tokens()) {
    switch (tok.kind) {
      case Token::Kind::T: ++tee; break;
      case Token::Kind::TInv: --tee; break;
      case Token::Kind::Gen:
        coords[tok.index] = coords[tok.index] + TriadicRational(1).scaled_by_pow3(tee);
        break;
      case Token::Kind::InvGen:
        coords[tok.index] = coords[tok.index] - TriadicRational(1).scaled_by_pow3(tee);
        break;
    }
  }
  return GroupElement(std::move(coords), tee);
}

std::int64_t tau(const Word& w) {
  std::int64_t h = 0;
  for (const auto& tok : w.tokens()) {
    if (tok.kind == Token::Kind::T) ++h;
    if (tok.kind == Token::Kind::TInv) --h;
  }
  return h;
}

std::int64_t max_height(const Word& w) {
  std::int64_t h = 0;
  std::int64_t best = 0;
  for (const auto& tok : w.tokens()) {
    if (tok.kind == Token::Kind::T) ++h;
    if (tok.kind == Token::Kind::TInv) --h;
    best = std::max(best, h);
  }
  return best;
}

}  // namespace horogrowth
