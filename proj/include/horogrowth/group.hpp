#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "horogrowth/bigint.hpp"

namespace horogrowth {

/// numerator / 3^exp3, canonical: numerator is not divisible by 3 unless
/// exp3 == 0 (so zero is 0/3^0).
class TriadicRational {
 public:
  TriadicRational() = default;
  TriadicRational(BigInt numerator, unsigned exp3);  // normalizes
  TriadicRational(long long v) : num_(v) {}          // NOLINT(google-explicit-constructor)

  const BigInt& numerator() const noexcept { return num_; }
  unsigned exp3() const noexcept { return exp3_; }
  bool is_integer() const noexcept { return exp3_ == 0; }
  bool is_zero() const noexcept { return num_ == 0; }

  /// v * 3^k for any integer k.
  TriadicRational scaled_by_pow3(long k) const;

  TriadicRational operator-() const;
  friend TriadicRational operator+(const TriadicRational& a, const TriadicRational& b);
  friend TriadicRational operator-(const TriadicRational& a, const TriadicRational& b) { return a + (-b); }
  friend bool operator==(const TriadicRational&, const TriadicRational&) = default;

 private:
  BigInt num_ = 0;
  unsigned exp3_ = 0;
};

std::string to_string(const TriadicRational& v);

/// Element of G_m stored in the normal form a^v t^tee with v in Z[1/3]^m.
/// The product is (u, s) * (v, r) = (u + 3^s v, s + r).
class GroupElement {
 public:
  GroupElement() = default;
  GroupElement(std::vector<TriadicRational> coords, std::int64_t tee);

  static GroupElement identity(unsigned m);
  /// The lattice element a^v (tee = 0).
  static GroupElement lattice(const std::vector<std::int64_t>& v);
  static GroupElement generator(unsigned m, unsigned index, bool inverse);
  static GroupElement stable_letter(unsigned m, bool inverse);

  unsigned dimension() const noexcept { return static_cast<unsigned>(coords_.size()); }
  const std::vector<TriadicRational>& coords() const noexcept { return coords_; }
  std::int64_t tee() const noexcept { return tee_; }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  std::vector<TriadicRational> coords_;
  std::int64_t tee_ = 0;
};

/// Throws DomainError on dimension mismatch.
GroupElement multiply(const GroupElement& g, const GroupElement& h);
GroupElement inverse(const GroupElement& g);

/// True iff tee = 0 and every coordinate is an integer.
bool is_horocyclic(const GroupElement& g);
/// Horocyclic with every coordinate >= 1.
bool in_positive_orthant(const GroupElement& g);

/// Readable normal form: "a^5", "a1^2 a3^-1 t^2", "a^(1/3)", "e" for the identity.
std::string to_string(const GroupElement& g);

struct Token {
  enum class Kind : std::uint8_t { Gen, InvGen, T, TInv };
  Kind kind;
  /// 0-based generator index; unused for T / TInv.
  unsigned index = 0;

  static Token gen(unsigned i) { return {Kind::Gen, i}; }
  static Token inv_gen(unsigned i) { return {Kind::InvGen, i}; }
  static Token t() { return {Kind::T, 0}; }
  static Token t_inv() { return {Kind::TInv, 0}; }

  friend bool operator==(const Token&, const Token&) = default;
};

/// A word over {a_i, A_i, t, T} for a fixed dimension m.
class Word {
 public:
  Word() = default;
  explicit Word(unsigned m) : m_(m) {}
  Word(unsigned m, std::vector<Token> tokens);  // validates indices

  unsigned dimension() const noexcept { return m_; }
  const std::vector<Token>& tokens() const noexcept { return tokens_; }
  std::size_t length() const noexcept { return tokens_.size(); }
  bool empty() const noexcept { return tokens_.empty(); }

  void push_back(Token tok);
  Word& operator+=(const Word& other);
  friend Word operator+(Word a, const Word& b) { return a += b; }
  friend bool operator==(const Word&, const Word&) = default;

 private:
  unsigned m_ = 0;
  std::vector<Token> tokens_;
};

/// Parses the word text format: tokens `t`, `T`, `a<i>`, `A<i>` (1-based),
/// the aliases a b c / A B C when m <= 3, an optional `^k` exponent after any
/// token, and whitespace between tokens. "" and "e"/"ε" are the empty word.
/// Throws ParseError with the failing character offset.
Word parse_word(std::string_view text, unsigned m);

/// Canonical token text, e.g. "tta1a2a2Ta1A2Ta2"; the empty word is "".
std::string format_word(const Word& w);
/// Letters a b c for m <= 3 (canonical tokens otherwise) without exponents;
/// the empty word is "ε".
std::string format_word_compact(const Word& w);

/// Left-to-right product of the token generators.
GroupElement eval_word(const Word& w);
/// Signed count of t tokens.
std::int64_t tau(const Word& w);
/// Maximum tau over all prefixes, the empty prefix included.
std::int64_t max_height(const Word& w);

}  // namespace horogrowth
