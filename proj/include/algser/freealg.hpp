#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "algser/errors.hpp"

namespace algser {

using Rational = mpq_class;
using BigInt = mpz_class;

using Letter = std::uint16_t;

// A finite sequence of variable indices. Comparison operators give the plain
// lexicographic order on indices (container order only); the monomial order
// lives in MonomialOrder.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }
  const std::vector<Letter>& letters() const { return letters_; }

  Word subword(std::size_t pos, std::size_t len) const;
  Word prefix(std::size_t len) const { return subword(0, len); }
  Word suffix(std::size_t len) const { return subword(size() - len, len); }

  bool has_factor_at(const Word& factor, std::size_t pos) const;
  std::optional<std::size_t> find(const Word& factor, std::size_t from = 0) const;
  bool contains(const Word& factor) const { return find(factor).has_value(); }

  Word& operator*=(const Word& rhs);
  friend Word operator*(Word lhs, const Word& rhs) { return lhs *= rhs; }

  void push_back(Letter l) { letters_.push_back(l); }

  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

// Named, weighted variables. List order is deglex precedence: earlier letters
// are greater.
class Alphabet {
 public:
  struct Variable {
    std::string name;
    int weight = 1;
  };

  Alphabet() = default;
  explicit Alphabet(std::vector<Variable> variables);

  std::size_t size() const { return variables_.size(); }
  const std::vector<Variable>& variables() const { return variables_; }
  const std::string& name(Letter l) const { return variables_.at(l).name; }
  int weight(Letter l) const { return variables_.at(l).weight; }
  int min_weight() const;

  std::optional<Letter> find(const std::string& name) const;
  Letter index_of(const std::string& name) const;

  int degree(const Word& w) const;
  bool owns(const Word& w) const;

  Word parse_word(std::span<const std::string> names) const;
  std::vector<std::string> names(const Word& w) const;
  // Space separated names; the empty word prints as "1".
  std::string format(const Word& w) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b);

 private:
  std::vector<Variable> variables_;
  std::unordered_map<std::string, Letter> index_;
};

inline int degree(const Word& w, const Alphabet& a) { return a.degree(w); }

// Degree-then-lexicographic order. Multiplicative and degree-compatible.
class MonomialOrder {
 public:
  explicit MonomialOrder(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

  const Alphabet& alphabet() const { return alphabet_; }
  std::strong_ordering compare(const Word& u, const Word& v) const;
  bool less(const Word& u, const Word& v) const { return compare(u, v) < 0; }
  bool greater(const Word& u, const Word& v) const { return compare(u, v) > 0; }

 private:
  Alphabet alphabet_;
};

inline std::strong_ordering compare_deglex(const Word& u, const Word& v, const MonomialOrder& o) {
  return o.compare(u, v);
}

// Finite linear combination of words with nonzero rational coefficients.
class NcPoly {
 public:
  using Terms = std::map<Word, Rational>;

  NcPoly() = default;
  NcPoly(std::initializer_list<std::pair<Word, Rational>> terms);
  static NcPoly monomial(Word w, const Rational& c = 1);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  Rational coefficient(const Word& w) const;

  void add_term(const Word& w, const Rational& c);

  NcPoly& operator+=(const NcPoly& rhs);
  NcPoly& operator-=(const NcPoly& rhs);
  NcPoly& operator*=(const Rational& c);
  friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
  friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
  friend NcPoly operator*(NcPoly a, const Rational& c) { return a *= c; }
  friend NcPoly operator*(const Rational& c, NcPoly a) { return a *= c; }
  friend NcPoly operator*(const NcPoly& a, const NcPoly& b);
  NcPoly operator-() const;

  // left * this * right
  NcPoly sandwich(const Word& left, const Word& right) const;

  Word leading_monomial(const MonomialOrder& o) const;
  Rational leading_coefficient(const MonomialOrder& o) const;
  NcPoly monic(const MonomialOrder& o) const;
  // Largest weighted degree of the support.
  int degree(const Alphabet& a) const;

  friend bool operator==(const NcPoly&, const NcPoly&) = default;

 private:
  Terms terms_;
};

inline Word leading_monomial(const NcPoly& f, const MonomialOrder& o) {
  return f.leading_monomial(o);
}

// Canonical "p" or "p/q" with positive denominator.
std::string to_string(const Rational& q);
Rational parse_rational(const std::string& s);

}  // namespace algser
