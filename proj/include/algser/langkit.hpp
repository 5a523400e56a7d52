#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "algser/freealg.hpp"

namespace algser {

// Finite window onto a language: words grouped by weighted degree, up to a bound.
struct LanguageSlice {
  int bound = 0;
  std::map<int, std::set<Word>> by_degree;

  void insert(int degree, Word w) { by_degree[degree].insert(std::move(w)); }
  std::size_t count(int degree) const;
  std::size_t total() const;
  std::vector<BigInt> counts() const;  // index 0..bound
  std::set<Word> all() const;
  bool contains(const Word& w) const;
  friend bool operator==(const LanguageSlice&, const LanguageSlice&) = default;
};

// Bracket letters: a_i -> 2(i-1), b_i -> 2(i-1)+1, and e -> 2n when requested.
// Names are "a.i", "b.i", "e"; all weights 1.
Alphabet bracket_alphabet(int n, bool with_e = false);
inline Letter opener(int i) { return static_cast<Letter>(2 * (i - 1)); }
inline Letter closer(int i) { return static_cast<Letter>(2 * (i - 1) + 1); }
inline Letter separator(int n) { return static_cast<Letter>(2 * n); }

// Balanced words over n bracket kinds, length <= bound.
LanguageSlice enumerate_dyck(int n, int bound);
// (D_n e)*: empty, or blocks of Dyck words each followed by e; length <= bound.
LanguageSlice enumerate_pn(int n, int bound);

// Letter-to-word map from the bracket alphabet into unit-weight terminals.
class Homomorphism {
 public:
  // images[2(i-1)] = phi(a_i), images[2(i-1)+1] = phi(b_i).
  Homomorphism(int n, Alphabet target, std::vector<Word> images);

  int n() const { return n_; }
  const Alphabet& target() const { return target_; }
  std::size_t m() const { return target_.size(); }
  const Word& image(Letter bracket) const { return images_.at(bracket); }
  const std::vector<Word>& images() const { return images_; }
  int d() const { return d_; }
  int min_image_degree() const { return min_degree_; }

  Word apply(const Word& w) const;

 private:
  int n_;
  Alphabet target_;
  std::vector<Word> images_;
  int d_ = 0;
  int min_degree_ = 0;
};

// {phi(w) : w in D_n} restricted to degree <= bound, deduplicated.
LanguageSlice image_language(const Homomorphism& h, int bound);

// Built-in homomorphisms for the three worked constructions.
Homomorphism example1_homomorphism(int n);  // a_i -> t.(2i-1), b_i -> t.(2i)
Homomorphism example2_homomorphism();       // a1->t1, b1->t2, a2->t2, b2->t1
Homomorphism example3_homomorphism();       // BEG/END, FOR/END over 26 letters t.1..t.26

struct Symbol {
  bool terminal = false;
  int index = 0;  // into Grammar::terminals() or Grammar::nonterminals()
  friend bool operator==(const Symbol&, const Symbol&) = default;
};

struct Production {
  int lhs = 0;
  std::vector<Symbol> rhs;
};

// Context-free grammar whose terminals are the letters of a weighted alphabet.
// Every nonterminal is checked productive and reachable on construction.
class Grammar {
 public:
  struct RawProduction {
    std::string lhs;
    std::vector<std::string> rhs;
  };

  // Symbols not listed as nonterminals are terminals and must appear in `terminals`.
  Grammar(std::vector<std::string> nonterminals, const std::string& start,
          const std::vector<RawProduction>& productions, Alphabet terminals);

  const std::vector<std::string>& nonterminals() const { return nonterminals_; }
  const Alphabet& terminals() const { return terminals_; }
  int start() const { return start_; }
  const std::vector<Production>& productions() const { return productions_; }
  const std::vector<bool>& nullable() const { return nullable_; }

 private:
  void validate() const;

  std::vector<std::string> nonterminals_;
  Alphabet terminals_;
  int start_ = 0;
  std::vector<Production> productions_;
  std::vector<bool> nullable_;
};

// Earley recognizer; `w` is over g.terminals().
bool membership(const Grammar& g, const Word& w);

// Re-index a word between alphabets by variable name.
Word translate(const Word& w, const Alphabet& from, const Alphabet& to);

// All words over `a` with degree <= bound (brute force; small alphabets only).
std::vector<Word> all_words(const Alphabet& a, int bound);

Grammar dyck_grammar(int n);
Grammar example2_grammar();
Grammar example3_grammar();

}  // namespace algser
