#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "algser/freealg.hpp"

namespace algser {

// Subword-free finite set of nonempty words with an Aho-Corasick automaton
// for factor queries. Built once; immutable afterwards.
class ObstructionSet {
 public:
  struct Occurrence {
    std::size_t start;
    std::size_t end;  // one past the last letter
    std::size_t index;
  };

  ObstructionSet() : ObstructionSet({}, 0) {}
  // Throws InvalidInput if a word is empty, uses a letter >= alphabet_size,
  // or is a factor of another element. Duplicates are removed.
  ObstructionSet(std::vector<Word> words, std::size_t alphabet_size);

  const std::vector<Word>& words() const { return words_; }
  std::size_t alphabet_size() const { return alphabet_size_; }
  bool empty() const { return words_.empty(); }

  bool contains_factor(const Word& w) const;
  std::vector<Occurrence> occurrences(const Word& w) const;

  // Automaton view used by the counting dynamic program.
  std::size_t state_count() const { return accepting_.size(); }
  std::size_t next(std::size_t state, Letter l) const { return delta_[state * alphabet_size_ + l]; }
  bool accepting(std::size_t state) const { return accepting_[state]; }

 private:
  void build();

  std::vector<Word> words_;
  std::size_t alphabet_size_;
  std::vector<std::size_t> delta_;
  std::vector<bool> accepting_;
  std::vector<std::vector<std::size_t>> outputs_;  // pattern indices ending at each state
};

// Witness that prefix * lm * suffix spells the composed word on both sides.
struct Overlap {
  Word left_prefix, left_suffix;
  Word right_prefix, right_suffix;
  Word composed;
};

// Proper suffix(u) = prefix(v) coincidences, then occurrences of v as a proper factor of u.
std::vector<Overlap> find_overlaps(const Word& u, const Word& v);

struct SPair {
  NcPoly left;
  NcPoly right;
  Overlap witness;
};

NcPoly s_polynomial(const SPair& pair, const MonomialOrder& o);

// Full reduction: no word of the result contains a basis leading monomial.
NcPoly normal_form(const NcPoly& f, std::span<const NcPoly> basis, const MonomialOrder& o);

struct TruncatedGB {
  std::vector<NcPoly> elements;  // monic, sorted by leading monomial ascending
  std::vector<Word> leads;
  int bound = 0;
  MonomialOrder order;
};

TruncatedGB buchberger_truncated(std::span<const NcPoly> relations, const MonomialOrder& o, int bound);

ObstructionSet obstructions_of(const TruncatedGB& gb);

// Entry k counts words of weighted degree k avoiding every obstruction.
std::vector<BigInt> normal_word_counts(const ObstructionSet& obs, const Alphabet& a, int bound);

}  // namespace algser
