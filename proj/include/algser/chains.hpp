#pragma once

#include <vector>

#include "algser/groebner.hpp"
#include "algser/langkit.hpp"

namespace algser {

// w in X* L_1 X*
bool factor_membership(const Word& w, const ObstructionSet& obs);
// w in L^t, with L^0 = {empty word}
bool power_membership(const Word& w, const ObstructionSet& obs, int t);

// Exact chain predicates for one word: membership of w in L_t by the
// set-algebra formulas over L = X* L_1 X*.
bool is_chain(const Word& w, const ObstructionSet& obs, int t);

struct OracleGuard {
  std::size_t max_letters = 9;
  int max_degree = 6;
  bool force = false;
};

// Brute force: every word of degree <= bound filtered by is_chain.
LanguageSlice govorov_chain_language(const ObstructionSet& obs, const Alphabet& a, int t, int bound,
                                     const OracleGuard& guard = {});

// Overlap-chained candidates of t obstruction occurrences, verified by is_chain.
LanguageSlice chain_language(const ObstructionSet& obs, const Alphabet& a, int t, int bound);

struct ChainTable {
  int bound = 0;
  std::vector<LanguageSlice> chains;       // index t: L_t
  std::vector<std::vector<BigInt>> dims;   // dims[t][k] = number of t-chains of degree k

  // Generating function of L_t (the Tor_{t+1} series).
  std::vector<BigInt> dim_vector(int t) const { return dims.at(static_cast<std::size_t>(t)); }
};

ChainTable tor_table(const ObstructionSet& obs, const Alphabet& a, int max_t, int bound, bool use_oracle = false,
                     const OracleGuard& guard = {});

}  // namespace algser
