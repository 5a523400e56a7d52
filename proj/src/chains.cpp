#include "algser/chains.hpp"

#include <functional>

namespace algser {

namespace {

// in_power[k][i][j]: w[i, j) lies in L^k.
class PowerTable {
 public:
  PowerTable(const Word& w, const ObstructionSet& obs, int max_power) : n_(w.size()) {
    // min_end[i]: smallest j such that w[i, j) contains an obstruction.
    min_end_.assign(n_ + 1, n_ + 1);
    for (const auto& occ : obs.occurrences(w))
      for (std::size_t i = 0; i <= occ.start; ++i) min_end_[i] = std::min(min_end_[i], occ.end);
    table_.assign(static_cast<std::size_t>(max_power) + 1, std::vector<bool>((n_ + 1) * (n_ + 1), false));
    for (std::size_t i = 0; i <= n_; ++i) at(0, i, i) = true;
    for (int k = 1; k <= max_power; ++k)
      for (std::size_t i = 0; i <= n_; ++i)
        for (std::size_t m = i; m <= n_; ++m) {
          if (!at(k - 1, i, m)) continue;
          for (std::size_t j = min_end_[m]; j <= n_; ++j) at(k, i, j) = true;
        }
  }

  bool in(int k, std::size_t i, std::size_t j) const {
    return table_[static_cast<std::size_t>(k)][i * (n_ + 1) + j];
  }

  // X^+ L^k
  bool left_padded(int k) const {
    for (std::size_t i = 1; i <= n_; ++i)
      if (in(k, i, n_)) return true;
    return false;
  }
  // L^k X^+
  bool right_padded(int k) const {
    for (std::size_t j = 0; j < n_; ++j)
      if (in(k, 0, j)) return true;
    return false;
  }
  // X^+ L^k X^+
  bool both_padded(int k) const {
    for (std::size_t i = 1; i < n_; ++i)
      for (std::size_t j = i; j < n_; ++j)
        if (in(k, i, j)) return true;
    return false;
  }
  bool whole(int k) const { return in(k, 0, n_); }

 private:
  std::vector<bool>::reference at(int k, std::size_t i, std::size_t j) {
    return table_[static_cast<std::size_t>(k)][i * (n_ + 1) + j];
  }

  std::size_t n_;
  std::vector<std::size_t> min_end_;
  std::vector<std::vector<bool>> table_;
};

}  // namespace

bool factor_membership(const Word& w, const ObstructionSet& obs) { return obs.contains_factor(w); }

bool power_membership(const Word& w, const ObstructionSet& obs, int t) {
  if (t < 0) throw InvalidInput("power must be >= 0");
  if (t == 0) return w.empty();
  return PowerTable(w, obs, t).whole(t);
}

bool is_chain(const Word& w, const ObstructionSet& obs, int t) {
  if (t < 0) throw InvalidInput("chain index must be >= 0");
  if (t == 0) return w.size() == 1 && !obs.contains_factor(w);
  if (t % 2 == 0) {
    const int s = t / 2;
    PowerTable p(w, obs, s + 1);
    return p.left_padded(s) && p.right_padded(s) && !p.both_padded(s) && !p.whole(s + 1);
  }
  const int s = (t + 1) / 2;
  PowerTable p(w, obs, s);
  return p.both_padded(s - 1) && p.whole(s) && !p.left_padded(s) && !p.right_padded(s);
}

LanguageSlice govorov_chain_language(const ObstructionSet& obs, const Alphabet& a, int t, int bound,
                                     const OracleGuard& guard) {
  if (!guard.force && (a.size() > guard.max_letters || bound > guard.max_degree))
    throw GuardExceeded("brute-force chain oracle limited to " + std::to_string(guard.max_letters) +
                        " letters and degree " + std::to_string(guard.max_degree));
  LanguageSlice slice;
  slice.bound = bound;
  for (Word& w : all_words(a, bound))
    if (!w.empty() && is_chain(w, obs, t)) {
      int deg = a.degree(w);
      slice.insert(deg, std::move(w));
    }
  return slice;
}

LanguageSlice chain_language(const ObstructionSet& obs, const Alphabet& a, int t, int bound) {
  if (t < 0) throw InvalidInput("chain index must be >= 0");
  LanguageSlice slice;
  slice.bound = bound;
  if (t == 0) {
    for (std::size_t l = 0; l < a.size(); ++l) {
      Word w{static_cast<Letter>(l)};
      int deg = a.degree(w);
      if (deg <= bound && !obs.contains_factor(w)) slice.insert(deg, std::move(w));
    }
    return slice;
  }
  const auto& obstructions = obs.words();
  Word word;
  // Start of the most recent occurrence; the word always ends where it ends.
  std::function<void(std::size_t, int)> extend = [&](std::size_t last_start, int used) {
    if (used == t) {
      if (is_chain(word, obs, t)) slice.insert(a.degree(word), word);
      return;
    }
    const std::size_t last_len = word.size() - last_start;
    for (const Word& o : obstructions) {
      const std::size_t kmax = std::min(o.size() - 1, last_len - 1);
      for (std::size_t k = 1; k <= kmax; ++k) {
        if (!word.has_factor_at(o.prefix(k), word.size() - k)) continue;
        const Word tail = o.suffix(o.size() - k);
        if (a.degree(word) + a.degree(tail) > bound) continue;
        const std::size_t start = word.size() - k;
        const Word saved = word;
        word *= tail;
        extend(start, used + 1);
        word = saved;
      }
    }
  };
  for (const Word& o : obstructions) {
    if (a.degree(o) > bound) continue;
    word = o;
    extend(0, 1);
  }
  return slice;
}

ChainTable tor_table(const ObstructionSet& obs, const Alphabet& a, int max_t, int bound, bool use_oracle,
                     const OracleGuard& guard) {
  ChainTable table;
  table.bound = bound;
  for (int t = 0; t <= max_t; ++t) {
    LanguageSlice s = (use_oracle && t > 0) ? govorov_chain_language(obs, a, t, bound, guard)
                                            : chain_language(obs, a, t, bound);
    table.dims.push_back(s.counts());
    table.chains.push_back(std::move(s));
  }
  return table;
}

}  // namespace algser
