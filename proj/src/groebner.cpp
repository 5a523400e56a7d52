#include "algser/groebner.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <tuple>

namespace algser {

ObstructionSet::ObstructionSet(std::vector<Word> words, std::size_t alphabet_size)
    : alphabet_size_(alphabet_size) {
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  for (const auto& w : words) {
    if (w.empty()) throw InvalidInput("obstruction set contains the empty word");
    for (Letter l : w)
      if (l >= alphabet_size_) throw InvalidInput("obstruction uses a letter outside the alphabet");
  }
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = 0; j < words.size(); ++j)
      if (i != j && words[j].contains(words[i]))
        throw InvalidInput("obstruction set is not subword-free");
  words_ = std::move(words);
  build();
}

void ObstructionSet::build() {
  const std::size_t sigma = alphabet_size_;
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> trie(sigma, kNone);
  outputs_.assign(1, {});
  for (std::size_t p = 0; p < words_.size(); ++p) {
    std::size_t s = 0;
    for (Letter l : words_[p]) {
      if (trie[s * sigma + l] == kNone) {
        trie[s * sigma + l] = outputs_.size();
        outputs_.emplace_back();
        trie.resize(outputs_.size() * sigma, kNone);
      }
      s = trie[s * sigma + l];
    }
    outputs_[s].push_back(p);
  }

  const std::size_t n = outputs_.size();
  delta_.assign(n * sigma, 0);
  std::vector<std::size_t> fail(n, 0);
  std::queue<std::size_t> bfs;
  for (std::size_t l = 0; l < sigma; ++l) {
    std::size_t t = trie[l];
    if (t != kNone) {
      delta_[l] = t;
      bfs.push(t);
    }
  }
  while (!bfs.empty()) {
    std::size_t s = bfs.front();
    bfs.pop();
    auto& out = outputs_[s];
    const auto& inherited = outputs_[fail[s]];
    out.insert(out.end(), inherited.begin(), inherited.end());
    for (std::size_t l = 0; l < sigma; ++l) {
      std::size_t t = trie[s * sigma + l];
      if (t != kNone) {
        fail[t] = delta_[fail[s] * sigma + l];
        delta_[s * sigma + l] = t;
        bfs.push(t);
      } else {
        delta_[s * sigma + l] = delta_[fail[s] * sigma + l];
      }
    }
  }
  accepting_.resize(n);
  for (std::size_t s = 0; s < n; ++s) accepting_[s] = !outputs_[s].empty();
}

bool ObstructionSet::contains_factor(const Word& w) const {
  if (words_.empty()) return false;
  std::size_t s = 0;
  for (Letter l : w) {
    if (l >= alphabet_size_) throw InvalidInput("letter outside the obstruction alphabet");
    s = next(s, l);
    if (accepting_[s]) return true;
  }
  return false;
}

std::vector<ObstructionSet::Occurrence> ObstructionSet::occurrences(const Word& w) const {
  std::vector<Occurrence> out;
  if (words_.empty()) return out;
  std::size_t s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] >= alphabet_size_) throw InvalidInput("letter outside the obstruction alphabet");
    s = next(s, w[i]);
    for (std::size_t p : outputs_[s]) out.push_back({i + 1 - words_[p].size(), i + 1, p});
  }
  std::sort(out.begin(), out.end(), [](const Occurrence& a, const Occurrence& b) {
    return std::tie(a.start, a.end) < std::tie(b.start, b.end);
  });
  return out;
}

std::vector<Overlap> find_overlaps(const Word& u, const Word& v) {
  std::vector<Overlap> out;
  if (u.empty() || v.empty()) return out;
  const std::size_t kmax = std::min(u.size(), v.size());
  for (std::size_t k = 1; k < kmax; ++k) {
    if (!u.has_factor_at(v.prefix(k), u.size() - k)) continue;
    Overlap o;
    o.left_suffix = v.suffix(v.size() - k);
    o.right_prefix = u.prefix(u.size() - k);
    o.composed = u * o.left_suffix;
    out.push_back(std::move(o));
  }
  if (v.size() < u.size()) {
    for (std::size_t p = 0; p + v.size() <= u.size(); ++p) {
      if (!u.has_factor_at(v, p)) continue;
      Overlap o;
      o.right_prefix = u.prefix(p);
      o.right_suffix = u.suffix(u.size() - p - v.size());
      o.composed = u;
      out.push_back(std::move(o));
    }
  }
  return out;
}

NcPoly s_polynomial(const SPair& pair, const MonomialOrder& o) {
  const Overlap& w = pair.witness;
  Word lu = pair.left.leading_monomial(o);
  Word lv = pair.right.leading_monomial(o);
  if (w.left_prefix * lu * w.left_suffix != w.composed || w.right_prefix * lv * w.right_suffix != w.composed)
    throw InvalidInput("overlap witness does not match the leading monomials");
  NcPoly left = pair.left.sandwich(w.left_prefix, w.left_suffix) * (1 / pair.left.leading_coefficient(o));
  NcPoly right = pair.right.sandwich(w.right_prefix, w.right_suffix) * (1 / pair.right.leading_coefficient(o));
  return left - right;
}

namespace {

// Reduction against a mutable family of polynomials, indexed by the first
// letter of each leading monomial.
class Reducer {
 public:
  explicit Reducer(const MonomialOrder& o) : order_(o) {}

  std::size_t add(NcPoly p) {
    Entry e;
    e.lead = p.leading_monomial(order_);
    e.inverse_lc = 1 / p.coefficient(e.lead);
    e.poly = std::move(p);
    e.alive = true;
    Letter first = e.lead[0];
    if (by_first_.size() <= first) by_first_.resize(first + 1u);
    by_first_[first].push_back(entries_.size());
    entries_.push_back(std::move(e));
    return entries_.size() - 1;
  }

  void kill(std::size_t i) {
    entries_[i].alive = false;
    auto& bucket = by_first_[entries_[i].lead[0]];
    bucket.erase(std::remove(bucket.begin(), bucket.end(), i), bucket.end());
  }

  void replace(std::size_t i, NcPoly p) {
    entries_[i].inverse_lc = 1 / p.coefficient(entries_[i].lead);
    entries_[i].poly = std::move(p);
  }

  bool alive(std::size_t i) const { return entries_[i].alive; }
  const NcPoly& poly(std::size_t i) const { return entries_[i].poly; }
  const Word& lead(std::size_t i) const { return entries_[i].lead; }
  std::size_t size() const { return entries_.size(); }

  // Leftmost occurrence; ties broken by insertion order.
  std::optional<std::pair<std::size_t, std::size_t>> find_divisor(const Word& w) const {
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
      Letter l = w[pos];
      if (l >= by_first_.size()) continue;
      for (std::size_t i : by_first_[l])
        if (w.has_factor_at(entries_[i].lead, pos)) return std::pair{i, pos};
    }
    return std::nullopt;
  }

  bool is_reducible(const Word& w) const { return find_divisor(w).has_value(); }

  NcPoly reduce(const NcPoly& f) const {
    auto greater = [this](const Word& a, const Word& b) { return order_.greater(a, b); };
    std::map<Word, Rational, decltype(greater)> work(greater);
    for (const auto& [w, c] : f.terms()) work.emplace(w, c);
    NcPoly result;
    while (!work.empty()) {
      auto it = work.begin();
      Word w = it->first;
      Rational c = it->second;
      work.erase(it);
      auto div = find_divisor(w);
      if (!div) {
        result.add_term(w, c);
        continue;
      }
      const Entry& e = entries_[div->first];
      Word left = w.prefix(div->second);
      Word right = w.suffix(w.size() - div->second - e.lead.size());
      Rational factor = c * e.inverse_lc;
      for (const auto& [gw, gc] : e.poly.terms()) {
        if (gw == e.lead) continue;
        Word t = left * gw * right;
        Rational delta = -factor * gc;
        auto [jt, inserted] = work.try_emplace(std::move(t), delta);
        if (!inserted) {
          jt->second += delta;
          if (sgn(jt->second) == 0) work.erase(jt);
        }
      }
    }
    return result;
  }

 private:
  struct Entry {
    NcPoly poly;
    Word lead;
    Rational inverse_lc;
    bool alive = false;
  };
  const MonomialOrder& order_;
  std::vector<Entry> entries_;
  std::vector<std::vector<std::size_t>> by_first_;
};

class TruncatedBuchberger {
 public:
  TruncatedBuchberger(const MonomialOrder& o, int bound) : order_(o), bound_(bound), basis_(o) {}

  void add_relation(const NcPoly& f) {
    NcPoly r = basis_.reduce(f);
    if (r.is_zero()) return;
    if (order_.alphabet().degree(r.leading_monomial(order_)) > bound_) return;
    insert(std::move(r));
  }

  void run() {
    while (!queue_.empty()) {
      Pending p = queue_.top();
      queue_.pop();
      if (!basis_.alive(p.left) || !basis_.alive(p.right)) continue;
      SPair pair{basis_.poly(p.left), basis_.poly(p.right), p.witness};
      NcPoly r = basis_.reduce(s_polynomial(pair, order_));
      if (!r.is_zero()) insert(std::move(r));
    }
  }

  TruncatedGB result() const {
    std::vector<std::size_t> ids;
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (basis_.alive(i)) ids.push_back(i);
    std::sort(ids.begin(), ids.end(),
              [&](std::size_t a, std::size_t b) { return order_.less(basis_.lead(a), basis_.lead(b)); });
    TruncatedGB gb{{}, {}, bound_, order_};
    for (std::size_t i : ids) {
      gb.elements.push_back(basis_.poly(i));
      gb.leads.push_back(basis_.lead(i));
    }
    return gb;
  }

 private:
  struct Pending {
    int degree;
    std::uint64_t seq;
    std::size_t left, right;
    Overlap witness;
  };
  struct Later {
    bool operator()(const Pending& a, const Pending& b) const {
      return std::tie(a.degree, a.seq) > std::tie(b.degree, b.seq);
    }
  };

  // h must be nonzero and reduced against the current basis.
  void insert(NcPoly h) {
    h = h.monic(order_);
    const Word lead = h.leading_monomial(order_);
    std::vector<NcPoly> requeue;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (basis_.alive(i) && basis_.lead(i).contains(lead)) {
        requeue.push_back(basis_.poly(i));
        basis_.kill(i);
      }
    }
    const std::size_t id = basis_.add(std::move(h));
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (i == id || !basis_.alive(i)) continue;
      const NcPoly& g = basis_.poly(i);
      bool touched = false;
      for (const auto& [w, c] : g.terms())
        if (w != basis_.lead(i) && w.contains(lead)) touched = true;
      if (!touched) continue;
      NcPoly tail = g;
      Rational lc = tail.coefficient(basis_.lead(i));
      tail.add_term(basis_.lead(i), -lc);
      NcPoly updated = basis_.reduce(tail);
      updated.add_term(basis_.lead(i), lc);
      basis_.replace(i, std::move(updated));
    }
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (!basis_.alive(i)) continue;
      schedule(id, i);
      if (i != id) schedule(i, id);
    }
    for (const auto& g : requeue) {
      NcPoly r = basis_.reduce(g);
      if (!r.is_zero()) insert(std::move(r));
    }
  }

  void schedule(std::size_t left, std::size_t right) {
    for (auto& w : find_overlaps(basis_.lead(left), basis_.lead(right))) {
      int deg = order_.alphabet().degree(w.composed);
      if (deg > bound_) continue;
      queue_.push(Pending{deg, seq_++, left, right, std::move(w)});
    }
  }

  const MonomialOrder& order_;
  int bound_;
  Reducer basis_;
  std::priority_queue<Pending, std::vector<Pending>, Later> queue_;
  std::uint64_t seq_ = 0;
};

}  // namespace

NcPoly normal_form(const NcPoly& f, std::span<const NcPoly> basis, const MonomialOrder& o) {
  Reducer r(o);
  for (const auto& g : basis) {
    if (g.is_zero()) throw InvalidInput("zero polynomial in reduction basis");
    r.add(g);
  }
  return r.reduce(f);
}

TruncatedGB buchberger_truncated(std::span<const NcPoly> relations, const MonomialOrder& o, int bound) {
  if (bound < 0) throw InvalidInput("negative degree bound");
  std::vector<const NcPoly*> sorted;
  for (const auto& f : relations) {
    if (f.is_zero()) throw InvalidInput("zero relation in input");
    if (!o.alphabet().owns(f.leading_monomial(o))) throw InvalidInput("relation uses a foreign letter");
    sorted.push_back(&f);
  }
  std::stable_sort(sorted.begin(), sorted.end(), [&](const NcPoly* a, const NcPoly* b) {
    return o.less(a->leading_monomial(o), b->leading_monomial(o));
  });
  TruncatedBuchberger engine(o, bound);
  for (const NcPoly* f : sorted) engine.add_relation(*f);
  engine.run();
  return engine.result();
}

ObstructionSet obstructions_of(const TruncatedGB& gb) {
  return ObstructionSet(gb.leads, gb.order.alphabet().size());
}

std::vector<BigInt> normal_word_counts(const ObstructionSet& obs, const Alphabet& a, int bound) {
  if (bound < 0) throw InvalidInput("negative degree bound");
  std::vector<BigInt> counts(static_cast<std::size_t>(bound) + 1, 0);
  if (obs.empty()) {
    // Free algebra: no automaton needed.
    counts[0] = 1;
    for (int k = 1; k <= bound; ++k)
      for (std::size_t l = 0; l < a.size(); ++l)
        if (a.weight(static_cast<Letter>(l)) <= k) counts[k] += counts[k - a.weight(static_cast<Letter>(l))];
    return counts;
  }
  if (obs.alphabet_size() != a.size()) throw InvalidInput("obstruction set and alphabet sizes differ");
  const std::size_t states = obs.state_count();
  std::vector<std::vector<BigInt>> dp(static_cast<std::size_t>(bound) + 1, std::vector<BigInt>(states, 0));
  dp[0][0] = 1;
  for (int k = 0; k <= bound; ++k) {
    for (std::size_t s = 0; s < states; ++s) {
      const BigInt& c = dp[k][s];
      if (sgn(c) == 0) continue;
      counts[k] += c;
      for (std::size_t l = 0; l < a.size(); ++l) {
        int nk = k + a.weight(static_cast<Letter>(l));
        if (nk > bound) continue;
        std::size_t t = obs.next(s, static_cast<Letter>(l));
        if (!obs.accepting(t)) dp[nk][t] += c;
      }
    }
  }
  return counts;
}

}  // namespace algser
