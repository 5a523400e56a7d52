#include "algser/langkit.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <tuple>

namespace algser {

std::size_t LanguageSlice::count(int degree) const {
  auto it = by_degree.find(degree);
  return it == by_degree.end() ? 0 : it->second.size();
}

std::size_t LanguageSlice::total() const {
  std::size_t t = 0;
  for (const auto& [d, words] : by_degree) t += words.size();
  return t;
}

std::vector<BigInt> LanguageSlice::counts() const {
  std::vector<BigInt> out(static_cast<std::size_t>(bound) + 1, 0);
  for (const auto& [d, words] : by_degree)
    if (d >= 0 && d <= bound) out[d] = static_cast<unsigned long>(words.size());
  return out;
}

std::set<Word> LanguageSlice::all() const {
  std::set<Word> out;
  for (const auto& [d, words] : by_degree) out.insert(words.begin(), words.end());
  return out;
}

bool LanguageSlice::contains(const Word& w) const {
  return std::any_of(by_degree.begin(), by_degree.end(),
                     [&](const auto& entry) { return entry.second.count(w) > 0; });
}

Alphabet bracket_alphabet(int n, bool with_e) {
  if (n < 1) throw InvalidInput("number of bracket kinds must be >= 1");
  std::vector<Alphabet::Variable> vars;
  for (int i = 1; i <= n; ++i) {
    vars.push_back({"a." + std::to_string(i), 1});
    vars.push_back({"b." + std::to_string(i), 1});
  }
  if (with_e) vars.push_back({"e", 1});
  return Alphabet(std::move(vars));
}

LanguageSlice enumerate_dyck(int n, int bound) {
  if (n < 1) throw InvalidInput("number of bracket kinds must be >= 1");
  LanguageSlice slice;
  slice.bound = std::max(bound, 0);
  if (bound < 0) return slice;
  std::vector<Letter> word;
  std::vector<int> open;
  std::function<void()> grow = [&] {
    if (open.empty()) slice.insert(static_cast<int>(word.size()), Word(word));
    if (static_cast<int>(word.size() + open.size()) + 2 <= bound) {
      for (int i = 1; i <= n; ++i) {
        word.push_back(opener(i));
        open.push_back(i);
        grow();
        open.pop_back();
        word.pop_back();
      }
    }
    if (!open.empty()) {
      int i = open.back();
      word.push_back(closer(i));
      open.pop_back();
      grow();
      open.push_back(i);
      word.pop_back();
    }
  };
  grow();
  return slice;
}

LanguageSlice enumerate_pn(int n, int bound) {
  LanguageSlice slice;
  slice.bound = std::max(bound, 0);
  if (bound < 0) return slice;
  const LanguageSlice dyck = enumerate_dyck(n, bound - 1);
  const Letter e = separator(n);
  // by_length[L] = words of P_n of length L
  std::vector<std::set<Word>> by_length(static_cast<std::size_t>(bound) + 1);
  by_length[0].insert(Word{});
  for (int len = 1; len <= bound; ++len) {
    for (const auto& [dl, blocks] : dyck.by_degree) {
      int rest = len - dl - 1;
      if (rest < 0) continue;
      for (const Word& prev : by_length[rest])
        for (const Word& w : blocks) {
          Word next = prev * w;
          next.push_back(e);
          by_length[len].insert(std::move(next));
        }
    }
  }
  for (int len = 0; len <= bound; ++len)
    if (!by_length[len].empty()) slice.by_degree[len] = std::move(by_length[len]);
  return slice;
}

Homomorphism::Homomorphism(int n, Alphabet target, std::vector<Word> images)
    : n_(n), target_(std::move(target)), images_(std::move(images)) {
  if (n_ < 1) throw InvalidInput("homomorphism needs n >= 1");
  if (target_.size() < 1) throw InvalidInput("homomorphism needs at least one terminal");
  for (const auto& v : target_.variables())
    if (v.weight != 1) throw InvalidInput("terminal '" + v.name + "' must have unit weight");
  if (images_.size() != static_cast<std::size_t>(2 * n_))
    throw InvalidInput("homomorphism needs exactly 2n images");
  for (std::size_t i = 0; i < images_.size(); ++i) {
    const Word& w = images_[i];
    if (w.empty()) throw InvalidInput("homomorphism image of a bracket letter must be nonempty");
    if (!target_.owns(w)) throw InvalidInput("homomorphism image uses a foreign terminal");
    int deg = target_.degree(w);
    d_ = std::max(d_, deg);
    min_degree_ = (i == 0) ? deg : std::min(min_degree_, deg);
  }
}

Word Homomorphism::apply(const Word& w) const {
  Word out;
  for (Letter l : w) out *= images_.at(l);
  return out;
}

LanguageSlice image_language(const Homomorphism& h, int bound) {
  LanguageSlice slice;
  slice.bound = std::max(bound, 0);
  if (bound < 0) return slice;
  // Images are nonempty, so a preimage of a degree-<=bound word has length <= bound/min.
  const LanguageSlice dyck = enumerate_dyck(h.n(), bound / h.min_image_degree());
  for (const auto& [len, words] : dyck.by_degree)
    for (const Word& w : words) {
      Word img = h.apply(w);
      int deg = h.target().degree(img);
      if (deg <= bound) slice.insert(deg, std::move(img));
    }
  return slice;
}

namespace {

Alphabet terminal_alphabet(int m) {
  std::vector<Alphabet::Variable> vars;
  for (int k = 1; k <= m; ++k) vars.push_back({"t." + std::to_string(k), 1});
  return Alphabet(std::move(vars));
}

Letter t(int k) { return static_cast<Letter>(k - 1); }

// t.k is the k-th capital letter in the 26-letter construction.
Word spell(const std::string& s) {
  Word w;
  for (char c : s) w.push_back(t(c - 'A' + 1));
  return w;
}

}  // namespace

Homomorphism example1_homomorphism(int n) {
  std::vector<Word> images;
  for (int i = 1; i <= n; ++i) {
    images.push_back(Word{t(2 * i - 1)});
    images.push_back(Word{t(2 * i)});
  }
  return Homomorphism(n, terminal_alphabet(2 * n), std::move(images));
}

Homomorphism example2_homomorphism() {
  return Homomorphism(2, terminal_alphabet(2), {Word{t(1)}, Word{t(2)}, Word{t(2)}, Word{t(1)}});
}

Homomorphism example3_homomorphism() {
  return Homomorphism(2, terminal_alphabet(26), {spell("BEG"), spell("END"), spell("FOR"), spell("END")});
}

Grammar::Grammar(std::vector<std::string> nonterminals, const std::string& start,
                 const std::vector<RawProduction>& productions, Alphabet terminals)
    : nonterminals_(std::move(nonterminals)), terminals_(std::move(terminals)) {
  std::map<std::string, int> nt_index;
  for (std::size_t i = 0; i < nonterminals_.size(); ++i) {
    if (!nt_index.emplace(nonterminals_[i], static_cast<int>(i)).second)
      throw GrammarError("duplicate nonterminal", nonterminals_[i]);
    if (terminals_.find(nonterminals_[i]))
      throw GrammarError("symbol declared both terminal and nonterminal", nonterminals_[i]);
  }
  auto start_it = nt_index.find(start);
  if (start_it == nt_index.end()) throw GrammarError("start symbol is not a nonterminal", start);
  start_ = start_it->second;
  for (const auto& raw : productions) {
    auto lhs = nt_index.find(raw.lhs);
    if (lhs == nt_index.end()) throw GrammarError("production for an undeclared nonterminal", raw.lhs);
    Production p;
    p.lhs = lhs->second;
    for (const auto& s : raw.rhs) {
      if (auto it = nt_index.find(s); it != nt_index.end()) {
        p.rhs.push_back({false, it->second});
      } else if (auto l = terminals_.find(s)) {
        p.rhs.push_back({true, static_cast<int>(*l)});
      } else {
        throw GrammarError("unknown symbol", s);
      }
    }
    productions_.push_back(std::move(p));
  }
  validate();

  nullable_.assign(nonterminals_.size(), false);
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& p : productions_) {
      if (nullable_[p.lhs]) continue;
      if (std::all_of(p.rhs.begin(), p.rhs.end(), [&](const Symbol& s) { return !s.terminal && nullable_[s.index]; })) {
        nullable_[p.lhs] = true;
        changed = true;
      }
    }
  }
}

void Grammar::validate() const {
  const std::size_t k = nonterminals_.size();
  std::vector<bool> productive(k, false);
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& p : productions_) {
      if (productive[p.lhs]) continue;
      if (std::all_of(p.rhs.begin(), p.rhs.end(), [&](const Symbol& s) { return s.terminal || productive[s.index]; })) {
        productive[p.lhs] = true;
        changed = true;
      }
    }
  }
  for (std::size_t i = 0; i < k; ++i)
    if (!productive[i]) throw GrammarError("unproductive nonterminal '" + nonterminals_[i] + "'", nonterminals_[i]);

  std::vector<bool> reachable(k, false);
  std::vector<int> stack{start_};
  reachable[start_] = true;
  while (!stack.empty()) {
    int a = stack.back();
    stack.pop_back();
    for (const auto& p : productions_) {
      if (p.lhs != a) continue;
      for (const auto& s : p.rhs)
        if (!s.terminal && !reachable[s.index]) {
          reachable[s.index] = true;
          stack.push_back(s.index);
        }
    }
  }
  for (std::size_t i = 0; i < k; ++i)
    if (!reachable[i]) throw GrammarError("unreachable nonterminal '" + nonterminals_[i] + "'", nonterminals_[i]);
}

bool membership(const Grammar& g, const Word& w) {
  if (!g.terminals().owns(w)) throw InvalidInput("word uses letters outside the grammar's terminals");
  const auto& prods = g.productions();
  const auto& nullable = g.nullable();
  // Earley items: (production, dot, origin); augmented start handled via a final check.
  using Item = std::tuple<std::size_t, std::size_t, std::size_t>;
  const std::size_t n = w.size();
  std::vector<std::vector<Item>> chart(n + 1);
  std::vector<std::set<Item>> seen(n + 1);
  auto add = [&](std::size_t pos, Item it) {
    if (seen[pos].insert(it).second) chart[pos].push_back(it);
  };
  for (std::size_t p = 0; p < prods.size(); ++p)
    if (prods[p].lhs == g.start()) add(0, {p, 0, 0});

  for (std::size_t pos = 0; pos <= n; ++pos) {
    for (std::size_t k = 0; k < chart[pos].size(); ++k) {
      auto [p, dot, origin] = chart[pos][k];
      const auto& rhs = prods[p].rhs;
      if (dot == rhs.size()) {
        // complete
        const int lhs = prods[p].lhs;
        for (std::size_t j = 0; j < chart[origin].size(); ++j) {
          auto [q, qdot, qorigin] = chart[origin][j];
          const auto& qrhs = prods[q].rhs;
          if (qdot < qrhs.size() && !qrhs[qdot].terminal && qrhs[qdot].index == lhs) add(pos, {q, qdot + 1, qorigin});
        }
      } else if (rhs[dot].terminal) {
        if (pos < n && w[pos] == rhs[dot].index) add(pos + 1, {p, dot + 1, origin});
      } else {
        const int b = rhs[dot].index;
        for (std::size_t q = 0; q < prods.size(); ++q)
          if (prods[q].lhs == b) add(pos, {q, 0, pos});
        if (nullable[b]) add(pos, {p, dot + 1, origin});
      }
    }
  }
  for (const auto& [p, dot, origin] : chart[n])
    if (origin == 0 && prods[p].lhs == g.start() && dot == prods[p].rhs.size()) return true;
  return false;
}

Word translate(const Word& w, const Alphabet& from, const Alphabet& to) {
  Word out;
  for (Letter l : w) out.push_back(to.index_of(from.name(l)));
  return out;
}

std::vector<Word> all_words(const Alphabet& a, int bound) {
  std::vector<Word> out{Word{}};
  for (std::size_t i = 0; i < out.size(); ++i) {
    const int deg = a.degree(out[i]);
    for (std::size_t l = 0; l < a.size(); ++l) {
      if (deg + a.weight(static_cast<Letter>(l)) > bound) continue;
      Word next = out[i];
      next.push_back(static_cast<Letter>(l));
      out.push_back(std::move(next));
    }
  }
  return out;
}

Grammar dyck_grammar(int n) {
  std::vector<Grammar::RawProduction> prods{{"S", {}}};
  for (int i = 1; i <= n; ++i)
    prods.push_back({"S", {"a." + std::to_string(i), "S", "b." + std::to_string(i), "S"}});
  return Grammar({"S"}, "S", prods, bracket_alphabet(n));
}

Grammar example2_grammar() {
  // First-return decomposition: S splits into positive and negative excursions.
  std::vector<Grammar::RawProduction> prods{
      {"S", {}},
      {"S", {"t.1", "U", "t.2", "S"}},
      {"S", {"t.2", "V", "t.1", "S"}},
      {"U", {}},
      {"U", {"t.1", "U", "t.2", "U"}},
      {"V", {}},
      {"V", {"t.2", "V", "t.1", "V"}},
  };
  return Grammar({"S", "U", "V"}, "S", prods, terminal_alphabet(2));
}

Grammar example3_grammar() {
  auto letters = [](const std::string& s) {
    std::vector<std::string> out;
    for (char c : s) out.push_back("t." + std::to_string(c - 'A' + 1));
    return out;
  };
  auto block = [&](const std::string& open) {
    std::vector<std::string> rhs = letters(open);
    rhs.push_back("S");
    for (auto& s : letters("END")) rhs.push_back(s);
    rhs.push_back("S");
    return rhs;
  };
  std::vector<Grammar::RawProduction> prods{{"S", {}}, {"S", block("BEG")}, {"S", block("FOR")}};
  return Grammar({"S"}, "S", prods, terminal_alphabet(26));
}

}  // namespace algser
