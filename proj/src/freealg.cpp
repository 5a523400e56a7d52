#include "algser/freealg.hpp"

#include <algorithm>
#include <functional>

namespace algser {

Word Word::subword(std::size_t pos, std::size_t len) const {
  return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                                  letters_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

bool Word::has_factor_at(const Word& factor, std::size_t pos) const {
  if (pos + factor.size() > size()) return false;
  return std::equal(factor.begin(), factor.end(), letters_.begin() + static_cast<std::ptrdiff_t>(pos));
}

std::optional<std::size_t> Word::find(const Word& factor, std::size_t from) const {
  if (factor.size() > size()) return std::nullopt;
  for (std::size_t p = from; p + factor.size() <= size(); ++p)
    if (has_factor_at(factor, p)) return p;
  return std::nullopt;
}

Word& Word::operator*=(const Word& rhs) {
  letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
  return *this;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Letter l : w) {
    h ^= l;
    h *= 1099511628211ull;
  }
  return h;
}

Alphabet::Alphabet(std::vector<Variable> variables) : variables_(std::move(variables)) {
  if (variables_.size() > 0xFFFF) throw InvalidInput("alphabet too large");
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    const auto& v = variables_[i];
    if (v.name.empty()) throw InvalidInput("variable with empty name");
    if (v.weight < 1) throw InvalidInput("variable '" + v.name + "' has weight < 1");
    if (!index_.emplace(v.name, static_cast<Letter>(i)).second)
      throw InvalidInput("duplicate variable name '" + v.name + "'");
  }
}

int Alphabet::min_weight() const {
  int m = 0;
  for (const auto& v : variables_) m = (m == 0) ? v.weight : std::min(m, v.weight);
  return m;
}

std::optional<Letter> Alphabet::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Letter Alphabet::index_of(const std::string& name) const {
  auto l = find(name);
  if (!l) throw InvalidInput("unknown variable '" + name + "'");
  return *l;
}

int Alphabet::degree(const Word& w) const {
  int d = 0;
  for (Letter l : w) {
    if (l >= variables_.size()) throw InvalidInput("letter index " + std::to_string(l) + " outside alphabet");
    d += variables_[l].weight;
  }
  return d;
}

bool Alphabet::owns(const Word& w) const {
  return std::all_of(w.begin(), w.end(), [&](Letter l) { return l < variables_.size(); });
}

Word Alphabet::parse_word(std::span<const std::string> names) const {
  std::vector<Letter> letters;
  letters.reserve(names.size());
  for (const auto& n : names) letters.push_back(index_of(n));
  return Word(std::move(letters));
}

std::vector<std::string> Alphabet::names(const Word& w) const {
  std::vector<std::string> out;
  out.reserve(w.size());
  for (Letter l : w) out.push_back(name(l));
  return out;
}

std::string Alphabet::format(const Word& w) const {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += name(w[i]);
  }
  return s;
}

bool operator==(const Alphabet& a, const Alphabet& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.variables_[i].name != b.variables_[i].name || a.variables_[i].weight != b.variables_[i].weight)
      return false;
  return true;
}

std::strong_ordering MonomialOrder::compare(const Word& u, const Word& v) const {
  if (auto c = alphabet_.degree(u) <=> alphabet_.degree(v); c != 0) return c;
  const std::size_t n = std::min(u.size(), v.size());
  for (std::size_t i = 0; i < n; ++i)
    if (u[i] != v[i]) return v[i] <=> u[i];  // lower index = higher precedence
  // Equal degree with one word a prefix of the other cannot happen for positive weights.
  return u.size() <=> v.size();
}

NcPoly::NcPoly(std::initializer_list<std::pair<Word, Rational>> terms) {
  for (const auto& [w, c] : terms) add_term(w, c);
}

NcPoly NcPoly::monomial(Word w, const Rational& c) {
  NcPoly p;
  p.add_term(w, c);
  return p;
}

Rational NcPoly::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void NcPoly::add_term(const Word& w, const Rational& coeff) {
  Rational c = coeff;
  c.canonicalize();
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

NcPoly& NcPoly::operator+=(const NcPoly& rhs) {
  for (const auto& [w, c] : rhs.terms_) add_term(w, c);
  return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& rhs) {
  for (const auto& [w, c] : rhs.terms_) add_term(w, -c);
  return *this;
}

NcPoly& NcPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, coeff] : terms_) coeff *= c;
  return *this;
}

NcPoly operator*(const NcPoly& a, const NcPoly& b) {
  NcPoly out;
  for (const auto& [u, cu] : a.terms_)
    for (const auto& [v, cv] : b.terms_) out.add_term(u * v, cu * cv);
  return out;
}

NcPoly NcPoly::operator-() const {
  NcPoly out = *this;
  for (auto& [w, c] : out.terms_) c = -c;
  return out;
}

NcPoly NcPoly::sandwich(const Word& left, const Word& right) const {
  NcPoly out;
  for (const auto& [w, c] : terms_) out.terms_.emplace(left * w * right, c);
  return out;
}

Word NcPoly::leading_monomial(const MonomialOrder& o) const {
  if (terms_.empty()) throw ZeroPolynomialError("leading monomial of the zero polynomial is undefined");
  const Word* best = &terms_.begin()->first;
  for (const auto& [w, c] : terms_)
    if (o.greater(w, *best)) best = &w;
  return *best;
}

Rational NcPoly::leading_coefficient(const MonomialOrder& o) const {
  return terms_.at(leading_monomial(o));
}

NcPoly NcPoly::monic(const MonomialOrder& o) const {
  Rational inv = 1 / leading_coefficient(o);
  return *this * inv;
}

int NcPoly::degree(const Alphabet& a) const {
  int d = 0;
  for (const auto& [w, c] : terms_) d = std::max(d, a.degree(w));
  return d;
}

std::string to_string(const Rational& q) {
  Rational r = q;
  r.canonicalize();
  return r.get_str();
}

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw InvalidInput("empty rational literal");
  Rational q;
  std::string t = s;
  if (!t.empty() && t[0] == '+') t.erase(0, 1);
  if (q.set_str(t, 10) != 0) throw InvalidInput("malformed rational '" + s + "'");
  if (sgn(q.get_den()) == 0) throw InvalidInput("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

}  // namespace algser
