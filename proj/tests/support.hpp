#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "algser/freealg.hpp"
#include "algser/series.hpp"

namespace testing {

// "x y t.1" -> Word over `a`. "1" or "" is the empty word.
inline algser::Word word(const algser::Alphabet& a, const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> names;
  for (std::string tok; in >> tok;)
    if (tok != "1") names.push_back(tok);
  return a.parse_word(names);
}

inline algser::Alphabet letters(const std::vector<std::string>& names) {
  std::vector<algser::Alphabet::Variable> vars;
  for (const auto& n : names) vars.push_back({n, 1});
  return algser::Alphabet(vars);
}

inline algser::RatSeries ints(const std::vector<long>& cs) {
  std::vector<algser::Rational> q;
  for (long c : cs) q.emplace_back(c);
  return algser::RatSeries(q);
}

inline std::vector<long> as_longs(const algser::RatSeries& s) {
  std::vector<long> out;
  for (const auto& c : s.coefficients()) {
    algser::Rational r = c;
    r.canonicalize();
    if (r.get_den() != 1 || !r.get_num().fits_slong_p()) throw std::runtime_error("not a small integer");
    out.push_back(r.get_num().get_si());
  }
  return out;
}

inline std::vector<long> as_longs(const std::vector<algser::BigInt>& v) {
  std::vector<long> out;
  for (const auto& c : v) out.push_back(c.get_si());
  return out;
}

}  // namespace testing
