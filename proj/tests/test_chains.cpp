#include <doctest.h>

#include <algorithm>
#include <random>

#include "algser/chains.hpp"
#include "algser/construction.hpp"
#include "algser/groebner.hpp"
#include "algser/series.hpp"
#include "support.hpp"

using namespace algser;
using testing::word;

namespace {

ObstructionSet gb_obstructions(const PresentationSpec& ex, int bound) {
  return obstructions_of(buchberger_truncated(ex.relations, ex.order, bound));
}

std::set<Word> words_of(const Alphabet& a, std::initializer_list<const char*> ws) {
  std::set<Word> out;
  for (const char* w : ws) out.insert(word(a, w));
  return out;
}

std::vector<Word> random_obstructions(std::mt19937& rng, std::size_t letters) {
  std::uniform_int_distribution<int> count(1, 3), len(2, 3), pick(0, static_cast<int>(letters) - 1);
  std::vector<Word> raw;
  for (int i = count(rng); i > 0; --i) {
    Word w;
    for (int j = len(rng); j > 0; --j) w.push_back(static_cast<Letter>(pick(rng)));
    raw.push_back(w);
  }
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  std::vector<Word> out;
  for (const auto& w : raw)
    if (std::none_of(raw.begin(), raw.end(), [&](const Word& o) { return o != w && w.contains(o); }))
      out.push_back(w);
  return out;
}

RatSeries euler_check(const ChainTable& table, const std::vector<BigInt>& normal, int bound) {
  RatSeries alt = RatSeries::constant(1, bound);
  for (std::size_t t = 0; t < table.dims.size(); ++t) {
    RatSeries l = RatSeries::from_counts(table.dims[t]).truncated(bound);
    if (t % 2 == 0) alt -= l;
    else alt += l;
  }
  return RatSeries::from_counts(normal).truncated(bound) * alt;
}

}  // namespace

TEST_CASE("factor_membership") {
  Alphabet xy = testing::letters({"x", "y"});
  ObstructionSet xx({word(xy, "x x")}, 2);
  CHECK_FALSE(factor_membership(word(xy, "x y x"), xx));
  CHECK(factor_membership(word(xy, "x x x"), xx));

  PresentationSpec ex = example1_presentation(1);
  CHECK(factor_membership(word(ex.alphabet, "x e y e"), gb_obstructions(ex, 5)));
}

TEST_CASE("power_membership") {
  Alphabet x = testing::letters({"x"});
  ObstructionSet xx({word(x, "x x")}, 1);
  CHECK(power_membership(word(x, "x x x x"), xx, 2));
  CHECK_FALSE(power_membership(word(x, "x x x"), xx, 2));
  CHECK_FALSE(power_membership(word(x, "x x"), xx, 0));
  CHECK(power_membership(Word{}, xx, 0));
  CHECK(power_membership(word(x, "x x x x x"), xx, 2));
  CHECK_FALSE(power_membership(word(x, "x x x x x"), xx, 3));
}

TEST_CASE("oracle on one letter with x x") {
  Alphabet x = testing::letters({"x"});
  ObstructionSet xx({word(x, "x x")}, 1);
  for (int t = 1; t <= 4; ++t) {
    LanguageSlice l = govorov_chain_language(xx, x, t, 6);
    Word expected;
    for (int i = 0; i <= t; ++i) expected.push_back(0);
    CHECK(l.all() == std::set<Word>{expected});
  }
}

TEST_CASE("a b over two letters has no 2-chains") {
  Alphabet ab = testing::letters({"a", "b"});
  ObstructionSet obs({word(ab, "a b")}, 2);
  CHECK(power_membership(word(ab, "a b a b"), obs, 2));
  CHECK_FALSE(is_chain(word(ab, "a b a b"), obs, 2));
  CHECK(govorov_chain_language(obs, ab, 2, 6).total() == 0);
  CHECK(chain_language(obs, ab, 2, 6).total() == 0);
}

TEST_CASE("the t = 1 formula returns the obstructions") {
  std::mt19937 rng(5);
  Alphabet abc = testing::letters({"a", "b", "c"});
  for (int trial = 0; trial < 20; ++trial) {
    auto words = random_obstructions(rng, 3);
    ObstructionSet obs(words, 3);
    CHECK(govorov_chain_language(obs, abc, 1, 5).all() == std::set<Word>(words.begin(), words.end()));
    CHECK(chain_language(obs, abc, 1, 5).all() == std::set<Word>(words.begin(), words.end()));
  }
}

TEST_CASE("chain_language examples") {
  Alphabet x = testing::letters({"x"});
  ObstructionSet xx({word(x, "x x")}, 1);
  CHECK(chain_language(xx, x, 2, 6).all() == std::set<Word>{word(x, "x x x")});

  PresentationSpec ex = example1_presentation(1);
  const Alphabet& a = ex.alphabet;
  ObstructionSet obs5 = gb_obstructions(ex, 5);
  LanguageSlice l2 = chain_language(obs5, a, 2, 5);
  // The degree-3 words overlap a sandwich relation with a.1.1 y or b.1.1 y; the rest follow x P y L e.
  CHECK(l2.by_degree.at(3) ==
        words_of(a, {"a.1.1 a.1 y", "a.1.1 b.1 y", "b.1.1 a.1 y", "b.1.1 b.1 y"}));
  CHECK(l2.by_degree.at(4) == words_of(a, {"a.1.1 x y e", "b.1.1 x y e"}));
  CHECK(l2.by_degree.at(5) == words_of(a, {"a.1.1 x e y e", "b.1.1 x e y e"}));
  CHECK(l2 == govorov_chain_language(obs5, a, 2, 5));

  ObstructionSet obs6 = gb_obstructions(ex, 6);
  CHECK(chain_language(obs6, a, 3, 6).total() == 0);
  CHECK(govorov_chain_language(obs6, a, 3, 6).total() == 0);
}

TEST_CASE("enumerator agrees with the oracle on random small instances") {
  std::mt19937 rng(31);
  std::vector<Alphabet> alphabets = {testing::letters({"a", "b"}), testing::letters({"a", "b", "c"}),
                                     Alphabet({{"a", 1}, {"b", 2}})};
  for (const auto& a : alphabets)
    for (int trial = 0; trial < 12; ++trial) {
      ObstructionSet obs(random_obstructions(rng, a.size()), a.size());
      for (int t = 1; t <= 4; ++t) CHECK(chain_language(obs, a, t, 6) == govorov_chain_language(obs, a, t, 6));
    }
  Alphabet xy = testing::letters({"x", "y"});
  for (auto ws : {std::vector<std::string>{"x x y"}, {"x y x"}, {"x x x"}, {"x y", "y x"}}) {
    std::vector<Word> words;
    for (const auto& w : ws) words.push_back(word(xy, w));
    ObstructionSet obs(words, 2);
    for (int t = 1; t <= 4; ++t) CHECK(chain_language(obs, xy, t, 6) == govorov_chain_language(obs, xy, t, 6));
  }
}

TEST_CASE("oracle guard") {
  std::vector<Alphabet::Variable> vars;
  for (int i = 0; i < 10; ++i) vars.push_back({"v" + std::to_string(i), 1});
  Alphabet big(vars);
  ObstructionSet obs({Word{0, 0}}, 10);
  CHECK_THROWS_AS(govorov_chain_language(obs, big, 1, 3), GuardExceeded);
  Alphabet x = testing::letters({"x"});
  ObstructionSet xx({Word{0, 0}}, 1);
  CHECK_THROWS_AS(govorov_chain_language(xx, x, 1, 7), GuardExceeded);
  OracleGuard force;
  force.force = true;
  CHECK(govorov_chain_language(xx, x, 1, 7, force).total() == 1);
}

TEST_CASE("tor_table shapes") {
  Alphabet xy = testing::letters({"x", "y"});
  ChainTable free = tor_table(ObstructionSet({}, 2), xy, 3, 5);
  CHECK(free.chains[0].all() == std::set<Word>{word(xy, "x"), word(xy, "y")});
  for (int t = 1; t <= 3; ++t) CHECK(free.chains[t].total() == 0);

  Alphabet x = testing::letters({"x"});
  ChainTable one = tor_table(ObstructionSet({word(x, "x x")}, 1), x, 4, 6);
  for (int t = 0; t <= 4; ++t)
    for (int k = 0; k <= 6; ++k) CHECK(one.dims[t][k] == (k == t + 1 ? 1 : 0));

  PresentationSpec ex = example1_presentation(1);
  ChainTable t1 = tor_table(gb_obstructions(ex, 5), ex.alphabet, 3, 5);
  CHECK(testing::as_longs(t1.dim_vector(1)) == std::vector<long>{0, 0, 12, 1, 1, 2});
  CHECK(testing::as_longs(t1.dim_vector(0)) == std::vector<long>{0, 9, 0, 0, 0, 0});
  ObstructionSet obs5 = gb_obstructions(ex, 5);
  CHECK(t1.chains[1].all() == std::set<Word>(obs5.words().begin(), obs5.words().end()));
  CHECK(t1.chains[3].total() == 0);

  ChainTable oracle = tor_table(gb_obstructions(ex, 5), ex.alphabet, 3, 5, true);
  CHECK(oracle.dims == t1.dims);
}

TEST_CASE("chain levels are disjoint and satisfy the Euler identity") {
  std::vector<std::pair<PresentationSpec, int>> cases = {{example1_presentation(1), 7},
                                                         {example2_presentation(), 5},
                                                         {example1_presentation(2), 5}};
  for (const auto& [ex, bound] : cases) {
    ObstructionSet obs = gb_obstructions(ex, bound);
    ChainTable table = tor_table(obs, ex.alphabet, 4, bound);
    for (std::size_t s = 0; s < table.chains.size(); ++s)
      for (std::size_t t = s + 1; t < table.chains.size(); ++t)
        for (const auto& w : table.chains[s].all()) CHECK_FALSE(table.chains[t].contains(w));
    auto normal = normal_word_counts(obs, ex.alphabet, bound);
    CHECK(euler_check(table, normal, bound) == RatSeries::constant(1, bound));
  }

  std::mt19937 rng(77);
  Alphabet abc = testing::letters({"a", "b", "c"});
  for (int trial = 0; trial < 10; ++trial) {
    ObstructionSet obs(random_obstructions(rng, 3), 3);
    ChainTable table = tor_table(obs, abc, 7, 7);
    CHECK(euler_check(table, normal_word_counts(obs, abc, 7), 7) == RatSeries::constant(1, 7));
  }
}
