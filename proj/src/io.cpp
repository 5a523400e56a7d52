#include "algser/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace algser {

namespace {

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("malformed ") + what + ": " + e.what());
  }
}

void expect_kind(const Json& j, const char* kind) {
  if (j.contains("kind") && j.at("kind").get<std::string>() != kind)
    throw InvalidInput(std::string("expected a document of kind '") + kind + "'");
}

}  // namespace

Json to_json(const Alphabet& a) {
  Json out = Json::array();
  for (const auto& v : a.variables()) out.push_back({{"name", v.name}, {"weight", v.weight}});
  return out;
}

Alphabet alphabet_from_json(const Json& j) {
  return guarded("alphabet", [&] {
    std::vector<Alphabet::Variable> vars;
    for (const auto& v : j) vars.push_back({v.at("name").get<std::string>(), v.value("weight", 1)});
    return Alphabet(std::move(vars));
  });
}

Json to_json(const Word& w, const Alphabet& a) { return a.names(w); }

Word word_from_json(const Json& j, const Alphabet& a) {
  return guarded("word", [&] {
    auto names = j.get<std::vector<std::string>>();
    return a.parse_word(names);
  });
}

Json to_json(const NcPoly& f, const MonomialOrder& o) {
  std::vector<std::pair<Word, Rational>> terms(f.terms().begin(), f.terms().end());
  std::sort(terms.begin(), terms.end(), [&](const auto& x, const auto& y) { return o.greater(x.first, y.first); });
  Json out = Json::array();
  for (const auto& [w, c] : terms) out.push_back({{"coeff", to_string(c)}, {"word", to_json(w, o.alphabet())}});
  return out;
}

NcPoly poly_from_json(const Json& j, const Alphabet& a) {
  return guarded("polynomial", [&] {
    NcPoly f;
    for (const auto& t : j) f.add_term(word_from_json(t.at("word"), a), parse_rational(t.at("coeff").get<std::string>()));
    return f;
  });
}

Json to_json(const Homomorphism& h) {
  Json images = Json::object();
  for (int i = 1; i <= h.n(); ++i) {
    images["a." + std::to_string(i)] = to_json(h.image(opener(i)), h.target());
    images["b." + std::to_string(i)] = to_json(h.image(closer(i)), h.target());
  }
  Json terminals = Json::array();
  for (const auto& v : h.target().variables()) terminals.push_back(v.name);
  return {{"n", h.n()}, {"terminals", terminals}, {"images", images}};
}

Homomorphism homomorphism_from_json(const Json& j) {
  return guarded("homomorphism", [&] {
    const int n = j.at("n").get<int>();
    if (n < 1) throw InvalidInput("homomorphism needs n >= 1");
    std::vector<Alphabet::Variable> vars;
    for (const auto& t : j.at("terminals")) vars.push_back({t.get<std::string>(), 1});
    Alphabet target(std::move(vars));
    std::vector<Word> images;
    const auto& img = j.at("images");
    for (int i = 1; i <= n; ++i) {
      images.push_back(word_from_json(img.at("a." + std::to_string(i)), target));
      images.push_back(word_from_json(img.at("b." + std::to_string(i)), target));
    }
    return Homomorphism(n, std::move(target), std::move(images));
  });
}

Json to_json(const PresentationSpec& p) {
  std::vector<const NcPoly*> rels;
  for (const auto& r : p.relations) rels.push_back(&r);
  std::stable_sort(rels.begin(), rels.end(), [&](const NcPoly* a, const NcPoly* b) {
    return p.order.less(a->leading_monomial(p.order), b->leading_monomial(p.order));
  });
  Json relations = Json::array();
  for (const NcPoly* r : rels) relations.push_back(to_json(*r, p.order));
  Json out{{"schema", kSchema},
           {"kind", "presentation"},
           {"ordering", "deglex"},
           {"alphabet", to_json(p.alphabet)},
           {"relations", relations}};
  if (p.params) out["construction"] = {{"n", p.params->n}, {"homomorphism", to_json(p.params->phi)}};
  if (p.preset) out["preset"] = {{"name", p.preset->name}, {"n", p.preset->n}};
  return out;
}

PresentationSpec presentation_from_json(const Json& j) {
  return guarded("presentation", [&] {
    expect_kind(j, "presentation");
    if (j.value("ordering", std::string("deglex")) != "deglex") throw InvalidInput("only deglex ordering is supported");
    if (j.contains("construction")) {
      const auto& c = j.at("construction");
      ConstructionParams params{c.at("n").get<int>(), homomorphism_from_json(c.at("homomorphism"))};
      PresentationSpec spec = build_presentation(params);
      if (j.contains("preset"))
        spec.preset = PresetInfo{j.at("preset").at("name").get<std::string>(), j.at("preset").value("n", params.n)};
      // Relations in the file win over the rebuilt ones; the metadata only drives verification.
      if (j.contains("relations")) {
        Alphabet a = alphabet_from_json(j.at("alphabet"));
        if (!(a == spec.alphabet)) throw InvalidInput("alphabet does not match the construction metadata");
        spec.relations.clear();
        for (const auto& r : j.at("relations")) spec.relations.push_back(poly_from_json(r, spec.alphabet));
      }
      return spec;
    }
    Alphabet a = alphabet_from_json(j.at("alphabet"));
    std::vector<NcPoly> rels;
    for (const auto& r : j.value("relations", Json::array())) rels.push_back(poly_from_json(r, a));
    MonomialOrder order(a);
    return PresentationSpec{std::move(a), std::move(order), std::move(rels), std::nullopt, std::nullopt};
  });
}

Json to_json(const TruncatedGB& gb) {
  Json elements = Json::array();
  const Alphabet& a = gb.order.alphabet();
  for (std::size_t i = 0; i < gb.elements.size(); ++i)
    elements.push_back({{"lead", to_json(gb.leads[i], a)},
                        {"degree", a.degree(gb.leads[i])},
                        {"poly", to_json(gb.elements[i], gb.order)}});
  return {{"bound", gb.bound}, {"elements", elements}, {"lead_count", gb.leads.size()}};
}

Json to_json(const ChainTable& t, const Alphabet& a, bool include_words) {
  Json chains = Json::object();
  if (include_words) {
    for (std::size_t k = 0; k < t.chains.size(); ++k) {
      Json by_degree = Json::object();
      for (const auto& [deg, words] : t.chains[k].by_degree) {
        Json list = Json::array();
        for (const auto& w : words) list.push_back(to_json(w, a));
        by_degree[std::to_string(deg)] = list;
      }
      chains[std::to_string(k)] = by_degree;
    }
  }
  Json dims = Json::array();
  for (const auto& row : t.dims) {
    Json r = Json::array();
    for (const auto& c : row) r.push_back(c.get_str());
    dims.push_back(r);
  }
  Json out{{"bound", t.bound}, {"dims", dims}};
  if (include_words) out["chains"] = chains;
  return out;
}

Json to_json(const RatSeries& s) {
  Json c = Json::array();
  for (const auto& q : s.coefficients()) c.push_back(to_string(q));
  return {{"bound", s.bound()}, {"coefficients", c}};
}

RatSeries series_from_json(const Json& j) {
  return guarded("series", [&] {
    std::vector<Rational> c;
    for (const auto& q : j.at("coefficients")) c.push_back(parse_rational(q.get<std::string>()));
    return RatSeries(std::move(c));
  });
}

Json to_json(const Grammar& g) {
  Json prods = Json::array();
  auto name = [&](const Symbol& s) {
    return s.terminal ? g.terminals().name(static_cast<Letter>(s.index)) : g.nonterminals()[s.index];
  };
  for (const auto& p : g.productions()) {
    Json rhs = Json::array();
    for (const auto& s : p.rhs) rhs.push_back(name(s));
    prods.push_back({{"lhs", g.nonterminals()[p.lhs]}, {"rhs", rhs}});
  }
  Json weights = Json::object();
  Json terminals = Json::array();
  for (const auto& v : g.terminals().variables()) {
    weights[v.name] = v.weight;
    terminals.push_back(v.name);
  }
  return {{"schema", kSchema},
          {"kind", "grammar"},
          {"nonterminals", g.nonterminals()},
          {"start", g.nonterminals()[g.start()]},
          {"productions", prods},
          {"terminals", terminals},
          {"weights", weights}};
}

Grammar grammar_from_json(const Json& j) {
  return guarded("grammar", [&] {
    expect_kind(j, "grammar");
    auto nts = j.at("nonterminals").get<std::vector<std::string>>();
    std::vector<Grammar::RawProduction> prods;
    for (const auto& p : j.at("productions"))
      prods.push_back({p.at("lhs").get<std::string>(), p.value("rhs", std::vector<std::string>{})});
    // Terminal order: explicit list if given, else the weights map order.
    const Json weights = j.value("weights", Json::object());
    std::vector<std::string> names;
    if (j.contains("terminals"))
      names = j.at("terminals").get<std::vector<std::string>>();
    else
      for (const auto& [k, v] : weights.items()) names.push_back(k);
    for (const auto& p : prods)
      for (const auto& s : p.rhs)
        if (std::find(nts.begin(), nts.end(), s) == nts.end() && std::find(names.begin(), names.end(), s) == names.end())
          names.push_back(s);
    std::vector<Alphabet::Variable> vars;
    for (const auto& n : names) vars.push_back({n, weights.contains(n) ? weights.at(n).get<int>() : 1});
    return Grammar(std::move(nts), j.at("start").get<std::string>(), prods, Alphabet(std::move(vars)));
  });
}

ObstructionFile obstructions_from_json(const Json& j) {
  return guarded("obstruction file", [&] {
    expect_kind(j, "obstructions");
    Alphabet a = alphabet_from_json(j.at("alphabet"));
    std::vector<Word> words;
    for (const auto& w : j.at("words")) words.push_back(word_from_json(w, a));
    ObstructionSet obs(std::move(words), a.size());
    return ObstructionFile{std::move(a), std::move(obs)};
  });
}

Json obstructions_to_json(const ObstructionSet& obs, const Alphabet& a) {
  Json words = Json::array();
  for (const auto& w : obs.words()) words.push_back(to_json(w, a));
  return {{"schema", kSchema}, {"kind", "obstructions"}, {"alphabet", to_json(a)}, {"words", words}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw InvalidInput("'" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace algser
