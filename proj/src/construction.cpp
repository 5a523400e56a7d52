#include "algser/construction.hpp"

namespace algser {

namespace {

Alphabet construction_alphabet(const ConstructionParams& p) {
  const int n = p.n;
  const int d = p.d();
  std::vector<Alphabet::Variable> vars;
  auto idx = [](int v) { return std::to_string(v); };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) vars.push_back({"a." + idx(i) + "." + idx(j), d});
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) vars.push_back({"b." + idx(i) + "." + idx(j), d});
  for (int i = 1; i <= n; ++i) vars.push_back({"a." + idx(i), d});
  for (int i = 1; i <= n; ++i) vars.push_back({"b." + idx(i), d});
  vars.push_back({"e", d});
  vars.push_back({"x", d});
  vars.push_back({"y", d});
  for (const auto& v : p.phi.target().variables()) vars.push_back({v.name, 1});
  return Alphabet(std::move(vars));
}

NcPoly binomial(const Word& lead, const Word& tail) { return NcPoly{{lead, 1}, {tail, -1}}; }

Word embed_image(const GeneratorLayout& g, const Word& image) {
  Word out;
  for (Letter l : image) out.push_back(g.t(l + 1));
  return out;
}

// Bracket-alphabet word (with e) into construction letters.
Word embed_brackets(const GeneratorLayout& g, int n, const Word& w) {
  Word out;
  for (Letter l : w) {
    if (l == separator(n))
      out.push_back(g.e());
    else if (l % 2 == 0)
      out.push_back(g.a(l / 2 + 1));
    else
      out.push_back(g.b(l / 2 + 1));
  }
  return out;
}

void check_params(const ConstructionParams& p) {
  if (p.n < 1) throw InvalidInput("construction needs n >= 1");
  if (p.phi.n() != p.n) throw InvalidInput("homomorphism bracket count differs from n");
}

}  // namespace

PresentationSpec build_presentation(const ConstructionParams& p) {
  check_params(p);
  const int n = p.n;
  const GeneratorLayout g(n, p.m());
  Alphabet alphabet = construction_alphabet(p);
  std::vector<NcPoly> rel;

  for (int i = 1; i <= n; ++i) rel.push_back(binomial({g.a_sup(i, i), g.x()}, {g.x(), g.a_sup(i, i)}));
  rel.push_back(binomial({g.b_sup(1, 1), g.x()}, {g.x(), g.e()}));

  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      for (int l = 1; l <= n; ++l) {
        rel.push_back(binomial({g.a_sup(i, j), g.a(l)}, {g.a(i), g.a_sup(l, j)}));
        rel.push_back(binomial({g.a_sup(i, j), g.b(l)}, {g.a(i), g.b_sup(l, j)}));
        rel.push_back(binomial({g.b_sup(i, j), g.a(l)}, {g.b(i), g.a_sup(l, j)}));
        rel.push_back(binomial({g.b_sup(i, j), g.b(l)}, {g.b(i), g.b_sup(l, j)}));
      }
      rel.push_back(binomial({g.a_sup(i, j), g.e()}, {g.a(i), g.b(j)}));
      rel.push_back(binomial({g.b_sup(i, j), g.e()}, {g.b(i), g.b(j)}));
    }

  for (int i = 1; i <= n; ++i) {
    rel.push_back(binomial({g.a(i), g.y()}, Word{g.y()} * embed_image(g, p.phi.image(opener(i)))));
    rel.push_back(binomial({g.b(i), g.y()}, Word{g.y()} * embed_image(g, p.phi.image(closer(i)))));
  }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      rel.push_back(NcPoly::monomial({g.a_sup(i, j), g.y()}));
      rel.push_back(NcPoly::monomial({g.b_sup(i, j), g.y()}));
    }

  rel.push_back(NcPoly::monomial({g.x(), g.y(), g.e()}));

  MonomialOrder order(alphabet);
  return PresentationSpec{std::move(alphabet), std::move(order), std::move(rel), p, std::nullopt};
}

PresentationSpec example1_presentation(int n) {
  auto spec = build_presentation({n, example1_homomorphism(n)});
  spec.preset = PresetInfo{"example1", n};
  return spec;
}

PresentationSpec example2_presentation() {
  auto spec = build_presentation({2, example2_homomorphism()});
  spec.preset = PresetInfo{"example2", 2};
  return spec;
}

PresentationSpec example3_presentation() {
  auto spec = build_presentation({2, example3_homomorphism()});
  spec.preset = PresetInfo{"example3", 2};
  return spec;
}

PresentationSpec preset_presentation(const std::string& name, int n) {
  if (name == "example1") return example1_presentation(n);
  if (name == "example2") return example2_presentation();
  if (name == "example3") return example3_presentation();
  throw InvalidInput("unknown preset '" + name + "'");
}

std::vector<Word> relation_leads(const ConstructionParams& p) {
  PresentationSpec spec = build_presentation(p);
  std::vector<Word> leads;
  const Word xye = spec.relations.back().leading_monomial(spec.order);
  for (const auto& r : spec.relations) {
    Word l = r.leading_monomial(spec.order);
    if (l != xye) leads.push_back(std::move(l));
  }
  return leads;
}

LanguageSlice predicted_gb_monomials(const ConstructionParams& p, int bound) {
  check_params(p);
  const int n = p.n;
  const int d = p.d();
  const GeneratorLayout g(n, p.m());
  LanguageSlice slice;
  slice.bound = bound;
  if (bound < 3 * d) return slice;
  const LanguageSlice pn = enumerate_pn(n, (bound - 3 * d) / d);
  const LanguageSlice lang = image_language(p.phi, bound - 3 * d);
  for (const auto& [plen, pwords] : pn.by_degree) {
    const int room = bound - 3 * d - d * plen;
    for (const auto& [vdeg, vwords] : lang.by_degree) {
      if (vdeg > room) continue;
      for (const Word& pw : pwords)
        for (const Word& v : vwords) {
          Word w = Word{g.x()} * embed_brackets(g, n, pw) * Word{g.y()} * embed_image(g, v) * Word{g.e()};
          slice.insert(3 * d + d * plen + vdeg, std::move(w));
        }
    }
  }
  return slice;
}

std::vector<RatSeries> predicted_tor_series(const ConstructionParams& p, const RatSeries& hl, int bound) {
  check_params(p);
  const int n = p.n;
  const int d = p.d();
  const int m = p.m();
  std::vector<RatSeries> out;
  out.push_back(RatSeries::monomial(2 * n * n + 2 * n + 3, d, bound) + RatSeries::monomial(m, 1, bound));

  const int rest = bound - 3 * d;
  RatSeries tail1(bound), tail2(bound);
  if (rest >= 0) {
    if (hl.bound() < rest) throw InvalidInput("H_L known below the degree required by the Tor series");
    RatSeries core = series_substitute_power(pn_series(n, rest), d) * hl.truncated(rest);
    tail1 = core.shifted_up(3 * d);
    if (rest - d >= 0) tail2 = (core.truncated(rest - d) * Rational(n + 1)).shifted_up(4 * d);
  }
  out.push_back(RatSeries::monomial(4 * n * n * n + 4 * n * n + 3 * n + 1, 2 * d, bound) + tail1);
  out.push_back(tail2);
  out.push_back(RatSeries(bound));
  return out;
}

RatSeries preset_language_series(const std::string& name, int n, int bound) {
  if (name == "example1") return dyck_series(n, bound);
  if (name == "example2") return central_binomial_series(bound);
  if (name == "example3") return series_substitute_power(dyck_series(2, bound), 3);
  throw InvalidInput("unknown preset '" + name + "'");
}

}  // namespace algser
