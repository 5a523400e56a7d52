#include "algser/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "algser/io.hpp"

namespace algser::cli {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

bool guard_overridden(bool force) {
  if (force) return true;
  const char* env = std::getenv("ALGSER_GUARD_OVERRIDE");
  return env != nullptr && std::string(env) == "1";
}

void check_degree(int bound, int cap, bool force, const std::string& what) {
  if (bound < 0) throw UsageError("degree bound must be >= 0");
  if (bound > cap && !guard_overridden(force))
    throw GuardExceeded(what + " degree " + std::to_string(bound) + " exceeds the guard " + std::to_string(cap) +
                        " (use --force or ALGSER_GUARD_OVERRIDE=1)");
}

struct InputOptions {
  std::string in;
  std::string preset;
  int n = 1;
};

void add_input_options(CLI::App* cmd, InputOptions& opt) {
  cmd->add_option("--in", opt.in, "Presentation JSON file");
  cmd->add_option("--preset", opt.preset, "Built-in construction: example1, example2, example3");
  cmd->add_option("--n", opt.n, "Bracket kinds for example1")->check(CLI::PositiveNumber);
}

PresentationSpec load_presentation(const InputOptions& opt) {
  if (!opt.preset.empty() && !opt.in.empty()) throw UsageError("give either --in or --preset, not both");
  if (!opt.preset.empty()) {
    try {
      return preset_presentation(opt.preset, opt.n);
    } catch (const InvalidInput& e) {
      throw UsageError(e.what());
    }
  }
  if (!opt.in.empty()) return presentation_from_json(read_json_file(opt.in));
  throw UsageError("an input is required: --in FILE or --preset NAME");
}

Json provenance(const PresentationSpec& spec) {
  if (spec.preset) return {{"name", spec.preset->name}, {"n", spec.preset->n}};
  return nullptr;
}

void emit(const Json& j, const std::string& path, std::ostream& out) {
  const std::string text = j.dump(2) + "\n";
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw InvalidInput("cannot write '" + path + "'");
  f << text;
}

Json series_document(const RatSeries& s, const std::string& method) {
  Json j = to_json(s);
  j["method"] = method;
  j["counting_series"] = s.is_counting_series();
  return j;
}

// ---- construct ----

struct ConstructOptions {
  std::string preset;
  int n = 1;
  std::string params;
  std::string out;
};

int cmd_construct(const ConstructOptions& opt, std::ostream& out) {
  PresentationSpec spec = [&] {
    if (!opt.preset.empty()) {
      InputOptions in{"", opt.preset, opt.n};
      return load_presentation(in);
    }
    if (!opt.params.empty()) {
      Json j = read_json_file(opt.params);
      try {
        const Json& h = j.contains("homomorphism") ? j.at("homomorphism") : j;
        Homomorphism phi = homomorphism_from_json(h);
        return build_presentation({phi.n(), phi});
      } catch (const Json::exception& e) {
        throw InvalidInput(std::string("malformed params file: ") + e.what());
      }
    }
    throw UsageError("construct needs --preset NAME or --params FILE");
  }();
  emit(to_json(spec), opt.out, out);
  return kSuccess;
}

// ---- gb ----

struct GbOptions {
  InputOptions input;
  int degree = 8;
  bool force = false;
  std::string out;
};

int cmd_gb(const GbOptions& opt, const Limits& lim, std::ostream& out) {
  check_degree(opt.degree, lim.gb_degree, opt.force, "Groebner basis");
  PresentationSpec spec = load_presentation(opt.input);
  TruncatedGB gb = buchberger_truncated(spec.relations, spec.order, opt.degree);
  Json j = to_json(gb);
  j["schema"] = kSchema;
  j["kind"] = "groebner_basis";
  j["preset"] = provenance(spec);
  int code = kSuccess;
  if (spec.params) {
    std::set<Word> expected;
    for (const Word& w : relation_leads(*spec.params))
      if (spec.alphabet.degree(w) <= opt.degree) expected.insert(w);
    for (const Word& w : predicted_gb_monomials(*spec.params, opt.degree).all()) expected.insert(w);
    std::set<Word> actual(gb.leads.begin(), gb.leads.end());
    Json missing = Json::array(), unexpected = Json::array();
    for (const Word& w : expected)
      if (!actual.count(w)) missing.push_back(to_json(w, spec.alphabet));
    for (const Word& w : actual)
      if (!expected.count(w)) unexpected.push_back(to_json(w, spec.alphabet));
    const bool match = missing.empty() && unexpected.empty();
    j["verification"] = {{"verdict", match ? "MATCH" : "MISMATCH"},
                         {"expected_count", expected.size()},
                         {"missing", missing},
                         {"unexpected", unexpected}};
    if (!match) code = kMismatch;
  }
  emit(j, opt.out, out);
  return code;
}

// ---- chains ----

struct ChainsOptions {
  InputOptions input;
  std::string obstructions;
  int max_t = 4;
  int degree = 6;
  bool oracle = false;
  bool dims_only = false;
  bool force = false;
  std::string out;
};

int cmd_chains(const ChainsOptions& opt, const Limits& lim, std::ostream& out) {
  check_degree(opt.degree, lim.gb_degree, opt.force, "chain");
  if (opt.max_t < 0) throw UsageError("--max-t must be >= 0");
  std::optional<ObstructionFile> file;
  std::optional<PresentationSpec> spec;
  if (!opt.obstructions.empty()) {
    file = obstructions_from_json(read_json_file(opt.obstructions));
  } else {
    spec = load_presentation(opt.input);
    TruncatedGB gb = buchberger_truncated(spec->relations, spec->order, opt.degree);
    file = ObstructionFile{spec->alphabet, obstructions_of(gb)};
  }
  OracleGuard guard;
  guard.force = guard_overridden(opt.force);
  ChainTable table = tor_table(file->obstructions, file->alphabet, opt.max_t, opt.degree, opt.oracle, guard);
  Json j = to_json(table, file->alphabet, !opt.dims_only);
  j["schema"] = kSchema;
  j["kind"] = "chain_table";
  j["max_t"] = opt.max_t;
  j["method"] = opt.oracle ? "oracle" : "enumerator";
  j["preset"] = spec ? provenance(*spec) : Json(nullptr);
  emit(j, opt.out, out);
  return kSuccess;
}

// ---- hilbert ----

struct HilbertOptions {
  InputOptions input;
  std::string method = "normalwords";
  std::vector<std::string> compare;
  int degree = -1;
  std::string format = "json";
  bool force = false;
  std::string out;
};

bool gb_coupled(const std::string& method) { return method == "normalwords" || method == "euler"; }

int cmd_hilbert(const HilbertOptions& opt, const Limits& lim, std::ostream& out) {
  std::vector<std::string> methods = opt.compare.empty() ? std::vector<std::string>{opt.method} : opt.compare;
  bool any_gb = false;
  for (const auto& m : methods) {
    if (m != "normalwords" && m != "euler" && m != "formula" && m != "closedform")
      throw UsageError("unknown method '" + m + "'");
    any_gb = any_gb || gb_coupled(m);
  }
  const int bound = opt.degree >= 0 ? opt.degree : (any_gb ? 8 : 30);
  check_degree(bound, any_gb ? lim.gb_degree : lim.series_degree, opt.force, "Hilbert series");
  PresentationSpec spec = load_presentation(opt.input);

  std::vector<RatSeries> results;
  for (const auto& m : methods) results.push_back(hilbert_by_method(spec, m, bound));

  if (opt.format == "text") {
    for (std::size_t i = 0; i < methods.size(); ++i) {
      out << "# method " << methods[i] << " bound " << bound << "\n";
      for (int k = 0; k <= results[i].bound(); ++k) out << k << "\t" << to_string(results[i][k]) << "\n";
    }
  }

  Json j{{"schema", kSchema}, {"kind", "hilbert_series"}, {"bound", bound}, {"preset", provenance(spec)}};
  int code = kSuccess;
  if (opt.compare.empty()) {
    j["method"] = methods[0];
    j["series"] = series_document(results[0], methods[0]);
  } else {
    Json per = Json::object();
    int first = -1;
    for (std::size_t i = 0; i < methods.size(); ++i) {
      per[methods[i]] = series_document(results[i], methods[i]);
      int diff = first_difference(results[0], results[i]);
      if (diff >= 0 && (first < 0 || diff < first)) first = diff;
    }
    j["methods"] = per;
    j["verdict"] = first < 0 ? "AGREE" : "DISAGREE";
    j["first_disagreement"] = first < 0 ? Json(nullptr) : Json(first);
    if (first >= 0) code = kMismatch;
  }
  if (opt.format == "json") emit(j, opt.out, out);
  else if (!opt.out.empty()) emit(j, opt.out, out);
  if (opt.format == "text" && !opt.compare.empty()) out << (code == kSuccess ? "AGREE" : "DISAGREE") << "\n";
  return code;
}

// ---- langfun ----

struct LangfunOptions {
  std::string grammar;
  std::string builtin;
  int degree = 30;
  int enumerate = -1;
  bool force = false;
  std::string out;
};

Grammar builtin_grammar(const std::string& name) {
  if (name == "dyck1") return dyck_grammar(1);
  if (name == "dyck2") return dyck_grammar(2);
  if (name == "example2") return example2_grammar();
  if (name == "example3") return example3_grammar();
  throw UsageError("unknown builtin grammar '" + name + "'");
}

int cmd_langfun(const LangfunOptions& opt, const Limits& lim, std::ostream& out) {
  check_degree(opt.degree, lim.series_degree, opt.force, "series");
  if (opt.grammar.empty() == opt.builtin.empty()) throw UsageError("give exactly one of GRAMMAR or --builtin");
  Grammar g = opt.builtin.empty() ? grammar_from_json(read_json_file(opt.grammar)) : builtin_grammar(opt.builtin);
  RatSeries s = cfg_series(g, opt.degree);
  Json j{{"schema", kSchema}, {"kind", "language_series"}, {"bound", opt.degree}, {"series", to_json(s)}};
  int code = kSuccess;
  if (opt.enumerate >= 0) {
    const int m = std::min(opt.enumerate, opt.degree);
    double words = 1;
    for (int k = 0; k < m; ++k) words *= static_cast<double>(g.terminals().size());
    if (words > 2e6 && !guard_overridden(opt.force)) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3g", words);
      throw GuardExceeded(std::string("enumeration cross-check would visit about ") + buf + " words");
    }
    std::vector<BigInt> counts(static_cast<std::size_t>(m) + 1, 0);
    for (const Word& w : all_words(g.terminals(), m))
      if (membership(g, w)) counts[g.terminals().degree(w)] += 1;
    RatSeries enumerated = RatSeries::from_counts(counts);
    const int diff = first_difference(enumerated, s);
    Json c = Json::array();
    for (const auto& v : counts) c.push_back(v.get_str());
    j["enumeration"] = {{"bound", m},
                        {"counts", c},
                        {"verdict", diff < 0 ? "AGREE" : "DISAGREE"},
                        {"first_disagreement", diff < 0 ? Json(nullptr) : Json(diff)}};
    if (diff >= 0) code = kMismatch;
  }
  emit(j, opt.out, out);
  return code;
}

}  // namespace

ChainTable full_chain_table(const ObstructionSet& obs, const Alphabet& a, int bound) {
  ChainTable table;
  table.bound = bound;
  for (int t = 0; t <= bound; ++t) {
    LanguageSlice s = chain_language(obs, a, t, bound);
    const bool empty = s.total() == 0;
    table.dims.push_back(s.counts());
    table.chains.push_back(std::move(s));
    if (empty && t > 0) break;
  }
  return table;
}

RatSeries hilbert_by_method(const PresentationSpec& spec, const std::string& method, int bound) {
  if (method == "normalwords" || method == "euler") {
    TruncatedGB gb = buchberger_truncated(spec.relations, spec.order, bound);
    ObstructionSet obs = obstructions_of(gb);
    if (method == "normalwords") return RatSeries::from_counts(normal_word_counts(obs, spec.alphabet, bound));
    ChainTable table = full_chain_table(obs, spec.alphabet, bound);
    std::vector<RatSeries> tor;
    for (const auto& d : table.dims) tor.push_back(RatSeries::from_counts(d));
    return hilbert_from_tor(tor, bound);
  }
  if (method == "formula") {
    if (!spec.params) throw UsageError("method 'formula' needs construction metadata");
    const auto& p = *spec.params;
    RatSeries hl = spec.preset ? preset_language_series(spec.preset->name, spec.preset->n, bound)
                               : RatSeries::from_counts(image_language(p.phi, bound).counts());
    return hilbert_paper_formula(p.n, p.m(), p.d(), hl, bound);
  }
  if (method == "closedform") {
    if (!spec.preset) throw UsageError("method 'closedform' is available for presets only");
    const std::string& name = spec.preset->name;
    int id = name == "example1" ? 1 : name == "example2" ? 2 : name == "example3" ? 3 : 0;
    if (id == 0) throw UsageError("no closed form for preset '" + name + "'");
    return hilbert_example_closed_form(id, spec.preset->n, bound);
  }
  throw UsageError("unknown method '" + method + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const Limits lim;
  CLI::App app{"Finitely presented algebras from context-free languages: Groebner bases, chains, Hilbert series"};
  app.require_subcommand(1);

  ConstructOptions construct;
  auto* c = app.add_subcommand("construct", "Emit the presentation of a construction");
  c->add_option("--preset", construct.preset, "example1, example2 or example3");
  c->add_option("--n", construct.n, "Bracket kinds for example1")->check(CLI::PositiveNumber);
  c->add_option("--params", construct.params, "Homomorphism JSON file");
  c->add_option("--out", construct.out, "Output file (default stdout)");

  GbOptions gb;
  auto* g = app.add_subcommand("gb", "Truncated Groebner basis, verified against the predicted leads for constructions");
  add_input_options(g, gb.input);
  g->add_option("--degree", gb.degree, "Degree bound N");
  g->add_flag("--force", gb.force, "Ignore the degree guard");
  g->add_option("--out", gb.out, "Output file");

  ChainsOptions chains;
  auto* ch = app.add_subcommand("chains", "Chain languages L_t of the associated monomial algebra");
  add_input_options(ch, chains.input);
  ch->add_option("--obstructions", chains.obstructions, "Obstruction JSON file instead of a presentation");
  ch->add_option("--max-t", chains.max_t, "Largest chain index");
  ch->add_option("--degree", chains.degree, "Degree bound N");
  ch->add_flag("--oracle", chains.oracle, "Brute-force set formulas (small inputs only)");
  ch->add_flag("--dims-only", chains.dims_only, "Emit dimensions without the chain words");
  ch->add_flag("--force", chains.force, "Ignore guards");
  ch->add_option("--out", chains.out, "Output file");

  HilbertOptions hilbert;
  auto* h = app.add_subcommand("hilbert", "Hilbert series by normal words, chains, formula or closed form");
  add_input_options(h, hilbert.input);
  h->add_option("--method", hilbert.method, "normalwords | euler | formula | closedform");
  h->add_option("--compare", hilbert.compare, "Comma separated methods to cross-check")->delimiter(',');
  h->add_option("--degree", hilbert.degree, "Degree bound N (default 8 with a Groebner step, else 30)");
  h->add_option("--format", hilbert.format, "json | text")->check(CLI::IsMember({"json", "text"}));
  h->add_flag("--force", hilbert.force, "Ignore the degree guard");
  h->add_option("--out", hilbert.out, "Output file");

  LangfunOptions lang;
  auto* l = app.add_subcommand("langfun", "Generating function of an unambiguous grammar");
  l->add_option("grammar", lang.grammar, "Grammar JSON file");
  l->add_option("--builtin", lang.builtin, "dyck1 | dyck2 | example2 | example3");
  l->add_option("--degree", lang.degree, "Degree bound N");
  l->add_option("--enumerate", lang.enumerate, "Cross-check against membership-filtered enumeration up to this degree");
  l->add_flag("--force", lang.force, "Ignore guards");
  l->add_option("--out", lang.out, "Output file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    if (c->parsed()) return cmd_construct(construct, out);
    if (g->parsed()) return cmd_gb(gb, lim, out);
    if (ch->parsed()) return cmd_chains(chains, lim, out);
    if (h->parsed()) return cmd_hilbert(hilbert, lim, out);
    if (l->parsed()) return cmd_langfun(lang, lim, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << "\n";
    return kUsage;
  } catch (const GrammarError& e) {
    err << "grammar error: " << e.what() << " (symbol " << e.symbol() << ")\n";
    return kUsage;
  } catch (const GuardExceeded& e) {
    err << "guard: " << e.what() << "\n";
    return kGuard;
  } catch (const FixedPointError& e) {
    err << "fixed point failure: " << e.what() << "\n  nonterminals still moving: " << e.trace() << "\n";
    return kNumeric;
  } catch (const Error& e) {
    err << "numeric failure: " << e.what() << "\n";
    return kNumeric;
  }
  err << "no command given\n";
  return kUsage;
}

}  // namespace algser::cli
