#pragma once

#include <optional>
#include <string>
#include <vector>

#include "algser/freealg.hpp"
#include "algser/langkit.hpp"
#include "algser/series.hpp"

namespace algser {

struct ConstructionParams {
  int n = 1;
  Homomorphism phi;

  int m() const { return static_cast<int>(phi.m()); }
  int d() const { return phi.d(); }
};

// Letter indices of the generator families in precedence order:
// a.i.j, b.i.j, a.i, b.i, e, x, y, t.k. Within a family, ascending indices
// come first (and are greater).
class GeneratorLayout {
 public:
  GeneratorLayout(int n, int m) : n_(n), m_(m) {}

  Letter a_sup(int i, int j) const { return static_cast<Letter>((i - 1) * n_ + (j - 1)); }
  Letter b_sup(int i, int j) const { return static_cast<Letter>(n_ * n_ + (i - 1) * n_ + (j - 1)); }
  Letter a(int i) const { return static_cast<Letter>(2 * n_ * n_ + (i - 1)); }
  Letter b(int i) const { return static_cast<Letter>(2 * n_ * n_ + n_ + (i - 1)); }
  Letter e() const { return static_cast<Letter>(2 * n_ * n_ + 2 * n_); }
  Letter x() const { return static_cast<Letter>(e() + 1); }
  Letter y() const { return static_cast<Letter>(e() + 2); }
  Letter t(int k) const { return static_cast<Letter>(e() + 3 + (k - 1)); }
  std::size_t size() const { return static_cast<std::size_t>(2 * n_ * n_ + 2 * n_ + 3 + m_); }

 private:
  int n_, m_;
};

struct PresetInfo {
  std::string name;  // example1, example2, example3, or "custom"
  int n = 1;
};

struct PresentationSpec {
  Alphabet alphabet;
  MonomialOrder order;
  std::vector<NcPoly> relations;
  // Present when the presentation came from the construction.
  std::optional<ConstructionParams> params;
  std::optional<PresetInfo> preset;
};

PresentationSpec build_presentation(const ConstructionParams& p);

PresentationSpec example1_presentation(int n);
PresentationSpec example2_presentation();
PresentationSpec example3_presentation();
PresentationSpec preset_presentation(const std::string& name, int n = 1);

// Leading monomials of relations (i)-(iii), in the construction's alphabet.
std::vector<Word> relation_leads(const ConstructionParams& p);

// x p y v e with p in P_n, v in L, total degree <= bound.
LanguageSlice predicted_gb_monomials(const ConstructionParams& p, int bound);

// H_{L_0}..H_{L_3} of the associated monomial algebra.
std::vector<RatSeries> predicted_tor_series(const ConstructionParams& p, const RatSeries& hl, int bound);

// Closed-form H_L for the presets.
RatSeries preset_language_series(const std::string& name, int n, int bound);

}  // namespace algser
