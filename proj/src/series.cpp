#include "algser/series.hpp"

#include <algorithm>

#include "algser/langkit.hpp"

namespace algser {

RatSeries::RatSeries(int bound) {
  if (bound < 0) throw InvalidInput("series bound must be >= 0");
  coeffs_.assign(static_cast<std::size_t>(bound) + 1, Rational(0));
}

RatSeries::RatSeries(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) throw InvalidInput("series needs at least one coefficient");
  for (auto& c : coeffs_) c.canonicalize();
}

RatSeries RatSeries::constant(const Rational& c, int bound) { return monomial(c, 0, bound); }

RatSeries RatSeries::monomial(const Rational& coeff, int power, int bound) {
  Rational c = coeff;
  c.canonicalize();
  RatSeries s(bound);
  if (power >= 0 && power <= bound) s[power] = c;
  return s;
}

RatSeries RatSeries::from_counts(std::span<const BigInt> counts) {
  std::vector<Rational> c;
  c.reserve(counts.size());
  for (const auto& v : counts) c.emplace_back(v);
  return RatSeries(std::move(c));
}

RatSeries RatSeries::truncated(int bound) const {
  if (bound > this->bound()) throw InvalidInput("cannot extend a series beyond its bound");
  return RatSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + bound + 1));
}

RatSeries RatSeries::shifted_up(int k) const {
  RatSeries out(bound() + k);
  for (int i = 0; i <= bound(); ++i) out[i + k] = coeffs_[i];
  return out;
}

RatSeries RatSeries::shifted_down(int k) const {
  if (k > bound()) throw InternalError("shift exceeds series bound");
  for (int i = 0; i < k; ++i)
    if (sgn(coeffs_[i]) != 0)
      throw InternalError("removable singularity check failed at degree " + std::to_string(i));
  return RatSeries(std::vector<Rational>(coeffs_.begin() + k, coeffs_.end()));
}

RatSeries& RatSeries::operator+=(const RatSeries& rhs) {
  coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

RatSeries& RatSeries::operator-=(const RatSeries& rhs) {
  coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

RatSeries& RatSeries::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

RatSeries operator*(const RatSeries& a, const RatSeries& b) {
  const int n = std::min(a.bound(), b.bound());
  RatSeries out(n);
  for (int i = 0; i <= n; ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (int j = 0; i + j <= n; ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return out;
}

RatSeries RatSeries::operator-() const {
  RatSeries out = *this;
  for (auto& x : out.coeffs_) x = -x;
  return out;
}

bool operator==(const RatSeries& a, const RatSeries& b) { return first_difference(a, b) < 0; }

int first_difference(const RatSeries& a, const RatSeries& b) {
  const int n = std::min(a.bound(), b.bound());
  for (int i = 0; i <= n; ++i)
    if (a.coeffs_[i] != b.coeffs_[i]) return i;
  return -1;
}

bool RatSeries::is_counting_series() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return c.get_den() == 1 && sgn(c) >= 0; });
}

RatSeries series_add(const RatSeries& a, const RatSeries& b) { return a + b; }
RatSeries series_mul(const RatSeries& a, const RatSeries& b) { return a * b; }
RatSeries series_neg(const RatSeries& a) { return -a; }

RatSeries series_invert(const RatSeries& a) {
  if (sgn(a[0]) == 0) throw NotInvertible("series with zero constant term is not invertible");
  const int n = a.bound();
  RatSeries b(n);
  const Rational inv0 = 1 / a[0];
  b[0] = inv0;
  for (int k = 1; k <= n; ++k) {
    Rational acc = 0;
    for (int i = 1; i <= k; ++i)
      if (sgn(a[i]) != 0) acc += a[i] * b[k - i];
    b[k] = -inv0 * acc;
  }
  return b;
}

RatSeries series_sqrt(const RatSeries& a) {
  if (a[0] != 1) throw InvalidInput("series square root needs constant term 1");
  const int n = a.bound();
  // Newton iteration y <- (y + a/y)/2 doubles the number of correct terms.
  RatSeries y = RatSeries::constant(1, n);
  const Rational half(1, 2);
  for (int correct = 1; correct <= n; correct *= 2) y = (y + a * series_invert(y)) * half;
  if (!(y * y == a)) throw InternalError("series square root did not converge");
  return y;
}

RatSeries series_substitute_power(const RatSeries& a, int d) {
  if (d < 1) throw InvalidInput("substitution power must be >= 1");
  const int n = a.bound();
  RatSeries out(n);
  for (int k = 0; k * d <= n; ++k) out[k * d] = a[k];
  return out;
}

RatSeries series_quotient(const RatSeries& num, const RatSeries& den) {
  int order = 0;
  while (order <= den.bound() && sgn(den[order]) == 0) ++order;
  if (order > den.bound()) throw NotInvertible("division by a series that vanishes up to its bound");
  const int n = std::min(num.bound(), den.bound());
  if (order > n) throw InternalError("quotient bound exhausted by the singularity");
  return num.truncated(n).shifted_down(order) * series_invert(den.truncated(n).shifted_down(order));
}

namespace {

// 1 + c z^power, known to `bound`.
RatSeries one_plus(const Rational& c, int power, int bound) {
  return RatSeries::constant(1, bound) + RatSeries::monomial(c, power, bound);
}

}  // namespace

RatSeries dyck_series(int n, int bound) {
  if (n < 1) throw InvalidInput("dyck_series needs n >= 1");
  RatSeries root = series_sqrt(one_plus(-4 * n, 2, bound + 2));
  RatSeries num = RatSeries::constant(1, bound + 2) - root;
  return num.shifted_down(2) * Rational(1, 2 * n);
}

RatSeries pn_series(int n, int bound) {
  RatSeries d = dyck_series(n, bound);
  return series_invert(RatSeries::constant(1, bound) - d.shifted_up(1).truncated(bound));
}

RatSeries pn_surd_series(int n, int bound) {
  const int b = bound + 1;
  RatSeries num = RatSeries::monomial(2 * n, 1, b);
  RatSeries den = RatSeries::monomial(2 * n, 1, b) - RatSeries::constant(1, b) + series_sqrt(one_plus(-4 * n, 2, b));
  return series_quotient(num, den).truncated(bound);
}

RatSeries central_binomial_series(int bound) { return series_invert(series_sqrt(one_plus(-4, 2, bound))); }

RatSeries cfg_series(const Grammar& g, int bound) {
  if (bound < 0) throw InvalidInput("series bound must be >= 0");
  const std::size_t k = g.nonterminals().size();
  std::vector<RatSeries> f(k, RatSeries(bound));
  auto apply = [&](const std::vector<RatSeries>& cur) {
    std::vector<RatSeries> next(k, RatSeries(bound));
    for (const auto& p : g.productions()) {
      RatSeries term = RatSeries::constant(1, bound);
      int shift = 0;
      for (const auto& s : p.rhs) {
        if (s.terminal)
          shift += g.terminals().weight(static_cast<Letter>(s.index));
        else
          term = term * cur[s.index];
      }
      if (shift > bound) continue;
      next[p.lhs] += term.shifted_up(shift).truncated(bound);
    }
    return next;
  };
  const int budget = (bound + 2) * static_cast<int>(std::max<std::size_t>(k, 1)) + 1;
  for (int round = 0; round < budget; ++round) {
    std::vector<RatSeries> next = apply(f);
    std::string moving;
    for (std::size_t i = 0; i < k; ++i)
      if (!(next[i] == f[i])) moving += (moving.empty() ? "" : " ") + g.nonterminals()[i];
    f = std::move(next);
    if (moving.empty()) {
      // F = Phi(F) holds by construction here; check once more explicitly.
      auto check = apply(f);
      for (std::size_t i = 0; i < k; ++i)
        if (!(check[i] == f[i])) throw InternalError("fixed point verification failed");
      return f[g.start()];
    }
    if (round + 1 == budget)
      throw FixedPointError("grammar not proper for fixed-point evaluation: no stabilization after " +
                                std::to_string(budget) + " rounds",
                            moving);
  }
  throw FixedPointError("grammar not proper for fixed-point evaluation", "");
}

RatSeries hilbert_from_tor(std::span<const RatSeries> tor, int bound) {
  RatSeries q = RatSeries::constant(1, bound);
  for (std::size_t i = 0; i < tor.size(); ++i) {
    if (tor[i].bound() < bound) throw InvalidInput("Tor series known below the requested bound");
    if (i % 2 == 0)
      q -= tor[i].truncated(bound);
    else
      q += tor[i].truncated(bound);
  }
  return series_invert(q);
}

namespace {

// z^{3d} (1 - (n+1) z^d) H_{P_n}(z^d) H_L(z), known to `bound`.
RatSeries chain_tail(int n, int d, const RatSeries& hl, int bound) {
  const int rest = bound - 3 * d;
  if (rest < 0) return RatSeries(bound);
  if (hl.bound() < rest) throw InvalidInput("H_L known below the degree required by the formula");
  RatSeries p = series_substitute_power(pn_series(n, rest), d);
  RatSeries core = one_plus(-(n + 1), d, rest) * p * hl.truncated(rest);
  return core.shifted_up(3 * d);
}

}  // namespace

RatSeries hilbert_paper_formula(int n, int m, int d, const RatSeries& hl, int bound) {
  if (n < 1 || m < 1 || d < 1) throw InvalidInput("formula needs n, m, d >= 1");
  if (hl[0] != 1) throw InvalidInput("H_L must have constant term 1");
  RatSeries q = RatSeries::constant(1, bound) - RatSeries::monomial(m, 1, bound) -
                RatSeries::monomial(2 * n * n + 2 * n + 3, d, bound) +
                RatSeries::monomial(4 * n * n * n + 4 * n * n + 3 * n + 1, 2 * d, bound) +
                chain_tail(n, d, hl, bound);
  return series_invert(q);
}

RatSeries hilbert_example_closed_form(int example_id, int n, int bound) {
  switch (example_id) {
    case 1: {
      if (n < 1) throw InvalidInput("example 1 needs n >= 1");
      RatSeries root = series_sqrt(one_plus(-4 * n, 2, bound));
      RatSeries q = RatSeries::constant(1, bound) - RatSeries::monomial(2 * n * n + 4 * n + 3, 1, bound) +
                    RatSeries::monomial(Rational(8 * n * n * n + 8 * n * n + 6 * n + 1, 2), 2, bound) +
                    RatSeries::monomial(1, 3, bound) + (root.shifted_up(2) * Rational(1, 2)).truncated(bound);
      return series_invert(q);
    }
    case 2: {
      RatSeries hl = central_binomial_series(bound);
      RatSeries tail = (one_plus(-3, 1, bound) * pn_surd_series(2, bound) * hl).shifted_up(3).truncated(bound);
      RatSeries q = RatSeries::constant(1, bound) - RatSeries::monomial(17, 1, bound) +
                    RatSeries::monomial(55, 2, bound) + tail;
      return series_invert(q);
    }
    case 3: {
      RatSeries root = series_sqrt(one_plus(-8, 6, bound));
      RatSeries q = RatSeries::constant(1, bound) - RatSeries::monomial(26, 1, bound) -
                    RatSeries::monomial(15, 3, bound) + RatSeries::monomial(Rational(109, 2), 6, bound) +
                    RatSeries::monomial(1, 9, bound) + (root.shifted_up(6) * Rational(1, 2)).truncated(bound);
      return series_invert(q);
    }
    default:
      throw InvalidInput("closed forms exist for examples 1, 2 and 3 only");
  }
}

RatSeries tor3_remark_series(int n, int d, const RatSeries& hl, int bound) {
  return RatSeries::monomial(1, 3 * d, bound) - chain_tail(n, d, hl, bound).truncated(bound);
}

}  // namespace algser
