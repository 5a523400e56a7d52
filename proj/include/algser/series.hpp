#pragma once

#include <span>
#include <vector>

#include "algser/freealg.hpp"

namespace algser {

class Grammar;

// Power series c_0 + c_1 z + ... + c_N z^N known exactly up to its bound N.
class RatSeries {
 public:
  explicit RatSeries(int bound = 0);
  RatSeries(std::vector<Rational> coefficients);
  static RatSeries constant(const Rational& c, int bound);
  static RatSeries monomial(const Rational& c, int power, int bound);  // c z^power
  static RatSeries from_counts(std::span<const BigInt> counts);

  int bound() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  // Values stored through this reference must be canonical (GMP's mpq contract).
  Rational& operator[](int k) { return coeffs_.at(static_cast<std::size_t>(k)); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  RatSeries truncated(int bound) const;
  // z^k * this; the bound grows by k.
  RatSeries shifted_up(int k) const;
  // this / z^k after checking the first k coefficients vanish; bound drops by k.
  RatSeries shifted_down(int k) const;

  RatSeries& operator+=(const RatSeries& rhs);
  RatSeries& operator-=(const RatSeries& rhs);
  RatSeries& operator*=(const Rational& c);
  friend RatSeries operator+(RatSeries a, const RatSeries& b) { return a += b; }
  friend RatSeries operator-(RatSeries a, const RatSeries& b) { return a -= b; }
  friend RatSeries operator*(RatSeries a, const Rational& c) { return a *= c; }
  friend RatSeries operator*(const Rational& c, RatSeries a) { return a *= c; }
  friend RatSeries operator*(const RatSeries& a, const RatSeries& b);
  RatSeries operator-() const;

  // Coefficient-wise equality up to the common bound.
  friend bool operator==(const RatSeries& a, const RatSeries& b);
  // First degree <= common bound where the series differ, or -1.
  friend int first_difference(const RatSeries& a, const RatSeries& b);

  // True when every coefficient is a nonnegative integer.
  bool is_counting_series() const;

 private:
  std::vector<Rational> coeffs_;
};

RatSeries series_add(const RatSeries& a, const RatSeries& b);
RatSeries series_mul(const RatSeries& a, const RatSeries& b);
RatSeries series_neg(const RatSeries& a);
RatSeries series_invert(const RatSeries& a);
RatSeries series_sqrt(const RatSeries& a);
RatSeries series_substitute_power(const RatSeries& a, int d);
// num / den where den may have low-order zeros that num shares; bound drops by
// the order of den.
RatSeries series_quotient(const RatSeries& num, const RatSeries& den);

RatSeries dyck_series(int n, int bound);
RatSeries pn_series(int n, int bound);
// 2nq / (2nq - 1 + sqrt(1 - 4nq^2)), removable singularity cleared.
RatSeries pn_surd_series(int n, int bound);
// Sum_k C(2k,k) z^{2k} = 1/sqrt(1 - 4z^2).
RatSeries central_binomial_series(int bound);

// Start symbol's generating function by fixed-point iteration from zero.
// Throws FixedPointError when the iteration fails to stabilize.
RatSeries cfg_series(const Grammar& g, int bound);

// (1 - sum_i (-1)^i H_{L_i})^{-1}
RatSeries hilbert_from_tor(std::span<const RatSeries> tor, int bound);

RatSeries hilbert_paper_formula(int n, int m, int d, const RatSeries& hl, int bound);
RatSeries hilbert_example_closed_form(int example_id, int n, int bound);
RatSeries tor3_remark_series(int n, int d, const RatSeries& hl, int bound);

}  // namespace algser
