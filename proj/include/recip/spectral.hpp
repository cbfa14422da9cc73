#pragma once

// Certified constants of bounded-part composition growth.
//
// alpha_D is the unique positive root of p_D(z) = z^D - z^{D-1} - ... - 1,
// d_D = (alpha_D - 1) / (2 + (D+1)(alpha_D - 2)), and for D >= 2
// |C_{t,D}| = rnd(d_D alpha_D^t) with rnd(x) = floor(x + 1/2).
//
// Everything here works on exact rational intervals; the only floating point
// is the 64-digit diagnostic in lemma33_report.

#include "recip/numeric.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace recip {

class PrecisionExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Closed rational interval [lo, hi].
class Interval {
 public:
  Interval() = default;
  explicit Interval(const Rational& x) : lo_(x), hi_(x) {}
  Interval(Rational lo, Rational hi);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  Rational midpoint() const { return (lo_ + hi_) / 2; }
  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
  bool intersects(const Interval& o) const { return lo_ <= o.hi_ && o.lo_ <= hi_; }

  /// Widens the endpoints outward onto the grid 2^-bits.
  Interval rounded(unsigned bits) const;

  friend Interval operator+(const Interval& x, const Interval& y);
  friend Interval operator-(const Interval& x, const Interval& y);
  friend Interval operator*(const Interval& x, const Interval& y);
  /// Throws std::domain_error when y contains zero.
  friend Interval operator/(const Interval& x, const Interval& y);

 private:
  Rational lo_ = 0, hi_ = 0;
};

/// x^e for x with lo >= 0, rounding outward to 2^-bits after every step.
Interval pow(const Interval& x, unsigned e, unsigned bits);

/// Exact sign of p_D(z).
int sign_of_alpha_polynomial(unsigned depth, const Rational& z);

struct AlphaEnclosure {
  unsigned depth = 0;
  Rational lo, hi;  // p_D(lo) < 0 < p_D(hi)

  Interval interval() const { return {lo, hi}; }
  Rational width() const { return hi - lo; }
};

/// Exact-rational bisection from [2(1 - 2^-D), 2] down to width <= tol.
/// Requires D >= 2.
AlphaEnclosure solve_alpha(unsigned depth, const Rational& tol);

/// Continues bisecting an existing enclosure; endpoints stay dyadic.
AlphaEnclosure refine(AlphaEnclosure e, const Rational& tol);

Interval coefficient_d(const AlphaEnclosure& alpha);

/// Enclosure of d_D with width <= tol.
Interval coefficient_d(unsigned depth, const Rational& tol);

/// Interval value of d_D alpha_D^t from a given enclosure.
Interval closed_form_value(const AlphaEnclosure& alpha, unsigned t, unsigned bits);

/// rnd(d_D alpha_D^t), refining alpha until the value interval determines
/// the rounding. Requires D >= 2. Throws PrecisionExhausted if the
/// refinement cap is hit.
BigCount closed_form_count(unsigned t, unsigned depth);

/// closed_form_count for t = 0..t_max from a single enclosure.
std::vector<BigCount> closed_form_counts(unsigned t_max, unsigned depth);

enum class LimitKind {
  TwoExcursionsDepthD,  // d_D^2 / (alpha_D^D (alpha_D - 1)), parameter D >= 2
  DepthOne2n,           // 1 / (2n)!, parameter n >= 0
};

Interval limit_constant(LimitKind kind, unsigned parameter, const Rational& tol);

struct TwoExcursionBounds {
  Rational lower;
  Rational upper;
};

/// Certified lower and upper estimates for |C_t^{1,D}| obtained by
/// replacing every |C_{m,D}| in the double sum over (k, r) by
/// d_D alpha_D^m -+ 1/2. Requires t >= 1, D >= 2.
TwoExcursionBounds bounds_two_excursions(unsigned t, unsigned depth);

/// Same estimates evaluated term by term over (k, r), without regrouping.
/// Quadratic in t; used as an independent route in tests.
TwoExcursionBounds bounds_two_excursions_direct(unsigned t, unsigned depth);

struct Lemma33Row {
  unsigned t;
  HighFloat term1_ratio;  // d^2 sum_r sum_k alpha^{t-r}       / (t alpha^t)
  HighFloat term2_ratio;  // d sum_r sum_k alpha^{k-1}         / alpha^t
  HighFloat term3_ratio;  // d sum_r sum_k alpha^{t-k-r+1}     / alpha^t
};

struct Lemma33Report {
  unsigned depth;
  HighFloat term1_limit;  // d^2 / (alpha^D (alpha - 1))
  std::vector<Lemma33Row> rows;  // t = D+1 .. t_max
};

/// Growth of the three pieces of the two-excursion estimates, evaluated at
/// 64 significant digits with alpha from a certified enclosure.
Lemma33Report lemma33_report(unsigned depth, unsigned t_max);

}  // namespace recip
