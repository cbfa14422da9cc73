#include "recip/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace recip {

namespace {

Rational round_down(const Rational& x, unsigned bits) {
  BigInt scaled = x.get_num() << bits;
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), x.get_den_mpz_t());
  return Rational(q, BigInt(1) << bits);
}

Rational round_up(const Rational& x, unsigned bits) {
  BigInt scaled = x.get_num() << bits;
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), x.get_den_mpz_t());
  return Rational(q, BigInt(1) << bits);
}

unsigned bit_length(unsigned long x) {
  unsigned n = 0;
  while (x) {
    ++n;
    x >>= 1;
  }
  return n;
}

// Enclosure width 2^-bits is enough for width(d alpha^t) well below 1/2.
unsigned bits_for_height(unsigned t) { return t + bit_length(t + 1) + 8; }

constexpr unsigned kGuardBits = 16;
constexpr unsigned kRefineStepBits = 16;
constexpr int kRefineCap = 40;

bool rounding_determined(const Interval& x, BigCount& out) {
  if (x.width() >= Rational(1, 2)) return false;
  const Rational half(1, 2);
  BigInt a = floor(x.lo() + half);
  BigInt b = floor(x.hi() + half);
  if (a != b) return false;
  out = std::move(a);
  return true;
}

void require_depth(unsigned depth, const char* where) {
  if (depth < 2) throw std::invalid_argument(std::string(where) + ": depth must be >= 2");
}

}  // namespace

Interval::Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_ > hi_) throw std::invalid_argument("Interval: lo > hi");
}

Interval Interval::rounded(unsigned bits) const {
  return {round_down(lo_, bits), round_up(hi_, bits)};
}

Interval operator+(const Interval& x, const Interval& y) {
  return {x.lo_ + y.lo_, x.hi_ + y.hi_};
}

Interval operator-(const Interval& x, const Interval& y) {
  return {x.lo_ - y.hi_, x.hi_ - y.lo_};
}

Interval operator*(const Interval& x, const Interval& y) {
  if (sgn(x.lo_) >= 0 && sgn(y.lo_) >= 0) return {x.lo_ * y.lo_, x.hi_ * y.hi_};
  const Rational c[4] = {x.lo_ * y.lo_, x.lo_ * y.hi_, x.hi_ * y.lo_, x.hi_ * y.hi_};
  return {*std::min_element(c, c + 4), *std::max_element(c, c + 4)};
}

Interval operator/(const Interval& x, const Interval& y) {
  if (y.contains(0)) throw std::domain_error("Interval division by an interval containing 0");
  return x * Interval(1 / y.hi_, 1 / y.lo_);
}

Interval pow(const Interval& x, unsigned e, unsigned bits) {
  if (sgn(x.lo()) < 0) throw std::domain_error("pow: interval must be nonnegative");
  Interval acc(Rational(1));
  Interval base = x;
  while (e) {
    if (e & 1U) acc = (acc * base).rounded(bits);
    e >>= 1;
    if (e) base = (base * base).rounded(bits);
  }
  return acc;
}

int sign_of_alpha_polynomial(unsigned depth, const Rational& z) {
  // q^D p(m/q) = m^D - sum_{i<D} m^i q^{D-i}, by Horner.
  const BigInt& m = z.get_num();
  const BigInt& q = z.get_den();
  BigInt acc = 1;
  BigInt qpow = 1;
  for (unsigned i = 0; i < depth; ++i) {
    qpow *= q;
    acc = acc * m - qpow;
  }
  return sgn(acc);
}

AlphaEnclosure refine(AlphaEnclosure e, const Rational& tol) {
  if (sgn(tol) <= 0) throw std::invalid_argument("refine: tolerance must be positive");
  while (e.hi - e.lo > tol) {
    Rational mid = (e.lo + e.hi) / 2;
    const int s = sign_of_alpha_polynomial(e.depth, mid);
    if (s < 0) {
      e.lo = std::move(mid);
    } else if (s > 0) {
      e.hi = std::move(mid);
    } else {
      throw std::logic_error("refine: hit an exact rational root");
    }
  }
  return e;
}

AlphaEnclosure solve_alpha(unsigned depth, const Rational& tol) {
  require_depth(depth, "solve_alpha");
  AlphaEnclosure e;
  e.depth = depth;
  e.lo = 2 - pow2(1 - static_cast<long>(depth));
  e.hi = 2;
  if (sign_of_alpha_polynomial(depth, e.lo) >= 0 || sign_of_alpha_polynomial(depth, e.hi) <= 0)
    throw std::logic_error("solve_alpha: initial bracket does not straddle the root");
  return refine(std::move(e), tol);
}

Interval coefficient_d(const AlphaEnclosure& alpha) {
  const Interval a = alpha.interval();
  const Interval one(Rational(1)), two(Rational(2));
  const Interval scale{Rational(alpha.depth + 1)};
  return (a - one) / (two + scale * (a - two));
}

Interval coefficient_d(unsigned depth, const Rational& tol) {
  require_depth(depth, "coefficient_d");
  Rational alpha_tol = tol;
  AlphaEnclosure alpha = solve_alpha(depth, alpha_tol);
  for (int i = 0; i < kRefineCap * 4; ++i) {
    Interval d = coefficient_d(alpha);
    if (d.width() <= tol) return d;
    alpha_tol /= 256;
    alpha = refine(std::move(alpha), alpha_tol);
  }
  throw PrecisionExhausted("coefficient_d: refinement cap reached");
}

Interval closed_form_value(const AlphaEnclosure& alpha, unsigned t, unsigned bits) {
  return (coefficient_d(alpha) * pow(alpha.interval(), t, bits)).rounded(bits);
}

BigCount closed_form_count(unsigned t, unsigned depth) {
  require_depth(depth, "closed_form_count");
  unsigned precision = bits_for_height(t);
  AlphaEnclosure alpha = solve_alpha(depth, pow2(-static_cast<long>(precision)));
  for (int i = 0; i < kRefineCap; ++i) {
    BigCount out;
    if (rounding_determined(closed_form_value(alpha, t, precision + kGuardBits), out))
      return out;
    precision += kRefineStepBits;
    alpha = refine(std::move(alpha), pow2(-static_cast<long>(precision)));
  }
  throw PrecisionExhausted("closed_form_count: refinement cap reached at t=" +
                           std::to_string(t));
}

std::vector<BigCount> closed_form_counts(unsigned t_max, unsigned depth) {
  require_depth(depth, "closed_form_counts");
  const unsigned precision = bits_for_height(t_max);
  const unsigned bits = precision + kGuardBits;
  const AlphaEnclosure alpha = solve_alpha(depth, pow2(-static_cast<long>(precision)));
  const Interval d = coefficient_d(alpha);
  const Interval a = alpha.interval();
  std::vector<BigCount> out;
  out.reserve(t_max + 1);
  Interval power(Rational(1));
  for (unsigned t = 0; t <= t_max; ++t) {
    BigCount value;
    if (!rounding_determined((d * power).rounded(bits), value))
      value = closed_form_count(t, depth);
    out.push_back(std::move(value));
    power = (power * a).rounded(bits);
  }
  return out;
}

Interval limit_constant(LimitKind kind, unsigned parameter, const Rational& tol) {
  if (sgn(tol) <= 0) throw std::invalid_argument("limit_constant: tolerance must be positive");
  if (kind == LimitKind::DepthOne2n) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), 2UL * parameter);
    return Interval(Rational(BigInt(1), f));
  }
  require_depth(parameter, "limit_constant");
  Rational alpha_tol = tol;
  AlphaEnclosure alpha = solve_alpha(parameter, alpha_tol);
  const long tol_bits = static_cast<long>(mpz_sizeinbase(tol.get_den_mpz_t(), 2)) -
                        static_cast<long>(mpz_sizeinbase(tol.get_num_mpz_t(), 2));
  const unsigned bits = 64 + static_cast<unsigned>(std::max(0L, tol_bits));
  for (int i = 0; i < kRefineCap * 4; ++i) {
    const Interval a = alpha.interval();
    const Interval d = coefficient_d(alpha);
    const Interval value =
        (d * d / (pow(a, parameter, bits) * (a - Interval(Rational(1))))).rounded(bits);
    if (value.width() <= tol) return value;
    alpha_tol /= 256;
    alpha = refine(std::move(alpha), alpha_tol);
  }
  throw PrecisionExhausted("limit_constant: refinement cap reached");
}

namespace {

struct EstimateTerms {
  std::vector<Interval> minus;  // d alpha^m - 1/2
  std::vector<Interval> plus;   // d alpha^m + 1/2
  unsigned bits;
};

EstimateTerms estimate_terms(unsigned top, unsigned depth) {
  const unsigned precision = bits_for_height(top) + 64;
  const unsigned bits = precision + kGuardBits;
  const AlphaEnclosure alpha = solve_alpha(depth, pow2(-static_cast<long>(precision)));
  const Interval d = coefficient_d(alpha);
  const Interval a = alpha.interval();
  const Interval half(Rational(1, 2));
  EstimateTerms terms{{}, {}, bits};
  Interval power(Rational(1));
  for (unsigned m = 0; m <= top; ++m) {
    const Interval value = (d * power).rounded(bits);
    terms.minus.push_back(value - half);
    terms.plus.push_back(value + half);
    power = (power * a).rounded(bits);
  }
  return terms;
}

// sum_{i+j <= top} x[i] x[j] = sum_i x[i] (x[0] + ... + x[top-i])
Interval triangle_sum(const std::vector<Interval>& x, unsigned top, unsigned bits) {
  std::vector<Interval> prefix;
  prefix.reserve(top + 1);
  Interval run(Rational(0));
  for (unsigned m = 0; m <= top; ++m) {
    run = run + x[m];
    prefix.push_back(run);
  }
  Interval sum(Rational(0));
  for (unsigned i = 0; i <= top; ++i) sum = (sum + x[i] * prefix[top - i]).rounded(bits);
  return sum;
}

}  // namespace

TwoExcursionBounds bounds_two_excursions(unsigned t, unsigned depth) {
  require_depth(depth, "bounds_two_excursions");
  if (t == 0) throw std::invalid_argument("bounds_two_excursions: t must be >= 1");
  if (t <= depth) return {0, 0};
  const unsigned top = t - depth - 1;
  const EstimateTerms terms = estimate_terms(top, depth);
  return {triangle_sum(terms.minus, top, terms.bits).lo(),
          triangle_sum(terms.plus, top, terms.bits).hi()};
}

TwoExcursionBounds bounds_two_excursions_direct(unsigned t, unsigned depth) {
  require_depth(depth, "bounds_two_excursions_direct");
  if (t == 0) throw std::invalid_argument("bounds_two_excursions_direct: t must be >= 1");
  if (t <= depth) return {0, 0};
  const EstimateTerms terms = estimate_terms(t - depth - 1, depth);
  Interval lower(Rational(0)), upper(Rational(0));
  for (unsigned r = depth + 1; r <= t; ++r) {
    for (unsigned k = 1; k <= t - r + 1; ++k) {
      const unsigned left = k - 1, right = t - k - r + 1;
      lower = (lower + terms.minus[left] * terms.minus[right]).rounded(terms.bits);
      upper = (upper + terms.plus[left] * terms.plus[right]).rounded(terms.bits);
    }
  }
  return {lower.lo(), upper.hi()};
}

Lemma33Report lemma33_report(unsigned depth, unsigned t_max) {
  require_depth(depth, "lemma33_report");
  const AlphaEnclosure enc = solve_alpha(depth, pow2(-256));
  const HighFloat alpha = to_high(enc.interval().midpoint());
  const HighFloat d = (alpha - 1) / (2 + HighFloat(depth + 1) * (alpha - 2));

  Lemma33Report report{depth, d * d / (boost::multiprecision::pow(alpha, depth) * (alpha - 1)), {}};
  if (t_max <= depth) return report;
  report.rows.reserve(t_max - depth);

  // m = t - r runs over 0..t-D-1; each step of t appends one m.
  HighFloat alpha_m = 1;      // alpha^m
  HighFloat geometric = 0;    // 1 + alpha + ... + alpha^m
  HighFloat sum1 = 0, sum2 = 0, sum3 = 0;
  HighFloat alpha_t = boost::multiprecision::pow(alpha, depth + 1);
  for (unsigned t = depth + 1; t <= t_max; ++t) {
    const unsigned m = t - depth - 1;
    geometric += alpha_m;
    sum1 += HighFloat(m + 1) * alpha_m;
    sum2 += geometric;
    sum3 += (alpha_m * alpha - 1) / (alpha - 1);
    report.rows.push_back({t, d * d * sum1 / (HighFloat(t) * alpha_t), d * sum2 / alpha_t,
                           d * sum3 / alpha_t});
    alpha_m *= alpha;
    alpha_t *= alpha;
  }
  return report;
}

}  // namespace recip
