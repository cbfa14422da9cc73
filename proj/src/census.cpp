#include "recip/census.hpp"

#include "recip/compositions.hpp"
#include "recip/matrices.hpp"
#include "recip/spectral.hpp"
#include "recip/words.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <sstream>
#include <thread>

namespace recip {

namespace {

std::string fmt(const HighFloat& x) { return to_decimal(x, 10); }

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

// One check summarising many exact cell comparisons.
class CellTally {
 public:
  CellTally(std::string name, std::string parameters)
      : name_(std::move(name)), parameters_(std::move(parameters)) {}

  void compare(const std::string& cell, const BigInt& measured, const BigInt& expected) {
    ++cells_;
    if (measured != expected && !failure_) {
      failure_ = cell;
      measured_ = measured.get_str();
      expected_ = expected.get_str();
    }
  }

  void require(const std::string& cell, bool ok, std::string measured, std::string expected) {
    ++cells_;
    if (!ok && !failure_) {
      failure_ = cell;
      measured_ = std::move(measured);
      expected_ = std::move(expected);
    }
  }

  Check finish() const {
    if (failure_)
      return {name_, parameters_ + "; first failure at " + *failure_, false, measured_,
              expected_, "exact"};
    return {name_, parameters_, true, std::to_string(cells_) + " cells agree",
            std::to_string(cells_) + " cells", "exact"};
  }

 private:
  std::string name_, parameters_;
  std::size_t cells_ = 0;
  std::optional<std::string> failure_;
  std::string measured_, expected_;
};

std::vector<CensusRow> rows_from_tally(unsigned t, unsigned depth,
                                       const std::vector<BigCount>& tally, Source source) {
  std::vector<CensusRow> rows;
  for (unsigned n = 0; n < tally.size(); ++n)
    if (sgn(tally[n]) != 0) rows.push_back({t, depth, n, tally[n], source});
  return rows;
}

HighFloat abs_high(const HighFloat& x) { return x < 0 ? HighFloat(-x) : x; }

}  // namespace

std::string to_string(Source s) {
  switch (s) {
    case Source::Dp: return "dp";
    case Source::ClosedForm: return "closed_form";
    case Source::Oracle: return "oracle";
  }
  return "unknown";
}

std::vector<CensusRow> excursion_census(unsigned t, unsigned depth) {
  if (t == 0) throw std::invalid_argument("excursion_census: t must be >= 1");
  if (depth == 0) throw std::invalid_argument("excursion_census: depth must be >= 1");
  std::vector<BigCount> tally;
  for (unsigned n = 0; n <= t / (depth + 1); ++n)
    tally.push_back(count_exact_excursions(t, n, depth));
  return rows_from_tally(t, depth, tally, Source::Dp);
}

std::vector<CensusRow> excursion_census_range(unsigned t_first, unsigned t_last,
                                              unsigned depth, unsigned threads) {
  if (t_first == 0 || t_last < t_first)
    throw std::invalid_argument("excursion_census_range: need 1 <= t_first <= t_last");
  const unsigned cells = t_last - t_first + 1;
  const unsigned workers = std::clamp(threads, 1U, cells);
  // Strided assignment; results are stitched back in t order.
  std::vector<std::future<std::vector<std::vector<CensusRow>>>> jobs;
  for (unsigned w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, [=] {
      std::vector<std::vector<CensusRow>> out;
      for (unsigned t = t_first + w; t <= t_last; t += workers)
        out.push_back(excursion_census(t, depth));
      return out;
    }));
  }
  std::vector<std::vector<std::vector<CensusRow>>> parts;
  for (auto& j : jobs) parts.push_back(j.get());
  std::vector<CensusRow> rows;
  for (unsigned i = 0; i < cells; ++i) {
    auto& cell = parts[i % workers][i / workers];
    rows.insert(rows.end(), cell.begin(), cell.end());
  }
  return rows;
}

ConjugacyGrouping group_normal_forms(unsigned t) {
  if (t == 0 || t > 24) throw std::invalid_argument("group_normal_forms: t must be in 1..24");
  std::map<std::vector<Syllable>, std::size_t> classes;
  const std::uint64_t total = std::uint64_t{1} << t;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    const GroupWord w = reciprocal_word(EpsilonSeq::from_bits(bits, t)).word;
    ++classes[canonical_cyclic_form(w).syllables()];
  }
  ConjugacyGrouping g{t, static_cast<std::size_t>(total), classes.size(), SIZE_MAX, 0};
  for (const auto& [key, size] : classes) {
    g.min_class_size = std::min(g.min_class_size, size);
    g.max_class_size = std::max(g.max_class_size, size);
  }
  return g;
}

std::vector<CensusRow> oracle_census(unsigned t, unsigned depth, const OracleOptions& options) {
  if (t == 0) throw std::invalid_argument("oracle_census: t must be >= 1");
  if (depth == 0) throw std::invalid_argument("oracle_census: depth must be >= 1");
  if (t > options.max_t || t > 40)
    throw CapExceeded("oracle_census: t=" + std::to_string(t) + " above the oracle cap " +
                      std::to_string(options.max_t));

  const std::uint64_t total = std::uint64_t{1} << t;
  const unsigned workers =
      static_cast<unsigned>(std::clamp<std::uint64_t>(options.threads, 1, total));
  const std::size_t max_n = t / (depth + 1);

  struct Partial {
    std::vector<std::uint8_t> hits;  // per projective class, indexed by canonical bits >> 1
    std::vector<std::uint64_t> tally;
    bool runs_invariant = true;
  };

  auto work = [&](std::uint64_t first, std::uint64_t last) {
    Partial p{std::vector<std::uint8_t>(total / 2, 0), std::vector<std::uint64_t>(max_n + 1, 0)};
    for (std::uint64_t bits = first; bits < last; ++bits) {
      const EpsilonSeq eps = EpsilonSeq::from_bits(bits, t);
      const ProjectiveEpsilonSeq cls = projectivize(eps);
      std::uint64_t canon = 0;
      for (std::size_t i = 0; i < t; ++i)
        if (cls.canonical()[i] < 0) canon |= std::uint64_t{1} << i;
      ++p.hits[canon >> 1];
      if (eps != cls.canonical()) {
        if (run_sequence(eps) != run_sequence(cls.canonical())) p.runs_invariant = false;
        continue;
      }
      ++p.tally[excursion_parts(run_sequence(eps), depth)];
    }
    return p;
  };

  std::vector<std::future<Partial>> jobs;
  const std::uint64_t chunk = (total + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t first = w * chunk, last = std::min(total, first + chunk);
    jobs.push_back(std::async(std::launch::async, work, first, last));
  }

  std::vector<std::uint8_t> hits(total / 2, 0);
  std::vector<BigCount> tally(max_n + 1, 0);
  for (auto& j : jobs) {
    const Partial p = j.get();
    if (!p.runs_invariant)
      throw OracleMismatch("oracle_census: run sequence changed under negation");
    for (std::size_t i = 0; i < hits.size(); ++i) hits[i] += p.hits[i];
    for (std::size_t n = 0; n <= max_n; ++n) tally[n] += static_cast<unsigned long>(p.tally[n]);
  }
  if (!std::all_of(hits.begin(), hits.end(), [](std::uint8_t h) { return h == 2; }))
    throw OracleMismatch("oracle_census: projectivization is not 2-1 at t=" + std::to_string(t));

  if (t <= options.conjugacy_max_t) {
    const ConjugacyGrouping g = group_normal_forms(t);
    if (g.classes != total / 2 || g.min_class_size != 2 || g.max_class_size != 2)
      throw OracleMismatch("oracle_census: conjugacy classes of normal forms are not pairs at t=" +
                           std::to_string(t));
  }
  return rows_from_tally(t, depth, tally, Source::Oracle);
}

bool VerificationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed; }));
}

void VerificationReport::append(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

VerificationReport verify_theorem_2n_depth1(unsigned n, std::span<const std::uint64_t> t_list,
                                            double tolerance) {
  VerificationReport report;
  BigInt factorial;
  mpz_fac_ui(factorial.get_mpz_t(), 2UL * n);
  std::optional<Rational> previous;
  bool decreasing = true;
  Rational last_error = 0;
  for (std::uint64_t t : t_list) {
    const BigCount exact = binomial(t, 2ULL * n);
    // the DP side is quadratic in t, so it is compared on the small range only
    if (t <= 2000) {
      const BigCount dp = count_exact_excursions(static_cast<unsigned>(t), n, 1);
      report.add({"thm32.exact", "n=" + std::to_string(n) + " t=" + std::to_string(t),
                  dp == exact, dp.get_str(), exact.get_str(), "exact"});
    }
    BigInt t_pow;
    mpz_ui_pow_ui(t_pow.get_mpz_t(), static_cast<unsigned long>(t), 2UL * n);
    Rational error = Rational(exact * factorial, t_pow) - 1;
    error = abs(error);
    if (previous && sgn(*previous) != 0 && !(error < *previous)) decreasing = false;
    if (previous && sgn(*previous) == 0 && sgn(error) != 0) decreasing = false;
    previous = error;
    last_error = error;
  }
  const HighFloat measured = to_high(last_error);
  const std::string params = "n=" + std::to_string(n) + " t_last=" +
                             (t_list.empty() ? std::string("-") : std::to_string(t_list.back()));
  report.add({"thm32.limit", params, !t_list.empty() && measured < HighFloat(tolerance),
              fmt(measured), "0 (relative deviation from 1/(2n)!)", fmt(tolerance) + " rel"});
  report.add({"thm32.monotone", "n=" + std::to_string(n), decreasing,
              decreasing ? "decreasing" : "not decreasing", "decreasing", "-"});
  return report;
}

HighFloat two_excursion_ratio(unsigned t, unsigned depth) {
  const AlphaEnclosure alpha = solve_alpha(depth, pow2(-192));
  const HighFloat a = to_high(alpha.interval().midpoint());
  return to_high(count_exact_excursions(t, 1, depth)) /
         (HighFloat(t) * boost::multiprecision::pow(a, t));
}

VerificationReport verify_theorem_two_excursions(unsigned depth, std::span<const unsigned> t_list,
                                                 double tolerance) {
  VerificationReport report;
  const HighFloat limit =
      to_high(limit_constant(LimitKind::TwoExcursionsDepthD, depth, pow2(-160)).midpoint());
  std::vector<HighFloat> errors;
  for (unsigned t : t_list)
    errors.push_back(abs_high(two_excursion_ratio(t, depth) - limit) / limit);
  const std::string params = "D=" + std::to_string(depth);
  if (errors.empty()) {
    report.add({"thm34.limit", params, false, "no t values", "-", "-"});
    return report;
  }
  report.add({"thm34.limit", params + " t=" + std::to_string(t_list.back()),
              errors.back() < HighFloat(tolerance), fmt(errors.back()), "limit " + fmt(limit),
              fmt(tolerance) + " rel"});
  if (errors.size() >= 2) {
    const HighFloat& prev = errors[errors.size() - 2];
    report.add({"thm34.monotone",
                params + " t=" + std::to_string(t_list[t_list.size() - 2]) + "->" +
                    std::to_string(t_list.back()),
                errors.back() < prev, fmt(errors.back()), "< " + fmt(prev), "strict"});
  }
  return report;
}

Table1 table1(unsigned t, unsigned depth, unsigned n_max) {
  if (t == 0) throw std::invalid_argument("table1: t must be >= 1");
  if (depth < 2) throw std::invalid_argument("table1: depth must be >= 2");
  const AlphaEnclosure enc = solve_alpha(depth, pow2(-192));
  const HighFloat alpha = to_high(enc.interval().midpoint());
  const HighFloat alpha_t = boost::multiprecision::pow(alpha, t);
  const HighFloat d = to_high(coefficient_d(enc).midpoint());
  const HighFloat limit =
      to_high(limit_constant(LimitKind::TwoExcursionsDepthD, depth, pow2(-160)).midpoint());

  Table1 table{t, depth, {}};
  table.rows.push_back({"length_4t", 0, count_all(t), std::nullopt});
  table.rows.push_back({"low_lying", 0, count_bounded(t, depth), d * alpha_t});
  for (unsigned n = 1; n <= n_max; ++n) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), 2UL * n);
    table.rows.push_back({"depth1_2n", n, binomial(t, 2ULL * n),
                          boost::multiprecision::pow(HighFloat(t), 2 * n) / to_high(f)});
  }
  table.rows.push_back(
      {"two_excursions", 1, count_exact_excursions(t, 1, depth), limit * HighFloat(t) * alpha_t});
  return table;
}

VerificationReport verify_bijection(const SuiteOptions& o) {
  VerificationReport report;
  for (unsigned t = 1; t <= o.bijection_max_t; ++t) {
    const ConjugacyGrouping g = group_normal_forms(t);
    const std::size_t expected = std::size_t{1} << (t - 1);
    const bool ok = g.classes == expected && g.min_class_size == 2 && g.max_class_size == 2;
    std::ostringstream measured;
    measured << g.classes << " classes, sizes " << g.min_class_size << ".." << g.max_class_size;
    report.add({"bijection.conjugacy", "t=" + std::to_string(t), ok, measured.str(),
                std::to_string(expected) + " classes, sizes 2..2", "exact"});
  }
  CellTally phi("bijection.phi", "epsilon_of(reciprocal_word(e)) = e, t<=" +
                                     std::to_string(o.bijection_max_t));
  for (unsigned t = 1; t <= o.bijection_max_t; ++t) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << t); ++bits) {
      const EpsilonSeq e = EpsilonSeq::from_bits(bits, t);
      const ReciprocalNormalForm nf = reciprocal_word(e);
      phi.require("e=" + e.to_string(), epsilon_of(nf.word) == e && nf.word.length() == 4 * t,
                  "mismatch", e.to_string());
    }
  }
  report.add(phi.finish());
  return report;
}

VerificationReport verify_partition(const SuiteOptions& o) {
  VerificationReport report;
  for (unsigned depth = 1; depth <= o.partition_max_depth; ++depth) {
    CellTally sums("partition.sum", "D=" + std::to_string(depth) + " t<=" +
                                        std::to_string(o.partition_max_t));
    for (unsigned t = 1; t <= o.partition_max_t; ++t) {
      BigCount total = 0;
      for (const CensusRow& row : excursion_census(t, depth)) total += row.count;
      sums.compare("t=" + std::to_string(t), total, count_all(t));
    }
    report.add(sums.finish());
  }
  OracleOptions oracle;
  oracle.max_t = o.oracle_max_t;
  oracle.threads = o.threads;
  oracle.conjugacy_max_t = std::min(o.bijection_max_t, o.oracle_max_t);
  for (unsigned depth = 1; depth <= o.partition_max_depth; ++depth) {
    CellTally cells("partition.oracle", "D=" + std::to_string(depth) + " t<=" +
                                            std::to_string(o.oracle_max_t));
    for (unsigned t = 1; t <= o.oracle_max_t; ++t) {
      // conjugacy grouping is depth independent; run it once
      oracle.conjugacy_max_t = depth == 1 ? std::min(o.bijection_max_t, o.oracle_max_t) : 0;
      const auto brute = oracle_census(t, depth, oracle);
      const auto dp = excursion_census(t, depth);
      const bool same_shape = brute.size() == dp.size();
      cells.require("t=" + std::to_string(t) + " rows", same_shape,
                    std::to_string(brute.size()), std::to_string(dp.size()));
      for (std::size_t i = 0; same_shape && i < dp.size(); ++i) {
        cells.require("t=" + std::to_string(t) + " n=" + std::to_string(dp[i].n),
                      brute[i].n == dp[i].n, std::to_string(brute[i].n), std::to_string(dp[i].n));
        cells.compare("t=" + std::to_string(t) + " n=" + std::to_string(dp[i].n), brute[i].count,
                      dp[i].count);
      }
    }
    report.add(cells.finish());
  }
  return report;
}

VerificationReport verify_thm32(const SuiteOptions& o) {
  VerificationReport report;
  CellTally exact("thm32.binomial", "D=1, all n, t<=" + std::to_string(o.thm32_exact_max_t));
  for (unsigned t = 1; t <= o.thm32_exact_max_t; ++t) {
    // row of binomials C(t, k) by the ratio recurrence
    BigCount c = 1;
    for (unsigned k = 0; k <= t; ++k) {
      if (k % 2 == 0)
        exact.compare("t=" + std::to_string(t) + " n=" + std::to_string(k / 2),
                      count_exact_excursions(t, k / 2, 1), c);
      c *= t - k;
      mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), k + 1);
    }
  }
  report.add(exact.finish());
  for (unsigned n = 1; n <= 3; ++n)
    report.append(verify_theorem_2n_depth1(n, o.thm32_t_list, o.thm32_tolerance));
  return report;
}

VerificationReport verify_closed_form(const SuiteOptions& o) {
  VerificationReport report;
  for (unsigned depth = 2; depth <= o.closed_form_max_depth; ++depth) {
    CellTally cells("closed_form", "D=" + std::to_string(depth) + " t<=" +
                                       std::to_string(o.closed_form_max_t));
    const std::vector<BigCount> closed = closed_form_counts(o.closed_form_max_t, depth);
    for (unsigned t = 0; t <= o.closed_form_max_t; ++t)
      cells.compare("t=" + std::to_string(t), closed[t], count_bounded(t, depth));
    report.add(cells.finish());
  }
  return report;
}

VerificationReport verify_double_sum(const SuiteOptions& o) {
  VerificationReport report;
  for (unsigned depth = 2; depth <= o.double_sum_max_depth; ++depth) {
    CellTally cells("double_sum", "D=" + std::to_string(depth) + " t<=" +
                                      std::to_string(o.double_sum_max_t));
    for (unsigned t = 1; t <= o.double_sum_max_t; ++t)
      cells.compare("t=" + std::to_string(t), two_excursion_sum(t, depth),
                    count_exact_excursions(t, 1, depth));
    report.add(cells.finish());
  }
  return report;
}

VerificationReport verify_bounds(const SuiteOptions& o) {
  VerificationReport report;
  for (unsigned depth = 2; depth <= o.bounds_max_depth; ++depth) {
    CellTally cells("bounds.sandwich", "D=" + std::to_string(depth) + " t<=" +
                                           std::to_string(o.bounds_max_t));
    for (unsigned t = 1; t <= o.bounds_max_t; ++t) {
      const TwoExcursionBounds b = bounds_two_excursions(t, depth);
      const Rational count(count_exact_excursions(t, 1, depth));
      cells.require("t=" + std::to_string(t), b.lower <= count && count <= b.upper,
                    count.get_str(),
                    "[" + to_decimal(b.lower, 3, Rounding::Down) + ", " +
                        to_decimal(b.upper, 3, Rounding::Up) + "]");
    }
    report.add(cells.finish());
  }
  return report;
}

VerificationReport verify_thm34(const SuiteOptions& o) {
  VerificationReport report;
  for (unsigned depth : o.thm34_depths)
    report.append(verify_theorem_two_excursions(depth, o.thm34_t_list, o.thm34_tolerance));
  return report;
}

namespace {

// Least-squares slope of y against t.
HighFloat fit_slope(const std::vector<Lemma33Row>& rows, std::size_t first,
                    HighFloat Lemma33Row::*field) {
  const HighFloat count(rows.size() - first);
  HighFloat mean_t = 0, mean_y = 0;
  for (std::size_t i = first; i < rows.size(); ++i) {
    mean_t += HighFloat(rows[i].t);
    mean_y += rows[i].*field;
  }
  mean_t /= count;
  mean_y /= count;
  HighFloat sxy = 0, sxx = 0;
  for (std::size_t i = first; i < rows.size(); ++i) {
    const HighFloat dt = HighFloat(rows[i].t) - mean_t;
    sxy += dt * (rows[i].*field - mean_y);
    sxx += dt * dt;
  }
  return sxy / sxx;
}

}  // namespace

VerificationReport verify_lemma33(const SuiteOptions& o) {
  VerificationReport report;
  const Lemma33Report lr = lemma33_report(o.lemma33_depth, o.lemma33_max_t);
  const std::string params = "D=" + std::to_string(o.lemma33_depth);
  auto row_at = std::find_if(lr.rows.begin(), lr.rows.end(),
                             [&](const Lemma33Row& r) { return r.t == o.lemma33_check_t; });
  if (row_at == lr.rows.end()) {
    report.add({"lemma33.term1", params, false, "t out of range", "-", "-"});
  } else {
    const HighFloat err = abs_high(row_at->term1_ratio - lr.term1_limit) / lr.term1_limit;
    report.add({"lemma33.term1", params + " t=" + std::to_string(o.lemma33_check_t),
                err < HighFloat(o.lemma33_tolerance), fmt(err), "limit " + fmt(lr.term1_limit),
                fmt(o.lemma33_tolerance) + " rel"});
  }
  const std::size_t tail = lr.rows.size() / 2;
  const auto bounded = [&](const char* name, HighFloat Lemma33Row::*field) {
    if (lr.rows.size() < 4) {
      report.add({name, params, false, "too few rows", "-", "-"});
      return;
    }
    HighFloat sup = 0;
    for (const auto& r : lr.rows) sup = std::max(sup, r.*field);
    HighFloat mean = 0;
    for (std::size_t i = tail; i < lr.rows.size(); ++i) mean += lr.rows[i].*field;
    mean /= HighFloat(lr.rows.size() - tail);
    const HighFloat span(lr.rows.back().t - lr.rows[tail].t);
    // relative drift across the tail implied by the fitted slope
    const HighFloat drift = fit_slope(lr.rows, tail, field) * span / mean;
    report.add({name, params + " t<=" + std::to_string(o.lemma33_max_t),
                drift <= HighFloat(o.lemma33_slope_noise),
                "sup " + fmt(sup) + ", tail drift " + fmt(drift), "bounded, drift <= 0",
                fmt(o.lemma33_slope_noise) + " noise"});
  };
  bounded("lemma33.term2", &Lemma33Row::term2_ratio);
  bounded("lemma33.term3", &Lemma33Row::term3_ratio);
  return report;
}

VerificationReport verify_matrices(const SuiteOptions& o) {
  VerificationReport report;
  const PSL2Element a = generator_a(), b = generator_b();
  report.add({"matrices.a_order", "A^2", (a * a).is_identity(), (a * a).rep().to_string(),
              "identity", "exact"});
  report.add({"matrices.b_order", "B^3", (b * b * b).is_identity(),
              (b * b * b).rep().to_string(), "identity", "exact"});
  for (const char* w : {"a b", "a b^-1"}) {
    const MatrixClass c = classify(evaluate(GroupWord::parse(w)));
    report.add({"matrices.parabolic", w, c == MatrixClass::Parabolic, to_string(c), "parabolic",
                "exact"});
  }
  CellTally sweep("matrices.reciprocal", "all e with t<=" + std::to_string(o.matrices_max_t));
  for (unsigned t = 1; t <= o.matrices_max_t; ++t) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << t); ++bits) {
      const EpsilonSeq e = EpsilonSeq::from_bits(bits, t);
      const MatrixClass c = classify(evaluate(reciprocal_word(e).word));
      sweep.require("e=" + e.to_string(), c == MatrixClass::Hyperbolic && reciprocity_check(e),
                    to_string(c), "hyperbolic, reciprocity holds");
    }
  }
  report.add(sweep.finish());
  return report;
}

VerificationReport verify_alpha(const SuiteOptions& o) {
  VerificationReport report;
  const Rational tol = pow2(-80);
  std::optional<AlphaEnclosure> previous;
  for (unsigned depth = 2; depth <= o.alpha_max_depth; ++depth) {
    const AlphaEnclosure e = solve_alpha(depth, tol);
    const Rational floor_bound = 2 * (1 - pow2(-static_cast<long>(depth)));
    report.add({"alpha.bounds", "D=" + std::to_string(depth), floor_bound <= e.lo && e.hi < 2,
                "[" + to_decimal(e.lo, 20, Rounding::Down) + ", " +
                    to_decimal(e.hi, 20, Rounding::Up) + "]",
                "[" + to_decimal(floor_bound, 20, Rounding::Down) + ", 2)", "exact"});
    if (previous)
      report.add({"alpha.increasing", "D=" + std::to_string(depth - 1) + "->" +
                                          std::to_string(depth),
                  previous->hi < e.lo, to_decimal(e.lo, 20, Rounding::Down),
                  "> " + to_decimal(previous->hi, 20, Rounding::Up), "strict"});
    previous = e;
  }
  // golden ratio from an integer square root: sqrt(5) in [s, s+1] / 10^20
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, 20);
  BigInt s;
  const BigInt radicand = 5 * scale * scale;
  mpz_sqrt(s.get_mpz_t(), radicand.get_mpz_t());
  const Interval phi{Rational(scale + s, 2 * scale), Rational(scale + s + 1, 2 * scale)};
  const AlphaEnclosure a2 = solve_alpha(2, tol);
  const Rational gap = abs(a2.interval().midpoint() - phi.midpoint()) + phi.width() + a2.width();
  report.add({"alpha.golden", "D=2", gap < decimal_tolerance(12),
              to_decimal(a2.lo, 15, Rounding::Down), to_decimal(phi.lo(), 15, Rounding::Down),
              "1e-12 abs"});
  return report;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"bijection", "partition", "thm32",   "closed-form",
                                              "double-sum", "bounds",   "thm34",   "lemma33",
                                              "matrices",  "alpha"};
  return names;
}

VerificationReport run_suite(const std::string& name, const SuiteOptions& o) {
  if (name == "all") {
    VerificationReport all;
    for (const auto& n : suite_names()) all.append(run_suite(n, o));
    return all;
  }
  if (name == "bijection") return verify_bijection(o);
  if (name == "partition") return verify_partition(o);
  if (name == "thm32") return verify_thm32(o);
  if (name == "closed-form") return verify_closed_form(o);
  if (name == "double-sum") return verify_double_sum(o);
  if (name == "bounds") return verify_bounds(o);
  if (name == "thm34") return verify_thm34(o);
  if (name == "lemma33") return verify_lemma33(o);
  if (name == "matrices") return verify_matrices(o);
  if (name == "alpha") return verify_alpha(o);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace recip
