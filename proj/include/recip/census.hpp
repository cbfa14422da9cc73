#pragma once

// Census of reciprocal geodesics by word length 4t and number 2n of cusp
// excursions of depth > D, with a brute-force oracle over sign tuples and
// the verification suites behind `recipgeo verify`.

#include "recip/numeric.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace recip {

class CapExceeded : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Raised when the oracle's own structural checks fail (a 2-1 map that is
/// not 2-1). Indicates a bug, never a property of the input.
class OracleMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class Source { Dp, ClosedForm, Oracle };

std::string to_string(Source s);

struct CensusRow {
  unsigned t;
  unsigned depth;
  unsigned n;
  BigCount count;
  Source source;

  friend bool operator==(const CensusRow&, const CensusRow&) = default;
};

/// Rows n = 0..floor(t/(D+1)) with nonzero count, from the DP.
std::vector<CensusRow> excursion_census(unsigned t, unsigned depth);

/// excursion_census for t = t_first..t_last, cells computed on `threads`
/// workers, returned in (t, n) order.
std::vector<CensusRow> excursion_census_range(unsigned t_first, unsigned t_last,
                                              unsigned depth, unsigned threads = 1);

struct OracleOptions {
  unsigned max_t = 18;
  unsigned conjugacy_max_t = 14;
  unsigned threads = 1;
};

/// Brute force over all 2^t sign tuples: checks the 2-1 collapse onto
/// projective classes, tallies run sequences by excursion count, and for
/// t <= conjugacy_max_t checks that the normal forms fall into conjugacy
/// classes of size exactly 2.
std::vector<CensusRow> oracle_census(unsigned t, unsigned depth,
                                     const OracleOptions& options = {});

struct ConjugacyGrouping {
  unsigned t;
  std::size_t normal_forms;
  std::size_t classes;
  std::size_t min_class_size;
  std::size_t max_class_size;
};

/// Groups the 2^t reciprocal normal forms by canonical cyclic form.
ConjugacyGrouping group_normal_forms(unsigned t);

struct Check {
  std::string name;
  std::string parameters;
  bool passed;
  std::string measured;
  std::string expected;
  std::string tolerance;
};

struct VerificationReport {
  std::vector<Check> checks;

  bool all_passed() const;
  std::size_t failures() const;
  void add(Check c) { checks.push_back(std::move(c)); }
  void append(const VerificationReport& other);
};

/// count = C(t, 2n) exactly, and the relative deviation of
/// C(t,2n)/t^{2n} from 1/(2n)! decreases along t_list and ends below tol.
VerificationReport verify_theorem_2n_depth1(unsigned n, std::span<const std::uint64_t> t_list,
                                            double tolerance = 1e-3);

/// Relative error of |C_t^{1,D}| / (t alpha^t) against
/// d^2/(alpha^D (alpha-1)): below tol at the last t, and strictly smaller
/// there than at the previous t.
VerificationReport verify_theorem_two_excursions(unsigned depth,
                                                 std::span<const unsigned> t_list,
                                                 double tolerance = 0.02);

/// High-precision value of count / (t alpha_D^t).
HighFloat two_excursion_ratio(unsigned t, unsigned depth);

struct Table1Row {
  std::string label;
  unsigned n;
  BigCount count;
  std::optional<HighFloat> approximation;
};

struct Table1 {
  unsigned t;
  unsigned depth;
  std::vector<Table1Row> rows;
};

/// Rows: all geodesics (2^{t-1}); D-low-lying (|C_{t,D}| vs d alpha^t);
/// one row per n = 1..n_max for E_{2n}^1 (C(t,2n) vs t^{2n}/(2n)!);
/// two excursions of depth > D (|C_t^{1,D}| vs L_D t alpha^t).
Table1 table1(unsigned t, unsigned depth, unsigned n_max = 1);

/// Parameters of the verification suites. Defaults are the acceptance
/// scales.
struct SuiteOptions {
  unsigned bijection_max_t = 14;
  unsigned partition_max_t = 20;
  unsigned partition_max_depth = 5;
  unsigned oracle_max_t = 18;
  unsigned thm32_exact_max_t = 1000;
  std::vector<std::uint64_t> thm32_t_list{1000, 10000, 100000};
  double thm32_tolerance = 1e-3;
  unsigned closed_form_max_t = 500;
  unsigned closed_form_max_depth = 12;
  unsigned double_sum_max_t = 300;
  unsigned double_sum_max_depth = 8;
  unsigned bounds_max_t = 200;
  unsigned bounds_max_depth = 6;
  std::vector<unsigned> thm34_t_list{500, 1000, 2000};
  std::vector<unsigned> thm34_depths{2, 3, 4};
  double thm34_tolerance = 0.02;
  unsigned lemma33_depth = 2;
  unsigned lemma33_check_t = 500;
  unsigned lemma33_max_t = 2000;
  double lemma33_tolerance = 0.02;
  double lemma33_slope_noise = 1e-12;
  unsigned matrices_max_t = 12;
  unsigned alpha_max_depth = 12;
  unsigned threads = 1;
};

VerificationReport verify_bijection(const SuiteOptions& o);
VerificationReport verify_partition(const SuiteOptions& o);
VerificationReport verify_thm32(const SuiteOptions& o);
VerificationReport verify_closed_form(const SuiteOptions& o);
VerificationReport verify_double_sum(const SuiteOptions& o);
VerificationReport verify_bounds(const SuiteOptions& o);
VerificationReport verify_thm34(const SuiteOptions& o);
VerificationReport verify_lemma33(const SuiteOptions& o);
VerificationReport verify_matrices(const SuiteOptions& o);
VerificationReport verify_alpha(const SuiteOptions& o);

/// Names accepted by run_suite, in execution order of "all".
const std::vector<std::string>& suite_names();

/// Runs one named suite, or every suite for "all". Throws
/// std::invalid_argument for an unknown name.
VerificationReport run_suite(const std::string& name, const SuiteOptions& o);

}  // namespace recip
