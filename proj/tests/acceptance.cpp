// Acceptance suite: one line per criterion, exit status 1 if any fails.
//
// Scales, tolerances and runtime budgets are fixed here; SuiteOptions
// defaults carry the same values.

#include "recip/census.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <thread>

using namespace recip;

namespace {

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;
  std::function<VerificationReport(const SuiteOptions&)> run;
};

}  // namespace

int main() {
  SuiteOptions o;
  o.threads = std::max(1U, std::thread::hardware_concurrency());

  // "runtime seconds" is pinned to 30 s
  const std::vector<Criterion> criteria{
      {1, "bijection: 2^t normal forms -> 2^(t-1) conjugacy pairs, t<=14", 120, verify_bijection},
      {2, "partition identity t<=20 D<=5; DP = oracle cell-by-cell t<=18", 60, verify_partition},
      {3, "depth one: C(t,2n) exactly t<=1000; 1/(2n)! within 1e-3 at t=1e5", 30, verify_thm32},
      {4, "closed form rnd(d alpha^t) = |C_{t,D}|, t<=500, 2<=D<=12", 60, verify_closed_form},
      {5, "double sum over (k,r) = |C_t^{1,D}|, t<=300, 2<=D<=8", 30, verify_double_sum},
      {6, "lower <= |C_t^{1,D}| <= upper, t<=200, 2<=D<=6", 30, verify_bounds},
      {7, "two excursions: ratio within 2% at t=2000, D=2,3,4; error shrinks", 30, verify_thm34},
      {8, "term1 within 2% at t=500 (D=2); term2, term3 bounded to t=2000", 30, verify_lemma33},
      {9, "A^2 = B^3 = 1, AB parabolic, normal forms hyperbolic and reciprocal t<=12", 60,
       verify_matrices},
      {10, "alpha_D in [2(1-2^-D), 2), increasing in D<=12, alpha_2 = golden ratio", 1, verify_alpha},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    std::string error;
    try {
      report = c.run(o);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = seconds < c.budget_seconds;
    const bool ok = error.empty() && report.all_passed() && in_budget;
    if (!ok) ++failed;
    std::printf("[%s] criterion %2d: %s (%zu checks, %.2fs of %.0fs budget)\n", ok ? "PASS" : "FAIL",
                c.id, c.title, report.checks.size(), seconds, c.budget_seconds);
    if (!error.empty()) std::printf("    exception: %s\n", error.c_str());
    if (!in_budget) std::printf("    over runtime budget\n");
    for (const Check& chk : report.checks)
      if (!chk.passed)
        std::printf("    failed %s [%s]: measured %s, expected %s, tolerance %s\n", chk.name.c_str(),
                    chk.parameters.c_str(), chk.measured.c_str(), chk.expected.c_str(),
                    chk.tolerance.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
