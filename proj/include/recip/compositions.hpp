#pragma once

// Exact counting of integer compositions.
//
//   C_t          all compositions of t                 2^{t-1} (t >= 1)
//   C_{t,D}      parts bounded by D
//   C_t^{n,D}    exactly n parts greater than D, the rest at most D
//
// Via the run-sequence bijection, |C_t^{n,D}| is the number of reciprocal
// geodesics of word length 4t with exactly 2n cusp excursions of depth > D.
// The empty composition is the single composition of 0.

#include "recip/numeric.hpp"
#include "recip/words.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <vector>

namespace recip {

/// Memo for |C_t^{n,D}|, one grid per depth D.
///
/// For a fixed D let f_j(s) be the number of compositions of s with exactly
/// j parts > D. Then
///
///   f_j(s) = sum_{i=1..D} f_j(s-i) + sum_{i=D+1..s} f_{j-1}(s-i),
///
/// and both sums are differences of prefix sums F_j(s) = f_j(0)+...+f_j(s),
/// which is all the table stores. j = 0 is the bounded-part recursion
/// |C_{t,D}| = |C_{t-1,D}| + ... + |C_{t-D,D}|. Safe for concurrent use.
class CountTable {
 public:
  BigCount bounded(unsigned t, unsigned depth);
  BigCount exact_excursions(unsigned t, unsigned n, unsigned depth);

 private:
  struct Grid {
    unsigned t_max = 0;
    std::vector<std::vector<BigCount>> prefix;  // prefix[j][s] = F_j(s)
  };
  static void extend(Grid& g, unsigned depth, unsigned t, unsigned n);
  BigCount lookup(unsigned t, unsigned n, unsigned depth);

  std::mutex mutex_;
  std::map<unsigned, Grid> grids_;
};

/// Process-wide table used by the free functions below.
CountTable& shared_count_table();

BigCount count_all(unsigned t);
BigCount count_bounded(unsigned t, unsigned depth);
BigCount count_exact_excursions(unsigned t, unsigned n, unsigned depth);

BigCount binomial(std::uint64_t t, std::uint64_t k);

/// |C_{k-1,D}| * |C_{t-k-r+1,D}|: compositions of t whose only part > D has
/// size r and starts at position k of the sign tuple.
/// Throws std::out_of_range unless r >= D+1 and 1 <= k <= t-r+1.
BigCount product_at(unsigned t, unsigned depth, unsigned k, unsigned r);

/// Double sum of product_at over r = D+1..t, k = 1..t-r+1. Requires D >= 2.
BigCount two_excursion_sum(unsigned t, unsigned depth);

struct ExcursionFilter {
  unsigned n;
  unsigned depth;
};

/// Streams the compositions of t in cut-mask order: mask m in
/// [0, 2^{t-1}) has bit i set iff positions i+1 and i+2 lie in the same
/// part, so m = 0 is (1,...,1) and the last mask is (t).
class CompositionStream {
 public:
  CompositionStream(unsigned t, std::optional<ExcursionFilter> filter = std::nullopt);
  /// Restricts to masks in [first, last).
  CompositionStream(unsigned t, std::uint64_t first, std::uint64_t last,
                    std::optional<ExcursionFilter> filter = std::nullopt);

  std::optional<Composition> next();

  static Composition from_mask(unsigned t, std::uint64_t mask);

 private:
  unsigned t_;
  std::uint64_t mask_;
  std::uint64_t end_;
  std::optional<ExcursionFilter> filter_;
};

/// Collects a CompositionStream; t is capped at 30.
std::vector<Composition> enumerate_compositions(
    unsigned t, std::optional<ExcursionFilter> filter = std::nullopt);

}  // namespace recip
