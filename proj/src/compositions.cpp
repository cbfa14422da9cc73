#include "recip/compositions.hpp"

#include <algorithm>
#include <string>

namespace recip {

void CountTable::extend(Grid& g, unsigned depth, unsigned t, unsigned n) {
  const unsigned old_t = g.prefix.empty() ? 0 : g.t_max;
  const unsigned new_t = std::max(old_t, t);
  const std::size_t old_cols = g.prefix.size();
  const std::size_t new_cols = std::max<std::size_t>(old_cols, n + 1);
  g.prefix.resize(new_cols);

  const auto F = [&g](std::size_t j, long s) -> const BigCount* {
    static const BigCount zero = 0;
    return s < 0 ? &zero : &g.prefix[j][static_cast<std::size_t>(s)];
  };

  for (std::size_t j = 0; j < new_cols; ++j) {
    auto& col = g.prefix[j];
    const std::size_t from = j < old_cols ? col.size() : 0;
    col.resize(new_t + 1);
    for (std::size_t s = from; s <= new_t; ++s) {
      BigCount f;
      if (s == 0) {
        f = j == 0 ? 1 : 0;
      } else {
        const long si = static_cast<long>(s);
        f = *F(j, si - 1) - *F(j, si - 1 - static_cast<long>(depth));
        if (j > 0) f += *F(j - 1, si - 1 - static_cast<long>(depth));
      }
      col[s] = s == 0 ? f : col[s - 1] + f;
    }
  }
  g.t_max = new_t;
}

BigCount CountTable::lookup(unsigned t, unsigned n, unsigned depth) {
  if (depth == 0) throw std::invalid_argument("CountTable: depth must be >= 1");
  if (static_cast<unsigned long>(n) * (depth + 1UL) > t) return 0;
  std::lock_guard lock(mutex_);
  Grid& g = grids_[depth];
  if (g.prefix.size() <= n || g.t_max < t) extend(g, depth, t, n);
  const auto& col = g.prefix[n];
  return t == 0 ? col[0] : BigCount(col[t] - col[t - 1]);
}

BigCount CountTable::bounded(unsigned t, unsigned depth) { return lookup(t, 0, depth); }

BigCount CountTable::exact_excursions(unsigned t, unsigned n, unsigned depth) {
  return lookup(t, n, depth);
}

CountTable& shared_count_table() {
  static CountTable table;
  return table;
}

BigCount count_all(unsigned t) {
  if (t == 0) return 1;
  BigCount r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, t - 1);
  return r;
}

BigCount count_bounded(unsigned t, unsigned depth) {
  return shared_count_table().bounded(t, depth);
}

BigCount count_exact_excursions(unsigned t, unsigned n, unsigned depth) {
  return shared_count_table().exact_excursions(t, n, depth);
}

BigCount binomial(std::uint64_t t, std::uint64_t k) {
  if (k > t) return 0;
  k = std::min(k, t - k);
  BigCount r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r *= static_cast<unsigned long>(t - k + i);
    mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(i));
  }
  return r;
}

BigCount product_at(unsigned t, unsigned depth, unsigned k, unsigned r) {
  if (depth == 0 || r < depth + 1 || r > t || k < 1 || k > t - r + 1)
    throw std::out_of_range("product_at: (k, r) outside 1 <= k <= t-r+1, r >= D+1");
  return count_bounded(k - 1, depth) * count_bounded(t - k - r + 1, depth);
}

BigCount two_excursion_sum(unsigned t, unsigned depth) {
  if (depth < 2) throw std::invalid_argument("two_excursion_sum: depth must be >= 2");
  BigCount sum = 0;
  for (unsigned r = depth + 1; r <= t; ++r)
    for (unsigned k = 1; k <= t - r + 1; ++k) sum += product_at(t, depth, k, r);
  return sum;
}

CompositionStream::CompositionStream(unsigned t, std::optional<ExcursionFilter> filter)
    : CompositionStream(t, 0, t == 0 ? 0 : std::uint64_t{1} << (t - 1), filter) {}

CompositionStream::CompositionStream(unsigned t, std::uint64_t first, std::uint64_t last,
                                     std::optional<ExcursionFilter> filter)
    : t_(t), mask_(first), end_(last), filter_(filter) {
  if (t == 0 || t > 63)
    throw std::invalid_argument("CompositionStream: t must be in 1..63");
  end_ = std::min(end_, std::uint64_t{1} << (t - 1));
  if (filter_ && filter_->depth == 0)
    throw std::invalid_argument("CompositionStream: filter depth must be >= 1");
}

Composition CompositionStream::from_mask(unsigned t, std::uint64_t mask) {
  std::vector<unsigned> parts;
  unsigned run = 1;
  for (unsigned i = 0; i + 1 < t; ++i) {
    if ((mask >> i) & 1U) {
      ++run;
    } else {
      parts.push_back(run);
      run = 1;
    }
  }
  parts.push_back(run);
  return Composition(std::move(parts));
}

std::optional<Composition> CompositionStream::next() {
  while (mask_ < end_) {
    Composition c = from_mask(t_, mask_++);
    if (!filter_ || excursion_parts(c, filter_->depth) == filter_->n) return c;
  }
  return std::nullopt;
}

std::vector<Composition> enumerate_compositions(unsigned t,
                                                std::optional<ExcursionFilter> filter) {
  if (t > 30) throw std::invalid_argument("enumerate_compositions: t above 30");
  std::vector<Composition> out;
  CompositionStream stream(t, filter);
  while (auto c = stream.next()) out.push_back(std::move(*c));
  return out;
}

}  // namespace recip
