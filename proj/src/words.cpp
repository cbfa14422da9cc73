#include "recip/words.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace recip {

namespace {

bool is_b(Syllable s) { return s != Syllable::A; }

int b_exponent(Syllable s) { return s == Syllable::B ? 1 : -1; }

bool adjacent_reducible(Syllable x, Syllable y) {
  return (x == Syllable::A && y == Syllable::A) || (is_b(x) && is_b(y));
}

bool check_reduced(const std::vector<Syllable>& s) {
  for (std::size_t i = 1; i < s.size(); ++i)
    if (adjacent_reducible(s[i - 1], s[i])) return false;
  return true;
}

Syllable b_power(int sign) { return sign > 0 ? Syllable::B : Syllable::BInv; }

// Push one syllable onto a reduced stack, keeping it reduced.
void push_reduced(std::vector<Syllable>& stack, Syllable s) {
  if (stack.empty()) {
    stack.push_back(s);
    return;
  }
  const Syllable top = stack.back();
  if (top == Syllable::A && s == Syllable::A) {
    stack.pop_back();
  } else if (is_b(top) && is_b(s)) {
    // exponent sum in {-2, 0, 2}; -2 = 1 and 2 = -1 mod 3
    const int sum = b_exponent(top) + b_exponent(s);
    stack.pop_back();
    if (sum != 0) stack.push_back(b_power(-sum / 2));
  } else {
    stack.push_back(s);
  }
}

}  // namespace

EpsilonSeq::EpsilonSeq(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty())
    throw std::invalid_argument("EpsilonSeq: length must be at least 1");
  for (int e : entries_)
    if (e != 1 && e != -1)
      throw std::invalid_argument("EpsilonSeq: entries must be +1 or -1");
}

EpsilonSeq EpsilonSeq::from_bits(std::uint64_t bits, std::size_t t) {
  if (t == 0 || t > 64)
    throw std::invalid_argument("EpsilonSeq::from_bits: t must be in 1..64");
  std::vector<int> e(t);
  for (std::size_t i = 0; i < t; ++i) e[i] = ((bits >> i) & 1U) ? -1 : 1;
  return EpsilonSeq(std::move(e));
}

EpsilonSeq EpsilonSeq::negated() const {
  std::vector<int> e(entries_);
  for (int& x : e) x = -x;
  return EpsilonSeq(std::move(e));
}

std::string EpsilonSeq::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += entries_[i] > 0 ? "+1" : "-1";
  }
  return out + ")";
}

GroupWord::GroupWord(std::vector<Syllable> syllables)
    : syllables_(std::move(syllables)), reduced_(check_reduced(syllables_)) {}

GroupWord GroupWord::parse(std::string_view text) {
  std::vector<Syllable> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == 'a') {
      out.push_back(Syllable::A);
      ++i;
    } else if (c == 'B') {
      out.push_back(Syllable::BInv);
      ++i;
    } else if (c == 'b') {
      if (text.substr(i, 4) == "b^-1") {
        out.push_back(Syllable::BInv);
        i += 4;
      } else {
        out.push_back(Syllable::B);
        ++i;
      }
    } else {
      throw std::invalid_argument("GroupWord::parse: unexpected character '" +
                                  std::string(1, c) + "'");
    }
  }
  return GroupWord(std::move(out));
}

GroupWord GroupWord::inverse() const {
  std::vector<Syllable> out(syllables_.rbegin(), syllables_.rend());
  for (Syllable& s : out)
    if (is_b(s)) s = b_power(-b_exponent(s));
  return GroupWord(std::move(out));
}

std::string GroupWord::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < syllables_.size(); ++i) {
    if (i) out += ' ';
    switch (syllables_[i]) {
      case Syllable::A: out += "a"; break;
      case Syllable::B: out += "b"; break;
      case Syllable::BInv: out += "b^-1"; break;
    }
  }
  return out;
}

GroupWord operator*(const GroupWord& lhs, const GroupWord& rhs) {
  std::vector<Syllable> out(lhs.syllables_);
  out.insert(out.end(), rhs.syllables_.begin(), rhs.syllables_.end());
  return GroupWord(std::move(out));
}

Composition::Composition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  for (unsigned p : parts_)
    if (p == 0) throw std::invalid_argument("Composition: parts must be positive");
  total_ = std::accumulate(parts_.begin(), parts_.end(), 0U);
}

std::string Composition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

ReciprocalNormalForm reciprocal_word(const EpsilonSeq& eps) {
  const std::size_t t = eps.size();
  std::vector<Syllable> s;
  s.reserve(4 * t);
  for (std::size_t i = 0; i < t; ++i) {
    s.push_back(Syllable::A);
    s.push_back(b_power(eps[i]));
  }
  for (std::size_t i = t; i-- > 0;) {
    s.push_back(Syllable::A);
    s.push_back(b_power(-eps[i]));
  }
  return {eps, GroupWord(std::move(s))};
}

EpsilonSeq epsilon_of(const GroupWord& w) {
  const auto& s = w.syllables();
  if (s.empty() || s.size() % 4 != 0)
    throw NotNormalForm("epsilon_of: length is not a positive multiple of 4");
  const std::size_t t = s.size() / 4;
  std::vector<int> eps(t);
  for (std::size_t i = 0; i < 2 * t; ++i) {
    if (s[2 * i] != Syllable::A || !is_b(s[2 * i + 1]))
      throw NotNormalForm("epsilon_of: syllables do not alternate a, b^+-1");
  }
  for (std::size_t i = 0; i < t; ++i) eps[i] = b_exponent(s[2 * i + 1]);
  for (std::size_t i = 0; i < t; ++i) {
    const int mirrored = b_exponent(s[2 * (2 * t - 1 - i) + 1]);
    if (mirrored != -eps[i])
      throw NotNormalForm("epsilon_of: second half is not the negated mirror");
  }
  return EpsilonSeq(std::move(eps));
}

ProjectiveEpsilonSeq projectivize(const EpsilonSeq& eps) {
  return ProjectiveEpsilonSeq(eps[0] > 0 ? eps : eps.negated());
}

Composition run_sequence(const EpsilonSeq& eps) {
  std::vector<unsigned> parts;
  unsigned run = 1;
  for (std::size_t i = 1; i < eps.size(); ++i) {
    if (eps[i] == eps[i - 1]) {
      ++run;
    } else {
      parts.push_back(run);
      run = 1;
    }
  }
  parts.push_back(run);
  return Composition(std::move(parts));
}

std::size_t excursion_parts(const Composition& c, unsigned depth) {
  return static_cast<std::size_t>(std::count_if(
      c.parts().begin(), c.parts().end(), [depth](unsigned p) { return p > depth; }));
}

GroupWord reduce(const GroupWord& w) {
  if (w.is_reduced()) return w;
  std::vector<Syllable> stack;
  stack.reserve(w.length());
  for (Syllable s : w.syllables()) push_reduced(stack, s);
  return GroupWord(std::move(stack));
}

GroupWord canonical_cyclic_form(const GroupWord& w) {
  std::vector<Syllable> s = reduce(w).syllables();
  // Conjugate the last syllable to the front while the ends interact.
  while (s.size() >= 2 && adjacent_reducible(s.back(), s.front())) {
    const Syllable last = s.back();
    s.pop_back();
    std::vector<Syllable> rotated;
    rotated.reserve(s.size() + 1);
    push_reduced(rotated, last);
    for (Syllable x : s) push_reduced(rotated, x);
    s = std::move(rotated);
  }
  const std::size_t n = s.size();
  if (n <= 1) return GroupWord(std::move(s));
  std::size_t best = 0;
  for (std::size_t r = 1; r < n; ++r) {
    for (std::size_t i = 0; i < n; ++i) {
      const Syllable x = s[(r + i) % n];
      const Syllable y = s[(best + i) % n];
      if (x != y) {
        if (x < y) best = r;
        break;
      }
    }
  }
  std::rotate(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(best), s.end());
  return GroupWord(std::move(s));
}

}  // namespace recip
