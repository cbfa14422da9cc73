#pragma once

// Reciprocal normal forms in Z2 * Z3 = <a, b | a^2 = b^3 = 1>.
//
// A reciprocal geodesic of word length 4t is represented by the normal form
//
//     a b^{e1} a b^{e2} ... a b^{et} a b^{-et} ... a b^{-e1},   ei = +-1,
//
// so it is determined by the sign tuple (e1, ..., et). Two tuples give the
// same geodesic iff they are negatives of each other, and the class of a
// tuple is determined by its run sequence (a composition of t).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace recip {

class NotNormalForm : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Sign tuple (e1, ..., et) with t >= 1 and every entry +1 or -1.
class EpsilonSeq {
 public:
  explicit EpsilonSeq(std::vector<int> entries);
  EpsilonSeq(std::initializer_list<int> entries)
      : EpsilonSeq(std::vector<int>(entries)) {}

  /// Bit i of `bits` set means entry i is -1. Requires 1 <= t <= 64.
  static EpsilonSeq from_bits(std::uint64_t bits, std::size_t t);

  std::size_t size() const { return entries_.size(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<int>& entries() const { return entries_; }

  EpsilonSeq negated() const;

  std::string to_string() const;

  friend bool operator==(const EpsilonSeq&, const EpsilonSeq&) = default;
  friend auto operator<=>(const EpsilonSeq&, const EpsilonSeq&) = default;

 private:
  std::vector<int> entries_;
};

/// Class {e, -e}, stored by its member with leading +1.
class ProjectiveEpsilonSeq {
 public:
  const EpsilonSeq& canonical() const { return canonical_; }

  friend bool operator==(const ProjectiveEpsilonSeq&,
                         const ProjectiveEpsilonSeq&) = default;
  friend auto operator<=>(const ProjectiveEpsilonSeq&,
                          const ProjectiveEpsilonSeq&) = default;

 private:
  friend ProjectiveEpsilonSeq projectivize(const EpsilonSeq& eps);
  explicit ProjectiveEpsilonSeq(EpsilonSeq canonical)
      : canonical_(std::move(canonical)) {}
  EpsilonSeq canonical_;
};

/// Syllables of Z2 * Z3. The enumerator order a < b < b^-1 is the order
/// used for canonical rotations.
enum class Syllable : std::uint8_t { A = 0, B = 1, BInv = 2 };

class GroupWord {
 public:
  GroupWord() = default;
  explicit GroupWord(std::vector<Syllable> syllables);

  /// Accepts whitespace separated tokens `a`, `b`, `b^-1` (or `B`), or the
  /// compact form "abaB".
  static GroupWord parse(std::string_view text);

  const std::vector<Syllable>& syllables() const { return syllables_; }
  std::size_t length() const { return syllables_.size(); }
  bool empty() const { return syllables_.empty(); }
  bool is_reduced() const { return reduced_; }

  GroupWord inverse() const;

  /// Space separated tokens, b^-1 written as `b^-1`.
  std::string to_string() const;

  friend GroupWord operator*(const GroupWord& lhs, const GroupWord& rhs);
  friend bool operator==(const GroupWord& lhs, const GroupWord& rhs) {
    return lhs.syllables_ == rhs.syllables_;
  }

 private:
  friend GroupWord reduce(const GroupWord& w);
  std::vector<Syllable> syllables_;
  bool reduced_ = true;
};

struct ReciprocalNormalForm {
  EpsilonSeq eps;
  GroupWord word;
};

/// Ordered positive parts summing to total(). The empty composition
/// (total 0) is allowed.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<unsigned> parts);
  Composition(std::initializer_list<unsigned> parts)
      : Composition(std::vector<unsigned>(parts)) {}

  const std::vector<unsigned>& parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  unsigned total() const { return total_; }

  std::string to_string() const;

  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  std::vector<unsigned> parts_;
  unsigned total_ = 0;
};

ReciprocalNormalForm reciprocal_word(const EpsilonSeq& eps);

/// Inverse of reciprocal_word. Throws NotNormalForm when `w` is not
/// literally a reciprocal normal form.
EpsilonSeq epsilon_of(const GroupWord& w);

ProjectiveEpsilonSeq projectivize(const EpsilonSeq& eps);

/// Maximal runs of equal signs, left to right.
Composition run_sequence(const EpsilonSeq& eps);

/// Number of parts strictly greater than `depth`: a run sequence with n such
/// parts belongs to a geodesic with 2n cusp excursions of depth > depth.
std::size_t excursion_parts(const Composition& c, unsigned depth);

/// Free-product reduction: a a -> 1, b-exponents added mod 3.
GroupWord reduce(const GroupWord& w);

/// Cyclic reduction followed by the least rotation. Two words are conjugate
/// in Z2 * Z3 iff their canonical cyclic forms agree.
GroupWord canonical_cyclic_form(const GroupWord& w);

}  // namespace recip
