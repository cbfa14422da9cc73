#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "recip/words.hpp"

#include <map>
#include <random>
#include <set>

using namespace recip;

namespace {

GroupWord random_word(std::mt19937& rng, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> sym(0, 2);
  std::vector<Syllable> s(len(rng));
  for (auto& x : s) x = static_cast<Syllable>(sym(rng));
  return GroupWord(std::move(s));
}

EpsilonSeq random_eps(std::mt19937& rng, std::size_t t) {
  std::uniform_int_distribution<std::uint64_t> bits(0, (std::uint64_t{1} << t) - 1);
  return EpsilonSeq::from_bits(bits(rng), t);
}

}  // namespace

TEST_CASE("EpsilonSeq rejects empty and non-sign entries") {
  CHECK_THROWS_AS(EpsilonSeq(std::vector<int>{}), std::invalid_argument);
  CHECK_THROWS_AS(EpsilonSeq({1, 0, -1}), std::invalid_argument);
  CHECK_THROWS_AS(EpsilonSeq({2}), std::invalid_argument);
  CHECK_THROWS_AS(EpsilonSeq::from_bits(0, 0), std::invalid_argument);
  CHECK(EpsilonSeq::from_bits(0b10, 3) == EpsilonSeq({1, -1, 1}));
}

TEST_CASE("reciprocal_word instantiates the normal form") {
  CHECK(reciprocal_word({1}).word.to_string() == "a b a b^-1");
  CHECK(reciprocal_word({1, -1}).word.to_string() == "a b a b^-1 a b a b^-1");

  const GroupWord w = reciprocal_word({1, 1, -1}).word;
  CHECK(w.to_string() == "a b a b a b^-1 a b a b^-1 a b^-1");
  CHECK(w.length() == 12);
  CHECK(w.is_reduced());
  CHECK(reduce(w) == w);
}

TEST_CASE("epsilon_of inverts reciprocal_word") {
  CHECK(epsilon_of(GroupWord::parse("a b a b^-1")) == EpsilonSeq({1}));
  CHECK(epsilon_of(GroupWord::parse("a b a b a b^-1 a b^-1")) == EpsilonSeq({1, 1}));
  CHECK_THROWS_AS(epsilon_of(GroupWord::parse("a b a b")), NotNormalForm);
  CHECK_THROWS_AS(epsilon_of(GroupWord::parse("a b")), NotNormalForm);
  CHECK_THROWS_AS(epsilon_of(GroupWord::parse("b a b a")), NotNormalForm);
  CHECK_THROWS_AS(epsilon_of(GroupWord()), NotNormalForm);

  std::mt19937 rng(7);
  for (int i = 0; i < 500; ++i) {
    const EpsilonSeq e = random_eps(rng, 1 + i % 20);
    const auto nf = reciprocal_word(e);
    CHECK(nf.word.length() == 4 * e.size());
    CHECK(epsilon_of(nf.word) == e);
  }
}

TEST_CASE("projectivize picks the +1-leading representative") {
  CHECK(projectivize({-1, 1}).canonical() == EpsilonSeq({1, -1}));
  CHECK(projectivize({1, -1}).canonical() == EpsilonSeq({1, -1}));

  std::map<EpsilonSeq, int> classes;
  for (std::uint64_t b = 0; b < 8; ++b) ++classes[projectivize(EpsilonSeq::from_bits(b, 3)).canonical()];
  CHECK(classes.size() == 4);
  for (const auto& [k, v] : classes) {
    CHECK(v == 2);
    CHECK(k[0] == 1);
  }
}

TEST_CASE("run_sequence") {
  CHECK(run_sequence({1, 1, 1, -1, 1, -1, -1, 1}) == Composition({3, 1, 1, 2, 1}));
  CHECK(run_sequence({1, -1, 1, -1}) == Composition({1, 1, 1, 1}));
  CHECK(run_sequence({1, 1, 1, 1}) == Composition({4}));

  std::mt19937 rng(11);
  for (int i = 0; i < 500; ++i) {
    const EpsilonSeq e = random_eps(rng, 1 + i % 30);
    const Composition c = run_sequence(e);
    CHECK(c.total() == e.size());
    CHECK(run_sequence(e.negated()) == c);
  }
}

TEST_CASE("excursion_parts counts parts above the depth") {
  const Composition c{3, 1, 1, 2, 1};
  CHECK(excursion_parts(c, 1) == 2);
  CHECK(excursion_parts(c, 2) == 1);
  CHECK(excursion_parts({1, 1, 1, 1}, 1) == 0);
  CHECK(excursion_parts(run_sequence({1, 1, -1, 1, -1, -1, -1}), 1) == 2);

  std::mt19937 rng(3);
  for (int i = 0; i < 300; ++i) {
    const Composition r = run_sequence(random_eps(rng, 1 + i % 25));
    const unsigned depth = 1 + i % 5;
    std::size_t naive = 0;
    for (unsigned p : r.parts())
      if (p >= depth + 1) ++naive;
    CHECK(excursion_parts(r, depth) == naive);
  }
}

TEST_CASE("Composition validates parts") {
  CHECK_THROWS_AS(Composition({2, 0, 1}), std::invalid_argument);
  CHECK(Composition{}.total() == 0);
  CHECK(Composition({2, 3}).total() == 5);
}

TEST_CASE("reduce applies a^2 = b^3 = 1") {
  CHECK(reduce(GroupWord::parse("a a")).empty());
  CHECK(reduce(GroupWord::parse("b b b")).empty());
  CHECK(reduce(GroupWord::parse("b b")) == GroupWord::parse("b^-1"));
  CHECK(reduce(GroupWord::parse("B B")) == GroupWord::parse("b"));
  CHECK(reduce(GroupWord::parse("a b B a b")) == GroupWord::parse("b"));
  CHECK(reduce(GroupWord::parse("abBa")).empty());

  std::mt19937 rng(5);
  for (int i = 0; i < 1000; ++i) {
    const GroupWord w = random_word(rng, 30);
    const GroupWord r = reduce(w);
    CHECK(r.is_reduced());
    CHECK(r.length() <= w.length());
    CHECK(reduce(r) == r);
    CHECK(reduce(w * w.inverse()).empty());
  }
}

TEST_CASE("canonical_cyclic_form identifies conjugates") {
  const GroupWord w = GroupWord::parse("a b a b^-1");
  CHECK(canonical_cyclic_form(w) == canonical_cyclic_form(GroupWord::parse("b a b^-1 a")));

  const GroupWord g = GroupWord::parse("a b");
  CHECK(canonical_cyclic_form(g * w * g.inverse()) == canonical_cyclic_form(w));

  // b and b^-1 are not conjugate (they differ in the abelianisation Z6)
  CHECK_FALSE(canonical_cyclic_form(GroupWord::parse("b")) ==
              canonical_cyclic_form(GroupWord::parse("B")));
  CHECK(canonical_cyclic_form(GroupWord::parse("a b a")) == GroupWord::parse("b"));

  std::set<std::vector<Syllable>> t2;
  for (std::uint64_t b = 0; b < 4; ++b)
    t2.insert(canonical_cyclic_form(reciprocal_word(EpsilonSeq::from_bits(b, 2)).word).syllables());
  CHECK(t2.size() == 2);

  std::mt19937 rng(13);
  for (int i = 0; i < 300; ++i) {
    const GroupWord u = random_word(rng, 20);
    const GroupWord h = random_word(rng, 10);
    CHECK(canonical_cyclic_form(h * u * h.inverse()) == canonical_cyclic_form(u));
  }
}

TEST_CASE("normal forms pair up under conjugacy") {
  for (unsigned t = 1; t <= 10; ++t) {
    std::map<std::vector<Syllable>, int> classes;
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << t); ++b)
      ++classes[canonical_cyclic_form(reciprocal_word(EpsilonSeq::from_bits(b, t)).word).syllables()];
    CHECK(classes.size() == (std::size_t{1} << (t - 1)));
    for (const auto& [k, v] : classes) CHECK(v == 2);
  }
}

TEST_CASE("GroupWord parsing") {
  CHECK(GroupWord::parse("abaB") == GroupWord::parse("a b a b^-1"));
  CHECK_FALSE(GroupWord::parse("a a").is_reduced());
  CHECK_THROWS_AS(GroupWord::parse("a c"), std::invalid_argument);
}
