#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "recip/matrices.hpp"

#include <random>

using namespace recip;

namespace {

GroupWord random_word(std::mt19937& rng, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> sym(0, 2);
  std::vector<Syllable> s(len(rng));
  for (auto& x : s) x = static_cast<Syllable>(sym(rng));
  return GroupWord(std::move(s));
}

}  // namespace

TEST_CASE("Mat2Z enforces determinant one") {
  CHECK_THROWS_AS(Mat2Z(1, 1, 1, 1), std::invalid_argument);
  const Mat2Z m(2, 3, 1, 2);
  CHECK((m * m.inverse()) == Mat2Z::identity());
  CHECK(m.inverse().trace() == m.trace());
}

TEST_CASE("PSL2Element canonical sign") {
  const PSL2Element x(Mat2Z(-1, 0, 0, -1));
  CHECK(x.is_identity());
  CHECK(PSL2Element(Mat2Z(0, -1, 1, 0)) == PSL2Element(Mat2Z(0, 1, -1, 0)));
  CHECK(PSL2Element(Mat2Z(0, 1, -1, 0)).rep() == Mat2Z(0, 1, -1, 0));
}

TEST_CASE("generators have orders 2 and 3") {
  CHECK(evaluate(GroupWord::parse("a a")).is_identity());
  CHECK(evaluate(GroupWord::parse("b b b")).is_identity());
  CHECK_FALSE(generator_b().is_identity());
  CHECK_FALSE((generator_b() * generator_b()).is_identity());
  // B^3 = -I as an integer matrix
  const Mat2Z b = generator_b().rep();
  CHECK(b * b * b == Mat2Z::identity().negated());
}

TEST_CASE("classify") {
  CHECK(classify(evaluate(GroupWord::parse("a b"))) == MatrixClass::Parabolic);
  CHECK(classify(evaluate(GroupWord::parse("a b^-1"))) == MatrixClass::Parabolic);
  CHECK(classify(generator_a()) == MatrixClass::Elliptic);
  CHECK(classify(generator_b()) == MatrixClass::Elliptic);
  CHECK(classify(PSL2Element::identity()) == MatrixClass::Identity);

  // A B = [-1 0; 1 -1], A B^-1 = [-1 1; 0 -1] by hand, so A B A B^-1 = [1 -1; -1 2]
  const PSL2Element t1 = evaluate(GroupWord::parse("a b a b^-1"));
  CHECK(t1 == PSL2Element(Mat2Z(1, -1, -1, 2)));
  CHECK(t1.abs_trace() == 3);
  CHECK(classify(t1) == MatrixClass::Hyperbolic);
}

TEST_CASE("evaluate is a homomorphism and respects reduction") {
  std::mt19937 rng(17);
  for (int i = 0; i < 300; ++i) {
    const GroupWord u = random_word(rng, 25), v = random_word(rng, 25);
    CHECK(evaluate(u * v) == evaluate(u) * evaluate(v));
    CHECK(evaluate(reduce(u)) == evaluate(u));
    CHECK(evaluate(u.inverse()) == evaluate(u).inverse());
    CHECK(evaluate(u).rep().determinant() == 1);
    CHECK(evaluate(u).inverse().abs_trace() == evaluate(u).abs_trace());
    // faithfulness on reduced words
    CHECK(evaluate(u).is_identity() == reduce(u).empty());
  }
}

TEST_CASE("reciprocity_check") {
  CHECK(reciprocity_check({1}));
  CHECK(reciprocity_check({1, -1}));
  for (unsigned t = 1; t <= 10; ++t) {
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << t); ++b) {
      const EpsilonSeq e = EpsilonSeq::from_bits(b, t);
      REQUIRE(reciprocity_check(e));
      REQUIRE(classify(evaluate(reciprocal_word(e).word)) == MatrixClass::Hyperbolic);
    }
  }
}

TEST_CASE("entries outgrow 64 bits") {
  std::vector<int> e(60);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = i % 2 ? -1 : 1;
  const PSL2Element m = evaluate(reciprocal_word(EpsilonSeq(e)).word);
  CHECK(m.abs_trace() > BigInt("18446744073709551616"));
  CHECK(m.rep().determinant() == 1);
}
