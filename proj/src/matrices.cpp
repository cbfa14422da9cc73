#include "recip/matrices.hpp"

#include <stdexcept>

namespace recip {

Mat2Z::Mat2Z(BigInt p, BigInt q, BigInt r, BigInt s)
    : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)), s_(std::move(s)) {
  if (determinant() != 1) throw std::invalid_argument("Mat2Z: determinant must be 1");
}

Mat2Z::Mat2Z(BigInt p, BigInt q, BigInt r, BigInt s, Unchecked)
    : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)), s_(std::move(s)) {}

Mat2Z Mat2Z::identity() { return Mat2Z(1, 0, 0, 1, Unchecked{}); }

Mat2Z Mat2Z::inverse() const { return Mat2Z(s_, -q_, -r_, p_, Unchecked{}); }

Mat2Z Mat2Z::negated() const { return Mat2Z(-p_, -q_, -r_, -s_, Unchecked{}); }

std::string Mat2Z::to_string() const {
  return "[" + p_.get_str() + " " + q_.get_str() + "; " + r_.get_str() + " " +
         s_.get_str() + "]";
}

Mat2Z operator*(const Mat2Z& x, const Mat2Z& y) {
  // det(xy) = det(x) det(y) = 1
  return Mat2Z(x.p_ * y.p_ + x.q_ * y.r_, x.p_ * y.q_ + x.q_ * y.s_,
               x.r_ * y.p_ + x.s_ * y.r_, x.r_ * y.q_ + x.s_ * y.s_,
               Mat2Z::Unchecked{});
}

namespace {

int leading_sign(const Mat2Z& m) {
  for (const BigInt* v : {&m.p(), &m.q(), &m.r(), &m.s()})
    if (sgn(*v) != 0) return sgn(*v);
  return 0;
}

}  // namespace

PSL2Element::PSL2Element(const Mat2Z& m)
    : rep_(leading_sign(m) < 0 ? m.negated() : m) {}

std::string to_string(MatrixClass c) {
  switch (c) {
    case MatrixClass::Identity: return "identity";
    case MatrixClass::Elliptic: return "elliptic";
    case MatrixClass::Parabolic: return "parabolic";
    case MatrixClass::Hyperbolic: return "hyperbolic";
  }
  return "unknown";
}

PSL2Element generator_a() { return PSL2Element(Mat2Z(0, -1, 1, 0)); }
PSL2Element generator_b() { return PSL2Element(Mat2Z(1, -1, 1, 0)); }

PSL2Element evaluate(const GroupWord& w) {
  const GroupWord reduced = reduce(w);
  const Mat2Z a = generator_a().rep();
  const Mat2Z b = generator_b().rep();
  const Mat2Z b_inv = b.inverse();
  Mat2Z acc = Mat2Z::identity();
  for (Syllable s : reduced.syllables()) {
    switch (s) {
      case Syllable::A: acc = acc * a; break;
      case Syllable::B: acc = acc * b; break;
      case Syllable::BInv: acc = acc * b_inv; break;
    }
  }
  return PSL2Element(acc);
}

MatrixClass classify(const PSL2Element& m) {
  if (m.is_identity()) return MatrixClass::Identity;
  const BigInt tr = m.abs_trace();
  if (tr < 2) return MatrixClass::Elliptic;
  if (tr == 2) return MatrixClass::Parabolic;
  return MatrixClass::Hyperbolic;
}

bool reciprocity_check(const EpsilonSeq& eps) {
  const ReciprocalNormalForm nf = reciprocal_word(eps);
  const auto& s = nf.word.syllables();
  const GroupWord prefix(std::vector<Syllable>(s.begin(), s.begin() + 2 * eps.size()));
  const PSL2Element x = evaluate(prefix);
  const PSL2Element a = generator_a();
  const PSL2Element p = x * a * x.inverse();
  return (p * p).is_identity() && evaluate(nf.word) == p * a;
}

}  // namespace recip
