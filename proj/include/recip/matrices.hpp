#pragma once

// Integer 2x2 matrices of determinant one and the modular group PSL(2,Z),
// with the representation a -> A = [0 -1; 1 0], b -> B = [1 -1; 1 0].

#include "recip/numeric.hpp"
#include "recip/words.hpp"

#include <string>

namespace recip {

/// [p q; r s] with p s - q r = 1.
class Mat2Z {
 public:
  Mat2Z(BigInt p, BigInt q, BigInt r, BigInt s);

  static Mat2Z identity();

  const BigInt& p() const { return p_; }
  const BigInt& q() const { return q_; }
  const BigInt& r() const { return r_; }
  const BigInt& s() const { return s_; }

  BigInt trace() const { return p_ + s_; }
  BigInt determinant() const { return p_ * s_ - q_ * r_; }

  /// Adjugate; exact because the determinant is one.
  Mat2Z inverse() const;
  Mat2Z negated() const;

  std::string to_string() const;

  friend Mat2Z operator*(const Mat2Z& x, const Mat2Z& y);
  friend bool operator==(const Mat2Z& x, const Mat2Z& y) {
    return x.p_ == y.p_ && x.q_ == y.q_ && x.r_ == y.r_ && x.s_ == y.s_;
  }

 private:
  struct Unchecked {};
  Mat2Z(BigInt p, BigInt q, BigInt r, BigInt s, Unchecked);
  BigInt p_, q_, r_, s_;
};

/// Element of PSL(2,Z): a Mat2Z whose first nonzero entry of (p, q, r, s)
/// is positive.
class PSL2Element {
 public:
  explicit PSL2Element(const Mat2Z& m);

  static PSL2Element identity() { return PSL2Element(Mat2Z::identity()); }

  const Mat2Z& rep() const { return rep_; }

  /// Trace up to sign; |trace| is well defined.
  BigInt abs_trace() const { return abs(rep_.trace()); }

  PSL2Element inverse() const { return PSL2Element(rep_.inverse()); }
  bool is_identity() const { return rep_ == Mat2Z::identity(); }

  friend PSL2Element operator*(const PSL2Element& x, const PSL2Element& y) {
    return PSL2Element(x.rep_ * y.rep_);
  }
  friend bool operator==(const PSL2Element&, const PSL2Element&) = default;

 private:
  Mat2Z rep_;
};

enum class MatrixClass { Identity, Elliptic, Parabolic, Hyperbolic };

std::string to_string(MatrixClass c);

PSL2Element generator_a();
PSL2Element generator_b();

/// Product of generator matrices, left to right.
PSL2Element evaluate(const GroupWord& w);

MatrixClass classify(const PSL2Element& m);

/// With x = a b^{e1} ... a b^{et}, P = X A X^-1: checks that P is an
/// involution and that the normal form evaluates to P A.
bool reciprocity_check(const EpsilonSeq& eps);

}  // namespace recip
