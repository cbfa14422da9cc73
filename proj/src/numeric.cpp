#include "recip/numeric.hpp"

#include <sstream>
#include <stdexcept>

namespace recip {

HighFloat to_high(const BigInt& x) { return HighFloat(x.get_str()); }

HighFloat to_high(const Rational& x) {
  return to_high(BigInt(x.get_num())) / to_high(BigInt(x.get_den()));
}

std::string to_string(const BigInt& x) { return x.get_str(); }

Rational pow2(long e) {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? Rational(BigInt(1), p) : Rational(p);
}

Rational decimal_tolerance(unsigned digits) {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, digits);
  return Rational(BigInt(1), p);
}

BigInt floor(const Rational& x) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

BigInt ceil(const Rational& x) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

std::string to_decimal(const Rational& x, unsigned digits, Rounding mode) {
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  const Rational scaled = x * Rational(scale);
  BigInt fixed;
  switch (mode) {
    case Rounding::Down: fixed = floor(scaled); break;
    case Rounding::Up: fixed = ceil(scaled); break;
    case Rounding::Nearest: {
      const Rational half(1, 2);
      fixed = sgn(scaled) >= 0 ? floor(scaled + half) : ceil(scaled - half);
      break;
    }
  }
  const bool negative = sgn(fixed) < 0;
  std::string body = BigInt(abs(fixed)).get_str();
  if (digits > 0) {
    if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
    body.insert(body.size() - digits, ".");
  }
  return negative ? "-" + body : body;
}

std::string to_decimal(const HighFloat& x, unsigned digits) {
  if (digits == 0 || digits > kHighFloatDigits)
    throw std::invalid_argument("to_decimal: digits must be in 1..64");
  return x.str(static_cast<std::streamsize>(digits), std::ios_base::scientific);
}

}  // namespace recip
