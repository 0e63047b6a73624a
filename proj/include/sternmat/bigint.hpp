#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace sternmat {

// Every scalar in the library is exact: BigInt for integers, Rational for
// ratios. Nothing in the artifact ever rounds.
using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt pow2(unsigned long k) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
  return r;
}

inline BigInt ui_pow(unsigned long base, unsigned long exp) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

// v or -v according to a sign bit; covers the (-1)^bit * v pattern.
inline BigInt apply_sign(int bit, BigInt v) {
  if (bit) mpz_neg(v.get_mpz_t(), v.get_mpz_t());
  return v;
}

// Quotient a/b where b must divide a exactly; a failed division signals an
// implementation bug, not bad input.
inline BigInt exact_div(const BigInt& a, const BigInt& b) {
  if (b == 0 || !mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) {
    throw std::logic_error("exact_div: " + b.get_str() + " does not divide " +
                           a.get_str());
  }
  BigInt q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace sternmat
