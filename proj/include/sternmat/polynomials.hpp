#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sternmat/bigint.hpp"
#include "sternmat/sequences.hpp"

namespace sternmat {

/// Dense integer polynomial in one variable. Canonical form: the coefficient
/// vector is empty (the zero polynomial) or ends in a nonzero coefficient.
class IntPoly {
 public:
  IntPoly() = default;

  IntPoly(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    trim();
  }

  static IntPoly from_coeffs(std::vector<BigInt> coeffs) {
    IntPoly p;
    p.c_ = std::move(coeffs);
    p.trim();
    return p;
  }

  static IntPoly one() { return IntPoly{1}; }

  bool is_zero() const { return c_.empty(); }

  /// Degree; -1 for the zero polynomial.
  std::int64_t degree() const { return static_cast<std::int64_t>(c_.size()) - 1; }

  /// Coefficient of x^i (0 beyond the stored range).
  const BigInt& coeff(std::size_t i) const {
    static const BigInt zero = 0;
    return i < c_.size() ? c_[i] : zero;
  }

  const std::vector<BigInt>& coeffs() const { return c_; }

  BigInt eval(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// Multiply by x^j.
  IntPoly shifted(std::size_t j) const {
    if (is_zero()) return {};
    IntPoly r;
    r.c_.assign(c_.size() + j, BigInt(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i + j] = c_[i];
    return r;
  }

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), BigInt(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
    r.trim();
    return r;
  }

  friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), BigInt(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i] -= b.c_[i];
    r.trim();
    return r;
  }

  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    IntPoly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;  // leading product of nonzero leads is nonzero over Z
  }

  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

  friend std::ostream& operator<<(std::ostream& os, const IntPoly& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (std::size_t i = 0; i < p.c_.size(); ++i) {
      const BigInt& c = p.c_[i];
      if (c == 0) continue;
      if (first) {
        if (c < 0) os << "-";
        first = false;
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      BigInt a = abs(c);
      if (a != 1 || i == 0) os << a.get_str();
      if (i > 0) {
        if (a != 1) os << "*";
        os << "x";
        if (i > 1) os << "^" << i;
      }
    }
    return os;
  }

 private:
  std::vector<BigInt> c_;

  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
};

/// p(x) -> p(x^k).
inline IntPoly dilate(const IntPoly& p, unsigned k) {
  if (k == 0) throw std::invalid_argument("dilate: k must be >= 1");
  if (p.is_zero() || k == 1) return p;
  std::vector<BigInt> c(static_cast<std::size_t>(p.degree()) * k + 1, BigInt(0));
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) c[i * k] = p.coeffs()[i];
  return IntPoly::from_coeffs(std::move(c));
}

namespace detail {

inline const IntPoly& stern_poly_rec(std::uint64_t n,
                                     std::unordered_map<std::uint64_t, IntPoly>& memo) {
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  IntPoly v;
  if (n % 2 == 0) {
    v = dilate(stern_poly_rec(n / 2, memo), 2);
  } else {
    v = dilate(stern_poly_rec(n / 2, memo), 2).shifted(1) +
        dilate(stern_poly_rec(n / 2 + 1, memo), 2);
  }
  return memo.emplace(n, std::move(v)).first->second;
}

}  // namespace detail

/// Stern polynomials: s(0;x)=0, s(1;x)=1, s(2n;x)=s(n;x^2),
/// s(2n+1;x) = x*s(n;x^2) + s(n+1;x^2). All coefficients are 0 or 1.
inline IntPoly stern_poly(std::uint64_t n) {
  // The recursion touches only O(log n) indices; a per-call memo keeps the
  // function pure without retaining every expanded polynomial.
  std::unordered_map<std::uint64_t, IntPoly> memo{{0, IntPoly{}}, {1, IntPoly{1}}};
  return detail::stern_poly_rec(n, memo);
}

/// r(n;x) = x^n * s(n;1/x); degree exactly n for n >= 1. Its coefficients,
/// read down to the constant term, fill row n of the matrix R.
inline IntPoly reciprocal_poly(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("reciprocal_poly: n must be >= 1");
  IntPoly s = stern_poly(n);
  std::vector<BigInt> c(n + 1, BigInt(0));
  for (std::size_t i = 0; i < s.coeffs().size(); ++i) c[n - i] = s.coeffs()[i];
  return IntPoly::from_coeffs(std::move(c));
}

/// rho(n;x) = sum_{k=1..n} binom(k-1, n-k) x^k, the full-size integer row
/// polynomial of the shifted Pascal matrix P.
inline IntPoly rho_poly(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("rho_poly: n must be >= 1");
  std::vector<BigInt> c(n + 1, BigInt(0));
  for (std::uint64_t k = 1; k <= n; ++k)
    c[k] = binom(k - 1, static_cast<std::int64_t>(n - k));
  return IntPoly::from_coeffs(std::move(c));
}

/// Exponents i for which the factor (1 + x^{2^i}) appears in q_k, i.e. the
/// positions of the 1 bits of k-1.
inline std::vector<unsigned> q_poly_factors(std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("q_poly_factors: k must be >= 1");
  std::vector<unsigned> exps;
  std::uint64_t b = k - 1;
  for (unsigned i = 0; b != 0; ++i, b >>= 1)
    if (b & 1) exps.push_back(i);
  return exps;
}

/// Column polynomial of R: q_k(x) = prod_i (1 + x^{2^i})^{u_i} where the u_i
/// are the binary digits of k-1. Coefficient of x^j is binom(k-1, j) mod 2.
inline IntPoly q_poly(std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("q_poly: k must be >= 1");
  IntPoly r = IntPoly::one();
  for (unsigned i : q_poly_factors(k)) {
    std::vector<BigInt> f((std::size_t{1} << i) + 1, BigInt(0));
    f.front() = 1;
    f.back() = 1;
    r = r * IntPoly::from_coeffs(std::move(f));
  }
  return r;
}

struct PFactors {
  unsigned alpha = 0;               // minimal alpha with n <= 2^alpha
  std::vector<unsigned> exponents;  // 1 bits of 2^alpha - n
};

inline PFactors p_poly_factors(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("p_poly_factors: n must be >= 1");
  PFactors f;
  if (n == 1) return f;
  f.alpha = static_cast<unsigned>(std::bit_width(n - 1));  // 2^{alpha-1} < n <= 2^alpha
  std::uint64_t b = (std::uint64_t{1} << f.alpha) - n;
  for (unsigned i = 0; b != 0; ++i, b >>= 1)
    if (b & 1) f.exponents.push_back(i);
  return f;
}

/// Row polynomial of R^{-1}: p_n(x) = prod_i (1 - x^{2^i})^{b_i} where the
/// b_i are the binary digits of 2^alpha - n; p_1 = 1.
inline IntPoly p_poly(std::uint64_t n) {
  IntPoly r = IntPoly::one();
  for (unsigned i : p_poly_factors(n).exponents) {
    std::vector<BigInt> f((std::size_t{1} << i) + 1, BigInt(0));
    f.front() = 1;
    f.back() = -1;
    r = r * IntPoly::from_coeffs(std::move(f));
  }
  return r;
}

/// Truncation to degree N-1 of prod_{i>=0} (1 - x^{2^i}); the coefficient of
/// x^j is (-1)^{t(j)} with t the Prouhet-Thue-Morse sequence.
inline IntPoly thue_morse_series(std::uint64_t N) {
  if (N == 0) throw std::invalid_argument("thue_morse_series: N must be >= 1");
  std::vector<BigInt> c(N, BigInt(0));
  c[0] = 1;
  for (std::uint64_t p = 1; p < N; p <<= 1)
    for (std::uint64_t j = N; j-- > p;) c[j] -= c[j - p];
  return IntPoly::from_coeffs(std::move(c));
}

}  // namespace sternmat
