#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "sternmat/bigint.hpp"

namespace sternmat {

namespace detail {

inline const BigInt& stern_rec(std::uint64_t n,
                               std::unordered_map<std::uint64_t, BigInt>& memo) {
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  BigInt v = (n % 2 == 0)
                 ? BigInt(stern_rec(n / 2, memo))
                 : BigInt(stern_rec(n / 2, memo) + stern_rec(n / 2 + 1, memo));
  return memo.emplace(n, std::move(v)).first->second;
}

}  // namespace detail

/// Stern's diatomic sequence: s(0)=0, s(1)=1, s(2n)=s(n), s(2n+1)=s(n)+s(n+1).
inline BigInt stern(std::uint64_t n) {
  if (n < 2) return BigInt(static_cast<unsigned long>(n));
  thread_local std::unordered_map<std::uint64_t, BigInt> memo{{0, BigInt(0)},
                                                              {1, BigInt(1)}};
  return detail::stern_rec(n, memo);
}

/// Prouhet-Thue-Morse bit: t(0)=0, t(2n)=t(n), t(2n+1)=1-t(n).
/// Equals the parity of the binary digit sum of n.
inline int ptm(std::uint64_t n) {
  int t = 0;
  while (n != 0) {
    if (n & 1) t = 1 - t;
    n >>= 1;
  }
  return t;
}

/// Largest v with 2^v | n. Undefined at n=0.
inline unsigned two_adic_valuation(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("two_adic_valuation: n must be positive");
  return static_cast<unsigned>(std::countr_zero(n));
}

/// Number of 1 bits of n; d(0)=0.
inline unsigned binary_digit_sum(std::uint64_t n) {
  return static_cast<unsigned>(std::popcount(n));
}

/// Number of 0 bits of n below its leading 1 bit; z(1)=0. Undefined at n=0.
inline unsigned binary_zero_count(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("binary_zero_count: n must be positive");
  return static_cast<unsigned>(std::bit_width(n)) - binary_digit_sum(n);
}

/// Gould's sequence G(n) = 2^d(n): the number of odd entries in row n of
/// Pascal's triangle.
inline BigInt gould(std::uint64_t n) { return pow2(binary_digit_sum(n)); }

inline BigInt fibonacci(std::uint64_t n) {
  BigInt a = 0, b = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    a += b;
    std::swap(a, b);
  }
  return a;
}

/// Padovan numbers: P(0)=1, P(1)=P(2)=0, P(n+1)=P(n-1)+P(n-2) for n>=2.
inline BigInt padovan(std::uint64_t n) {
  BigInt p0 = 1, p1 = 0, p2 = 0;
  if (n == 0) return p0;
  if (n <= 2) return p1;
  for (std::uint64_t i = 3; i <= n; ++i) {
    BigInt next = p1 + p0;  // P(i) = P(i-2) + P(i-3)
    p0 = std::move(p1);
    p1 = std::move(p2);
    p2 = std::move(next);
  }
  return p2;
}

/// Exact binomial coefficient; 0 when k < 0 or k > n.
inline BigInt binom(std::uint64_t n, std::int64_t k) {
  if (k < 0 || static_cast<std::uint64_t>(k) > n) return BigInt(0);
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
  return r;
}

/// binom(n,k) mod 2 via Lucas: odd exactly when the binary digits of k are a
/// subset of those of n. 0 when k < 0 or k > n.
inline int binom_mod2(std::uint64_t n, std::int64_t k) {
  if (k < 0 || static_cast<std::uint64_t>(k) > n) return 0;
  return (static_cast<std::uint64_t>(k) & ~n) == 0 ? 1 : 0;
}

/// Catalan numbers C(n) = binom(2n,n)/(n+1), divided exactly.
inline BigInt catalan(std::uint64_t n) {
  return exact_div(binom(2 * n, static_cast<std::int64_t>(n)), BigInt(n + 1));
}

/// Fine numbers by the alternating sum
/// F(n) = (1/(n+1)) * sum_{k=0..n} (-1)^k (k+1) binom(2n-k, n).
inline BigInt fine(std::uint64_t n) {
  BigInt acc = 0;
  for (std::uint64_t k = 0; k <= n; ++k) {
    BigInt term = BigInt(k + 1) * binom(2 * n - k, static_cast<std::int64_t>(n));
    if (k % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return exact_div(acc, BigInt(n + 1));
}

namespace detail {
inline void require_index_ge1(std::uint64_t n, const char* who) {
  if (n == 0) throw std::invalid_argument(std::string(who) + ": index must be >= 1");
}
}  // namespace detail

/// Antidiagonal sums of R: a(n) = sum_j [binom(j, n-1-2j) odd].
inline BigInt adiag_r(std::uint64_t n) {
  detail::require_index_ge1(n, "adiag_r");
  unsigned long acc = 0;
  for (std::uint64_t j = 0; 2 * j + 1 <= n; ++j)
    acc += static_cast<unsigned long>(
        binom_mod2(j, static_cast<std::int64_t>(n - 1 - 2 * j)));
  return BigInt(acc);
}

/// Antidiagonal sums of R^{-1}:
/// a(n) = sum_j [binom(2n-3j-2, n-2j-1) odd] * (-1)^{t(n-2j-1)}.
inline BigInt adiag_r_inverse(std::uint64_t n) {
  detail::require_index_ge1(n, "adiag_r_inverse");
  long acc = 0;
  for (std::uint64_t j = 0; 2 * j + 1 <= n; ++j) {
    std::uint64_t i = n - 2 * j - 1;
    int bit = binom_mod2(2 * n - 3 * j - 2, static_cast<std::int64_t>(i));
    if (bit) acc += ptm(i) ? -1 : 1;
  }
  return BigInt(acc);
}

/// Antidiagonal sums of S^{-1}:
/// a(n) = sum_j [binom(n-j-1, j) odd] * (-1)^{t(n-2j-1)}.
/// Follows the period-3 pattern 1, -1, 0.
inline BigInt adiag_s_inverse(std::uint64_t n) {
  detail::require_index_ge1(n, "adiag_s_inverse");
  long acc = 0;
  for (std::uint64_t j = 0; 2 * j + 1 <= n; ++j) {
    std::uint64_t i = n - 2 * j - 1;
    int bit = binom_mod2(n - j - 1, static_cast<std::int64_t>(j));
    if (bit) acc += ptm(i) ? -1 : 1;
  }
  return BigInt(acc);
}

/// Number of nonzero entries in row n of R^{-1}:
/// r(n) = sum_{k=0..n-1} [binom(n-1+k, k) odd]; equals 2^z(n-1) for n >= 2.
inline BigInt row_nonzero_r_inverse(std::uint64_t n) {
  detail::require_index_ge1(n, "row_nonzero_r_inverse");
  unsigned long acc = 0;
  for (std::uint64_t k = 0; k < n; ++k)
    acc += static_cast<unsigned long>(
        binom_mod2(n - 1 + k, static_cast<std::int64_t>(k)));
  return BigInt(acc);
}

}  // namespace sternmat
