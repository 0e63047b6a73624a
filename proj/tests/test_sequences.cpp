#include <doctest.h>

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "fixtures.hpp"
#include "sternmat/sequences.hpp"

using namespace sternmat;

namespace {

// Bottom-up table of s(0..n), independent of the memoized recursion.
std::vector<BigInt> stern_table(std::uint64_t n) {
  std::vector<BigInt> t(n + 1);
  if (n >= 1) t[1] = 1;
  for (std::uint64_t i = 2; i <= n; ++i)
    t[i] = (i % 2 == 0) ? BigInt(t[i / 2]) : BigInt(t[i / 2] + t[i / 2 + 1]);
  return t;
}

}  // namespace

TEST_SUITE_BEGIN("sequences");

TEST_CASE("stern base cases and table values") {
  CHECK(stern(0) == 0);
  CHECK(stern(1) == 1);
  CHECK(stern(19) == 7);
  for (std::size_t n = 1; n <= 20; ++n)
    CHECK(stern(n) == fixtures::STERN_1_20[n - 1]);
  for (unsigned k = 0; k <= 10; ++k) CHECK(stern(std::uint64_t{1} << k) == 1);
}

TEST_CASE("stern recurrence against bottom-up table") {
  const std::uint64_t N = 1 << 14;
  auto t = stern_table(2 * N + 2);
  for (std::uint64_t n = 0; n <= N; ++n) {
    CHECK(stern(n) == t[n]);
    CHECK(stern(2 * n) == stern(n));
    CHECK(stern(2 * n + 1) == stern(n) + stern(n + 1));
  }
}

TEST_CASE("stern at 2^m + 1") {
  for (unsigned m = 0; m <= 10; ++m)
    CHECK(stern((std::uint64_t{1} << m) + 1) == m + 1);
}

TEST_CASE("stern dyadic block sums") {
  for (unsigned m = 1; m <= 10; ++m) {
    BigInt plain = 0, alt = 0;
    for (std::uint64_t k = std::uint64_t{1} << m; k < (std::uint64_t{2} << m); ++k) {
      plain += stern(k);
      alt += apply_sign(k % 2 == 0, stern(k));
    }
    CHECK(plain == ui_pow(3, m));
    CHECK(alt == ui_pow(3, m - 1));
  }
}

TEST_CASE("ptm first sixteen terms and digit-sum parity") {
  const int first16[] = {0, 1, 1, 0, 1, 0, 0, 1, 1, 0, 0, 1, 0, 1, 1, 0};
  for (int n = 0; n < 16; ++n) CHECK(ptm(n) == first16[n]);
  for (unsigned m = 0; m <= 10; ++m) CHECK(ptm(std::uint64_t{1} << m) == 1);
  for (std::uint64_t n = 0; n <= (1 << 14); ++n)
    CHECK(ptm(n) == static_cast<int>(binary_digit_sum(n) % 2));
}

TEST_CASE("two_adic_valuation") {
  CHECK(two_adic_valuation(1) == 0);
  CHECK(two_adic_valuation(12) == 2);
  for (std::uint64_t n = 1; n <= 100; ++n)
    CHECK(two_adic_valuation(2 * n) == two_adic_valuation(n) + 1);
  CHECK_THROWS_AS(two_adic_valuation(0), std::invalid_argument);
}

TEST_CASE("binary digit sums and zero counts") {
  CHECK(binary_digit_sum(0) == 0);
  CHECK(binary_digit_sum(7) == 3);
  for (std::uint64_t n = 0; n < 64; ++n)
    CHECK(binary_digit_sum(n) + binary_digit_sum(63 - n) == 6);
  CHECK(binary_zero_count(1) == 0);
  CHECK(binary_zero_count(8) == 3);
  for (unsigned k = 1; k <= 10; ++k)
    CHECK(binary_zero_count((std::uint64_t{1} << k) - 1) == 0);
  CHECK_THROWS_AS(binary_zero_count(0), std::invalid_argument);
}

TEST_CASE("gould") {
  const int first4[] = {1, 2, 2, 4};
  for (int n = 0; n < 4; ++n) CHECK(gould(n) == first4[n]);
  for (std::uint64_t n = 0; n < 64; ++n) CHECK(gould(n) * gould(63 - n) == 64);
}

TEST_CASE("fibonacci") {
  const int first[] = {0, 1, 1, 2, 3, 5, 8, 13, 21, 34};
  for (int n = 0; n < 10; ++n) CHECK(fibonacci(n) == first[n]);
  for (std::uint64_t n = 1; n <= 60; ++n)
    CHECK(fibonacci(n + 1) == fibonacci(n) + fibonacci(n - 1));
}

TEST_CASE("padovan") {
  CHECK(padovan(0) == 1);
  CHECK(padovan(1) == 0);
  CHECK(padovan(2) == 0);
  const int p3_to_8[] = {1, 0, 1, 1, 1, 2};
  for (int i = 0; i < 6; ++i) CHECK(padovan(3 + i) == p3_to_8[i]);
  for (std::uint64_t n = 2; n <= 60; ++n)
    CHECK(padovan(n + 1) == padovan(n - 1) + padovan(n - 2));
}

TEST_CASE("fine") {
  const int first6[] = {1, 0, 1, 2, 6, 18};
  for (int n = 0; n < 6; ++n) CHECK(fine(n) == first6[n]);
}

TEST_CASE("catalan") {
  const int first6[] = {1, 1, 2, 5, 14, 42};
  for (int n = 0; n < 6; ++n) CHECK(catalan(n) == first6[n]);
}

TEST_CASE("binom conventions") {
  CHECK(binom(5, 2) == 10);
  CHECK(binom(3, 5) == 0);
  CHECK(binom(4, -1) == 0);
  for (std::uint64_t n = 1; n <= 64; ++n)
    CHECK(mpz_even_p(binom(2 * n, n).get_mpz_t()));
}

TEST_CASE("binom_mod2 against exact binomials") {
  CHECK(binom_mod2(4, 2) == 0);
  bool agree = true;
  for (std::uint64_t n = 0; n <= 512 && agree; ++n)
    for (std::int64_t k = 0; k <= 512; ++k)
      if (binom_mod2(n, k) !=
          static_cast<int>(mpz_odd_p(binom(n, k).get_mpz_t()) != 0)) {
        agree = false;
        break;
      }
  CHECK(agree);
}

TEST_CASE("binom_mod2 doubling table") {
  for (std::uint64_t r = 0; r <= 64; ++r)
    for (std::int64_t s = 0; s <= 64; ++s)
      for (int a = 0; a <= 1; ++a)
        for (int b = 0; b <= 1; ++b) {
          int got = binom_mod2(2 * r + a, 2 * s + b);
          int want = (a == 0 && b == 1) ? 0 : binom_mod2(r, s);
          CHECK(got == want);
        }
}

TEST_CASE("binom_mod2 antidiagonal counts are Stern numbers") {
  for (std::uint64_t n = 0; n <= 200; ++n) {
    int sum = 0;
    for (std::int64_t k = 0; 2 * k <= static_cast<std::int64_t>(n); ++k)
      sum += binom_mod2(n - k, k);
    CHECK(stern(n + 1) == sum);
  }
}

TEST_CASE("closed forms of the antidiagonal-sum sequences reject index 0") {
  CHECK_THROWS_AS(adiag_r(0), std::invalid_argument);
  CHECK_THROWS_AS(adiag_r_inverse(0), std::invalid_argument);
  CHECK_THROWS_AS(adiag_s_inverse(0), std::invalid_argument);
  CHECK_THROWS_AS(row_nonzero_r_inverse(0), std::invalid_argument);
}

TEST_CASE("stern-like recurrences hold for all seven sequences") {
  const std::uint64_t N = 1 << 12;
  // stern, ptm, gould
  for (std::uint64_t n = 1; n <= N / 2; ++n) {
    CHECK(stern(2 * n) == stern(n));
    CHECK(stern(2 * n + 1) == stern(n) + stern(n + 1));
    CHECK(ptm(2 * n) == ptm(n));
    CHECK(ptm(2 * n + 1) == 1 - ptm(n));
    CHECK(gould(2 * n) == gould(n));
    CHECK(gould(2 * n + 1) == 2 * gould(n));
  }
  // the four matrix-sum sequences
  for (std::uint64_t n = 2; n <= N / 2; ++n)
    CHECK(adiag_r(2 * n) == adiag_r(n - 1));
  for (std::uint64_t n = 1; n <= N / 2; ++n) {
    CHECK(adiag_r(2 * n + 1) == adiag_r(n) + adiag_r(n + 1));
    CHECK(adiag_r_inverse(2 * n) == -adiag_r_inverse(n + 1));
    CHECK(adiag_r_inverse(2 * n + 1) == adiag_r_inverse(n) + adiag_r_inverse(n + 1));
    CHECK(adiag_s_inverse(2 * n) == -adiag_s_inverse(n));
    CHECK(adiag_s_inverse(2 * n + 1) == adiag_s_inverse(n) + adiag_s_inverse(n + 1));
    CHECK(row_nonzero_r_inverse(2 * n) == row_nonzero_r_inverse(n));
    CHECK(row_nonzero_r_inverse(2 * n + 1) == 2 * row_nonzero_r_inverse(n + 1));
  }
  CHECK(adiag_r(1) == 1);
  CHECK(adiag_r(2) == 0);
  CHECK(adiag_r_inverse(1) == 1);
  CHECK(adiag_r_inverse(2) == 0);
  CHECK(adiag_s_inverse(1) == 1);
  CHECK(adiag_s_inverse(2) == -1);
  CHECK(row_nonzero_r_inverse(1) == 1);
  CHECK(row_nonzero_r_inverse(2) == 1);
}

TEST_SUITE_END();
