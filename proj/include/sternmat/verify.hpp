#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "sternmat/bigint.hpp"
#include "sternmat/compositions.hpp"
#include "sternmat/matrices.hpp"
#include "sternmat/polynomials.hpp"
#include "sternmat/sequences.hpp"

namespace sternmat {

enum class CheckStatus { pass, fail, error };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::error: return "error";
  }
  return "?";
}

/// First violation of an identity, in lexicographic index order.
struct Counterexample {
  std::vector<long long> index;
  std::string item;  // which sub-identity of the check failed
  std::string expected;
  std::string actual;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct CheckReport {
  std::string id;
  std::string description;
  long long lo = 0;
  long long hi = 0;
  CheckStatus status = CheckStatus::pass;
  std::string detail;  // optional distinguished values; error message on status=error
  std::optional<Counterexample> counterexample;
  double elapsed_ms = 0.0;
};

namespace detail {

inline bool is_pow2(std::uint64_t n) { return n != 0 && (n & (n - 1)) == 0; }

inline CheckReport fail_at(CheckReport r, std::vector<long long> index,
                           std::string item, std::string expected,
                           std::string actual) {
  r.status = CheckStatus::fail;
  r.counterexample = Counterexample{std::move(index), std::move(item),
                                    std::move(expected), std::move(actual)};
  return r;
}

inline BigInt ptm_ref(std::uint64_t n) { return BigInt(ptm(n)); }
inline BigInt gould_ref(std::uint64_t n) { return gould(n); }

}  // namespace detail

/// Entrywise comparison; reports the first differing entry in row-major
/// order.
inline std::optional<Counterexample> compare_matrices(const LowerTriangular& actual,
                                                      const LowerTriangular& expected,
                                                      std::string item) {
  if (actual.size() != expected.size())
    return Counterexample{{static_cast<long long>(actual.size()),
                           static_cast<long long>(expected.size())},
                          std::move(item),
                          "equal dimensions",
                          "dimension mismatch"};
  for (std::size_t n = 1; n <= actual.size(); ++n)
    for (std::size_t k = 1; k <= n; ++k)
      if (actual.at(n, k) != expected.at(n, k))
        return Counterexample{{static_cast<long long>(n), static_cast<long long>(k)},
                              std::move(item),
                              expected.at(n, k).get_str(),
                              actual.at(n, k).get_str()};
  return std::nullopt;
}

namespace checks {

inline CheckReport closed_vs_oracle(MatrixKind kind, long long N, bool unit_entries) {
  CheckReport r;
  r.lo = 1;
  r.hi = N;
  auto built = build(kind, N);
  auto closed = closed_inverse(kind, N);
  auto oracle = invert_unitriangular(built);
  if (auto ce = compare_matrices(closed, oracle, "closed_vs_oracle")) {
    r.status = CheckStatus::fail;
    r.counterexample = std::move(ce);
    return r;
  }
  if (unit_entries) {
    for (std::size_t n = 1; n <= closed.size(); ++n)
      for (std::size_t k = 1; k <= n; ++k) {
        const BigInt& v = closed.at(n, k);
        if (v < -1 || v > 1)
          return detail::fail_at(std::move(r),
                                 {static_cast<long long>(n), static_cast<long long>(k)},
                                 "entry_in_{-1,0,1}", "entry in {-1,0,1}", v.get_str());
      }
  }
  if (auto ce = compare_matrices(mat_mul(closed, built),
                                 LowerTriangular::identity(N), "product_identity")) {
    r.status = CheckStatus::fail;
    r.counterexample = std::move(ce);
  }
  return r;
}

inline CheckReport thm1(long long N) { return closed_vs_oracle(MatrixKind::R, N, true); }
inline CheckReport thm2(long long N) { return closed_vs_oracle(MatrixKind::P, N, false); }

inline CheckReport cor3(long long N) {
  CheckReport r;
  r.lo = 2;
  r.hi = N;
  auto inv = closed_inverse(MatrixKind::P, N);
  for (long long n = 3; n <= N; ++n) {
    BigInt expected = apply_sign(n % 2, catalan(n - 2));
    if (inv.at(n, 2) != expected)
      return detail::fail_at(std::move(r), {n, 2}, "column2_catalan",
                             expected.get_str(), inv.at(n, 2).get_str());
    BigInt neg = -expected;
    if (inv.at(n, 3) != neg)
      return detail::fail_at(std::move(r), {n, 3}, "column3_catalan",
                             neg.get_str(), inv.at(n, 3).get_str());
  }
  for (long long n = 2; n <= N; ++n) {
    BigInt s = 0;
    for (long long k = 2; k <= n; ++k) s += abs(inv.at(n, k));
    BigInt expected = catalan(n - 1);
    if (s != expected)
      return detail::fail_at(std::move(r), {n}, "row_abs_sum_catalan",
                             expected.get_str(), s.get_str());
  }
  return r;
}

inline CheckReport lem4(long long N) {
  CheckReport r;
  r.lo = 1;
  r.hi = N;
  auto m = build(MatrixKind::R, 2 * N - 1);
  for (long long k = 1; k <= N; ++k) {
    IntPoly q = q_poly(k);
    if (q.degree() != k - 1)
      return detail::fail_at(std::move(r), {k}, "degree", std::to_string(k - 1),
                             std::to_string(q.degree()));
    for (long long i = 0; i < k; ++i) {
      const BigInt& fromcol = m.at(k + i, k);
      if (q.coeff(i) != fromcol)
        return detail::fail_at(std::move(r), {k, i}, "column_coeff",
                               fromcol.get_str(), q.coeff(i).get_str());
      BigInt lucas = binom_mod2(k - 1, i);
      if (q.coeff(i) != lucas)
        return detail::fail_at(std::move(r), {k, i}, "coeff_formula",
                               lucas.get_str(), q.coeff(i).get_str());
    }
  }
  return r;
}

inline CheckReport lem5(long long N) {
  CheckReport r;
  r.lo = 1;
  r.hi = N;
  auto inv = closed_inverse(MatrixKind::R, N);
  for (long long n = 1; n <= N; ++n) {
    IntPoly p = p_poly(n);
    for (long long i = 0; i < n; ++i) {
      const BigInt& fromrow = inv.at(n, n - i);
      if (p.coeff(i) != fromrow)
        return detail::fail_at(std::move(r), {n, i}, "row_coeff", fromrow.get_str(),
                               p.coeff(i).get_str());
    }
    if (n >= 2) {
      auto f = p_poly_factors(n);
      std::uint64_t b = (std::uint64_t{1} << f.alpha) - static_cast<std::uint64_t>(n);
      std::uint64_t fromexps = 0;
      for (unsigned e : f.exponents) fromexps |= std::uint64_t{1} << e;
      if (fromexps != b)
        return detail::fail_at(std::move(r), {n}, "factor_exponents",
                               std::to_string(b), std::to_string(fromexps));
    }
  }
  return r;
}

inline CheckReport eq38a(long long N) {
  CheckReport r;
  r.lo = 1;
  r.hi = N;
  std::vector<IntPoly> p(N + 1), q(N + 1);
  for (long long i = 1; i <= N; ++i) {
    p[i] = p_poly(i);
    q[i] = q_poly(i);
  }
  for (long long n = 1; n <= N; ++n) {
    BigInt c0 = p[n].coeff(0) * q[n].coeff(0);
    if (c0 != 1)
      return detail::fail_at(std::move(r), {n, n}, "constant_term", "1", c0.get_str());
    for (long long k = 1; k < n; ++k) {
      const long long d = n - k;
      BigInt coeff = 0;
      for (long long i = std::max<long long>(0, d - (q[k].degree())); i <= d; ++i)
        coeff += p[n].coeff(i) * q[k].coeff(d - i);
      if (coeff != 0)
        return detail::fail_at(std::move(r), {n, k}, "coefficient_x_pow(n-k)", "0",
                               coeff.get_str());
    }
  }
  return r;
}

inline CheckReport cor7(long long N) {
  CheckReport r;
  r.lo = 1;
  r.hi = N;
  auto m = build(MatrixKind::P, 2 * N - 1);
  for (long long n = 1; n <= N; ++n) {
    BigInt expected = fibonacci(n);
    BigInt actual = row_sum(m, n);
    if (actual != expected)
      return detail::fail_at(std::move(r), {n}, "row_sum_fibonacci",
                             expected.get_str(), actual.get_str());
  }
  for (long long k = 1; k <= N; ++k) {
    BigInt s = 0;
    for (long long n = k; n <= 2 * k - 1; ++n) s += m.at(n, k);
    BigInt expected = pow2(k - 1);
    if (s != expected)
      return detail::fail_at(std::move(r), {k}, "column_sum_pow2", expected.get_str(),
                             s.get_str());
  }
  for (long long n = 1; n <= N; ++n) {
    BigInt expected = padovan(n + 2);
    BigInt actual = antidiag_sum(m, n);
    if (actual != expected)
      return detail::fail_at(std::move(r), {n}, "antidiag_sum_padovan",
                             expected.get_str(), actual.get_str());
  }
  auto inv = closed_inverse(MatrixKind::P, N);
  for (long long n = 2; n <= N; ++n) {
    BigInt expected = apply_sign(n % 2, fine(n - 2));
    BigInt actual = row_sum(inv, n);
    if (actual != expected)
      return detail::fail_at(std::move(r), {n}, "row_sum_fine", expected.get_str(),
                             actual.get_str());
  }
  if (N >= 1) {
    BigInt a1 = antidiag_sum(inv, 1);
    if (a1 != 1)
      return detail::fail_at(std::move(r), {1}, "antidiag_sum_first", "1", a1.get_str());
  }
  for (long long n = 2; n <= N; ++n) {
    // a_n(P^{-1}) = sum_j (-1)^{n-1} j/(2n-3j-2) * binom(2n-3j-2, n-2j-1);
    // accumulated as exact rationals, the total must be an integer.
    Rational acc(0);
    for (long long j = 1; 2 * j + 1 <= n; ++j) {
      Rational term(BigInt(static_cast<long>(j)) *
                    binom(2 * n - 3 * j - 2, n - 2 * j - 1));
      term /= Rational(BigInt(static_cast<long>(2 * n - 3 * j - 2)));
      acc += term;
    }
    if (n % 2 == 0) acc = -acc;
    acc.canonicalize();
    if (acc.get_den() != 1)
      return detail::fail_at(std::move(r), {n}, "antidiag_formula_integral", "1",
                             acc.get_den().get_str());
    BigInt actual = antidiag_sum(inv, n);
    if (actual != acc.get_num())
      return detail::fail_at(std::move(r), {n}, "antidiag_sum_formula",
                             acc.get_num().get_str(), actual.get_str());
  }
  return r;
}

inline CheckReport cor8(long long N) {
  CheckReport r;
  r.lo = 1;
  r.hi = N;
  auto m = build(MatrixKind::R, 2 * N - 1);
  for (long long n = 1; n <= N; ++n) {
    BigInt expected = stern(n);
    BigInt actual = row_sum(m, n);
    if (actual != expected)
      return detail::fail_at(std::move(r), {n}, "row_sum_stern", expected.get_str(),
                             actual.get_str());
  }
  for (long long k = 1; k <= N; ++k) {
    BigInt s = 0;
    for (long long n = k; n <= 2 * k - 1; ++n) s += m.at(n, k);
    BigInt expected = gould(k - 1);
    if (s != expected)
      return detail::fail_at(std::move(r), {k}, "column_sum_gould", expected.get_str(),
                             s.get_str());
  }
  std::vector<BigInt> rec(N + 1);
  if (N >= 1) rec[1] = 1;
  if (N >= 2) rec[2] = 0;
  for (long long i = 3; i <= N; ++i)
    rec[i] = (i % 2 == 0) ? BigInt(rec[i / 2 - 1])
                          : BigInt(rec[i / 2] + rec[i / 2 + 1]);
  for (long long n = 1; n <= N; ++n) {
    BigInt expected = adiag_r(n);
    BigInt actual = antidiag_sum(m, n);
    if (actual != expected)
      return detail::fail_at(std::move(r), {n}, "antidiag_sum_formula",
                             expected.get_str(), actual.get_str());
    if (rec[n] != expected)
      return detail::fail_at(std::move(r), {n}, "antidiag_recurrence",
                             expected.get_str(), rec[n].get_str());
  }
  return r;
}

inline CheckReport cor9(long long N) {
  CheckReport r;
  r.lo = 1;
  r.hi = N;
  auto inv = closed_inverse(MatrixKind::R, N);
  for (long long n = 1; n <= N; ++n) {
    BigInt expected = detail::is_pow2(n) ? 1 : 0;
    BigInt actual = row_sum(inv, n);
    if (actual != expected)
      return detail::fail_at(std::move(r), {n}, "row_sum_pow2_indicator",
                             expected.get_str(), actual.get_str());
  }
  std::vector<BigInt> rec(N + 1);
  if (N >= 1) rec[1] = 1;
  if (N >= 2) rec[2] = 0;
  for (long long i = 3; i <= N; ++i)
    rec[i] = (i % 2 == 0) ? BigInt(-rec[i / 2 + 1])
                          : BigInt(rec[i / 2] + rec[i / 2 + 1]);
  static const long first30[30] = {1, 0, 1,  -1, 1, 1, 0, -1, 0, -1,
                                   2, 0, 1,  1,  -1, 0, -1, 1, -1, -2,
                                   1, 0, 2,  -1, 1, -1, 2, 1,  0,  0};
  for (long long n = 1; n <= N; ++n) {
    BigInt expected = adiag_r_inverse(n);
    BigInt actual = antidiag_sum(inv, n);
    if (actual != expected)
      return detail::fail_at(std::move(r), {n}, "antidiag_sum_formula",
                             expected.get_str(), actual.get_str());
    if (rec[n] != expected)
      return detail::fail_at(std::move(r), {n}, "antidiag_recurrence",
                             expected.get_str(), rec[n].get_str());
    if (n <= 30 && expected != first30[n - 1])
      return detail::fail_at(std::move(r), {n}, "antidiag_first30",
                             std::to_string(first30[n - 1]), expected.get_str());
  }
  return r;
}

inline CheckReport thm10_hadamard(long long N) {
  CheckReport r;
  r.lo = 1;
  r.hi = N;
  auto h = hadamard(build(MatrixKind::R, N),
                    abs_entries(closed_inverse(MatrixKind::R, N)));
  for (long long n = 1; n <= N; ++n) {
    BigInt expected = parts_product(n);
    BigInt actual = row_sum(h, n);
    if (actual != expected)
      return detail::fail_at(std::move(r), {n}, "hadamard_row_sum",
                             expected.get_str(), actual.get_str());
    unsigned long g = 0;
    for (long long k = 1; k <= n; ++k)
      g += static_cast<unsigned long>(binom_mod2(k - 1, n - k) *
                                      binom_mod2(2 * n - k - 1, n - k));
    if (BigInt(g) != expected)
      return detail::fail_at(std::move(r), {n}, "explicit_sum", expected.get_str(),
                             std::to_string(g));
  }
  return r;
}

inline CheckReport thm10_reflect(long long M) {
  CheckReport r;
  r.lo = 1;
  r.hi = M;
  for (long long m = 1; m <= M; ++m) {
    const std::size_t N = std::size_t{1} << m;
    auto b = build(MatrixKind::R, N);
    auto h = hadamard(b, antidiagonal_reflect(b));
    for (std::size_t n = 1; n <= N; ++n) {
      BigInt expected = parts_product(n);
      BigInt actual = row_sum(h, n);
      if (actual != expected)
        return detail::fail_at(std::move(r), {m, static_cast<long long>(n)},
                               "reflected_row_sum", expected.get_str(),
                               actual.get_str());
    }
  }
  return r;
}

inline CheckReport eq712(long long N) {
  CheckReport r;
  r.lo = 1;
  r.hi = N;
  for (long long n = 1; n <= N; ++n) {
    long long t1 = 0, t2 = 0;
    for (long long j = 1; j <= n; ++j)
      t1 += binom_mod2(j - 1, n - j) * binom_mod2(2 * n - j, n - j);
    for (long long j = 0; j <= n; ++j)
      t2 += binom_mod2(j, n - j) * binom_mod2(2 * n - j, n - j);
    if (t1 == 0 || t2 == 0)
      return detail::fail_at(std::move(r), {n}, "sums_nonzero", "nonzero T1, T2",
                             "T1=" + std::to_string(t1) + " T2=" + std::to_string(t2));
    long long expected = static_cast<long long>(two_adic_valuation(n)) + 1;
    if (t2 != expected * t1)
      return detail::fail_at(std::move(r), {n}, "ratio_nu_plus_1",
                             std::to_string(expected),
                             std::to_string(t2) + "/" + std::to_string(t1));
  }
  return r;
}

inline CheckReport sierpinski(long long N) {
  CheckReport r;
  r.lo = 1;
  r.hi = N;
  auto s = build(MatrixKind::S, N);
  auto inv = closed_inverse(MatrixKind::S, N);
  std::vector<BigInt> rec(N + 1);
  if (N >= 1) rec[1] = 1;
  if (N >= 2) rec[2] = -1;
  for (long long i = 3; i <= N; ++i)
    rec[i] = (i % 2 == 0) ? BigInt(-rec[i / 2])
                          : BigInt(rec[i / 2] + rec[i / 2 + 1]);
  for (long long n = 1; n <= N; ++n) {
    BigInt expected = gould(n - 1);
    BigInt actual = row_sum(s, n);
    if (actual != expected)
      return detail::fail_at(std::move(r), {n}, "row_sum_gould", expected.get_str(),
                             actual.get_str());
    expected = stern(n);
    actual = antidiag_sum(s, n);
    if (actual != expected)
      return detail::fail_at(std::move(r), {n}, "antidiag_sum_stern",
                             expected.get_str(), actual.get_str());
    expected = (n == 1) ? 1 : 0;
    actual = row_sum(inv, n);
    if (actual != expected)
      return detail::fail_at(std::move(r), {n}, "inverse_row_sum",
                             expected.get_str(), actual.get_str());
    expected = adiag_s_inverse(n);
    actual = antidiag_sum(inv, n);
    if (actual != expected)
      return detail::fail_at(std::move(r), {n}, "inverse_antidiag_formula",
                             expected.get_str(), actual.get_str());
    BigInt period3 = (n % 3 == 0) ? 0 : (n % 3 == 1 ? 1 : -1);
    if (expected != period3)
      return detail::fail_at(std::move(r), {n}, "inverse_antidiag_period3",
                             period3.get_str(), expected.get_str());
    if (rec[n] != expected)
      return detail::fail_at(std::move(r), {n}, "inverse_antidiag_recurrence",
                             expected.get_str(), rec[n].get_str());
  }
  return r;
}

inline CheckReport cor11(long long N) {
  CheckReport r;
  r.lo = 1;
  r.hi = N;
  auto inv = closed_inverse(MatrixKind::R, N);
  std::vector<BigInt> rec(N + 1);
  if (N >= 1) rec[1] = 1;
  if (N >= 2) rec[2] = 1;
  for (long long i = 3; i <= N; ++i)
    rec[i] = (i % 2 == 0) ? BigInt(rec[i / 2]) : BigInt(2 * rec[i / 2 + 1]);
  for (long long n = 1; n <= N; ++n) {
    BigInt nonzero = row_nonzero_r_inverse(n);
    BigInt actual = BigInt(static_cast<unsigned long>(
        count_in_row(inv, n, EntryPredicate::nonzero)));
    if (actual != nonzero)
      return detail::fail_at(std::move(r), {n}, "nonzero_count", nonzero.get_str(),
                             actual.get_str());
    if (n >= 2 && nonzero != pow2(binary_zero_count(n - 1)))
      return detail::fail_at(std::move(r), {n}, "nonzero_count_pow2z",
                             pow2(binary_zero_count(n - 1)).get_str(),
                             nonzero.get_str());
    if (rec[n] != nonzero)
      return detail::fail_at(std::move(r), {n}, "nonzero_recurrence",
                             nonzero.get_str(), rec[n].get_str());
    BigInt ones_expected = detail::is_pow2(n) ? BigInt(1) : exact_div(nonzero, BigInt(2));
    BigInt ones = BigInt(static_cast<unsigned long>(
        count_in_row(inv, n, EntryPredicate::positive)));
    if (ones != ones_expected)
      return detail::fail_at(std::move(r), {n}, "ones_count",
                             ones_expected.get_str(), ones.get_str());
  }
  return r;
}

inline CheckReport cor12(long long N) {
  CheckReport r;
  r.lo = 2;
  r.hi = N;
  for (long long n = 2; n <= N; ++n) {
    BigInt acc = 0;
    for (long long k = 0; k <= n - 2; ++k)
      if (binom_mod2(n - 1 + k, k)) acc += apply_sign(ptm(k), stern(n - k));
    if (acc != 1)
      return detail::fail_at(std::move(r), {n}, "signed_convolution_to_1", "1",
                             acc.get_str());
  }
  const long long mmax = std::min<long long>(10, N);
  for (long long m = 1; m <= mmax; ++m) {
    BigInt acc = 0;
    const std::uint64_t top = std::uint64_t{1} << m;
    for (std::uint64_t k = 0; k <= top; ++k)
      acc += apply_sign(ptm(k), stern(top + 1 - k));
    if (acc != 0)
      return detail::fail_at(std::move(r), {m}, "signed_block_to_0", "0",
                             acc.get_str());
  }
  return r;
}

inline CheckReport cor13(long long M) {
  CheckReport r;
  r.lo = 2;
  r.hi = M;
  for (long long m = 1; m <= M; ++m) {
    const std::uint64_t lo = std::uint64_t{1} << m;
    BigInt signed_sum = 0, plain = 0, alt = 0;
    for (std::uint64_t k = lo; k < 2 * lo; ++k) {
      BigInt v = stern(k);
      signed_sum += apply_sign(ptm(k + 1), v);
      plain += v;
      alt += apply_sign(k % 2 == 0, v);
    }
    if (plain != ui_pow(3, m))
      return detail::fail_at(std::move(r), {m}, "block_sum_3^m",
                             ui_pow(3, m).get_str(), plain.get_str());
    if (alt != ui_pow(3, m - 1))
      return detail::fail_at(std::move(r), {m}, "alternating_block_sum_3^(m-1)",
                             ui_pow(3, m - 1).get_str(), alt.get_str());
    if (m >= 2 && signed_sum != -1) {
      // m = 2 is treated as advisory: a disagreement there goes into the
      // detail string instead of failing the check.
      if (m == 2) {
        r.detail += "m=2 signed sum differs: " + signed_sum.get_str() + "; ";
      } else {
        return detail::fail_at(std::move(r), {m}, "signed_block_sum_-1", "-1",
                               signed_sum.get_str());
      }
    }
    if (m == 3)
      r.detail += "m=3: signed=" + signed_sum.get_str() + " plain=" +
                  plain.get_str() + " alternating=" + alt.get_str();
  }
  return r;
}

inline CheckReport cor14(long long M) {
  CheckReport r;
  r.lo = 1;
  r.hi = M;
  for (long long m = 1; m <= M; ++m) {
    const std::size_t N = std::size_t{1} << m;
    auto b = build(MatrixKind::R, N);
    auto inv = closed_inverse(MatrixKind::R, N);
    auto refl = antidiagonal_reflect(b);
    for (std::size_t n = 1; n <= N; ++n)
      for (std::size_t k = 1; k <= n; ++k) {
        BigInt expected = apply_sign(ptm(n - k), refl.at(n, k));
        if (inv.at(n, k) != expected)
          return detail::fail_at(std::move(r),
                                 {m, static_cast<long long>(n),
                                  static_cast<long long>(k)},
                                 "signed_reflection", expected.get_str(),
                                 inv.at(n, k).get_str());
      }
  }
  return r;
}

inline CheckReport cor15(long long ND) {
  CheckReport r;
  r.lo = 0;
  r.hi = ND;
  constexpr DiagonalFamily fams[] = {DiagonalFamily::R, DiagonalFamily::RInverse,
                                     DiagonalFamily::S, DiagonalFamily::SInverse};
  for (DiagonalFamily fam : fams)
    for (long long n = 0; n <= ND; ++n) {
      Rational expected = Rational(1) / Rational(gould(n));
      Rational actual = diagonal_nonzero_ratio(fam, n);
      if (actual != expected)
        return detail::fail_at(std::move(r), {static_cast<long long>(fam), n},
                               std::string("density_") + to_string(fam),
                               expected.get_str(), actual.get_str());
    }
  return r;
}

inline CheckReport table5(long long N) {
  CheckReport r;
  r.lo = 1;
  r.hi = N;
  enum class Even { a_n, a_nm1, neg_a_np1, neg_a_n };
  enum class Odd { sum, one_minus, twice_a_n, twice_a_np1 };
  struct Row {
    const char* name;
    BigInt (*ref)(std::uint64_t);
    Even even;
    Odd odd;
    long a1, a2;
  };
  static const Row rows[] = {
      {"stern", &stern, Even::a_n, Odd::sum, 1, 1},
      {"ptm", &detail::ptm_ref, Even::a_n, Odd::one_minus, 1, 1},
      {"gould", &detail::gould_ref, Even::a_n, Odd::twice_a_n, 2, 2},
      {"adiag_r", &adiag_r, Even::a_nm1, Odd::sum, 1, 0},
      {"adiag_rinv", &adiag_r_inverse, Even::neg_a_np1, Odd::sum, 1, 0},
      {"adiag_sinv", &adiag_s_inverse, Even::neg_a_n, Odd::sum, 1, -1},
      {"row_nonzero_rinv", &row_nonzero_r_inverse, Even::a_n, Odd::twice_a_np1, 1, 1},
  };
  for (const Row& row : rows) {
    std::vector<BigInt> a(N + 1);
    if (N >= 1) a[1] = row.a1;
    if (N >= 2) a[2] = row.a2;
    for (long long i = 3; i <= N; ++i) {
      if (i % 2 == 0) {
        const long long n = i / 2;
        switch (row.even) {
          case Even::a_n: a[i] = a[n]; break;
          case Even::a_nm1: a[i] = a[n - 1]; break;
          case Even::neg_a_np1: a[i] = -a[n + 1]; break;
          case Even::neg_a_n: a[i] = -a[n]; break;
        }
      } else {
        const long long n = i / 2;
        switch (row.odd) {
          case Odd::sum: a[i] = a[n] + a[n + 1]; break;
          case Odd::one_minus: a[i] = 1 - a[n]; break;
          case Odd::twice_a_n: a[i] = 2 * a[n]; break;
          case Odd::twice_a_np1: a[i] = 2 * a[n + 1]; break;
        }
      }
    }
    for (long long n = 1; n <= N; ++n) {
      BigInt expected = row.ref(n);
      if (a[n] != expected)
        return detail::fail_at(std::move(r), {n}, std::string("recurrence_") + row.name,
                               expected.get_str(), a[n].get_str());
    }
  }
  return r;
}

inline CheckReport eq612(long long M) {
  CheckReport r;
  r.lo = 1;
  r.hi = M;
  for (long long m = 1; m <= M; ++m) {
    const std::uint64_t top = std::uint64_t{1} << m;
    for (std::uint64_t j = 0; j <= top; ++j) {
      IntPoly lhs = stern_poly(top + j);
      IntPoly rhs = stern_poly(j) + stern_poly(top - j).shifted(j);
      if (!(lhs == rhs)) {
        std::ostringstream expected, actual;
        expected << rhs;
        actual << lhs;
        return detail::fail_at(std::move(r), {m, static_cast<long long>(j)},
                               "block_identity", expected.str(), actual.str());
      }
    }
  }
  return r;
}

}  // namespace checks

struct CheckDef {
  const char* id;
  const char* description;
  long long max_n;  // largest supported N; run_all clamps to this
  CheckReport (*run)(long long);
};

/// Fixed registry of named identity checks, in report order. The N argument
/// is the top of the index range for most checks; for the block-indexed
/// checks (thm10_reflect_variant, cor13, cor14, eq612) it is the largest
/// dyadic exponent m, and for cor15_density the largest diagonal index.
inline const std::vector<CheckDef>& check_registry() {
  static const std::vector<CheckDef> reg = {
      {"thm1_closed_vs_oracle",
       "closed-form R^{-1} (entries 0,+-1, Thue-Morse signs) matches the "
       "substitution oracle and R^{-1} R = I",
       256, &checks::thm1},
      {"thm2_closed_vs_oracle",
       "closed-form P^{-1} matches the substitution oracle and P^{-1} P = I", 64,
       &checks::thm2},
      {"cor3_catalan",
       "(P^{-1})_{n,2} = -(P^{-1})_{n,3} = (-1)^n C_{n-2}; row abs sums of "
       "P^{-1} are Catalan numbers",
       64, &checks::cor3},
      {"lem4_column_factorization",
       "column k of R expands as prod (1+x^{2^i})^{u_i} over the binary digits "
       "of k-1",
       512, &checks::lem4},
      {"lem5_row_factorization",
       "row n of R^{-1} expands as prod (1-x^{2^i})^{b_i} over the binary "
       "digits of 2^alpha - n",
       512, &checks::lem5},
      {"eq38a_vanishing",
       "coefficient of x^{n-k} in p_n(x) q_k(x) is 0 for k < n; constant term "
       "is 1 at k = n",
       256, &checks::eq38a},
      {"cor7_P_sums",
       "sums of P: rows Fibonacci, columns 2^{k-1}, antidiagonals Padovan; "
       "rows of P^{-1} are signed Fine numbers",
       64, &checks::cor7},
      {"cor8_R_sums",
       "sums of R: rows Stern, columns Gould, antidiagonals Stern-like "
       "recurrence",
       1024, &checks::cor8},
      {"cor9_Rinv_sums",
       "row sums of R^{-1} indicate powers of two; antidiagonal sums satisfy "
       "a(2n) = -a(n+1), a(2n+1) = a(n) + a(n+1)",
       1024, &checks::cor9},
      {"thm10_hadamard_f",
       "row sums of R o |R^{-1}| equal the composition part products f(n)", 1024,
       &checks::thm10_hadamard},
      {"thm10_reflect_variant",
       "row sums of R o reflect(R) over a 2^m section equal f(n)", 6,
       &checks::thm10_reflect},
      {"eq712_t_ratio", "T2(n) / T1(n) = nu(n) + 1 for the parity-binomial sums",
       1024, &checks::eq712},
      {"sierpinski_sums",
       "sums of S and S^{-1}: rows Gould / unit, antidiagonals Stern / "
       "period-3 pattern 1,-1,0",
       1024, &checks::sierpinski},
      {"cor11_ones_count",
       "number of 1s in row n of R^{-1}: 1 at powers of two, else half of the "
       "2^{z(n-1)} nonzero entries",
       1024, &checks::cor11},
      {"cor12_stern_ptm",
       "Thue-Morse-signed binomial convolutions of the Stern sequence sum to 1 "
       "(and to 0 over dyadic blocks)",
       1024, &checks::cor12},
      {"cor13_block_sum",
       "dyadic block sums of Stern numbers: Thue-Morse-signed -1, plain 3^m, "
       "alternating 3^{m-1}",
       10, &checks::cor13},
      {"cor14_reflection",
       "R^{-1} over a 2^m section is the antidiagonal reflection of R with "
       "Thue-Morse signs",
       6, &checks::cor14},
      {"cor15_density",
       "nonzero density of the n-th diagonal is 1/G(n) for R, R^{-1}, S, S^{-1}",
       63, &checks::cor15},
      {"table5_recurrences",
       "the seven Stern-like sequences satisfy their (a(2n), a(2n+1)) "
       "recurrences",
       4096, &checks::table5},
      {"eq612_block_identity",
       "s(2^m + j; x) = s(j; x) + x^j s(2^m - j; x) for 0 <= j <= 2^m", 10,
       &checks::eq612},
  };
  return reg;
}

namespace detail {

inline CheckReport execute(const CheckDef& def, long long N) {
  const auto t0 = std::chrono::steady_clock::now();
  CheckReport r;
  try {
    r = def.run(N);
  } catch (const std::exception& e) {
    r.status = CheckStatus::error;
    r.detail = e.what();
    r.hi = N;
  }
  r.id = def.id;
  r.description = def.description;
  const auto t1 = std::chrono::steady_clock::now();
  r.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return r;
}

inline const CheckDef& find_check(const std::string& id) {
  for (const CheckDef& def : check_registry())
    if (id == def.id) return def;
  throw std::invalid_argument("unknown check id: " + id);
}

}  // namespace detail

/// Run one registered check over its range up to N.
inline CheckReport run_check(const std::string& id, long long N) {
  const CheckDef& def = detail::find_check(id);
  if (N < 1 || N > def.max_n)
    throw std::invalid_argument("check " + id + ": N out of supported range [1.." +
                                std::to_string(def.max_n) + "]");
  return detail::execute(def, N);
}

/// Run every registered check at min(N, per-check cap), in registry order.
/// With threads > 1 the checks execute concurrently; reports are positioned
/// by registry order and are deterministic regardless of schedule.
inline std::vector<CheckReport> run_all(long long N, unsigned threads = 0) {
  if (N < 1) throw std::invalid_argument("run_all: N must be >= 1");
  const auto& reg = check_registry();
  std::vector<CheckReport> reports(reg.size());
  auto work_one = [&](std::size_t i) {
    reports[i] = detail::execute(reg[i], std::min<long long>(N, reg[i].max_n));
  };
  if (threads <= 1) {
    for (std::size_t i = 0; i < reg.size(); ++i) work_one(i);
    return reports;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  const std::size_t nworkers = std::min<std::size_t>(threads, reg.size());
  pool.reserve(nworkers);
  for (std::size_t w = 0; w < nworkers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < reg.size(); i = next.fetch_add(1))
        work_one(i);
    });
  for (auto& t : pool) t.join();
  return reports;
}

namespace detail {

inline std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace detail

/// One report as a single JSON line with fixed field order.
inline std::string to_json_line(const CheckReport& r) {
  std::string out = "{\"id\":\"" + detail::json_escape(r.id) + "\"";
  out += ",\"description\":\"" + detail::json_escape(r.description) + "\"";
  out += ",\"lo\":" + std::to_string(r.lo);
  out += ",\"hi\":" + std::to_string(r.hi);
  out += std::string(",\"status\":\"") + to_string(r.status) + "\"";
  out += ",\"detail\":\"" + detail::json_escape(r.detail) + "\"";
  if (r.counterexample) {
    const Counterexample& ce = *r.counterexample;
    out += ",\"counterexample\":{\"index\":[";
    for (std::size_t i = 0; i < ce.index.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(ce.index[i]);
    }
    out += "],\"item\":\"" + detail::json_escape(ce.item) + "\"";
    out += ",\"expected\":\"" + detail::json_escape(ce.expected) + "\"";
    out += ",\"actual\":\"" + detail::json_escape(ce.actual) + "\"}";
  } else {
    out += ",\"counterexample\":null";
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", r.elapsed_ms);
  out += ",\"elapsed_ms\":" + std::string(buf) + "}";
  return out;
}

/// One report as an aligned, human-readable line. Timing is optional so that
/// callers needing byte-reproducible output can drop it.
inline std::string to_table_line(const CheckReport& r, bool with_elapsed = true) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%-5s %-26s [%lld..%lld]", to_string(r.status),
                r.id.c_str(), r.lo, r.hi);
  std::string out = buf;
  if (with_elapsed) {
    std::snprintf(buf, sizeof buf, "  %10.3f ms", r.elapsed_ms);
    out += buf;
  }
  if (r.counterexample) {
    const Counterexample& ce = *r.counterexample;
    out += "  at (";
    for (std::size_t i = 0; i < ce.index.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(ce.index[i]);
    }
    out += ") " + ce.item + ": expected " + ce.expected + ", got " + ce.actual;
  }
  if (!r.detail.empty()) out += "  -- " + r.detail;
  return out;
}

}  // namespace sternmat
