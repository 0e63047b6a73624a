// Frozen reference data shared by the unit and acceptance suites: printed
// matrix sections, sequence tables, factored row/column polynomials, and the
// composition table.
#pragma once

#include <string>
#include <vector>

#include "sternmat/matrices.hpp"
#include "sternmat/polynomials.hpp"

namespace fixtures {

// Lower-triangular rows; row n lists entries (n,1)..(n,n).
using Tri = std::vector<std::vector<int>>;

inline const Tri R10 = {
    {1},
    {0, 1},
    {0, 1, 1},
    {0, 0, 0, 1},
    {0, 0, 1, 1, 1},
    {0, 0, 0, 1, 0, 1},
    {0, 0, 0, 1, 0, 1, 1},
    {0, 0, 0, 0, 0, 0, 0, 1},
    {0, 0, 0, 0, 1, 0, 1, 1, 1},
    {0, 0, 0, 0, 0, 1, 0, 1, 0, 1},
};

inline const Tri R10_INV = {
    {1},
    {0, 1},
    {0, -1, 1},
    {0, 0, 0, 1},
    {0, 1, -1, -1, 1},
    {0, 0, 0, -1, 0, 1},
    {0, 0, 0, 0, 0, -1, 1},
    {0, 0, 0, 0, 0, 0, 0, 1},
    {0, -1, 1, 1, -1, 1, -1, -1, 1},
    {0, 0, 0, 1, 0, -1, 0, -1, 0, 1},
};

inline const Tri P8 = {
    {1},
    {0, 1},
    {0, 1, 1},
    {0, 0, 2, 1},
    {0, 0, 1, 3, 1},
    {0, 0, 0, 3, 4, 1},
    {0, 0, 0, 1, 6, 5, 1},
    {0, 0, 0, 0, 4, 10, 6, 1},
};

inline const Tri P8_INV = {
    {1},
    {0, 1},
    {0, -1, 1},
    {0, 2, -2, 1},
    {0, -5, 5, -3, 1},
    {0, 14, -14, 9, -4, 1},
    {0, -42, 42, -28, 14, -5, 1},
    {0, 132, -132, 90, -48, 20, -6, 1},
};

inline const Tri S8 = {
    {1},
    {1, 1},
    {1, 0, 1},
    {1, 1, 1, 1},
    {1, 0, 0, 0, 1},
    {1, 1, 0, 0, 1, 1},
    {1, 0, 1, 0, 1, 0, 1},
    {1, 1, 1, 1, 1, 1, 1, 1},
};

inline const Tri S8_INV = {
    {1},
    {-1, 1},
    {-1, 0, 1},
    {1, -1, -1, 1},
    {-1, 0, 0, 0, 1},
    {1, -1, 0, 0, -1, 1},
    {1, 0, -1, 0, -1, 0, 1},
    {-1, 1, 1, -1, 1, -1, -1, 1},
};

// Entrywise product of R and |R^{-1}| at size 10.
inline const Tri R_HADAMARD_ABSINV_10 = {
    {1},
    {0, 1},
    {0, 1, 1},
    {0, 0, 0, 1},
    {0, 0, 1, 1, 1},
    {0, 0, 0, 1, 0, 1},
    {0, 0, 0, 0, 0, 1, 1},
    {0, 0, 0, 0, 0, 0, 0, 1},
    {0, 0, 0, 0, 1, 0, 1, 1, 1},
    {0, 0, 0, 0, 0, 1, 0, 1, 0, 1},
};

// Row 17 of R^{-1}, columns 1..17.
inline const std::vector<int> R_INV_ROW17 = {0, 1, -1, -1, 1, -1, 1, 1, -1,
                                             -1, 1, 1, -1, 1, -1, -1, 1};

// s(1)..s(20).
inline const std::vector<int> STERN_1_20 = {1, 1, 2, 1, 3, 2, 3, 1, 4, 3,
                                            5, 2, 5, 3, 4, 1, 5, 4, 7, 3};

// Exponents with coefficient 1 in s(n;x), n = 1..20.
inline const std::vector<std::vector<int>> STERN_POLY_1_20 = {
    {0},                      // 1
    {0},                      // 2
    {0, 1},                   // 3
    {0},                      // 4
    {0, 1, 2},                // 5
    {0, 2},                   // 6
    {0, 1, 3},                // 7
    {0},                      // 8
    {0, 1, 2, 4},             // 9
    {0, 2, 4},                // 10
    {0, 1, 3, 4, 5},          // 11
    {0, 4},                   // 12
    {0, 1, 2, 5, 6},          // 13
    {0, 2, 6},                // 14
    {0, 1, 3, 7},             // 15
    {0},                      // 16
    {0, 1, 2, 4, 8},          // 17
    {0, 2, 4, 8},             // 18
    {0, 1, 3, 4, 5, 8, 9},    // 19
    {0, 4, 8},                // 20
};

// Expanded coefficient vectors of p_n and q_n, n = 1..10 (index = power of x).
inline const std::vector<std::vector<int>> P_POLY_1_10 = {
    {1},                               // n=1: 1
    {1},                               // n=2: 1
    {1, -1},                           // n=3: 1-x
    {1},                               // n=4: 1
    {1, -1, -1, 1},                    // n=5: (1-x)(1-x^2)
    {1, 0, -1},                        // n=6: 1-x^2
    {1, -1},                           // n=7: 1-x
    {1},                               // n=8: 1
    {1, -1, -1, 1, -1, 1, 1, -1},      // n=9: (1-x)(1-x^2)(1-x^4)
    {1, 0, -1, 0, -1, 0, 1},           // n=10: (1-x^2)(1-x^4)
};

inline const std::vector<std::vector<int>> Q_POLY_1_10 = {
    {1},                           // 1
    {1, 1},                        // 1+x
    {1, 0, 1},                     // 1+x^2
    {1, 1, 1, 1},                  // (1+x)(1+x^2)
    {1, 0, 0, 0, 1},               // 1+x^4
    {1, 1, 0, 0, 1, 1},            // (1+x)(1+x^4)
    {1, 0, 1, 0, 1, 0, 1},         // (1+x^2)(1+x^4)
    {1, 1, 1, 1, 1, 1, 1, 1},      // (1+x)(1+x^2)(1+x^4)
    {1, 0, 0, 0, 0, 0, 0, 0, 1},   // 1+x^8
    {1, 1, 0, 0, 0, 0, 0, 0, 1, 1},// (1+x)(1+x^8)
};

// C(n) and f(n) for n = 1..16 (deduplicated table).
inline const std::vector<std::vector<unsigned>> COMPOSITION_C_1_16 = {
    {},           {1},          {2},       {1, 1},
    {3},          {2, 1},       {1, 2},    {1, 1, 1},
    {4},          {3, 1},       {2, 2},    {2, 1, 1},
    {1, 3},       {1, 2, 1},    {1, 1, 2}, {1, 1, 1, 1},
};

inline const std::vector<int> PART_PRODUCTS_1_16 = {1, 1, 2, 1, 3, 2, 2, 1,
                                                    4, 3, 4, 2, 3, 2, 2, 1};

// First 30 antidiagonal sums of R^{-1}.
inline const std::vector<int> ADIAG_R_INV_1_30 = {
    1, 0, 1, -1, 1, 1, 0, -1, 0, -1, 2, 0, 1, 1, -1,
    0, -1, 1, -1, -2, 1, 0, 2, -1, 1, -1, 2, 1, 0, 0};

inline sternmat::LowerTriangular to_matrix(const Tri& t) {
  sternmat::LowerTriangular m(t.size());
  for (std::size_t n = 1; n <= t.size(); ++n)
    for (std::size_t k = 1; k <= n; ++k) m.entry(n, k) = t[n - 1][k - 1];
  return m;
}

inline sternmat::IntPoly to_poly(const std::vector<int>& coeffs) {
  std::vector<sternmat::BigInt> c;
  c.reserve(coeffs.size());
  for (int v : coeffs) c.emplace_back(v);
  return sternmat::IntPoly::from_coeffs(std::move(c));
}

inline sternmat::IntPoly poly_from_exponents(const std::vector<int>& exps) {
  std::vector<sternmat::BigInt> c;
  for (int e : exps) {
    if (static_cast<std::size_t>(e) >= c.size()) c.resize(e + 1, sternmat::BigInt(0));
    c[e] = 1;
  }
  return sternmat::IntPoly::from_coeffs(std::move(c));
}

}  // namespace fixtures
