#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sternmat/bigint.hpp"
#include "sternmat/sequences.hpp"

namespace sternmat {

enum class MatrixKind { R, P, S };

inline const char* to_string(MatrixKind k) {
  switch (k) {
    case MatrixKind::R: return "R";
    case MatrixKind::P: return "P";
    case MatrixKind::S: return "S";
  }
  return "?";
}

/// Square lower-triangular matrix with exact integer entries, stored as rows
/// of lengths 1..N. All indexing is 1-based to match the usual (n,k) matrix
/// conventions; the accessor returns 0 above the diagonal.
class LowerTriangular {
 public:
  explicit LowerTriangular(std::size_t n) : rows_(n) {
    for (std::size_t i = 0; i < n; ++i) rows_[i].assign(i + 1, BigInt(0));
  }

  static LowerTriangular identity(std::size_t n) {
    LowerTriangular m(n);
    for (std::size_t i = 1; i <= n; ++i) m.entry(i, i) = 1;
    return m;
  }

  std::size_t size() const { return rows_.size(); }

  /// Entry (n,k), 1-based; 0 for k > n.
  const BigInt& at(std::size_t n, std::size_t k) const {
    check_index(n, k);
    static const BigInt zero = 0;
    return k > n ? zero : rows_[n - 1][k - 1];
  }

  /// Writable entry (n,k), 1-based, restricted to k <= n.
  BigInt& entry(std::size_t n, std::size_t k) {
    check_index(n, k);
    if (k > n) throw std::out_of_range("LowerTriangular::entry: k > n");
    return rows_[n - 1][k - 1];
  }

  const std::vector<BigInt>& row(std::size_t n) const {
    if (n < 1 || n > rows_.size())
      throw std::out_of_range("LowerTriangular::row: bad row index");
    return rows_[n - 1];
  }

  friend bool operator==(const LowerTriangular& a, const LowerTriangular& b) {
    return a.rows_ == b.rows_;
  }

 private:
  std::vector<std::vector<BigInt>> rows_;

  void check_index(std::size_t n, std::size_t k) const {
    if (n < 1 || n > rows_.size() || k < 1 || k > rows_.size())
      throw std::out_of_range("LowerTriangular: index outside 1..N");
  }
};

/// Finite section of one of the three infinite matrices:
///   R_{n,k} = binom(k-1, n-k) mod 2   (Stern polynomial coefficients)
///   P_{n,k} = binom(k-1, n-k)         (shifted Pascal)
///   S_{n,k} = binom(n-1, k-1) mod 2   (left-justified Sierpinski gasket)
inline LowerTriangular build(MatrixKind kind, std::size_t N) {
  if (N == 0) throw std::invalid_argument("build: N must be >= 1");
  LowerTriangular m(N);
  for (std::size_t n = 1; n <= N; ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      switch (kind) {
        case MatrixKind::R:
          m.entry(n, k) = binom_mod2(k - 1, static_cast<std::int64_t>(n - k));
          break;
        case MatrixKind::P:
          m.entry(n, k) = binom(k - 1, static_cast<std::int64_t>(n - k));
          break;
        case MatrixKind::S:
          m.entry(n, k) = binom_mod2(n - 1, static_cast<std::int64_t>(k - 1));
          break;
      }
    }
  }
  return m;
}

/// Closed-form inverse of the chosen matrix section.
///   (R^{-1})_{n,k} = (-1)^{t(n-k)} * [binom(2n-k-1, n-k) odd]   (n >= 2)
///   (P^{-1})_{n,k} = (-1)^{n-k} * (k-1)/(2n-k-1) * binom(2n-k-1, n-k)
///   (S^{-1})_{n,k} = (-1)^{t(n-k)} * [binom(n-1, k-1) odd]
/// The P entries are computed exactly; failed divisibility is an internal
/// error.
inline LowerTriangular closed_inverse(MatrixKind kind, std::size_t N) {
  if (N == 0) throw std::invalid_argument("closed_inverse: N must be >= 1");
  LowerTriangular m(N);
  m.entry(1, 1) = 1;
  for (std::size_t n = 2; n <= N; ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      switch (kind) {
        case MatrixKind::R: {
          int bit = binom_mod2(2 * n - k - 1, static_cast<std::int64_t>(n - k));
          m.entry(n, k) = bit ? (ptm(n - k) ? -1 : 1) : 0;
          break;
        }
        case MatrixKind::P: {
          if (k == 1) break;  // first column is 0 below row 1
          BigInt v = exact_div(BigInt(k - 1) *
                                   binom(2 * n - k - 1, static_cast<std::int64_t>(n - k)),
                               BigInt(2 * n - k - 1));
          m.entry(n, k) = apply_sign((n - k) % 2, std::move(v));
          break;
        }
        case MatrixKind::S: {
          int bit = binom_mod2(n - 1, static_cast<std::int64_t>(k - 1));
          m.entry(n, k) = bit ? (ptm(n - k) ? -1 : 1) : 0;
          break;
        }
      }
    }
  }
  return m;
}

/// Exact inverse of a lower-triangular matrix whose diagonal entries are all
/// +1 or -1, by forward substitution over the integers.
inline LowerTriangular invert_unitriangular(const LowerTriangular& m) {
  const std::size_t N = m.size();
  for (std::size_t i = 1; i <= N; ++i) {
    const BigInt& d = m.at(i, i);
    if (d != 1 && d != -1)
      throw std::invalid_argument(
          "invert_unitriangular: diagonal entry not in {-1, +1}");
  }
  LowerTriangular x(N);
  for (std::size_t k = 1; k <= N; ++k) {
    x.entry(k, k) = m.at(k, k);  // 1/d = d for d in {-1, +1}
    for (std::size_t n = k + 1; n <= N; ++n) {
      BigInt s = 0;
      for (std::size_t j = k; j < n; ++j) {
        const BigInt& a = m.at(n, j);
        if (a != 0) s += a * x.at(j, k);
      }
      if (s != 0) x.entry(n, k) = apply_sign(m.at(n, n) == 1, std::move(s));
    }
  }
  return x;
}

inline void require_same_size(const LowerTriangular& a, const LowerTriangular& b,
                              const char* who) {
  if (a.size() != b.size())
    throw std::invalid_argument(std::string(who) + ": dimension mismatch");
}

inline LowerTriangular mat_mul(const LowerTriangular& a, const LowerTriangular& b) {
  require_same_size(a, b, "mat_mul");
  const std::size_t N = a.size();
  LowerTriangular c(N);
  for (std::size_t n = 1; n <= N; ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      BigInt s = 0;
      for (std::size_t j = k; j <= n; ++j) {
        const BigInt& x = a.at(n, j);
        if (x != 0) s += x * b.at(j, k);
      }
      c.entry(n, k) = std::move(s);
    }
  }
  return c;
}

/// Entrywise product.
inline LowerTriangular hadamard(const LowerTriangular& a, const LowerTriangular& b) {
  require_same_size(a, b, "hadamard");
  const std::size_t N = a.size();
  LowerTriangular c(N);
  for (std::size_t n = 1; n <= N; ++n)
    for (std::size_t k = 1; k <= n; ++k) c.entry(n, k) = a.at(n, k) * b.at(n, k);
  return c;
}

inline LowerTriangular abs_entries(const LowerTriangular& m) {
  const std::size_t N = m.size();
  LowerTriangular c(N);
  for (std::size_t n = 1; n <= N; ++n)
    for (std::size_t k = 1; k <= n; ++k) c.entry(n, k) = abs(m.at(n, k));
  return c;
}

/// Reflection along the main antidiagonal: entry (n,k) of the result is entry
/// (N+1-k, N+1-n) of the input. Lower-triangularity is preserved.
inline LowerTriangular antidiagonal_reflect(const LowerTriangular& m) {
  const std::size_t N = m.size();
  LowerTriangular c(N);
  for (std::size_t n = 1; n <= N; ++n)
    for (std::size_t k = 1; k <= n; ++k) c.entry(n, k) = m.at(N + 1 - k, N + 1 - n);
  return c;
}

inline BigInt row_sum(const LowerTriangular& m, std::size_t n) {
  BigInt s = 0;
  for (const BigInt& v : m.row(n)) s += v;
  return s;
}

/// n-th antidiagonal sum: sum_{j=0..floor((n-1)/2)} M(n-j, j+1).
inline BigInt antidiag_sum(const LowerTriangular& m, std::size_t n) {
  if (n < 1 || n > m.size())
    throw std::out_of_range("antidiag_sum: n outside 1..N");
  BigInt s = 0;
  for (std::size_t j = 0; 2 * j + 1 <= n; ++j) s += m.at(n - j, j + 1);
  return s;
}

/// Complete (infinite) column sum of R or P. Column k has support only in
/// rows k..2k-1, so a section of size 2k-1 suffices. The columns of S have
/// infinite support, so S is rejected.
inline BigInt col_sum_complete(MatrixKind kind, std::size_t k) {
  if (kind == MatrixKind::S)
    throw std::invalid_argument("col_sum_complete: columns of S diverge");
  if (k == 0) throw std::invalid_argument("col_sum_complete: k must be >= 1");
  LowerTriangular m = build(kind, 2 * k - 1);
  BigInt s = 0;
  for (std::size_t n = k; n <= 2 * k - 1; ++n) s += m.at(n, k);
  return s;
}

enum class DiagonalFamily { R, RInverse, S, SInverse };

inline const char* to_string(DiagonalFamily f) {
  switch (f) {
    case DiagonalFamily::R: return "R";
    case DiagonalFamily::RInverse: return "R_inverse";
    case DiagonalFamily::S: return "S";
    case DiagonalFamily::SInverse: return "S_inverse";
  }
  return "?";
}

/// Ratio of nonzero entries on the n-th subdiagonal (n=0 is the main
/// diagonal), measured over one full period 2^m where m is minimal with
/// n <= 2^m - 1. Returned as an exact fraction; equals 1/G(n) for all four
/// families.
inline Rational diagonal_nonzero_ratio(DiagonalFamily fam, std::uint64_t n) {
  unsigned m = 0;
  while (((std::uint64_t{1} << m) - 1) < n) ++m;
  const std::uint64_t period = std::uint64_t{1} << m;
  const std::size_t N = static_cast<std::size_t>(n + period);
  LowerTriangular mat = [&] {
    switch (fam) {
      case DiagonalFamily::R: return build(MatrixKind::R, N);
      case DiagonalFamily::RInverse: return closed_inverse(MatrixKind::R, N);
      case DiagonalFamily::S: return build(MatrixKind::S, N);
      case DiagonalFamily::SInverse: return closed_inverse(MatrixKind::S, N);
    }
    throw std::invalid_argument("diagonal_nonzero_ratio: bad family");
  }();
  unsigned long nonzero = 0;
  for (std::uint64_t j = 1; j <= period; ++j)
    if (mat.at(n + j, j) != 0) ++nonzero;
  Rational r(nonzero, period);
  r.canonicalize();
  return r;
}

enum class EntryPredicate { positive, negative, nonzero };

inline std::size_t count_in_row(const LowerTriangular& m, std::size_t n,
                                EntryPredicate pred) {
  std::size_t c = 0;
  for (const BigInt& v : m.row(n)) {
    switch (pred) {
      case EntryPredicate::positive: c += (v > 0); break;
      case EntryPredicate::negative: c += (v < 0); break;
      case EntryPredicate::nonzero: c += (v != 0); break;
    }
  }
  return c;
}

/// CSV serialization: one row per line, N comma-separated integers, entries
/// above the diagonal written as 0.
inline std::string to_csv(const LowerTriangular& m) {
  std::string out;
  const std::size_t N = m.size();
  for (std::size_t n = 1; n <= N; ++n) {
    for (std::size_t k = 1; k <= N; ++k) {
      if (k > 1) out += ',';
      out += m.at(n, k).get_str();
    }
    out += '\n';
  }
  return out;
}

/// JSON serialization: array of row arrays, each of length N.
inline std::string to_json(const LowerTriangular& m) {
  std::string out = "[";
  const std::size_t N = m.size();
  for (std::size_t n = 1; n <= N; ++n) {
    out += (n == 1) ? "[" : ",[";
    for (std::size_t k = 1; k <= N; ++k) {
      if (k > 1) out += ',';
      out += m.at(n, k).get_str();
    }
    out += ']';
  }
  out += "]";
  return out;
}

/// Aligned text rendering; entries above the diagonal are left blank.
inline std::string to_table(const LowerTriangular& m) {
  const std::size_t N = m.size();
  std::vector<std::size_t> width(N, 1);
  std::vector<std::vector<std::string>> cells(N);
  for (std::size_t n = 1; n <= N; ++n) {
    cells[n - 1].reserve(n);
    for (std::size_t k = 1; k <= n; ++k) {
      std::string s = m.at(n, k).get_str();
      width[k - 1] = std::max(width[k - 1], s.size());
      cells[n - 1].push_back(std::move(s));
    }
  }
  std::string out;
  for (std::size_t n = 1; n <= N; ++n) {
    std::string line;
    for (std::size_t k = 1; k <= n; ++k) {
      if (k > 1) line += ' ';
      const std::string& s = cells[n - 1][k - 1];
      line.append(width[k - 1] - s.size(), ' ');
      line += s;
    }
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace sternmat
