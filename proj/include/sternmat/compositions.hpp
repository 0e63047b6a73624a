#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <set>
#include <stdexcept>
#include <vector>

#include "sternmat/bigint.hpp"
#include "sternmat/sequences.hpp"

namespace sternmat {

/// Ordered finite sequence of positive integers; the empty composition is
/// allowed and is the unique composition of 0.
struct Composition {
  std::vector<unsigned> parts;

  auto operator<=>(const Composition&) const = default;

  bool empty() const { return parts.empty(); }

  unsigned long weight() const {
    unsigned long w = 0;
    for (unsigned p : parts) w += p;
    return w;
  }

  friend std::ostream& operator<<(std::ostream& os, const Composition& c) {
    os << '(';
    for (std::size_t i = 0; i < c.parts.size(); ++i) {
      if (i > 0) os << ',';
      os << c.parts[i];
    }
    return os << ')';
  }
};

/// Increment the last part. Raises the weight by 1; undefined on the empty
/// composition.
inline Composition gamma(Composition mu) {
  if (mu.empty()) throw std::invalid_argument("gamma: empty composition has no last part");
  ++mu.parts.back();
  return mu;
}

/// Append a part 1. Raises the weight by 1.
inline Composition delta(Composition mu) {
  mu.parts.push_back(1);
  return mu;
}

/// The binary-recursive enumeration of all compositions:
/// C(1) = (), C(2) = (1), C(2n-1) = gamma(C(n)), C(2n) = delta(C(n)).
/// For every m >= 1 the block C(2^{m-1}+1), ..., C(2^m) runs through the
/// 2^{m-1} compositions of m.
inline Composition composition_C(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("composition_C: n must be >= 1");
  // Walk n down to a base case, then replay the branch choices.
  std::vector<bool> grew;  // true: gamma branch, false: delta branch
  while (n > 2) {
    if (n % 2) {
      grew.push_back(true);
      n = (n + 1) / 2;
    } else {
      grew.push_back(false);
      n /= 2;
    }
  }
  Composition c;
  if (n == 2) c.parts.push_back(1);
  for (auto it = grew.rbegin(); it != grew.rend(); ++it)
    c = *it ? gamma(std::move(c)) : delta(std::move(c));
  return c;
}

/// f(n): product of the parts of C(n); f(1) = 1 as an empty product.
inline BigInt parts_product(std::uint64_t n) {
  BigInt f = 1;
  for (unsigned p : composition_C(n).parts) f *= p;
  return f;
}

/// Last part of C(n), n >= 2; equals nu(n-1) + 1.
inline unsigned last_part(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("last_part: C(1) is empty");
  return two_adic_valuation(n - 1) + 1;
}

namespace detail {

inline void enumerate_rec(unsigned remaining, Composition& prefix,
                          std::set<Composition>& out) {
  if (remaining == 0) {
    out.insert(prefix);
    return;
  }
  for (unsigned p = 1; p <= remaining; ++p) {
    prefix.parts.push_back(p);
    enumerate_rec(remaining - p, prefix, out);
    prefix.parts.pop_back();
  }
}

}  // namespace detail

/// All 2^{m-1} compositions of m, enumerated directly by choosing parts left
/// to right (independent of the C(n) recursion).
inline std::set<Composition> enumerate_compositions(unsigned m) {
  if (m == 0) throw std::invalid_argument("enumerate_compositions: m must be >= 1");
  std::set<Composition> out;
  Composition prefix;
  detail::enumerate_rec(m, prefix, out);
  return out;
}

}  // namespace sternmat
