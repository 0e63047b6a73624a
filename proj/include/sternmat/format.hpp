#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sternmat/bigint.hpp"
#include "sternmat/compositions.hpp"
#include "sternmat/sequences.hpp"

namespace sternmat {

enum class OutputFormat { table, csv, json, bfile };

inline OutputFormat parse_format(const std::string& s) {
  if (s == "table") return OutputFormat::table;
  if (s == "csv") return OutputFormat::csv;
  if (s == "json") return OutputFormat::json;
  if (s == "bfile") return OutputFormat::bfile;
  throw std::invalid_argument("unknown format: " + s);
}

/// A named scalar sequence exposed on the command line. `offset` is the
/// smallest valid index (the b-file offset).
struct SequenceDef {
  const char* name;
  long long offset;
  BigInt (*eval)(std::uint64_t);
  const char* summary;
};

namespace detail {
inline BigInt ptm_seq(std::uint64_t n) { return BigInt(ptm(n)); }
}  // namespace detail

inline const std::vector<SequenceDef>& sequence_registry() {
  static const std::vector<SequenceDef> reg = {
      {"stern", 0, &stern, "Stern's diatomic sequence, a(0)=0"},
      {"ptm", 0, &detail::ptm_seq, "Prouhet-Thue-Morse sequence, a(0)=0"},
      {"gould", 0, &gould, "Gould's sequence 2^d(n)"},
      {"fibonacci", 0, &fibonacci, "Fibonacci numbers, a(0)=0"},
      {"padovan", 0, &padovan, "Padovan numbers, a(0)=1, a(1)=a(2)=0"},
      {"fine", 0, &fine, "Fine numbers, a(0)=1"},
      {"catalan", 0, &catalan, "Catalan numbers"},
      {"f", 1, &parts_product, "part products of the composition enumeration C(n)"},
      {"adiag_r", 1, &adiag_r, "antidiagonal sums of R"},
      {"adiag_rinv", 1, &adiag_r_inverse, "antidiagonal sums of R^-1"},
      {"adiag_sinv", 1, &adiag_s_inverse, "antidiagonal sums of S^-1 (period 1,-1,0)"},
      {"row_nonzero_rinv", 1, &row_nonzero_r_inverse,
       "number of nonzero entries in row n of R^-1"},
  };
  return reg;
}

inline const SequenceDef& find_sequence(const std::string& name) {
  for (const SequenceDef& def : sequence_registry())
    if (name == def.name) return def;
  throw std::invalid_argument("unknown sequence name: " + name);
}

/// Render a(lo..hi) of a registered sequence. bfile is the plain "n a(n)"
/// line format; csv is one comma-separated line; table aligns indexes and
/// values; json is an object with a values array.
inline std::string render_sequence(const SequenceDef& def, long long lo, long long hi,
                                   OutputFormat fmt) {
  if (lo > hi) throw std::invalid_argument("invalid range: lo > hi");
  if (lo < def.offset)
    throw std::invalid_argument(std::string("sequence ") + def.name +
                                " starts at index " + std::to_string(def.offset));
  std::vector<std::string> values;
  values.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (long long n = lo; n <= hi; ++n)
    values.push_back(def.eval(static_cast<std::uint64_t>(n)).get_str());
  std::string out;
  switch (fmt) {
    case OutputFormat::table: {
      std::size_t wn = std::to_string(hi).size();
      std::size_t wv = 0;
      for (const auto& v : values) wv = std::max(wv, v.size());
      for (long long n = lo; n <= hi; ++n) {
        std::string ns = std::to_string(n);
        const std::string& v = values[static_cast<std::size_t>(n - lo)];
        out.append(wn - ns.size(), ' ');
        out += ns;
        out += ' ';
        out.append(wv - v.size(), ' ');
        out += v;
        out += '\n';
      }
      break;
    }
    case OutputFormat::csv: {
      for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += ',';
        out += values[i];
      }
      out += '\n';
      break;
    }
    case OutputFormat::json: {
      out += "{\"name\":\"" + std::string(def.name) + "\",\"lo\":" +
             std::to_string(lo) + ",\"hi\":" + std::to_string(hi) + ",\"values\":[";
      for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += ',';
        out += values[i];
      }
      out += "]}\n";
      break;
    }
    case OutputFormat::bfile: {
      for (long long n = lo; n <= hi; ++n) {
        out += std::to_string(n);
        out += ' ';
        out += values[static_cast<std::size_t>(n - lo)];
        out += '\n';
      }
      break;
    }
  }
  return out;
}

}  // namespace sternmat
