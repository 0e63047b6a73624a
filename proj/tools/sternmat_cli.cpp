// Command-line front end: sequence printing, matrix generation/inversion,
// and the named identity check suite.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "sternmat/sternmat.hpp"

namespace {

using namespace sternmat;

std::pair<long long, long long> parse_range(const std::string& s) {
  auto pos = s.find("..");
  if (pos == std::string::npos)
    throw std::invalid_argument("range must have the form lo..hi");
  return {std::stoll(s.substr(0, pos)), std::stoll(s.substr(pos + 2))};
}

std::string sequence_help() {
  std::string h = "sequence name, one of:";
  for (const SequenceDef& def : sequence_registry())
    h += "\n  " + std::string(def.name) + " (offset " + std::to_string(def.offset) +
         "): " + def.summary;
  return h;
}

int cmd_seq(const std::string& name, const std::string& range,
            const std::string& format) {
  const SequenceDef& def = find_sequence(name);
  auto [lo, hi] = parse_range(range);
  std::cout << render_sequence(def, lo, hi, parse_format(format));
  return 0;
}

MatrixKind parse_kind(const std::string& s) {
  if (s == "R") return MatrixKind::R;
  if (s == "P") return MatrixKind::P;
  if (s == "S") return MatrixKind::S;
  throw std::invalid_argument("matrix kind must be R, P, or S");
}

int cmd_matrix(const std::string& kind_str, std::size_t size,
               const std::string& variant, const std::string& format) {
  MatrixKind kind = parse_kind(kind_str);
  LowerTriangular m = [&] {
    if (variant == "plain") return build(kind, size);
    if (variant == "inverse") return closed_inverse(kind, size);
    if (variant == "inverse_oracle") return invert_unitriangular(build(kind, size));
    if (variant == "hadamard_abs_inverse") {
      if (kind != MatrixKind::R)
        throw std::invalid_argument("hadamard_abs_inverse is only defined for R");
      return hadamard(build(kind, size), abs_entries(closed_inverse(kind, size)));
    }
    throw std::invalid_argument("unknown variant: " + variant);
  }();
  OutputFormat fmt = parse_format(format);
  switch (fmt) {
    case OutputFormat::table: std::cout << to_table(m); break;
    case OutputFormat::csv: std::cout << to_csv(m); break;
    case OutputFormat::json: std::cout << to_json(m) << "\n"; break;
    case OutputFormat::bfile:
      throw std::invalid_argument("bfile applies only to scalar sequences");
  }
  return 0;
}

unsigned verify_threads() {
  if (const char* env = std::getenv("STERNMAT_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v <= 0) return 0;  // 0 = serial
    return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

int cmd_verify(const std::string& check_list, long long size,
               const std::string& format) {
  if (format != "table" && format != "json")
    throw std::invalid_argument("verify format must be table or json");
  std::vector<CheckReport> reports;
  if (check_list == "all") {
    reports = run_all(size, verify_threads());
  } else {
    std::string rest = check_list;
    while (!rest.empty()) {
      auto pos = rest.find(',');
      std::string id = rest.substr(0, pos);
      rest = (pos == std::string::npos) ? "" : rest.substr(pos + 1);
      if (id.empty()) continue;
      long long n = std::min(size, detail::find_check(id).max_n);
      reports.push_back(run_check(id, n));
    }
  }
  bool all_pass = true;
  for (const CheckReport& r : reports) {
    if (r.status != CheckStatus::pass) all_pass = false;
    std::cout << (format == "json" ? to_json_line(r)
                                   : to_table_line(r, /*with_elapsed=*/false))
              << "\n";
  }
  if (format == "table")
    std::cout << (all_pass ? "all checks passed\n" : "CHECKS FAILED\n");
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "sternmat: exact Stern / Pascal / Sierpinski coefficient matrices, their "
      "closed-form inverses, and the identities connecting them"};
  app.require_subcommand(1);

  std::string seq_name, seq_range, seq_format = "table";
  auto* seq = app.add_subcommand("seq", "print a named integer sequence");
  seq->add_option("name", seq_name, sequence_help())->required();
  seq->add_option("--range", seq_range, "index range lo..hi")->required();
  seq->add_option("--format", seq_format, "table|csv|json|bfile");

  std::string mat_kind, mat_variant = "plain", mat_format = "table";
  std::size_t mat_size = 0;
  auto* mat = app.add_subcommand("matrix", "print a matrix section");
  mat->add_option("kind", mat_kind, "R|P|S")->required();
  mat->add_option("--size", mat_size, "section size N")->required();
  mat->add_option("--variant", mat_variant,
                  "plain|inverse|inverse_oracle|hadamard_abs_inverse");
  mat->add_option("--format", mat_format, "table|csv|json");

  std::string ver_check = "all", ver_format = "table";
  long long ver_size = 64;
  auto* ver = app.add_subcommand(
      "verify", "run named identity checks (exit 0 iff all selected pass)");
  ver->add_option("--check", ver_check, "all or comma-separated check ids");
  ver->add_option("--size", ver_size, "range bound N (clamped per check)");
  ver->add_option("--format", ver_format, "table|json");

  CLI11_PARSE(app, argc, argv);

  try {
    if (seq->parsed()) return cmd_seq(seq_name, seq_range, seq_format);
    if (mat->parsed()) return cmd_matrix(mat_kind, mat_size, mat_variant, mat_format);
    if (ver->parsed()) return cmd_verify(ver_check, ver_size, ver_format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
