#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fishburn/bijections.hpp"
#include "fishburn/enumeration.hpp"
#include "fishburn/error.hpp"
#include "fishburn/interval_orders.hpp"
#include "fishburn/matrix_core.hpp"

namespace fishburn::cli {

namespace {

struct UsageError {
  std::string message;
};

std::string echo(int argc, const char* const* argv) {
  std::string s = "fishburn";
  for (int i = 1; i < argc; ++i) s += std::string(" ") + argv[i];
  return s;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError{"cannot open input file '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

FamilyTag family_or_usage(const std::string& name) {
  if (auto f = parse_family(name)) return *f;
  throw UsageError{"unknown family '" + name + "' (expected FISHBURN, SELF_DUAL, RM, SM, B or SUPER)"};
}

void print_trace(std::ostream& out, const BijectionTrace& trace) {
  for (const TraceStep& step : trace.steps) out << "# " << step.label << '\n' << step.matrix;
}

int cmd_verify(std::ostream& out, const std::string& command, const std::string& identity,
               std::size_t max_n, bool timing) {
  std::vector<Identity> ids;
  if (identity == "all" || identity == "ALL") {
    ids = all_identities();
  } else if (auto id = parse_identity(identity)) {
    ids.push_back(*id);
  } else {
    throw UsageError{"unknown identity '" + identity + "' (expected EQ1, EQ2, EQ3, EQ4, EQ8 or all)"};
  }

  out << "# " << command << '\n';
  std::size_t total = 0, passed = 0;
  for (Identity id : ids) {
    for (std::size_t n = 1; n <= max_n; ++n) {
      const auto start = std::chrono::steady_clock::now();
      const IdentityReport r = verify_identity(id, n);
      const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
      ++total;
      passed += r.passed();
      out << to_string(id) << " n=" << n << ' ' << (r.passed() ? "PASS" : "FAIL")
          << " counts=" << (r.counts_ok ? "ok" : "mismatch")
          << " transport=" << (r.transport_ok ? "ok" : "broken") << "  " << r.summary;
      if (timing) out << "  [" << std::fixed << std::setprecision(1) << elapsed.count() << " ms]";
      out << '\n';
      if (!r.passed()) {
        out << "# failure: " << r.failure << '\n';
        if (r.counterexample) out << "# counterexample\n" << *r.counterexample;
      }
    }
  }
  out << "# " << passed << "/" << total << " checks passed\n";
  return passed == total ? kExitPass : kExitFail;
}

int cmd_count(std::ostream& out, const std::string& family, std::size_t n, const std::string& format) {
  const FamilyTag f = family_or_usage(family);
  if (f == FamilyTag::Super) throw UsageError{"SUPER has no dimension bound and cannot be counted"};
  const CountTable t = count_refined(f, n);
  out << (format == "json" ? to_json(t) : to_csv(t));
  return kExitPass;
}

int cmd_map(std::ostream& out, const std::string& command, const std::string& bijection,
            const std::string& input, bool trace) {
  std::string name = bijection;
  for (char& c : name) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  const TriMatrix m = parse_matrix(read_file(input));
  const TraceMode mode = trace ? TraceMode::On : TraceMode::Off;

  out << "# " << command << '\n';
  if (name == "CHAIN") {
    const MapResult a = alpha(m, mode);
    const MapResult b = beta(a.matrix, mode);
    const SignedRowFishburn s = project_b_to_signed_rm(b.matrix);
    if (trace) {
      print_trace(out, *a.trace);
      print_trace(out, *b.trace);
    }
    out << "# flag " << s.flag << '\n' << s.matrix;
    return kExitPass;
  }

  MapResult r{TriMatrix(1), std::nullopt};
  if (name == "ALPHA") r = alpha(m, mode);
  else if (name == "ALPHA_INV") r = alpha_inv(m, mode);
  else if (name == "BETA") r = beta(m, mode);
  else if (name == "BETA_INV") r = beta_inv(m, mode);
  else throw UsageError{"unknown bijection '" + bijection + "' (expected ALPHA, ALPHA_INV, BETA, BETA_INV or CHAIN)"};

  if (r.trace) {
    print_trace(out, *r.trace);
  } else {
    out << r.matrix;
  }
  return kExitPass;
}

int cmd_check(std::ostream& out, const std::string& command, const std::string& family,
              const std::string& input) {
  const FamilyTag f = family_or_usage(family);
  const TriMatrix m = parse_matrix(read_file(input));
  const auto why = family_violation(f, m);
  const StatVector s = stats(m);

  out << "# " << command << '\n';
  out << "family " << to_string(f) << ": " << (why ? "non-member (" + *why + ")" : "member") << '\n';
  out << "size " << s.size << '\n';
  out << "reduced_size " << (s.reduced_size ? std::to_string(*s.reduced_size) : "-") << '\n';
  out << "first_row_sum " << s.first_row_sum << '\n';
  out << "diag_sum " << s.diag_sum << '\n';
  out << "center_col_sum " << s.center_col_sum << '\n';
  out << "last_col_sum " << s.last_col_sum << '\n';
  out << "dim " << s.dim << '\n';
  out << "dim_parity " << to_string(s.dim_parity) << '\n';
  return why ? kExitFail : kExitPass;
}

int cmd_poset(std::ostream& out, const std::string& command, const std::string& input) {
  const Poset p = parse_poset(read_file(input));
  out << "# " << command << '\n';
  out << "elements " << p.size() << '\n';
  if (!is_interval_order(p)) {
    out << "interval_order no\n";
    return kExitFail;
  }
  const TriMatrix m = poset_to_fishburn(p);
  const bool self_dual = is_self_dual_poset(p);
  out << "interval_order yes\n";
  out << "magnitude " << m.dim() << '\n';
  out << "self_dual_poset " << (self_dual ? "yes" : "no") << '\n';
  out << "self_dual_matrix " << (is_self_dual(m) ? "yes" : "no") << '\n';
  if (self_dual) out << "reduced_size " << reduced_size_of_interval_order(p) << '\n';
  out << "# fishburn matrix\n" << m;
  return kExitPass;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bijections between self-dual Fishburn matrices and row-Fishburn matrices", "fishburn"};
  app.require_subcommand(1);

  std::string identity = "all";
  std::size_t max_n = 0;
  bool timing = false;
  auto* verify = app.add_subcommand("verify", "Check counting identities by enumeration and bijection");
  verify->add_option("--identity", identity, "EQ1, EQ2, EQ3, EQ4, EQ8 or all")->capture_default_str();
  verify->add_option("--max-size", max_n, "Largest n to check")->required()->check(CLI::PositiveNumber);
  verify->add_flag("--timing", timing, "Append wall time per row");

  std::string family;
  std::size_t size_n = 0;
  std::string format = "csv";
  auto* count = app.add_subcommand("count", "Print a refined count table");
  count->add_option("--family", family, "FISHBURN, SELF_DUAL, RM, SM or B")->required();
  count->add_option("--size", size_n, "Size n (reduced size for SELF_DUAL)")->required()->check(CLI::PositiveNumber);
  count->add_option("--format", format, "csv or json")
      ->capture_default_str()
      ->transform(CLI::IsMember({"csv", "json"}, CLI::ignore_case));

  std::string bijection, input;
  bool trace = false;
  auto* map = app.add_subcommand("map", "Apply a bijection to a matrix file");
  map->add_option("--bijection", bijection, "ALPHA, ALPHA_INV, BETA, BETA_INV or CHAIN")->required();
  map->add_option("--input", input, "Matrix file")->required();
  map->add_flag("--trace", trace, "Print every intermediate matrix");

  auto* check = app.add_subcommand("check", "Test family membership and print statistics");
  check->add_option("--family", family, "FISHBURN, SELF_DUAL, RM, SM, B or SUPER")->required();
  check->add_option("--input", input, "Matrix file")->required();

  auto* poset = app.add_subcommand("poset", "Analyse a poset file through Fishburn's correspondence");
  poset->add_option("--input", input, "Poset file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  const std::string command = echo(argc, argv);
  try {
    if (*verify) return cmd_verify(out, command, identity, max_n, timing);
    if (*count) return cmd_count(out, family, size_n, format);
    if (*map) return cmd_map(out, command, bijection, input, trace);
    if (*check) return cmd_check(out, command, family, input);
    if (*poset) return cmd_poset(out, command, input);
  } catch (const UsageError& e) {
    err << "error: " << e.message << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return e.kind() == ErrorKind::ParseError ? kExitUsage : kExitFail;
  }
  return kExitUsage;
}

}  // namespace fishburn::cli
