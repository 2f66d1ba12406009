// domroots command-line interface.
//
//   domroots poly <family> <n> [--format csv|text]
//   domroots roots <family> <n> [--precision BITS]
//   domroots table <friendship-real|modulus|book-real> --n A..B
//   domroots plot <friendship|book> <n> [output.svg]
//   domroots verify [all|friendship|book|corona|limits]
//   domroots oracle <adjacency-file> [--cap N]
//
// Exit status: 0 success, 1 verification failure, 2 usage error,
// 3 numeric or internal failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "domroots/complexroots.hpp"
#include "domroots/families.hpp"
#include "domroots/graphs.hpp"
#include "domroots/report.hpp"
#include "domroots/svgplot.hpp"
#include "domroots/verify.hpp"

using namespace domroots;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int precision = 256;
  double tol = 1e-12;
  std::string out;
  std::string format;
  std::string family;
  int n = 0;
  std::string table;
  std::string range;
  std::string scope = "all";
  std::string path;
  std::string plot_path;
  int cap = kDefaultOracleCap;
};

FamilyId family_id(const std::string& family, int n) {
  if (n < 1) throw UsageError("n must be at least 1");
  if (family == "friendship" || family == "F") return FamilyId::friendship(n);
  if (family == "book" || family == "B") return FamilyId::book(n);
  if (family == "corona-odd-odd") return FamilyId::corona(CoronaVariant::OddOdd, n);
  if (family == "corona-even-odd") return FamilyId::corona(CoronaVariant::EvenOdd, n);
  if (family == "corona-odd-even") return FamilyId::corona(CoronaVariant::OddEven, n);
  throw UsageError("unknown family '" + family +
                   "' (expected friendship, book, corona-odd-odd, corona-even-odd or corona-odd-even)");
}

std::pair<int, int> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const int v = std::stoi(s, &used);
      if (used != s.size()) throw UsageError("bad range '" + s + "'");
      return {v, v};
    }
    const std::string a = s.substr(0, dots), b = s.substr(dots + 2);
    const int lo = std::stoi(a, &used);
    if (used != a.size()) throw UsageError("bad range '" + s + "'");
    const int hi = std::stoi(b, &used);
    if (used != b.size()) throw UsageError("bad range '" + s + "'");
    if (hi < lo) throw UsageError("empty range '" + s + "'");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw UsageError("bad range '" + s + "' (expected A..B)");
  }
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw UsageError("cannot write " + cfg.out);
  f << text;
  if (!f) throw UsageError("write to " + cfg.out + " failed");
}

SolverOptions solver_options(const RunConfig& cfg) {
  SolverOptions so;
  so.precision_bits = cfg.precision;
  return so;
}

int cmd_poly(const RunConfig& cfg) {
  const IntPolynomial& p = family_poly(family_id(cfg.family, cfg.n));
  const std::string fmt = cfg.format.empty() ? "csv" : cfg.format;
  if (fmt == "csv")
    emit(cfg, to_csv_string(poly_csv(p)));
  else if (fmt == "text")
    emit(cfg, p.to_string() + "\n");
  else
    throw UsageError("poly supports --format csv or text");
  return kExitOk;
}

int cmd_roots(const RunConfig& cfg) {
  if (!cfg.format.empty() && cfg.format != "csv") throw UsageError("roots supports --format csv only");
  const FamilyId id = family_id(cfg.family, cfg.n);
  const RootSet rs = all_roots(family_poly(id), solver_options(cfg), id.name());
  emit(cfg, to_csv_string(roots_csv(rs)));
  for (const auto& a : rs.anomalies) std::cerr << "note: " << a << '\n';
  return kExitOk;
}

int cmd_table(const RunConfig& cfg) {
  if (!cfg.format.empty() && cfg.format != "csv") throw UsageError("table supports --format csv only");
  if (cfg.range.empty()) throw UsageError("table needs --n A..B");
  const auto [lo, hi] = parse_range(cfg.range);
  CsvTable t;
  if (cfg.table == "friendship-real")
    t = friendship_real_table(lo, hi, cfg.tol, cfg.precision);
  else if (cfg.table == "modulus")
    t = modulus_table_csv(lo, hi, solver_options(cfg));
  else if (cfg.table == "book-real")
    t = book_real_table(lo, hi, cfg.tol, cfg.precision);
  else
    throw UsageError("unknown table '" + cfg.table + "' (expected friendship-real, modulus or book-real)");
  emit(cfg, to_csv_string(t));
  return kExitOk;
}

int cmd_plot(RunConfig cfg) {
  if (!cfg.format.empty() && cfg.format != "svg") throw UsageError("plot supports --format svg only");
  if (!cfg.plot_path.empty()) {
    if (!cfg.out.empty() && cfg.out != cfg.plot_path) throw UsageError("give the output path once");
    cfg.out = cfg.plot_path;
  }
  const FamilyId id = family_id(cfg.family, cfg.n);
  if (id.kind == FamilyKind::CoronaBF) throw UsageError("plot supports friendship and book");
  emit(cfg, render_svg(family_plot(id, solver_options(cfg))));
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg) {
  if (!cfg.format.empty() && cfg.format != "text") throw UsageError("verify supports --format text only");
  const auto scope = parse_scope(cfg.scope);
  if (!scope) throw UsageError("unknown scope '" + cfg.scope + "' (expected all, friendship, book, corona or limits)");
  VerifyOptions vo;
  vo.precision_bits = cfg.precision;
  vo.tol = cfg.tol;
  const auto checks = run_verify(*scope, vo);
  std::ostringstream os;
  int pass = 0, fail = 0, reported = 0;
  for (const auto& c : checks) {
    os << format_check(c) << '\n';
    (c.status == CheckStatus::Pass ? pass : c.status == CheckStatus::Fail ? fail : reported)++;
  }
  os << pass << " passed, " << fail << " failed, " << reported << " reported\n";
  emit(cfg, os.str());
  return fail ? kExitVerifyFailed : kExitOk;
}

int cmd_oracle(const RunConfig& cfg) {
  if (!cfg.format.empty() && cfg.format != "csv") throw UsageError("oracle supports --format csv only");
  std::ifstream in(cfg.path);
  if (!in) throw UsageError("cannot open " + cfg.path);
  const Graph g = parse_adjacency(in);
  emit(cfg, to_csv_string(poly_csv(brute_force_dompoly(g, cfg.cap))));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Domination polynomials and their roots for friendship, book and corona graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--precision", cfg.precision, "working precision in bits")->check(CLI::Range(64, 1 << 20));
  app.add_option("--tol", cfg.tol, "root tolerance")->check(CLI::PositiveNumber);
  app.add_option("--out", cfg.out, "write output to this path");
  app.add_option("--format", cfg.format, "csv, svg or text")->check(CLI::IsMember({"csv", "svg", "text"}));

  auto* poly = app.add_subcommand("poly", "exact coefficients of a family member");
  poly->add_option("family", cfg.family)->required();
  poly->add_option("n", cfg.n)->required();

  auto* roots = app.add_subcommand("roots", "all complex roots as CSV");
  roots->add_option("family", cfg.family)->required();
  roots->add_option("n", cfg.n)->required();

  auto* table = app.add_subcommand("table", "regenerate a reference table");
  table->add_option("name", cfg.table)->required();
  table->add_option("--n", cfg.range, "range A..B");

  auto* plot = app.add_subcommand("plot", "SVG root plot with limit curves");
  plot->add_option("family", cfg.family)->required();
  plot->add_option("n", cfg.n)->required();
  plot->add_option("output", cfg.plot_path, "SVG path");

  auto* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_option("scope", cfg.scope, "all, friendship, book, corona or limits");

  auto* oracle = app.add_subcommand("oracle", "brute-force domination polynomial of an adjacency file");
  oracle->add_option("path", cfg.path)->required();
  oracle->add_option("--cap", cfg.cap, "largest vertex count accepted")->check(CLI::Range(1, 40));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*poly) return cmd_poly(cfg);
    if (*roots) return cmd_roots(cfg);
    if (*table) return cmd_table(cfg);
    if (*plot) return cmd_plot(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*oracle) return cmd_oracle(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const GraphParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const OracleCapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const RootSolveError& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << '\n';
    return kExitNumeric;
  }
  return kExitUsage;
}
