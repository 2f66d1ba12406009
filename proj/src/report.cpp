#include "domroots/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "domroots/families.hpp"
#include "domroots/realroots.hpp"

#ifndef DOMROOTS_DATA_DIR
#define DOMROOTS_DATA_DIR "paper_data"
#endif

namespace domroots {

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0) return "0";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

std::size_t CsvTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return i;
  throw std::out_of_range("no column named " + name);
}

double CsvTable::number(std::size_t row, const std::string& name) const {
  const std::string& cell = rows.at(row).at(column(name));
  double v = 0;
  const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (res.ec != std::errc() || res.ptr != cell.data() + cell.size())
    throw std::runtime_error("not a number: '" + cell + "'");
  return v;
}

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string join(const std::vector<std::string>& cells) {
  std::string s;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) s += ',';
    s += cells[i];
  }
  return s;
}

}  // namespace

CsvTable read_csv(std::istream& in) {
  CsvTable t;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (!t.header.empty()) throw std::runtime_error("line " + std::to_string(lineno) + ": comment after header");
      t.comments.push_back(line.size() > 1 && line[1] == ' ' ? line.substr(2) : line.substr(1));
      continue;
    }
    auto cells = split(line);
    if (t.header.empty()) {
      t.header = std::move(cells);
    } else {
      if (cells.size() != t.header.size())
        throw std::runtime_error("line " + std::to_string(lineno) + ": expected " + std::to_string(t.header.size()) +
                                 " fields, found " + std::to_string(cells.size()));
      t.rows.push_back(std::move(cells));
    }
  }
  if (t.header.empty()) throw std::runtime_error("CSV input has no header");
  return t;
}

CsvTable read_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_csv(in);
}

void write_csv(std::ostream& out, const CsvTable& table) {
  for (const auto& c : table.comments) out << "# " << c << '\n';
  out << join(table.header) << '\n';
  for (const auto& r : table.rows) out << join(r) << '\n';
}

std::string to_csv_string(const CsvTable& table) {
  std::ostringstream os;
  write_csv(os, table);
  return os.str();
}

std::string data_dir() {
  if (const char* env = std::getenv("DOMROOTS_DATA_DIR"); env && *env) return env;
  return DOMROOTS_DATA_DIR;
}

CsvTable load_reference(const std::string& name) { return read_csv_file(data_dir() + "/" + name); }

namespace {

void check_range(int lo, int hi, int min_lo, const char* what) {
  if (lo < min_lo) throw std::invalid_argument(std::string(what) + ": n must be at least " + std::to_string(min_lo));
  if (hi < lo) throw std::invalid_argument(std::string(what) + ": empty range");
}

std::vector<int> evens(int lo, int hi, const char* what) {
  std::vector<int> ns;
  for (int n = lo + (lo % 2); n <= hi; n += 2) ns.push_back(n);
  if (ns.empty()) throw std::invalid_argument(std::string(what) + ": range contains no even n");
  return ns;
}

}  // namespace

CsvTable friendship_real_table(int lo, int hi, double tol, mpfr_prec_t precision) {
  check_range(lo, hi, 2, "friendship-real");
  CsvTable t;
  t.header = {"n", "x_minus", "x_plus"};
  for (int n : evens(lo, hi, "friendship-real")) {
    const FriendshipRealRoots r = solve_friendship_real_roots(n, tol, precision);
    t.rows.push_back({std::to_string(n), format_number(r.x_minus.to_double()), format_number(r.x_plus.to_double())});
  }
  return t;
}

CsvTable modulus_table_csv(int lo, int hi, const SolverOptions& options) {
  check_range(lo, hi, 2, "modulus");
  CsvTable t;
  t.header = {"n", "max_modulus", "explicit_bound", "implicit_radius"};
  for (const ModulusReport& r : modulus_table(evens(lo, hi, "modulus"), options))
    t.rows.push_back({std::to_string(r.n), format_number(r.max_modulus), format_number(r.explicit_bound),
                      format_number(r.implicit_radius)});
  return t;
}

CsvTable book_real_table(int lo, int hi, double tol, mpfr_prec_t precision) {
  check_range(lo, hi, 2, "book-real");
  CsvTable t;
  t.header = {"n", "root_1", "root_2", "zero_multiplicity", "parity"};
  for (int n = lo; n <= hi; ++n) {
    const BookRealRoots b = book_real_roots(n, tol, precision);
    if (b.roots.size() != 2)
      throw std::runtime_error("D(B_" + std::to_string(n) + ", x) has " + std::to_string(b.roots.size()) +
                               " nonzero real roots, expected 2");
    t.rows.push_back({std::to_string(n), format_number(b.roots[0].value.to_double()),
                      format_number(b.roots[1].value.to_double()), std::to_string(b.zero_multiplicity),
                      n % 2 == 0 ? "even" : "odd"});
  }
  return t;
}

CsvTable poly_csv(const IntPolynomial& p) {
  CsvTable t;
  t.header = {"k", "c_k"};
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) t.rows.push_back({std::to_string(k), p.coeffs()[k].get_str()});
  return t;
}

CsvTable roots_csv(const RootSet& roots) {
  CsvTable t;
  t.header = {"re", "im", "modulus", "residual"};
  for (const ComplexRoot& r : roots.roots) {
    const auto z = r.value.to_std();
    t.rows.push_back({format_number(z.real()), format_number(z.imag()), format_number(std::abs(z)),
                      format_number(r.residual)});
  }
  return t;
}

}  // namespace domroots
