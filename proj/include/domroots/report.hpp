#pragma once

/**
 * @file report.hpp
 * @brief Number formatting, CSV tables and the reference data shipped in
 *        paper_data/.
 */

#include <iosfwd>
#include <string>
#include <vector>

#include "domroots/complexroots.hpp"
#include "domroots/exactpoly.hpp"

namespace domroots {

/// Shortest round-trip form with at most 12 significant digits, '.' decimal
/// separator, independent of the global locale.
std::string format_number(double v);

struct CsvTable {
  std::vector<std::string> comments;  ///< lines starting with '#', without the marker
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Index of a header column; throws std::out_of_range if absent.
  std::size_t column(const std::string& name) const;
  double number(std::size_t row, const std::string& name) const;
};

/// Comma separated, '\n' line endings, no quoting. '#' lines before the
/// header are comments. Throws std::runtime_error on ragged rows.
CsvTable read_csv(std::istream& in);
CsvTable read_csv_file(const std::string& path);
/// Writes comments (if any), the header and the rows.
void write_csv(std::ostream& out, const CsvTable& table);
std::string to_csv_string(const CsvTable& table);

/// Directory holding the reference CSVs: $DOMROOTS_DATA_DIR if set, else the
/// path compiled into the library.
std::string data_dir();
/// Loads data_dir()/name.
CsvTable load_reference(const std::string& name);

inline const char* kTable1File = "table1_friendship_real.csv";
inline const char* kTable2File = "table2_modulus.csv";
inline const char* kTable3File = "table3_book_real.csv";

/// `n,x_minus,x_plus` for the even n in [lo, hi]; lo >= 2.
CsvTable friendship_real_table(int lo, int hi, double tol = 1e-12, mpfr_prec_t precision = 256);
/// `n,max_modulus,explicit_bound,implicit_radius` for the even n in [lo, hi].
CsvTable modulus_table_csv(int lo, int hi, const SolverOptions& options = {});
/// `n,root_1,root_2,zero_multiplicity,parity` for n in [lo, hi]; lo >= 2.
CsvTable book_real_table(int lo, int hi, double tol = 1e-12, mpfr_prec_t precision = 256);

/// `k,c_k` in ascending degree.
CsvTable poly_csv(const IntPolynomial& p);
/// `re,im,modulus,residual`, sorted by (re, im).
CsvTable roots_csv(const RootSet& roots);

}  // namespace domroots
